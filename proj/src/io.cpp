#include "paralab/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace paralab {

namespace {

constexpr char kMagic[8] = {'S', 'P', 'D', 'E', 'F', 'L', 'D', '1'};

template <class T>
void put(std::string& buf, T v) {
  char raw[sizeof(T)];
  std::memcpy(raw, &v, sizeof(T));
  buf.append(raw, sizeof(T));
}

template <class T>
T get(const std::string& buf, size_t off) {
  T v;
  std::memcpy(&v, buf.data() + off, sizeof(T));
  return v;
}

}  // namespace

void write_field(const std::string& path, const RealField& f, const json& extra) {
  std::string buf;
  buf.reserve(32 + sizeof(double) * f.data.size());
  buf.append(kMagic, 8);
  put<std::uint32_t>(buf, std::uint32_t(f.grid.dim));
  put<std::uint32_t>(buf, std::uint32_t(f.grid.n));
  put<double>(buf, f.grid.box);
  put<std::uint64_t>(buf, 0);
  for (long i = 0; i < f.data.size(); ++i) put<double>(buf, f.data[i]);
  write_text_file(path, buf);

  json side;
  side["format"] = "SPDEFLD1";
  side["dim"] = f.grid.dim;
  side["n_points"] = f.grid.n;
  side["box_length"] = f.grid.box;
  for (auto& [k, v] : extra.items()) side[k] = v;
  write_text_file(path + ".json", side.dump(2) + "\n");
}

RealField read_field(const std::string& path, json* meta) {
  std::string buf = read_text_file(path);
  if (buf.size() < 32 || std::memcmp(buf.data(), kMagic, 8) != 0)
    throw format_error("read_field: bad magic, not an SPDEFLD1 file: " + path);
  auto dim = get<std::uint32_t>(buf, 8);
  auto n = get<std::uint32_t>(buf, 12);
  auto box = get<double>(buf, 16);
  Grid g;
  try {
    g = Grid(int(dim), int(n), box);
  } catch (const std::exception& e) {
    throw format_error(std::string("read_field: invalid header geometry: ") + e.what());
  }
  size_t need = 32 + sizeof(double) * size_t(g.size());
  if (buf.size() != need)
    throw format_error("read_field: payload size mismatch in " + path);
  RealField f(g);
  for (long i = 0; i < g.size(); ++i) f.data[i] = get<double>(buf, 32 + sizeof(double) * size_t(i));
  if (meta) {
    std::ifstream side(path + ".json");
    if (side.good()) *meta = json::parse(side, nullptr, true);
  }
  return f;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  emit(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw format_error("csv: row width does not match header");
  emit(cells);
}

void CsvWriter::emit(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    const std::string& c = cells[i];
    bool quote = c.find_first_of(",\"\r\n") != std::string::npos;
    if (i) buf_ += ',';
    if (quote) {
      buf_ += '"';
      for (char ch : c) {
        if (ch == '"') buf_ += '"';
        buf_ += ch;
      }
      buf_ += '"';
    } else {
      buf_ += c;
    }
  }
  buf_ += "\r\n";
}

void CsvWriter::save(const std::string& path) const { write_text_file(path, buf_); }

std::string CsvWriter::num(double v) {
  char tmp[40];
  std::snprintf(tmp, sizeof(tmp), "%.17g", v);
  return tmp;
}

std::string CsvWriter::num(long v) {
  char tmp[32];
  std::snprintf(tmp, sizeof(tmp), "%ld", v);
  return tmp;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw format_error("cannot open file: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.good()) throw format_error("cannot open file for writing: " + path);
  out.write(content.data(), std::streamsize(content.size()));
  if (!out.good()) throw format_error("write failed: " + path);
}

}  // namespace paralab
