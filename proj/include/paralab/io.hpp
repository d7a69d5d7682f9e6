#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paralab/grid.hpp"

namespace paralab {

using json = nlohmann::ordered_json;

// Flat binary snapshot format, 32-byte header:
//   bytes  0..7   magic "SPDEFLD1"
//   bytes  8..11  u32 dim (LE)
//   bytes 12..15  u32 points per axis (LE)
//   bytes 16..23  f64 box length (LE)
//   bytes 24..31  reserved, zero
// followed by n^dim little-endian f64 samples (axis 0 fastest), plus a JSON
// sidecar at <path>.json carrying the same geometry and caller metadata.
void write_field(const std::string& path, const RealField& f, const json& extra = json::object());
RealField read_field(const std::string& path, json* meta = nullptr);

// RFC 4180 CSV: quoted cells where needed, CRLF row endings, stable numeric
// formatting so equal inputs give byte-identical files.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return buf_; }
  void save(const std::string& path) const;

  static std::string num(double v);
  static std::string num(long v);

 private:
  void emit(const std::vector<std::string>& cells);
  size_t width_ = 0;
  std::string buf_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace paralab
