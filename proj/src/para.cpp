#include "paralab/para.hpp"

namespace paralab {

namespace {

const DyadicPartition& joint_partition(const BlockDecomp& f, const BlockDecomp& g) {
  if (!f.part || !g.part) throw dependency_error("paraproduct: missing block decomposition");
  check_same_grid(f.part->grid(), g.part->grid());
  return *f.part;
}

}  // namespace

RealField para_lt(const BlockDecomp& f, const BlockDecomp& g) {
  const DyadicPartition& P = joint_partition(f, g);
  RealField out(P.grid());
  for (int j = 1; j <= P.jmax(); ++j)
    out.data += f.slow[size_t(j - 1)] * g.delta[size_t(j + 1)];
  return out;
}

RealField resonant(const BlockDecomp& f, const BlockDecomp& g) {
  const DyadicPartition& P = joint_partition(f, g);
  RealField out(P.grid());
  for (int i = -1; i <= P.jmax(); ++i)
    for (int j = std::max(-1, i - 1); j <= std::min(P.jmax(), i + 1); ++j)
      out.data += f.delta[size_t(i + 1)] * g.delta[size_t(j + 1)];
  return out;
}

RealField para_lt(const RealField& f, const RealField& g) {
  check_same_grid(f.grid, g.grid);
  const DyadicPartition& P = partition_for(f.grid);
  return para_lt(decompose_blocks(f, P), decompose_blocks(g, P));
}

RealField para_gt(const RealField& f, const RealField& g) { return para_lt(g, f); }

RealField resonant(const RealField& f, const RealField& g) {
  check_same_grid(f.grid, g.grid);
  const DyadicPartition& P = partition_for(f.grid);
  return resonant(decompose_blocks(f, P), decompose_blocks(g, P));
}

RealField para_leq(const RealField& f, const RealField& g) {
  check_same_grid(f.grid, g.grid);
  const DyadicPartition& P = partition_for(f.grid);
  BlockDecomp F = decompose_blocks(f, P), G = decompose_blocks(g, P);
  RealField out = para_lt(F, G);
  out.data += resonant(F, G).data;
  return out;
}

RealField para_geq(const RealField& f, const RealField& g) {
  check_same_grid(f.grid, g.grid);
  const DyadicPartition& P = partition_for(f.grid);
  BlockDecomp F = decompose_blocks(f, P), G = decompose_blocks(g, P);
  RealField out = para_lt(G, F);
  out.data += resonant(F, G).data;
  return out;
}

RealField commutator(const RealField& f, const RealField& g, const RealField& h) {
  check_same_grid(f.grid, g.grid);
  check_same_grid(f.grid, h.grid);
  const DyadicPartition& P = partition_for(f.grid);
  BlockDecomp F = decompose_blocks(f, P), G = decompose_blocks(g, P), H = decompose_blocks(h, P);
  RealField fg = para_lt(F, G);
  RealField lhs = resonant(decompose_blocks(fg, P), H);
  lhs.data -= f.data * resonant(G, H).data;
  return lhs;
}

}  // namespace paralab
