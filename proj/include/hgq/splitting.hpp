#pragma once

#include <array>
#include <span>

#include "hgq/compositions.hpp"
#include "hgq/hypergraph.hpp"

namespace hgq {

inline void check_flag(const Hypergraph& h, const SetComposition& f) {
  if (f.n() != h.n()) {
    throw InputError("flag is on [" + std::to_string(f.n()) + "] but hypergraph has " +
                     std::to_string(h.n()) + " vertices");
  }
}

/// The splitting hypergraph H/F = ⊔_i (H|_{F_i}) / F_{i-1}. Pieces are laid
/// out in block order, so the result lives on [n] but is not vertex-aligned
/// with H.
inline Hypergraph split_by_flag(const Hypergraph& h, const SetComposition& f) {
  check_flag(h, f);
  Hypergraph out;
  VertexSet before;
  for (VertexSet block : f.blocks()) {
    const VertexSet upto = before | block;
    out = disjoint_union(out, contract(restrict(h, upto), before.compress(upto)));
    before = upto;
  }
  return out;
}

/// rk(H/F) = n - Σ_i c(H|_{F_i} / F_{i-1}), computed without building H/F.
///
/// An edge E first fits inside F_j for j = the largest block index it meets,
/// and contributes E ∩ C_j to the j-th piece; components of all pieces are
/// tracked in one union-find.
inline int split_rank(const Hypergraph& h, std::span<const VertexSet> blocks) {
  std::array<unsigned char, kMaxVertices> level{};
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    blocks[j].for_each([&](int v) { level[v - 1] = static_cast<unsigned char>(j); });
  }
  detail::DisjointSets dsu;
  int merges = 0;
  for (VertexSet e : h.proper_edges()) {
    unsigned char top = 0;
    e.for_each([&](int v) { top = std::max(top, level[v - 1]); });
    const VertexSet part = e & blocks[top];
    if (part.size() < 2) continue;
    const int first = part.min() - 1;
    part.for_each([&](int v) { merges += dsu.merge(first, v - 1) ? 1 : 0; });
  }
  // Each successful merge lowers the component count by one.
  return merges;
}

inline int split_rank(const Hypergraph& h, const SetComposition& f) {
  check_flag(h, f);
  return split_rank(h, f.blocks());
}

}  // namespace hgq
