#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hgq/families.hpp"
#include "hgq/hypergraph.hpp"

// Seeded generators for the randomized suites. Only raw engine output is used
// (no std distributions), so the streams are identical across standard
// library implementations.

namespace hgq {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Uniform integer in [lo, hi] (slight modulo bias is irrelevant here).
inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Each non-singleton subset of [n] is an edge with probability 1/2.
inline Hypergraph random_hypergraph(int n, Rng& rng) {
  std::vector<VertexSet> edges;
  const VertexSet::Mask all = VertexSet::range(n).bits();
  for (VertexSet::Mask s = 1; s <= all && s != 0; ++s) {
    if (std::popcount(s) >= 2 && (rng() >> 63) != 0) edges.emplace_back(s);
  }
  return Hypergraph::from_sets(n, std::move(edges));
}

inline Hypergraph random_connected_hypergraph(int n, Rng& rng) {
  for (;;) {
    Hypergraph h = random_hypergraph(n, rng);
    if (is_connected(h)) return h;
  }
}

/// A simplicial complex on n vertices generated by 1-3 random facets.
inline Hypergraph random_simplicial_complex(int n, Rng& rng) {
  const int facet_count = uniform_int(rng, 1, 3);
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < facet_count; ++i) {
    const auto mask = static_cast<VertexSet::Mask>(rng() % VertexSet::range(n).bits()) + 1;
    facets.push_back(VertexSet(mask).elements());
  }
  return simplicial_complex(n, facets);
}

/// Visit every hypergraph on [n] (all subsets of the non-singleton edges).
template <class Visitor>
void for_each_hypergraph(int n, Visitor&& visit) {
  std::vector<VertexSet> candidates;
  const VertexSet::Mask all = VertexSet::range(n).bits();
  for (VertexSet::Mask s = 1; s <= all && s != 0; ++s) {
    if (std::popcount(s) >= 2) candidates.emplace_back(s);
  }
  if (candidates.size() > 20) throw GuardError("for_each_hypergraph: too many hypergraphs");
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((pick >> i) & 1U) edges.push_back(candidates[i]);
    }
    visit(Hypergraph::from_sets(n, std::move(edges)));
  }
}

}  // namespace hgq
