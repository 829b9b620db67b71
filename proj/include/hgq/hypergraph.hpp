#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hgq/error.hpp"
#include "hgq/vertex_set.hpp"

namespace hgq {

enum class SingletonPolicy {
  kAdd,      ///< insert every missing singleton {i}
  kRequire,  ///< a missing singleton is an InputError
};

/// A hypergraph on the vertex set [n] = {1, ..., n}.
///
/// Every singleton is an edge (no ghost vertices), edges are distinct nonempty
/// subsets of [n], and the edge list is kept sorted by (size, lex). Values are
/// immutable once built.
class Hypergraph {
 public:
  /// The empty hypergraph on zero vertices.
  Hypergraph() = default;

  static Hypergraph from_sets(int n, std::vector<VertexSet> edges,
                              SingletonPolicy policy = SingletonPolicy::kAdd) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > kMaxVertices) {
      throw InputError("vertex count " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxVertices));
    }
    const VertexSet all = VertexSet::range(n);
    for (VertexSet e : edges) {
      if (e.empty()) throw InputError("empty edge");
      if (!e.subset_of(all)) throw InputError("vertex out of range: " + std::to_string(e.max()));
    }
    if (policy == SingletonPolicy::kAdd) {
      for (int v = 1; v <= n; ++v) edges.push_back(VertexSet::singleton(v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // After sorting, the singletons (if all present) are exactly the first n edges.
    for (int v = 1; v <= n; ++v) {
      if (static_cast<int>(edges.size()) < v || edges[v - 1] != VertexSet::singleton(v)) {
        throw InputError("missing singleton {" + std::to_string(v) + "}");
      }
    }
    Hypergraph h;
    h.n_ = n;
    h.edges_ = std::move(edges);
    return h;
  }

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  /// Number of hyperedges, singletons included.
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return n_ == 0; }
  /// True when the only edges are singletons.
  bool is_discrete() const { return edges_.size() == static_cast<std::size_t>(n_); }

  /// Edges other than the singletons, in canonical order.
  std::span<const VertexSet> proper_edges() const {
    return std::span<const VertexSet>(edges_).subspan(static_cast<std::size_t>(n_));
  }

  bool operator==(const Hypergraph&) const = default;
  auto operator<=>(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Build from 1-based vertex lists.
inline Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges,
                                  SingletonPolicy policy = SingletonPolicy::kAdd) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<VertexSet> sets;
  sets.reserve(raw_edges.size());
  for (const auto& edge : raw_edges) {
    if (edge.empty()) throw InputError("empty edge");
    VertexSet s;
    for (int v : edge) {
      if (v < 1 || v > n) throw InputError("vertex out of range: " + std::to_string(v));
      s.insert(v);
    }
    sets.push_back(s);
  }
  return Hypergraph::from_sets(n, std::move(sets), policy);
}

inline Hypergraph discrete_hypergraph(int n) { return Hypergraph::from_sets(n, {}); }

struct HypergraphHash {
  std::size_t operator()(const Hypergraph& h) const noexcept {
    std::size_t seed = static_cast<std::size_t>(h.n()) * 0x9e3779b97f4a7c15ULL;
    for (VertexSet e : h.edges()) {
      seed ^= e.bits() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

/// Blocks of a partition of [n], sorted by smallest element.
struct VertexPartition {
  std::vector<VertexSet> blocks;

  std::size_t block_count() const { return blocks.size(); }
  bool operator==(const VertexPartition&) const = default;
};

namespace detail {

/// Union-find over vertices 1..32 storing 0-based indices.
class DisjointSets {
 public:
  DisjointSets() { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when a and b were already in one class.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

  /// Merge every element of `s` into one class.
  void unite(VertexSet s) {
    if (s.size() < 2) return;
    const int root = find(s.min() - 1);
    s.for_each([&](int v) {
      int r = find(v - 1);
      if (r != root) parent_[r] = root;
    });
  }

 private:
  std::array<int, kMaxVertices> parent_{};
};

}  // namespace detail

inline VertexPartition connected_components(const Hypergraph& h) {
  detail::DisjointSets dsu;
  for (VertexSet e : h.proper_edges()) dsu.unite(e);
  std::array<VertexSet::Mask, kMaxVertices> by_root{};
  for (int v = 1; v <= h.n(); ++v) by_root[dsu.find(v - 1)] |= VertexSet::Mask{1} << (v - 1);
  VertexPartition out;
  for (VertexSet::Mask m : by_root) {
    if (m != 0) out.blocks.emplace_back(m);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  return out;
}

inline int component_count(const Hypergraph& h) {
  return static_cast<int>(connected_components(h).block_count());
}

/// rk(H) = n - c(H)
inline int rank(const Hypergraph& h) { return h.n() - component_count(h); }

inline bool is_connected(const Hypergraph& h) { return h.n() >= 1 && component_count(h) == 1; }

inline void check_subset(const Hypergraph& h, VertexSet s) {
  if (!s.subset_of(h.vertices())) {
    throw InputError("vertex out of range: " + std::to_string(s.max()));
  }
}

/// H|_S: edges contained in S, relabeled onto [|S|].
inline Hypergraph restrict(const Hypergraph& h, VertexSet s) {
  check_subset(h, s);
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if (e.subset_of(s)) edges.push_back(e.compress(s));
  }
  return Hypergraph::from_sets(s.size(), std::move(edges), SingletonPolicy::kRequire);
}

/// H/S: the nonempty differences E \ S, deduplicated and relabeled onto [n - |S|].
inline Hypergraph contract(const Hypergraph& h, VertexSet s) {
  check_subset(h, s);
  const VertexSet rest = h.vertices() - s;
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    VertexSet d = e - s;
    if (!d.empty()) edges.push_back(d.compress(rest));
  }
  return Hypergraph::from_sets(rest.size(), std::move(edges), SingletonPolicy::kRequire);
}

/// H1 ⊔ H2 with the vertices of H2 shifted by n1.
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<VertexSet> edges(a.edges());
  for (VertexSet e : b.edges()) edges.push_back(e.shifted(a.n()));
  return Hypergraph::from_sets(a.n() + b.n(), std::move(edges), SingletonPolicy::kRequire);
}

/// Apply the vertex map i -> perm[i-1]; `perm` must be a permutation of [n].
inline Hypergraph relabel(const Hypergraph& h, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != h.n()) throw InputError("permutation has wrong length");
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < h.n(); ++i) {
    if (sorted[i] != i + 1) throw InputError("not a permutation");
  }
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (VertexSet e : h.edges()) {
    VertexSet m;
    e.for_each([&](int v) { m |= VertexSet::singleton(perm[v - 1]); });
    edges.push_back(m);
  }
  return Hypergraph::from_sets(h.n(), std::move(edges), SingletonPolicy::kRequire);
}

inline constexpr int kCanonicalGuard = 9;

/// Representative of the isomorphism class [H]: the smallest sorted edge list
/// over all n! relabelings.
inline Hypergraph canonical_form(const Hypergraph& h) {
  check_guard(h.n(), kCanonicalGuard, "canonical_form");
  const int n = h.n();
  if (h.is_discrete()) return h;
  // Singletons are fixed by every relabeling, so only proper edges move.
  const auto proper = h.proper_edges();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<VertexSet> best(proper.begin(), proper.end());
  std::vector<VertexSet> candidate(proper.size());
  do {
    for (std::size_t i = 0; i < proper.size(); ++i) {
      VertexSet::Mask m = 0;
      for (VertexSet::Mask b = proper[i].bits(); b != 0; b &= b - 1) {
        m |= VertexSet::Mask{1} << perm[std::countr_zero(b)];
      }
      candidate[i] = VertexSet(m);
    }
    std::sort(candidate.begin(), candidate.end());
    if (candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Hypergraph::from_sets(n, std::move(best), SingletonPolicy::kAdd);
}

}  // namespace hgq
