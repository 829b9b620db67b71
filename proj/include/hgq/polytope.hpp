#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "hgq/compositions.hpp"
#include "hgq/error.hpp"
#include "hgq/hypergraph.hpp"
#include "hgq/parallel.hpp"
#include "hgq/qpoly.hpp"

// Geometric side: the hypergraphic polytope P_H = Σ_{E ∈ H} Δ_E, computed
// directly from its vertices. Nothing here uses the splitting hypergraph, so
// the results can be compared against the algebraic pipeline.

namespace hgq {

using IntPoint = std::vector<std::int64_t>;

/// A nonempty face, identified by the indices (into the polytope's sorted
/// vertex list) of the vertices it contains.
struct FaceRecord {
  std::vector<std::size_t> vertex_ids;
  int dim = 0;

  bool operator==(const FaceRecord&) const = default;
  auto operator<=>(const FaceRecord&) const = default;
};

inline constexpr int kOracleGuard = 7;

/// Rank of the row differences p_i - p_0, by fraction-free (Bareiss)
/// elimination over 128-bit integers.
inline int affine_dim(std::span<const IntPoint> points) {
  if (points.empty()) throw InputError("affine_dim of an empty point set");
  const std::size_t cols = points.front().size();
  std::vector<std::vector<__int128>> m;
  m.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != cols) throw InputError("affine_dim: points of different dimension");
    std::vector<__int128> row(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = points[i][j] - points[0][j];
      nonzero |= row[j] != 0;
    }
    if (nonzero) m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  __int128 prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const __int128 p = m[rank][col];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      const __int128 lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (p * m[i][j] - lead * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Vertices of the Minkowski sum Σ_E Δ_E over `summands` (subsets of [n]),
/// sorted and deduplicated.
///
/// A generic linear functional is maximized on each simplex Δ_E at the unique
/// vertex e_i with the largest weight in E, and the sum of those maxima is a
/// vertex of the sum. Orderings of [n] realize every generic functional up to
/// normal equivalence, so sweeping all n! of them yields every vertex.
inline std::vector<IntPoint> minkowski_vertices(int n, std::span<const VertexSet> summands,
                                                int guard = kOracleGuard) {
  if (n <= 0) throw InputError("minkowski_vertices: empty vertex set");
  check_guard(n, guard, "minkowski_vertices");
  for (VertexSet e : summands) {
    if (e.empty() || !e.subset_of(VertexSet::range(n))) throw InputError("bad Minkowski summand");
  }
  std::vector<int> weight(n);
  std::iota(weight.begin(), weight.end(), 1);
  std::vector<IntPoint> out;
  do {
    IntPoint p(n, 0);
    for (VertexSet e : summands) {
      int best = 0;
      e.for_each([&](int v) {
        if (best == 0 || weight[v - 1] > weight[best - 1]) best = v;
      });
      ++p[best - 1];
    }
    out.push_back(std::move(p));
  } while (std::next_permutation(weight.begin(), weight.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Vertices of P_H.
inline std::vector<IntPoint> minkowski_vertices(const Hypergraph& h, int guard = kOracleGuard) {
  if (h.n() == 0) throw InputError("minkowski_vertices: empty hypergraph");
  return minkowski_vertices(h.n(), h.edges(), guard);
}

/// A sum of coordinate simplices with its vertex list, answering face
/// queries by weight maximization.
class HypergraphicPolytope {
 public:
  explicit HypergraphicPolytope(const Hypergraph& h, int guard = kOracleGuard)
      : n_(h.n()), vertices_(minkowski_vertices(h, guard)) {}

  /// Σ_E Δ_E over arbitrary nonempty summands, singletons not required.
  HypergraphicPolytope(int n, std::span<const VertexSet> summands, int guard = kOracleGuard)
      : n_(n), vertices_(minkowski_vertices(n, summands, guard)) {}

  const std::vector<IntPoint>& vertices() const { return vertices_; }
  int ambient_dim() const { return n_; }

  /// Vertex ids maximizing the canonical weight of the flag `blocks`
  /// (ω_i = index of the block containing i).
  std::vector<std::size_t> maximizers(std::span<const VertexSet> blocks) const {
    std::vector<std::int64_t> w(n_, 0);
    std::int64_t j = 1;
    for (VertexSet b : blocks) {
      b.for_each([&](int v) { w[v - 1] = j; });
      ++j;
    }
    std::vector<std::size_t> ids;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      std::int64_t dot = 0;
      for (int c = 0; c < n_; ++c) dot += w[c] * vertices_[i][c];
      if (ids.empty() || dot > best) {
        best = dot;
        ids.assign(1, i);
      } else if (dot == best) {
        ids.push_back(i);
      }
    }
    return ids;
  }

  int dim_of(std::span<const std::size_t> ids) const {
    std::vector<IntPoint> pts;
    pts.reserve(ids.size());
    for (std::size_t i : ids) pts.push_back(vertices_[i]);
    return affine_dim(pts);
  }

  FaceRecord face_of_flag(std::span<const VertexSet> blocks) const {
    FaceRecord f;
    f.vertex_ids = maximizers(blocks);
    f.dim = dim_of(f.vertex_ids);
    return f;
  }

  FaceRecord face_of_flag(const SetComposition& flag) const {
    if (flag.n() != n_) throw InputError("flag dimension does not match polytope");
    return face_of_flag(flag.blocks());
  }

  /// rk_H(F) = dim π(F)
  int geometric_rank(const SetComposition& flag) const { return face_of_flag(flag).dim; }
  int geometric_rank(std::span<const VertexSet> blocks) const { return face_of_flag(blocks).dim; }

  /// Every nonempty face, as the distinct images of all flags, sorted.
  std::vector<FaceRecord> faces(unsigned threads = 1) const {
    const int n = n_;
    using Seen = std::map<std::vector<std::size_t>, int>;
    // Collect distinct maximizer sets first; dimensions are computed once each.
    Seen seen = parallel_fold(
        (std::size_t{1} << n) - 1, threads, Seen{},
        [&](Seen& acc, std::size_t i) {
          for_each_set_composition_with_first(
              n, VertexSet(static_cast<VertexSet::Mask>(i + 1)),
              [&](std::span<const VertexSet> blocks) { acc.try_emplace(maximizers(blocks), -1); });
        },
        [](Seen& into, Seen&& from) { into.merge(from); });
    std::vector<FaceRecord> out;
    out.reserve(seen.size());
    for (auto& [ids, unused] : seen) {
      FaceRecord f;
      f.vertex_ids = ids;
      f.dim = dim_of(ids);
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Σ_faces q^{dim}
  QPoly f_polynomial(unsigned threads = 1) const {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& f : faces(threads)) ++counts[f.dim];
    return QPoly(std::move(counts));
  }

 private:
  int n_;
  std::vector<IntPoint> vertices_;
};

inline FaceRecord face_of_flag(const Hypergraph& h, const SetComposition& flag) {
  return HypergraphicPolytope(h).face_of_flag(flag);
}

inline int geometric_rank(const Hypergraph& h, const SetComposition& flag) {
  return HypergraphicPolytope(h).geometric_rank(flag);
}

inline std::vector<FaceRecord> enumerate_faces(const Hypergraph& h, int guard = kOracleGuard,
                                               unsigned threads = 1) {
  return HypergraphicPolytope(h, guard).faces(threads);
}

inline QPoly f_polynomial_geometric(const Hypergraph& h, int guard = kOracleGuard, unsigned threads = 1) {
  return HypergraphicPolytope(h, guard).f_polynomial(threads);
}

}  // namespace hgq
