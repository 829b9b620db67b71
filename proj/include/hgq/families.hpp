#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgq/error.hpp"
#include "hgq/hypergraph.hpp"
#include "hgq/qpoly.hpp"
#include "hgq/qsym.hpp"

namespace hgq {

inline constexpr int kFamilyGuard = 16;

/// C_n: every nonempty subset of [n].
inline Hypergraph complete(int n, int guard = kFamilyGuard) {
  if (n < 1) throw InputError("complete: n must be positive");
  check_guard(n, guard, "complete");
  std::vector<VertexSet> edges;
  const VertexSet::Mask all = VertexSet::range(n).bits();
  for (VertexSet::Mask s = 1; s <= all && s != 0; ++s) edges.emplace_back(s);
  return Hypergraph::from_sets(n, std::move(edges));
}

/// U_{n,k}: all k-subsets of [n] plus the singletons.
inline Hypergraph uniform(int n, int k, int guard = kFamilyGuard) {
  if (k <= 1 || k > n) throw InputError("uniform: need 1 < k <= n");
  check_guard(n, guard, "uniform");
  std::vector<VertexSet> edges;
  const VertexSet::Mask all = VertexSet::range(n).bits();
  for (VertexSet::Mask s = 1; s <= all && s != 0; ++s) {
    if (std::popcount(s) == k) edges.emplace_back(s);
  }
  return Hypergraph::from_sets(n, std::move(edges));
}

/// {[1], [2], ..., [n]} plus singletons; its polytope is the Pitman-Stanley polytope.
inline Hypergraph pitman_stanley(int n) {
  if (n < 1) throw InputError("pitman_stanley: n must be positive");
  std::vector<VertexSet> edges;
  for (int m = 1; m <= n; ++m) edges.push_back(VertexSet::range(m));
  return Hypergraph::from_sets(n, std::move(edges));
}

/// A simple graph as a 2-uniform hypergraph (plus singletons).
inline Hypergraph from_graph(int n, std::span<const std::pair<int, int>> edge_pairs) {
  std::vector<std::vector<int>> raw;
  for (auto [u, v] : edge_pairs) {
    if (u == v) throw InputError("graph edge is a loop");
    raw.push_back({u, v});
  }
  return make_hypergraph(n, raw);
}

/// Downward closure of the facets (plus singletons).
inline Hypergraph simplicial_complex(int n, const std::vector<std::vector<int>>& facets) {
  Hypergraph shell = make_hypergraph(n, facets);
  std::vector<VertexSet> faces;
  for (VertexSet f : shell.edges()) {
    const VertexSet::Mask m = f.bits();
    for (VertexSet::Mask s = m; s != 0; s = (s - 1) & m) faces.emplace_back(s);
  }
  return Hypergraph::from_sets(n, std::move(faces));
}

/// Faces of size at most two.
inline Hypergraph one_skeleton(const Hypergraph& k) {
  std::vector<VertexSet> edges;
  for (VertexSet e : k.edges()) {
    if (e.size() <= 2) edges.push_back(e);
  }
  return Hypergraph::from_sets(k.n(), std::move(edges), SingletonPolicy::kRequire);
}

namespace detail {

inline std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw OverflowError("factorial out of range");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace detail

/// n!/(a!·b!·c!) for a + b + c = n.
inline std::int64_t multinomial(int a, int b, int c) {
  return detail::factorial(a + b + c) / detail::factorial(a) / detail::factorial(b) /
         detail::factorial(c);
}

/// f(Pe^{n-1}, q) = Σ_k k!·S(n,k)·q^{n-k}, counting set compositions of [n] by
/// block number. n = 0 gives 1 (the empty permutohedron is the unit).
inline QPoly permutohedron_f(int n) {
  if (n < 0) throw InputError("permutohedron_f: negative n");
  // Stirling numbers of the second kind, S(m, k) = k·S(m-1, k) + S(m-1, k-1).
  std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) {
      s[m][k] = checked::add(checked::mul(k, s[m - 1][k]), s[m - 1][k - 1]);
    }
  }
  std::vector<std::int64_t> coeffs(n + 1, 0);
  for (int k = 0; k <= n; ++k) coeffs[n - k] = checked::mul(detail::factorial(k), s[n][k]);
  return QPoly(std::move(coeffs));
}

/// Closed form for f(P_{U_{n,k}}, q), 1 < k < n:
///   Σ_{i=1}^{k} (n; k-i, i, n-k) q^{i-1} f(Pe^{n-k-1})
/// + Σ_{0 ≤ a < k < n-b ≤ n} (n; a, b, n-a-b) q^{n-a-b-1} f(Pe^{b-1}).
/// The b = 0 terms use f(Pe^{-1}) = 1.
inline QPoly uniform_f_formula(int n, int k) {
  if (!(1 < k && k < n)) throw InputError("uniform_f_formula: need 1 < k < n");
  QPoly total;
  const QPoly rest = permutohedron_f(n - k);
  for (int i = 1; i <= k; ++i) {
    total += QPoly::monomial(multinomial(k - i, i, n - k), i - 1) * rest;
  }
  for (int b = 0; n - b > k; ++b) {
    for (int a = 0; a < k; ++a) {
      total += QPoly::monomial(multinomial(a, b, n - a - b), n - a - b - 1) * permutohedron_f(b);
    }
  }
  return total;
}

/// F_q(PS^d) for the d-dimensional Pitman-Stanley polytope, by the recursion
/// F_q(PS^d) = F_q(PS^{d-1})·M_(1) + (q - 1)·(F_q(PS^{d-1}))_{+1}, F_q(PS^0) = M_(1).
inline QSymM pitman_stanley_enumerator(int d) {
  if (d < 0) throw InputError("pitman_stanley_enumerator: negative dimension");
  const QSymM m1 = QSymM::monomial(Composition{1});
  QSymM f = m1;
  for (int i = 1; i <= d; ++i) {
    f = quasi_shuffle(f, m1) + QPoly{-1, 1} * plus_one(f);
  }
  return f;
}

}  // namespace hgq
