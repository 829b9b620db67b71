#include "gtest/gtest.h"
#include "test_util.hpp"

namespace hgq {
namespace {

using testing::hg;

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Complete, Examples) {
  EXPECT_EQ(complete(1), testing::point());
  EXPECT_EQ(complete(2), testing::k2());
  EXPECT_EQ(complete(3).edge_count(), 7U);
  EXPECT_EQ(complete(5).edge_count(), 31U);
  EXPECT_THROW(complete(0), InputError);
  EXPECT_THROW(complete(17), GuardError);
}

TEST(Uniform, Examples) {
  EXPECT_EQ(uniform(3, 2), hg(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(uniform(5, 3).edge_count(), 5U + 10U);
  EXPECT_EQ(uniform(3, 3), hg(3, {{1, 2, 3}}));
  EXPECT_THROW(uniform(3, 1), InputError);
  EXPECT_THROW(uniform(3, 4), InputError);
}

TEST(PitmanStanley, Examples) {
  EXPECT_EQ(pitman_stanley(1), testing::point());
  EXPECT_EQ(pitman_stanley(3), hg(3, {{1, 2}, {1, 2, 3}}));
  EXPECT_THROW(pitman_stanley(0), InputError);
}

TEST(FromGraph, Examples) {
  const std::vector<std::pair<int, int>> path{{1, 2}, {2, 3}};
  EXPECT_EQ(from_graph(3, path), hg(3, {{1, 2}, {2, 3}}));
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  EXPECT_THROW(from_graph(2, loop), InputError);
  const std::vector<std::pair<int, int>> out_of_range{{1, 4}};
  EXPECT_THROW(from_graph(3, out_of_range), InputError);
}

TEST(SimplicialComplex, DownwardClosure) {
  EXPECT_EQ(simplicial_complex(3, {{1, 2, 3}}), complete(3));
  EXPECT_EQ(simplicial_complex(4, {{1, 2, 3}, {3, 4}}),
            hg(4, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {3, 4}}));
  EXPECT_EQ(one_skeleton(simplicial_complex(3, {{1, 2, 3}})), uniform(3, 2));
}

TEST(PermutohedronF, Examples) {
  EXPECT_EQ(permutohedron_f(0), QPoly(1));
  EXPECT_EQ(permutohedron_f(1), QPoly(1));
  EXPECT_EQ(permutohedron_f(2), (QPoly{2, 1}));
  EXPECT_EQ(permutohedron_f(3), (QPoly{6, 6, 1}));
  EXPECT_EQ(permutohedron_f(4), (QPoly{24, 36, 14, 1}));
  EXPECT_THROW(permutohedron_f(-1), InputError);
}

TEST(PermutohedronF, CountsSetCompositionsByBlocks) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::int64_t> counts(n + 1, 0);
    for (const auto& f : enumerate_set_compositions(n)) ++counts[n - static_cast<int>(f.block_count())];
    EXPECT_EQ(permutohedron_f(n), QPoly(counts)) << "n = " << n;
  }
}

TEST(PermutohedronF, MatchesCompleteHypergraph) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(f_polynomial_geometric(complete(n)), permutohedron_f(n));
    EXPECT_EQ(f_polynomial_from_enumerator(psi_q(complete(n))), permutohedron_f(n));
  }
}

TEST(UniformFFormula, SmallValues) {
  EXPECT_EQ(uniform_f_formula(3, 2), (QPoly{6, 6, 1}));
  EXPECT_EQ(uniform_f_formula(4, 2), (QPoly{24, 36, 14, 1}));
  EXPECT_THROW(uniform_f_formula(3, 3), InputError);
  EXPECT_THROW(uniform_f_formula(3, 1), InputError);
}

TEST(UniformFFormula, MatchesBothPipelines) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}}) {
    const Hypergraph h = uniform(n, k);
    const QPoly formula = uniform_f_formula(n, k);
    EXPECT_EQ(formula, f_polynomial_geometric(h)) << n << "," << k;
    EXPECT_EQ(formula, f_polynomial_from_enumerator(psi_q(h))) << n << "," << k;
  }
}

TEST(UniformFFormula, PairsGivePermutohedron) {
  // U_{n,2} is the complete graph, whose zonotope is the permutohedron.
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(uniform_f_formula(n, 2), permutohedron_f(n));
}

TEST(UniformFFormula, VertexCountMatchesOracle) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      EXPECT_EQ(uniform_f_formula(n, k).coeff(0),
                static_cast<std::int64_t>(minkowski_vertices(uniform(n, k)).size()));
    }
  }
}

TEST(PitmanStanleyEnumerator, Examples) {
  EXPECT_EQ(pitman_stanley_enumerator(0), QSymM::monomial(Composition{1}));
  const QSymM one = QSymM::monomial(Composition{2}, QPoly::q()) + QSymM::monomial(Composition{1, 1}, 2);
  EXPECT_EQ(pitman_stanley_enumerator(1), one);
  EXPECT_THROW(pitman_stanley_enumerator(-1), InputError);
}

TEST(PitmanStanleyEnumerator, MatchesPsiOfFamily) {
  for (int d = 0; d <= 5; ++d) {
    EXPECT_EQ(pitman_stanley_enumerator(d), psi_q(pitman_stanley(d + 1))) << "d = " << d;
  }
}

TEST(PitmanStanleyEnumerator, GivesCubeFPolynomial) {
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(f_polynomial_from_enumerator(pitman_stanley_enumerator(d)), pow(QPoly{2, 1}, d));
  }
}

TEST(PitmanStanley, GeometricCube) {
  for (int d = 0; d <= 5; ++d) {
    const QPoly f = f_polynomial_geometric(pitman_stanley(d + 1));
    EXPECT_EQ(f, pow(QPoly{2, 1}, d));
    for (int i = 0; i <= d; ++i) EXPECT_EQ(f.coeff(i), binom(d, i) << (d - i));
  }
}

TEST(FromGraph, ZonotopeMatchesOracle) {
  // Path, star, cycle, and a triangle with a pendant edge.
  const std::vector<std::vector<std::pair<int, int>>> graphs{
      {{1, 2}, {2, 3}, {3, 4}},
      {{1, 2}, {1, 3}, {1, 4}},
      {{1, 2}, {2, 3}, {3, 4}, {4, 1}},
      {{1, 2}, {2, 3}, {1, 3}, {3, 4}},
  };
  for (const auto& g : graphs) {
    const Hypergraph h = from_graph(4, g);
    EXPECT_EQ(f_polynomial_geometric(h), f_polynomial_from_enumerator(psi_q(h)));
  }
  // Forests give cubes.
  EXPECT_EQ(f_polynomial_geometric(from_graph(4, graphs[0])), pow(QPoly{2, 1}, 3));
  EXPECT_EQ(f_polynomial_geometric(from_graph(4, graphs[1])), pow(QPoly{2, 1}, 3));
}

TEST(OneSkeleton, InvariantOnNamedComplexes) {
  const Hypergraph tetra = simplicial_complex(4, {{1, 2, 3, 4}});
  EXPECT_EQ(psi_q(tetra), psi_q(one_skeleton(tetra)));
  const Hypergraph two_triangles = simplicial_complex(5, {{1, 2, 3}, {3, 4, 5}});
  EXPECT_EQ(psi_q(two_triangles), psi_q(one_skeleton(two_triangles)));
}

}  // namespace
}  // namespace hgq
