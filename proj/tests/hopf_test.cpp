#include <numeric>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace hgq {
namespace {

using testing::hg;
using testing::k2;
using testing::point;

HopfElement basis(const Hypergraph& h) { return hopf_basis(h); }

/// Isomorphism classes of hypergraphs on 1..max_n vertices.
std::vector<Hypergraph> all_classes(int max_n) {
  std::set<Hypergraph> seen;
  for (int n = 1; n <= max_n; ++n) {
    for_each_hypergraph(n, [&](const Hypergraph& h) { seen.insert(canonical_form(h)); });
  }
  return {seen.begin(), seen.end()};
}

TEST(Product, Examples) {
  EXPECT_EQ(product(basis(point()), basis(point())), basis(discrete_hypergraph(2)));
  const HopfElement a = basis(hg(3, {{1, 2}})) + QPoly::q() * basis(k2());
  EXPECT_EQ(product(hopf_unit(), a), a);
  EXPECT_EQ(product(a, hopf_unit()), a);
  EXPECT_EQ(product(basis(k2()), basis(point())), product(basis(point()), basis(k2())));
}

TEST(Product, Commutative) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const HopfElement a = basis(random_hypergraph(uniform_int(rng, 1, 3), rng));
    const HopfElement b = basis(random_hypergraph(uniform_int(rng, 1, 3), rng));
    EXPECT_EQ(product(a, b), product(b, a));
  }
}

TEST(Coproduct, Point) {
  TensorElement expected;
  expected.add_term({Hypergraph(), point()}, 1);
  expected.add_term({point(), Hypergraph()}, 1);
  EXPECT_EQ(coproduct(basis(point())), expected);
}

TEST(Coproduct, K2) {
  TensorElement expected;
  expected.add_term({Hypergraph(), k2()}, 1);
  expected.add_term({point(), point()}, 2);
  expected.add_term({k2(), Hypergraph()}, 1);
  EXPECT_EQ(coproduct(basis(k2())), expected);
}

TEST(Coproduct, CounitLaws) {
  for (const auto& h : all_classes(4)) {
    const TensorElement d = coproduct(basis(h));
    EXPECT_EQ(counit_left(d), basis(h));
    EXPECT_EQ(counit_right(d), basis(h));
  }
}

TEST(Coproduct, TermCountIsTwoToTheN) {
  const TensorElement d = coproduct(basis(complete(3)));
  std::int64_t total = 0;
  for (const auto& [k, c] : d.terms()) total += c.coeff(0);
  EXPECT_EQ(total, 8);
}

TEST(Coproduct, Coassociative) {
  for (const auto& h : all_classes(3)) {
    const TensorElement d = coproduct(basis(h));
    EXPECT_EQ(coproduct_left(d), coproduct_right(d));
  }
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorElement d = coproduct(basis(random_hypergraph(4, rng)));
    EXPECT_EQ(coproduct_left(d), coproduct_right(d));
  }
}

TEST(Counit, Examples) {
  EXPECT_EQ(counit(hopf_unit()), QPoly(1));
  EXPECT_EQ(counit(basis(k2())), QPoly());
  EXPECT_EQ(counit(QPoly(3) * hopf_unit() + QPoly::q() * basis(k2())), QPoly(3));
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode(basis(point())), QPoly(-1) * basis(point()));
  EXPECT_EQ(antipode(basis(k2())), QPoly(-1) * basis(k2()) + QPoly(2) * basis(discrete_hypergraph(2)));
  EXPECT_EQ(antipode(hopf_unit()), hopf_unit());
  EXPECT_THROW(antipode(basis(discrete_hypergraph(8))), GuardError);
  EXPECT_NO_THROW(antipode(basis(discrete_hypergraph(8)), 8));
}

TEST(Antipode, ConvolutionIdentities) {
  for (const auto& h : all_classes(3)) {
    const HopfElement x = basis(h);
    const auto [left, right] = antipode_convolutions(x);
    EXPECT_EQ(left, counit(x) * hopf_unit());
    EXPECT_EQ(right, counit(x) * hopf_unit());
  }
  const auto [l0, r0] = antipode_convolutions(hopf_unit());
  EXPECT_EQ(l0, hopf_unit());
  EXPECT_EQ(r0, hopf_unit());
}

TEST(Antipode, IsAnInvolution) {
  // The algebra is commutative, so S∘S = id.
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const HopfElement x = basis(random_hypergraph(uniform_int(rng, 1, 4), rng));
    EXPECT_EQ(antipode(antipode(x)), x);
  }
}

TEST(Antipode, IsMultiplicative) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const HopfElement a = basis(random_hypergraph(uniform_int(rng, 1, 3), rng));
    const HopfElement b = basis(random_hypergraph(uniform_int(rng, 1, 2), rng));
    EXPECT_EQ(antipode(product(a, b)), product(antipode(a), antipode(b)));
  }
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta_q(basis(discrete_hypergraph(3))), QPoly(1));
  EXPECT_EQ(zeta_q(basis(complete(4))), QPoly::monomial(1, 3));
  EXPECT_EQ(zeta(basis(k2())), QPoly());
  EXPECT_EQ(zeta_q(basis(k2())), QPoly::q());
  EXPECT_EQ(zeta(basis(discrete_hypergraph(2))), QPoly(1));
}

TEST(Zeta, ZetaIsZetaQAtZero) {
  for (const auto& h : all_classes(3)) {
    EXPECT_EQ(zeta(basis(h)), QPoly(zeta_q(basis(h)).evaluate(0)));
  }
}

TEST(Zeta, ZetaQIsMultiplicative) {
  const auto classes = all_classes(3);
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      EXPECT_EQ(zeta_q(product(basis(a), basis(b))), zeta_q(basis(a)) * zeta_q(basis(b)));
    }
  }
}

TEST(ZetaQAlpha, Examples) {
  EXPECT_EQ(zeta_q_alpha(k2(), Composition{2}), QPoly::q());
  EXPECT_EQ(zeta_q_alpha(k2(), Composition{1, 1}), QPoly(2));
  EXPECT_EQ(zeta_q_alpha(complete(4), Composition{1, 1, 1, 1}), QPoly(24));
  EXPECT_THROW(zeta_q_alpha(k2(), Composition{3}), InputError);
}

TEST(PsiQ, Examples) {
  EXPECT_EQ(psi_q(point()), QSymM::monomial(Composition{1}));
  const QSymM k2_psi =
      QSymM::monomial(Composition{2}, QPoly::q()) + QSymM::monomial(Composition{1, 1}, 2);
  EXPECT_EQ(psi_q(k2()), k2_psi);
  const QSymM m1 = QSymM::monomial(Composition{1});
  EXPECT_EQ(psi_q(discrete_hypergraph(2)),
            QSymM::monomial(Composition{2}) + QSymM::monomial(Composition{1, 1}, 2));
  EXPECT_EQ(psi_q(discrete_hypergraph(2)), quasi_shuffle(m1, m1));
  EXPECT_THROW(psi_q(Hypergraph()), InputError);
  EXPECT_THROW(psi_q(discrete_hypergraph(9)), GuardError);
}

TEST(PsiQ, GroupsZetaQAlpha) {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = random_hypergraph(uniform_int(rng, 1, 5), rng);
    QSymM expected(h.n());
    for (const auto& alpha : compositions_of(h.n())) expected.add_term(alpha, zeta_q_alpha(h, alpha));
    EXPECT_EQ(psi_q(h), expected);
  }
}

TEST(PsiQ, StructuralCoefficients) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const Hypergraph h = random_hypergraph(n, rng);
    const QSymM psi = psi_q(h);
    EXPECT_EQ(psi.degree(), n);
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(psi.coefficient(Composition(std::vector<int>(n, 1))), QPoly(fact));
    EXPECT_EQ(psi.coefficient(Composition{n}), QPoly::monomial(1, rank(h)));
    const QSymM at_one = evaluate_q(psi, 1);
    for (int m = 1; m <= 4; ++m) {
      std::int64_t power = 1;
      for (int i = 0; i < n; ++i) power *= m;
      EXPECT_EQ(ps_eval(at_one, m), QPoly(power));
    }
  }
}

TEST(PsiQ, IsAnAlgebraMap) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int n1 = uniform_int(rng, 1, 4);
    const int n2 = uniform_int(rng, 1, 6 - n1);
    const Hypergraph a = random_hypergraph(n1, rng);
    const Hypergraph b = random_hypergraph(n2, rng);
    EXPECT_EQ(psi_q(disjoint_union(a, b)), quasi_shuffle(psi_q(a), psi_q(b)));
  }
}

TEST(PsiQ, IsomorphismInvariant) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    const Hypergraph h = random_hypergraph(n, rng);
    const QSymM psi = psi_q(h);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      EXPECT_EQ(psi_q(relabel(h, perm)), psi);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(PsiQ, IndependentOfThreadCount) {
  Rng rng(99);
  const Hypergraph h = random_hypergraph(7, rng);
  const QSymM serial = psi_q(h, kPsiGuard, 1);
  for (unsigned t : {2U, 3U, 8U}) EXPECT_EQ(psi_q(h, kPsiGuard, t), serial);
}

TEST(VerifyHopf, ReportsAllAxioms) {
  const HopfReport r = verify_hopf(complete(3));
  EXPECT_EQ(r.checked, 5U);
  EXPECT_TRUE(r.ok());
}

}  // namespace
}  // namespace hgq
