#pragma once

#include <string>
#include <vector>

#include "hgq/hopf.hpp"
#include "hgq/polytope.hpp"
#include "hgq/splitting.hpp"

namespace hgq {

struct RankMismatch {
  SetComposition flag;
  int geometric_rank;
  int split_rank;
};

struct TheoremReport {
  std::size_t checked = 0;
  std::vector<RankMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compare the face dimension dim π(F) with rk(H/F) for every flag F of [n].
inline TheoremReport verify_theorem(const Hypergraph& h, int guard = kOracleGuard) {
  HypergraphicPolytope poly(h, guard);
  TheoremReport report;
  for_each_set_composition(h.n(), [&](std::span<const VertexSet> blocks) {
    ++report.checked;
    const int geo = poly.geometric_rank(blocks);
    const int alg = split_rank(h, blocks);
    if (geo != alg) {
      report.mismatches.push_back(
          {SetComposition(h.n(), std::vector<VertexSet>(blocks.begin(), blocks.end())), geo, alg});
    }
  });
  return report;
}

struct HopfReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Bialgebra and antipode axioms on the basis element [H]:
/// coassociativity, both counit laws, and both antipode convolutions.
inline HopfReport verify_hopf(const Hypergraph& h, int guard = kAntipodeGuard) {
  HopfReport report;
  const HopfElement x = hopf_basis(h);
  const TensorElement delta = coproduct(x);
  auto check = [&](bool ok, const char* what) {
    ++report.checked;
    if (!ok) report.failures.emplace_back(what);
  };
  check(coproduct_left(delta) == coproduct_right(delta), "coassociativity");
  check(counit_left(delta) == x, "left counit");
  check(counit_right(delta) == x, "right counit");
  const HopfElement expected = counit(x) * hopf_unit();
  const auto [left, right] = antipode_convolutions(x, guard);
  check(left == expected, "m(S⊗id)Δ = ηε");
  check(right == expected, "m(id⊗S)Δ = ηε");
  return report;
}

}  // namespace hgq
