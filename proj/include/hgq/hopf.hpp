#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgq/compositions.hpp"
#include "hgq/hypergraph.hpp"
#include "hgq/linear_combination.hpp"
#include "hgq/parallel.hpp"
#include "hgq/qsym.hpp"
#include "hgq/splitting.hpp"

namespace hgq {

/// Element of the Hopf algebra of hypergraphs: a combination of isomorphism
/// classes, each key being a canonical_form.
using HopfElement = LinearCombination<Hypergraph>;
using TensorElement = LinearCombination<std::pair<Hypergraph, Hypergraph>>;
using TripleTensor = LinearCombination<std::tuple<Hypergraph, Hypergraph, Hypergraph>>;

inline constexpr int kAntipodeGuard = 7;
inline constexpr int kPsiGuard = 8;

/// Memoized canonical_form.
class Canonicalizer {
 public:
  const Hypergraph& operator()(const Hypergraph& h) {
    auto it = cache_.find(h);
    if (it == cache_.end()) it = cache_.emplace(h, canonical_form(h)).first;
    return it->second;
  }

 private:
  std::unordered_map<Hypergraph, Hypergraph, HypergraphHash> cache_;
};

/// c·[H]
inline HopfElement hopf_basis(const Hypergraph& h, const QPoly& c = QPoly(1)) {
  return HopfElement::basis(canonical_form(h), c);
}

/// η = [H_∅]
inline HopfElement hopf_unit() { return HopfElement::basis(Hypergraph()); }

/// [H1]·[H2] = [H1 ⊔ H2], extended bilinearly.
inline HopfElement product(const HopfElement& a, const HopfElement& b) {
  HopfElement r;
  for (const auto& [ha, ca] : a.terms()) {
    for (const auto& [hb, cb] : b.terms()) r.add_term(canonical_form(disjoint_union(ha, hb)), ca * cb);
  }
  return r;
}

/// Δ[H] = Σ_{S ⊆ [n]} [H|_S] ⊗ [H/S], both extreme subsets included.
inline TensorElement coproduct(const HopfElement& a) {
  Canonicalizer canon;
  TensorElement r;
  for (const auto& [h, c] : a.terms()) {
    const VertexSet::Mask all = h.vertices().bits();
    for (VertexSet::Mask s = 0;; s = (s - all) & all) {  // every submask, starting at ∅
      const VertexSet sub(s);
      r.add_term({canon(restrict(h, sub)), canon(contract(h, sub))}, c);
      if (s == all) break;
    }
  }
  return r;
}

/// ε: the coefficient of [H_∅].
inline QPoly counit(const HopfElement& a) { return a.coefficient(Hypergraph()); }

namespace detail {

/// Class of the splitting hypergraph H/F, memoized on the sorted multiset of
/// piece classes so that flags with equal pieces share one canonicalization.
class SplitClassifier {
 public:
  explicit SplitClassifier(const Hypergraph& h) : h_(h) {}

  const Hypergraph& operator()(std::span<const VertexSet> blocks) {
    pieces_.clear();
    VertexSet before;
    for (VertexSet block : blocks) {
      const VertexSet upto = before | block;
      pieces_.push_back(piece_canon_(contract(restrict(h_, upto), before.compress(upto))));
      before = upto;
    }
    std::sort(pieces_.begin(), pieces_.end());
    auto it = whole_.find(pieces_);
    if (it == whole_.end()) {
      Hypergraph joined;
      for (const auto& p : pieces_) joined = disjoint_union(joined, p);
      it = whole_.emplace(pieces_, canonical_form(joined)).first;
    }
    return it->second;
  }

 private:
  const Hypergraph& h_;
  Canonicalizer piece_canon_;
  std::vector<Hypergraph> pieces_;
  std::map<std::vector<Hypergraph>, Hypergraph> whole_;
};

}  // namespace detail

/// Takeuchi antipode S[H] = Σ_F (-1)^{#blocks(F)} [H/F] over all set
/// compositions F of [n]; S(η) = η.
inline HopfElement antipode(const HopfElement& a, int guard = kAntipodeGuard) {
  HopfElement r;
  for (const auto& [h, c] : a.terms()) {
    check_guard(h.n(), guard, "antipode");
    if (h.n() == 0) {
      r.add_term(h, c);
      continue;
    }
    detail::SplitClassifier classify(h);
    std::map<Hypergraph, std::int64_t> counts;
    for_each_set_composition(h.n(), [&](std::span<const VertexSet> blocks) {
      counts[classify(blocks)] += blocks.size() % 2 == 0 ? 1 : -1;
    });
    for (const auto& [k, m] : counts) r.add_term(k, QPoly(m) * c);
  }
  return r;
}

/// ζ[H] = 1 if H is discrete, 0 otherwise.
inline QPoly zeta(const HopfElement& a) {
  QPoly r;
  for (const auto& [h, c] : a.terms()) {
    if (h.is_discrete()) r += c;
  }
  return r;
}

/// ζ_q[H] = q^{rk(H)}.
inline QPoly zeta_q(const HopfElement& a) {
  QPoly r;
  for (const auto& [h, c] : a.terms()) r += QPoly::monomial(1, rank(h)) * c;
  return r;
}

/// (ζ_q)_α[H] = Σ_{type(F) = α} q^{rk(H/F)}.
inline QPoly zeta_q_alpha(const Hypergraph& h, const Composition& alpha) {
  if (alpha.degree() != h.n()) {
    throw InputError("composition degree " + std::to_string(alpha.degree()) +
                     " does not match vertex count " + std::to_string(h.n()));
  }
  std::vector<std::int64_t> by_rank(static_cast<std::size_t>(h.n()) + 1, 0);
  for_each_set_composition_of_type(h.n(), alpha, [&](std::span<const VertexSet> blocks) {
    ++by_rank[split_rank(h, blocks)];
  });
  return QPoly(std::move(by_rank));
}

/// Ψ_q[H] = Σ_F q^{rk(H/F)} M_{type(F)}, folded over all set compositions of [n].
///
/// The sweep is split by first block across `threads` workers; counts are
/// exact so the result does not depend on the split.
inline QSymM psi_q(const Hypergraph& h, int guard = kPsiGuard, unsigned threads = 1) {
  if (h.n() == 0) throw InputError("psi_q: empty hypergraph");
  check_guard(h.n(), guard, "psi_q");
  const int n = h.n();
  using Counts = std::map<Composition, std::vector<std::int64_t>>;
  const std::size_t first_blocks = (std::size_t{1} << n) - 1;
  Counts counts = parallel_fold(
      first_blocks, threads, Counts{},
      [&](Counts& acc, std::size_t i) {
        for_each_set_composition_with_first(
            n, VertexSet(static_cast<VertexSet::Mask>(i + 1)), [&](std::span<const VertexSet> blocks) {
              auto& row = acc[type_of(blocks)];
              if (row.empty()) row.assign(static_cast<std::size_t>(n), 0);
              ++row[split_rank(h, blocks)];
            });
      },
      [](Counts& into, Counts&& from) {
        for (auto& [alpha, row] : from) {
          auto& dst = into[alpha];
          if (dst.empty()) {
            dst = std::move(row);
          } else {
            for (std::size_t d = 0; d < row.size(); ++d) dst[d] += row[d];
          }
        }
      });
  QSymM out(n);
  for (auto& [alpha, row] : counts) out.add_term(alpha, QPoly(std::move(row)));
  return out;
}

// Tensor plumbing used by the bialgebra checks.

/// m: A ⊗ B ↦ A·B
inline HopfElement multiply(const TensorElement& t) {
  HopfElement r;
  for (const auto& [k, c] : t.terms()) r.add_term(canonical_form(disjoint_union(k.first, k.second)), c);
  return r;
}

/// (Δ ⊗ id)
inline TripleTensor coproduct_left(const TensorElement& t) {
  TripleTensor r;
  for (const auto& [k, c] : t.terms()) {
    const TensorElement split = coproduct(HopfElement::basis(k.first));
    for (const auto& [k2, c2] : split.terms()) {
      r.add_term({k2.first, k2.second, k.second}, c * c2);
    }
  }
  return r;
}

/// (id ⊗ Δ)
inline TripleTensor coproduct_right(const TensorElement& t) {
  TripleTensor r;
  for (const auto& [k, c] : t.terms()) {
    const TensorElement split = coproduct(HopfElement::basis(k.second));
    for (const auto& [k2, c2] : split.terms()) {
      r.add_term({k.first, k2.first, k2.second}, c * c2);
    }
  }
  return r;
}

/// (ε ⊗ id)
inline HopfElement counit_left(const TensorElement& t) {
  HopfElement r;
  for (const auto& [k, c] : t.terms()) {
    if (k.first.n() == 0) r.add_term(k.second, c);
  }
  return r;
}

/// (id ⊗ ε)
inline HopfElement counit_right(const TensorElement& t) {
  HopfElement r;
  for (const auto& [k, c] : t.terms()) {
    if (k.second.n() == 0) r.add_term(k.first, c);
  }
  return r;
}

/// m ∘ (S ⊗ id) ∘ Δ and m ∘ (id ⊗ S) ∘ Δ applied to `a`.
inline std::pair<HopfElement, HopfElement> antipode_convolutions(const HopfElement& a,
                                                                 int guard = kAntipodeGuard) {
  std::map<Hypergraph, HopfElement> memo;
  auto s_of = [&](const Hypergraph& h) -> const HopfElement& {
    auto it = memo.find(h);
    if (it == memo.end()) it = memo.emplace(h, antipode(HopfElement::basis(h), guard)).first;
    return it->second;
  };
  HopfElement left;
  HopfElement right;
  const TensorElement delta = coproduct(a);
  for (const auto& [k, c] : delta.terms()) {
    left += c * product(s_of(k.first), HopfElement::basis(k.second));
    right += c * product(HopfElement::basis(k.first), s_of(k.second));
  }
  return {left, right};
}

}  // namespace hgq
