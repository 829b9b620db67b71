#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hgq/error.hpp"
#include "hgq/vertex_set.hpp"

namespace hgq {

/// An integer composition α = (α_1, ..., α_k) ⊨ n. The empty composition
/// indexes the degree-zero basis element.
///
/// Ordered by number of parts, then lexicographically.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  int degree() const {
    int d = 0;
    for (int p : parts) d += p;
    return d;
  }
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  bool operator==(const Composition&) const = default;
  std::strong_ordering operator<=>(const Composition& o) const {
    if (auto c = parts.size() <=> o.parts.size(); c != 0) return c;
    return parts <=> o.parts;
  }

 private:
  void validate() const {
    for (int p : parts) {
      if (p < 1) throw InputError("composition part must be positive");
    }
  }
};

/// α·β
inline Composition concatenate(const Composition& a, const Composition& b) {
  std::vector<int> p(a.parts);
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  return Composition(std::move(p));
}

/// All 2^{n-1} compositions of n in canonical order; n = 0 gives {()}.
inline std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw InputError("negative degree");
  if (n == 0) return {Composition{}};
  if (n > 30) throw GuardError("compositions_of: n too large");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (unsigned cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (cuts & (1U << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// An ordered set partition C_1|...|C_k of [n], equivalently the flag
/// ∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_k = [n] with F_i = C_1 ∪ ... ∪ C_i.
class SetComposition {
 public:
  SetComposition(int n, std::vector<VertexSet> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 0 || n > kMaxVertices) throw InputError("bad vertex count for set composition");
    VertexSet seen;
    for (VertexSet b : blocks_) {
      if (b.empty()) throw InputError("set composition has an empty block");
      if (b.intersects(seen)) throw InputError("set composition blocks overlap");
      seen |= b;
    }
    if (seen != VertexSet::range(n)) {
      throw InputError("set composition does not cover [" + std::to_string(n) + "]");
    }
  }

  int n() const { return n_; }
  std::span<const VertexSet> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// F_i, the union of the first i blocks.
  VertexSet prefix(std::size_t i) const {
    VertexSet f;
    for (std::size_t j = 0; j < i && j < blocks_.size(); ++j) f |= blocks_[j];
    return f;
  }

  bool operator==(const SetComposition&) const = default;

 private:
  int n_;
  std::vector<VertexSet> blocks_;
};

/// The single-block flag [n].
inline SetComposition trivial_flag(int n) {
  if (n == 0) return SetComposition(0, {});
  return SetComposition(n, {VertexSet::range(n)});
}

/// {1}|{2}|...|{n}
inline SetComposition finest_flag(int n) {
  std::vector<VertexSet> b;
  for (int v = 1; v <= n; ++v) b.push_back(VertexSet::singleton(v));
  return SetComposition(n, std::move(b));
}

inline Composition type_of(std::span<const VertexSet> blocks) {
  std::vector<int> parts;
  parts.reserve(blocks.size());
  for (VertexSet b : blocks) parts.push_back(b.size());
  return Composition(std::move(parts));
}

inline Composition type_of(const SetComposition& f) { return type_of(f.blocks()); }

/// ω with ω_i = j when i lies in the j-th block.
inline std::vector<int> canonical_weight(const SetComposition& f) {
  std::vector<int> w(f.n(), 0);
  int j = 1;
  for (VertexSet b : f.blocks()) {
    b.for_each([&](int v) { w[v - 1] = j; });
    ++j;
  }
  return w;
}

/// Inverse of canonical_weight: level sets ordered by value.
inline SetComposition set_composition_from_weight(std::span<const int> weight) {
  std::vector<int> values(weight.begin(), weight.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<VertexSet> blocks(values.size());
  for (std::size_t i = 0; i < weight.size(); ++i) {
    auto it = std::lower_bound(values.begin(), values.end(), weight[i]);
    blocks[it - values.begin()].insert(static_cast<int>(i) + 1);
  }
  return SetComposition(static_cast<int>(weight.size()), std::move(blocks));
}

namespace detail {

template <class Visitor>
void set_compositions_rec(VertexSet remaining, std::vector<VertexSet>& stack, Visitor& visit) {
  if (remaining.empty()) {
    visit(std::span<const VertexSet>(stack));
    return;
  }
  const VertexSet::Mask r = remaining.bits();
  for (VertexSet::Mask s = r; s != 0; s = (s - 1) & r) {
    stack.push_back(VertexSet(s));
    set_compositions_rec(VertexSet(r & ~s), stack, visit);
    stack.pop_back();
  }
}

inline bool lex_less(VertexSet a, VertexSet b) { return a.elements() < b.elements(); }

}  // namespace detail

/// Visit every set composition of [n] whose first block is `first`, passing
/// the block list as a span valid only for the duration of the call.
template <class Visitor>
void for_each_set_composition_with_first(int n, VertexSet first, Visitor&& visit) {
  std::vector<VertexSet> stack;
  stack.reserve(n);
  stack.push_back(first);
  detail::set_compositions_rec(VertexSet::range(n) - first, stack, visit);
}

/// Visit every set composition of [n] (n ≥ 0; n = 0 visits the empty flag once).
/// Traversal order is deterministic but unspecified; use
/// enumerate_set_compositions for the canonical order.
template <class Visitor>
void for_each_set_composition(int n, Visitor&& visit) {
  std::vector<VertexSet> stack;
  stack.reserve(n);
  detail::set_compositions_rec(VertexSet::range(n), stack, visit);
}

namespace detail {

template <class Visitor>
void typed_rec(VertexSet remaining, std::span<const int> sizes, std::vector<VertexSet>& stack,
               Visitor& visit) {
  if (sizes.empty()) {
    visit(std::span<const VertexSet>(stack));
    return;
  }
  const VertexSet::Mask r = remaining.bits();
  const int want = sizes.front();
  for (VertexSet::Mask s = r; s != 0; s = (s - 1) & r) {
    if (std::popcount(s) != want) continue;
    stack.push_back(VertexSet(s));
    typed_rec(VertexSet(r & ~s), sizes.subspan(1), stack, visit);
    stack.pop_back();
  }
}

}  // namespace detail

/// Visit every set composition of [n] with type α (requires α ⊨ n).
template <class Visitor>
void for_each_set_composition_of_type(int n, const Composition& alpha, Visitor&& visit) {
  if (alpha.degree() != n) throw InputError("composition degree does not match n");
  std::vector<VertexSet> stack;
  stack.reserve(alpha.length());
  detail::typed_rec(VertexSet::range(n), std::span<const int>(alpha.parts), stack, visit);
}

/// Every set composition of [n], ordered by block count and then
/// lexicographically by the blocks' element lists.
inline std::vector<SetComposition> enumerate_set_compositions(int n) {
  if (n <= 0) throw InputError("enumerate_set_compositions: n must be positive");
  check_guard(n, 10, "enumerate_set_compositions");
  std::vector<SetComposition> out;
  for_each_set_composition(n, [&](std::span<const VertexSet> blocks) {
    out.emplace_back(n, std::vector<VertexSet>(blocks.begin(), blocks.end()));
  });
  std::sort(out.begin(), out.end(), [](const SetComposition& a, const SetComposition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    return std::lexicographical_compare(a.blocks().begin(), a.blocks().end(), b.blocks().begin(),
                                        b.blocks().end(), detail::lex_less);
  });
  return out;
}

}  // namespace hgq
