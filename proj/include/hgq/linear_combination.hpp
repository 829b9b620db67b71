#pragma once

#include <map>
#include <utility>

#include "hgq/qpoly.hpp"

namespace hgq {

/// A finite formal ℤ[q]-linear combination of `Key`s. Zero coefficients are
/// dropped, so two combinations are equal iff their term maps are equal.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, QPoly>;

  LinearCombination() = default;

  static LinearCombination basis(Key k, const QPoly& c = QPoly(1)) {
    LinearCombination r;
    r.add_term(std::move(k), c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QPoly coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QPoly() : it->second;
  }

  void add_term(Key k, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }

  friend LinearCombination operator*(const QPoly& s, const LinearCombination& a) {
    LinearCombination r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
  }

  bool operator==(const LinearCombination&) const = default;

 private:
  Terms terms_;
};

}  // namespace hgq
