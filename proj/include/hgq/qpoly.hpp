#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "hgq/error.hpp"

namespace hgq {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

/// Polynomial in q with integer coefficients, stored densely in ascending
/// degree with no trailing zeros (so the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(constant);
  }
  QPoly(std::initializer_list<std::int64_t> ascending) : coeffs_(ascending) { normalize(); }
  explicit QPoly(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {
    normalize();
  }

  /// c·q^d
  static QPoly monomial(std::int64_t c, int d) {
    QPoly p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<std::size_t>(d) + 1, 0);
      p.coeffs_[d] = c;
    }
    return p;
  }

  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
  }

  QPoly& operator-=(const QPoly& o) { return *this += -o; }

  /// Adds c·q^d in place.
  void add_monomial(std::int64_t c, int d) {
    if (c == 0) return;
    if (static_cast<int>(coeffs_.size()) <= d) coeffs_.resize(static_cast<std::size_t>(d) + 1, 0);
    coeffs_[d] = checked::add(coeffs_[d], c);
    normalize();
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = checked::mul(c, -1);
    return r;
  }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r[i + j] = checked::add(r[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return QPoly(std::move(r));
  }

  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  bool operator==(const QPoly&) const = default;

  /// Value at an integer q.
  std::int64_t evaluate(std::int64_t q) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = checked::add(checked::mul(acc, q), *it);
    }
    return acc;
  }

  /// p(q) ↦ p(-q)
  QPoly negate_variable() const {
    QPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::int64_t c = coeffs_[i];
      if (c == 0) continue;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      std::int64_t a = c < 0 ? -c : c;
      if (i == 0 || a != 1) s += std::to_string(a);
      if (i >= 1) s += "q";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

inline QPoly pow(const QPoly& base, int e) {
  QPoly r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

}  // namespace hgq
