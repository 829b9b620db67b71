#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgq/compositions.hpp"
#include "hgq/error.hpp"
#include "hgq/qpoly.hpp"

namespace hgq {

/// A homogeneous quasisymmetric function of degree n written in the
/// monomial basis, Σ_α c_α(q) M_α, with c_α ∈ ℤ[q]. Zero coefficients are
/// never stored and terms iterate in canonical composition order.
class QSymM {
 public:
  using Terms = std::map<Composition, QPoly>;

  explicit QSymM(int degree = 0) : degree_(degree) {
    if (degree < 0) throw InputError("negative degree");
  }

  /// c·M_α
  static QSymM monomial(const Composition& alpha, const QPoly& c = QPoly(1)) {
    QSymM f(alpha.degree());
    f.add_term(alpha, c);
    return f;
  }

  /// M_() = 1, the unit.
  static QSymM one() { return monomial(Composition{}); }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QPoly coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? QPoly() : it->second;
  }

  void add_term(const Composition& alpha, const QPoly& c) {
    if (alpha.degree() != degree_) {
      throw InputError("composition of degree " + std::to_string(alpha.degree()) +
                       " added to QSym element of degree " + std::to_string(degree_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QSymM& operator+=(const QSymM& o) {
    check_same_degree(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
  }

  QSymM& operator-=(const QSymM& o) {
    check_same_degree(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
  }

  friend QSymM operator+(QSymM a, const QSymM& b) { return a += b; }
  friend QSymM operator-(QSymM a, const QSymM& b) { return a -= b; }

  friend QSymM operator*(const QPoly& s, const QSymM& f) {
    QSymM r(f.degree_);
    for (const auto& [alpha, c] : f.terms_) r.add_term(alpha, s * c);
    return r;
  }

  /// Apply `fn` to every coefficient.
  template <class Fn>
  QSymM transform_coefficients(Fn&& fn) const {
    QSymM r(degree_);
    for (const auto& [alpha, c] : terms_) r.add_term(alpha, fn(c));
    return r;
  }

  bool operator==(const QSymM&) const = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [alpha, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")M_(";
      for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha.parts[i]);
      }
      s += ")";
    }
    return s;
  }

 private:
  void check_same_degree(const QSymM& o) const {
    if (o.degree_ != degree_) {
      throw InputError("mixed degrees " + std::to_string(degree_) + " and " +
                       std::to_string(o.degree_));
    }
  }

  int degree_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QSymM& f) { return os << f.to_string(); }

/// Σ s_i·F_i over operands of one common degree.
inline QSymM linear_combine(std::span<const std::pair<QPoly, QSymM>> pairs) {
  if (pairs.empty()) return QSymM(0);
  QSymM acc(pairs.front().second.degree());
  for (const auto& [s, f] : pairs) acc += s * f;
  return acc;
}

namespace detail {

inline void quasi_shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int>& prefix,
                              std::map<Composition, std::int64_t>& out) {
  if (a.empty() || b.empty()) {
    std::vector<int> parts(prefix);
    parts.insert(parts.end(), a.begin(), a.end());
    parts.insert(parts.end(), b.begin(), b.end());
    ++out[Composition(std::move(parts))];
    return;
  }
  prefix.push_back(a.front());
  quasi_shuffle_rec(a.subspan(1), b, prefix, out);
  prefix.back() = b.front();
  quasi_shuffle_rec(a, b.subspan(1), prefix, out);
  prefix.back() = a.front() + b.front();
  quasi_shuffle_rec(a.subspan(1), b.subspan(1), prefix, out);
  prefix.pop_back();
}

}  // namespace detail

/// M_α·M_β as a multiset of compositions (the overlapping shuffles of α and β).
inline std::map<Composition, std::int64_t> quasi_shuffle(const Composition& a, const Composition& b) {
  std::map<Composition, std::int64_t> out;
  std::vector<int> prefix;
  detail::quasi_shuffle_rec(a.parts, b.parts, prefix, out);
  return out;
}

/// The QSym product in the monomial basis.
inline QSymM quasi_shuffle(const QSymM& f, const QSymM& g) {
  QSymM r(f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      const QPoly c = ca * cb;
      for (const auto& [gamma, mult] : quasi_shuffle(a, b)) r.add_term(gamma, QPoly(mult) * c);
    }
  }
  return r;
}

/// F ∘ G, bilinear extension of M_α ∘ M_β = M_{α·β}.
inline QSymM concat(const QSymM& f, const QSymM& g) {
  QSymM r(f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) r.add_term(concatenate(a, b), ca * cb);
  }
  return r;
}

/// (M_{(i_1,...,i_k)})_{+1} = M_{(i_1,...,i_k + 1)}, extended linearly.
inline QSymM plus_one(const QSymM& f) {
  QSymM r(f.degree() + 1);
  for (const auto& [a, c] : f.terms()) {
    if (a.empty()) throw InputError("plus_one: empty composition has no last part");
    std::vector<int> parts(a.parts);
    ++parts.back();
    r.add_term(Composition(std::move(parts)), c);
  }
  return r;
}

/// Binomial coefficient C(m, k) = m(m-1)...(m-k+1)/k! as a polynomial in m,
/// valid for negative m as well; C(-1, k) = (-1)^k.
inline std::int64_t binomial(std::int64_t m, int k) {
  if (k < 0) return 0;
  __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    // C(m, i+1) = C(m, i)·(m - i)/(i + 1), and every intermediate is an integer.
    acc = acc * (m - i) / (i + 1);
    if (acc > INT64_MAX || acc < INT64_MIN) throw OverflowError("binomial overflow");
  }
  return static_cast<std::int64_t>(acc);
}

/// Principal specialization ps(F)(m) = Σ_α c_α(q)·C(m, ℓ(α)), i.e. the value at
/// x_1 = ... = x_m = 1 (rest 0) for m ≥ 0, continued polynomially to m < 0.
inline QPoly ps_eval(const QSymM& f, std::int64_t m) {
  QPoly r;
  for (const auto& [a, c] : f.terms()) {
    r += QPoly(binomial(m, static_cast<int>(a.length()))) * c;
  }
  return r;
}

/// f(Q, q) = (-1)^n ps(F_{-q})(-1).
inline QPoly f_polynomial_from_enumerator(const QSymM& f) {
  QPoly r = ps_eval(f.transform_coefficients([](const QPoly& c) { return c.negate_variable(); }), -1);
  return f.degree() % 2 == 0 ? r : -r;
}

/// Coefficients evaluated at an integer q (result has constant coefficients).
inline QSymM evaluate_q(const QSymM& f, std::int64_t q) {
  return f.transform_coefficients([q](const QPoly& c) { return QPoly(c.evaluate(q)); });
}

}  // namespace hgq
