#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/rational.hpp"

namespace hopfhilbert {

/// Dense univariate polynomial over a field; coeffs()[i] is the coefficient
/// of z^i. Trailing zeros are never stored, so the zero polynomial is empty.
template <typename Field>
class Polynomial {
 public:
  using value_type = Field;

  Polynomial() = default;
  explicit Polynomial(std::vector<Field> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Field> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Field& c) { return Polynomial(std::vector<Field>{c}); }

  /// c * z^k
  static Polynomial monomial(const Field& c, std::size_t k) {
    std::vector<Field> v(k + 1, Field(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial z() { return monomial(Field(1), 1); }

  const std::vector<Field>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  Field coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Field(0); }
  const Field& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; requires !is_zero().
  std::size_t low_index() const {
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
  }

  Field operator()(const Field& x) const {
    Field acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Field& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Field& s) { return a *= s; }
  friend Polynomial operator*(const Field& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> out(a.coeffs_.size() + b.coeffs_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Field> coeffs_;
};

using Poly = Polynomial<Rational>;

template <typename Field>
bool is_zero(const Polynomial<Field>& p) {
  return p.is_zero();
}

template <typename T>
T ring_one() {
  return T(1);
}

template <>
inline Poly ring_one<Poly>() {
  return Poly::constant(1);
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <typename Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& a,
                                                       const Polynomial<Field>& b) {
  require(!b.is_zero(), ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<Field>{}, a};
  std::vector<Field> rem = a.coeffs();
  std::vector<Field> quot(rem.size() - b.size() + 1, Field(0));
  const Field& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Field c = rem[k + b.size() - 1] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(b.size() - 1);
  return {Polynomial<Field>(std::move(quot)), Polynomial<Field>(std::move(rem))};
}

/// a / b when b divides a; throws DivisionNotExact otherwise.
template <typename Field>
Polynomial<Field> exact_div(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  auto [q, r] = divmod(a, b);
  require(r.is_zero(), ErrorKind::DivisionNotExact, "polynomial division leaves a remainder");
  return q;
}

template <typename Field>
Polynomial<Field> make_monic(const Polynomial<Field>& p) {
  if (p.is_zero()) return p;
  return p * (Field(1) / p.leading());
}

/// Rescales p to an integer polynomial with coprime coefficients and positive
/// leading coefficient.
inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  Rational scale(den_lcm, num_gcd);
  if (p.leading() < 0) scale = -scale;
  return p * scale;
}

/// Monic gcd over Q, computed by a primitive pseudo-remainder sequence so that
/// intermediate coefficients stay integral and content-free. gcd(0, 0) = 0.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  Poly f = primitive_part(a.degree() >= b.degree() ? a : b);
  Poly g = primitive_part(a.degree() >= b.degree() ? b : a);
  while (!g.is_zero()) {
    // Pseudo-remainder: stays in Z[z] because lc(g) is applied before each step.
    Poly r = f;
    const Rational lead = g.leading();
    while (!r.is_zero() && r.degree() >= g.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - g.degree());
      r = r * lead - Poly::monomial(r.leading(), shift) * g;
    }
    f = std::move(g);
    g = primitive_part(r);
  }
  return make_monic(f);
}

}  // namespace hopfhilbert
