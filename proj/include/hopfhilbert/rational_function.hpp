#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/polynomial.hpp"
#include "hopfhilbert/rational.hpp"

namespace hopfhilbert {

/// Ascending powers with explicit coefficients: "1 - 3*z + 1*z^2".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(negative ? Rational(-c) : c);
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
    first = false;
  }
  return out;
}

/// Quotient of coprime polynomials over Q in canonical form: the lowest
/// nonzero coefficient of the denominator is 1 (which is its constant term
/// whenever that term is nonzero). Equal functions compare equal field-wise.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}

  /// Canonicalizes num/den; throws ZeroDenominator when den = 0.
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction constant(const Rational& c) { return {Poly::constant(c), Poly::constant(1)}; }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      *this = RationalFunction(num_ + o.num_, den_);
    } else {
      *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }

  friend RationalFunction operator*(const Rational& s, const RationalFunction& f) {
    return RationalFunction(f.num_ * s, f.den_);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void normalize() {
    require(!den_.is_zero(), ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const Rational scale = Rational(1) / den_.coeffs()[den_.low_index()];
    num_ *= scale;
    den_ *= scale;
  }

  Poly num_;
  Poly den_;
};

/// Free-function form of the canonicalizing constructor.
inline RationalFunction ratfun_normalize(Poly num, Poly den) {
  return RationalFunction(std::move(num), std::move(den));
}

/// "(num) / (den)", both in ascending powers.
inline std::string to_string(const RationalFunction& f) {
  return "(" + to_string(f.numerator()) + ") / (" + to_string(f.denominator()) + ")";
}

/// Taylor coefficients c_0..c_order at z = 0, by the linear recurrence
/// q_0 c_n = p_n - sum_{k>=1} q_k c_{n-k}.
inline std::vector<Rational> series_expand(const RationalFunction& f, std::size_t order) {
  const Poly& p = f.numerator();
  const Poly& q = f.denominator();
  require(q.coeff(0) != 0, ErrorKind::PoleAtZero, "rational function has a pole at z = 0");
  const Rational inv_q0 = Rational(1) / q.coeff(0);
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = p.coeff(n);
    const std::size_t top = std::min<std::size_t>(n, q.size() - 1);
    for (std::size_t k = 1; k <= top; ++k) acc -= q.coeffs()[k] * c[n - k];
    c[n] = acc * inv_q0;
  }
  return c;
}

}  // namespace hopfhilbert
