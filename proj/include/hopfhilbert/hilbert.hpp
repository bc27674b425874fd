#pragma once

#include <cstddef>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/group.hpp"
#include "hopfhilbert/hopf.hpp"
#include "hopfhilbert/linalg.hpp"
#include "hopfhilbert/rational_function.hpp"

namespace hopfhilbert {

/// lambda(i, j) = chi_1(a_ij) where Delta(h_i) = sum_j a_ij (x) h_j.
struct LambdaMatrix {
  Matrix entries;
};

struct AlphaSolution {
  std::vector<RationalFunction> alpha;  // alpha_i(z) = sum_n chi_n(h_i) z^n
  Poly det_m;                           // det(z Lambda - I)
};

struct HilbertResult {
  RationalFunction series;
  std::vector<RationalFunction> alpha;
  Poly det_m;
  LeftIntegral integral;
  LambdaMatrix lambda;
};

/// chi_1(h_k) = trace(R_k), folded through the comultiplication.
inline LambdaMatrix lambda_matrix(const HopfAlgebraData& h, const Representation& rep) {
  const std::size_t r = h.dim;
  std::vector<Rational> chi1(r);
  for (std::size_t k = 0; k < r; ++k) chi1[k] = trace(rep.action[k]);
  Matrix lam(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (h.comult(i, k, j) != 0) lam(i, j) += h.comult(i, k, j) * chi1[k];
  return {std::move(lam)};
}

/// M(z) = z Lambda - I.
inline PolyMatrix character_system(const LambdaMatrix& lam) {
  const std::size_t r = lam.entries.rows();
  PolyMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m(i, j) = Poly{i == j ? Rational(-1) : Rational(0), lam.entries(i, j)};
  return m;
}

/// Solves M(z) alpha = -eps over Q(z).
inline AlphaSolution alpha_vector(const LambdaMatrix& lam, const Vector& counit) {
  const std::size_t r = lam.entries.rows();
  require(lam.entries.square() && counit.size() == r, ErrorKind::ShapeMismatch, "alpha_vector shape mismatch");
  std::vector<Poly> eta;
  eta.reserve(r);
  for (const auto& e : counit) eta.push_back(Poly::constant(-e));
  try {
    auto solved = solve_polymatrix(character_system(lam), eta);
    return {std::move(solved.solution), std::move(solved.determinant)};
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::SingularMatrix)
      fail(ErrorKind::InternalSingularity, "z Lambda - I is singular; inputs are inconsistent");
    throw;
  }
}

/// Table chi[n][i] = chi_n(h_i) for n = 0..order via chi_n = Lambda chi_{n-1}.
inline std::vector<Vector> character_recursion(const LambdaMatrix& lam, const Vector& counit, std::size_t order) {
  const std::size_t r = lam.entries.rows();
  std::vector<Vector> chi;
  chi.reserve(order + 1);
  chi.push_back(counit);
  for (std::size_t n = 1; n <= order; ++n) {
    Vector next(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) next[i] += lam.entries(i, j) * chi[n - 1][j];
    chi.push_back(std::move(next));
  }
  return chi;
}

/// Hilbert series of T(V)^H as sum_i mu_i alpha_i(z), with t = sum_i mu_i h_i
/// the normalized left integral.
inline HilbertResult hilbert_series(const HopfAlgebraData& h, const Representation& rep) {
  require_valid(h, rep);
  HilbertResult out;
  out.integral = left_integral(h);
  out.lambda = lambda_matrix(h, rep);
  auto solved = alpha_vector(out.lambda, h.counit);
  out.alpha = std::move(solved.alpha);
  out.det_m = std::move(solved.det_m);

  for (std::size_t i = 0; i < h.dim; ++i) {
    if (out.integral.coeffs[i] == 0) continue;
    out.series += out.integral.coeffs[i] * out.alpha[i];
  }

  const long r = static_cast<long>(h.dim);
  require(out.det_m.coeff(0) == (r % 2 == 0 ? 1 : -1), ErrorKind::InternalAssertion, "det M(0) != (-1)^r");
  require(out.series.numerator().coeff(0) == 1 && out.series.denominator().coeff(0) == 1,
          ErrorKind::InternalAssertion, "Hilbert series does not start with 1");
  require(out.series.numerator().degree() <= r && out.series.denominator().degree() <= r,
          ErrorKind::InternalAssertion, "Hilbert series degree exceeds dim H");
  return out;
}

/// (1/|G|) sum_g 1 / (1 - chi_1(g) z).
inline RationalFunction dicks_formanek(const GroupTable& g, const Representation& rep) {
  const HopfAlgebraData h = group_algebra(g);
  require_valid(h, rep);
  const Rational weight = Rational(1) / g.order();
  RationalFunction out = RationalFunction::constant(0);
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Rational chi = trace(rep.action[a]);
    out += RationalFunction(Poly::constant(weight), Poly{Rational(1), Rational(-chi)});
  }
  return out;
}

}  // namespace hopfhilbert
