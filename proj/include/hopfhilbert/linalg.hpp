#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/matrix.hpp"
#include "hopfhilbert/polynomial.hpp"
#include "hopfhilbert/rational.hpp"
#include "hopfhilbert/rational_function.hpp"

namespace hopfhilbert {

namespace detail {

// Pivot weight for the fraction-free pivot rule: smaller is preferred.
inline long pivot_weight(const Rational&) { return 0; }
inline long pivot_weight(const Poly& p) { return p.degree(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Poly exact_quotient(const Poly& a, const Poly& b) { return exact_div(a, b); }

}  // namespace detail

/// Echelon form produced by fraction-free elimination. Every stored entry is
/// a minor of the input, so the last pivot of a nonsingular square input is
/// its determinant times `sign`.
template <typename T>
struct FractionFreeEchelon {
  DenseMatrix<T> echelon;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;  // parity of the row swaps performed

  std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss elimination over an integral domain. Only the first `elim_cols`
/// columns are searched for pivots; later columns ride along (augmented
/// right-hand sides). Pivot: the first row holding a nonzero entry of
/// minimal weight in the current column.
template <typename T>
FractionFreeEchelon<T> fraction_free_eliminate(DenseMatrix<T> a, std::size_t elim_cols) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  FractionFreeEchelon<T> out;
  T prev = ring_one<T>();
  std::size_t row = 0;
  for (std::size_t c = 0; c < elim_cols && row < rows; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = row; i < rows; ++i) {
      if (is_zero(a(i, c))) continue;
      if (!best || detail::pivot_weight(a(i, c)) < detail::pivot_weight(a(*best, c))) best = i;
    }
    if (!best) continue;
    if (*best != row) {
      a.swap_rows(*best, row);
      out.sign = -out.sign;
    }
    const T pivot = a(row, c);
    for (std::size_t i = row + 1; i < rows; ++i) {
      const T factor = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = detail::exact_quotient(pivot * a(i, j) - factor * a(row, j), prev);
      a(i, c) = T{};
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++row;
  }
  out.echelon = std::move(a);
  return out;
}

template <typename T>
std::size_t rank(const DenseMatrix<T>& m) {
  return fraction_free_eliminate(m, m.cols()).rank();
}

template <typename T>
T determinant(const DenseMatrix<T>& m) {
  require(m.square(), ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return ring_one<T>();
  auto ech = fraction_free_eliminate(m, n);
  if (ech.rank() < n) return T{};
  T det = ech.echelon(n - 1, n - 1);
  if (ech.sign < 0) det = -det;
  return det;
}

template <typename T>
T trace(const DenseMatrix<T>& m) {
  require(m.square(), ErrorKind::ShapeMismatch, "trace of a non-square matrix");
  T acc{};
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

/// Basis of the right null space, read off the reduced row echelon form:
/// one vector per free column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, row);
    const Rational inv = Rational(1) / a(row, c);
    for (std::size_t j = c; j < cols; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct PolySolveResult {
  std::vector<RationalFunction> solution;
  Poly determinant;
};

/// Solves m x = rhs over Q(z) by one fraction-free pass on [m | rhs]. The
/// back substitution runs on y = D x with D the last pivot, which is a
/// polynomial vector by Cramer's rule, so every division is exact.
inline PolySolveResult solve_polymatrix(const PolyMatrix& m, const std::vector<Poly>& rhs) {
  require(m.square() && rhs.size() == m.rows(), ErrorKind::ShapeMismatch, "solve_polymatrix shape mismatch");
  const std::size_t n = m.rows();
  if (n == 0) return {{}, Poly::constant(1)};

  PolyMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  auto ech = fraction_free_eliminate(std::move(aug), n);
  if (ech.rank() < n) fail(ErrorKind::SingularMatrix, "polynomial matrix is singular");
  const PolyMatrix& u = ech.echelon;
  const Poly d = u(n - 1, n - 1);

  std::vector<Poly> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Poly acc = d * u(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= u(i, j) * y[j];
    y[i] = exact_div(acc, u(i, i));
  }

  // m y = d rhs must hold exactly.
  for (std::size_t i = 0; i < n; ++i) {
    Poly lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += m(i, j) * y[j];
    require(lhs == d * rhs[i], ErrorKind::InternalAssertion, "solve_polymatrix back-substitution check failed");
  }

  PolySolveResult out;
  out.solution.reserve(n);
  for (auto& yi : y) out.solution.emplace_back(std::move(yi), d);
  out.determinant = ech.sign < 0 ? -d : d;
  return out;
}

}  // namespace hopfhilbert
