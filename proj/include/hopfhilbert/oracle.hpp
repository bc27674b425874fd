#pragma once

// Brute-force check of dim T(V)_n^H: realize the integral t on V^(x)n and take
// the rank of the resulting projector. Uses only structure constants, the
// representation matrices and t.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/hilbert.hpp"
#include "hopfhilbert/hopf.hpp"
#include "hopfhilbert/matrix.hpp"
#include "hopfhilbert/rational_function.hpp"

namespace hopfhilbert {

struct OracleConfig {
  std::size_t cap = 4096;  // largest admissible d^n
};

/// Element of H^(x)n: multi-index (i_1..i_n) -> coefficient, zeros never stored.
struct TensorElement {
  std::size_t arity = 0;
  std::map<std::vector<std::size_t>, Rational> terms;
};

/// Row-sparse exact matrix.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return rows_[i]; }

  void add(std::size_t i, std::size_t j, const Rational& v) {
    auto& slot = rows_[i][j];
    slot += v;
    if (slot == 0) rows_[i].erase(j);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  Rational trace() const {
    Rational acc = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = rows_[i].find(i);
      if (it != rows_[i].end()) acc += it->second;
    }
    return acc;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require(a.cols() == b.rows(), ErrorKind::ShapeMismatch, "sparse product shape mismatch");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [k, x] : a.rows_[i])
        for (const auto& [j, y] : b.rows_[k]) out.add(i, j, x * y);
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  /// Exact rank by incremental row reduction against unit-leading pivot rows.
  std::size_t rank() const {
    std::map<std::size_t, Row> pivots;
    for (const auto& source : rows_) {
      Row r = source;
      while (!r.empty()) {
        const auto [c, v] = *r.begin();
        auto p = pivots.find(c);
        if (p == pivots.end()) {
          const Rational inv = Rational(1) / v;
          for (auto& [j, x] : r) x *= inv;
          pivots.emplace(c, std::move(r));
          break;
        }
        for (const auto& [j, x] : p->second) {
          auto& slot = r[j];
          slot -= v * x;
          if (slot == 0) r.erase(j);
        }
      }
    }
    return pivots.size();
  }

  Matrix to_dense() const {
    Matrix m(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, x] : rows_[i]) m(i, j) = x;
    return m;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// rho_{V^(x)n}(t); idempotent for an integral with eps(t) = 1.
struct TensorPowerAction {
  std::size_t degree = 0;
  SparseMatrix matrix;
};

/// Delta^(n-1)(elem) in the basis of H^(x)n, applying Delta to the last slot
/// at each step.
inline TensorElement coproduct_power(const HopfAlgebraData& h, const Vector& elem, std::size_t n,
                                     std::size_t term_cap = 1u << 20) {
  require(n >= 1, ErrorKind::InvalidInput, "coproduct_power needs n >= 1");
  require(elem.size() == h.dim, ErrorKind::ShapeMismatch, "element length != dim H");
  const auto comult_nz = [&] {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> nz(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = 0; j < h.dim; ++j)
        for (std::size_t k = 0; k < h.dim; ++k)
          if (h.comult(i, j, k) != 0) nz[i].emplace_back(j, k);
    return nz;
  }();

  TensorElement cur{1, {}};
  for (std::size_t i = 0; i < h.dim; ++i)
    if (elem[i] != 0) cur.terms[{i}] = elem[i];

  for (std::size_t step = 1; step < n; ++step) {
    TensorElement next{step + 1, {}};
    for (const auto& [idx, c] : cur.terms) {
      const std::size_t last = idx.back();
      for (const auto& [j, k] : comult_nz[last]) {
        std::vector<std::size_t> grown(idx.begin(), idx.end() - 1);
        grown.push_back(j);
        grown.push_back(k);
        auto& slot = next.terms[std::move(grown)];
        slot += c * h.comult(last, j, k);
      }
      if (next.terms.size() > term_cap)
        fail(ErrorKind::CapExceeded, "coproduct power exceeds " + std::to_string(term_cap) + " terms");
    }
    std::erase_if(next.terms, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace detail

namespace detail {

/// out += c * (a (x) b) with the first factor as the most significant index.
inline void add_kronecker(SparseMatrix& out, const Rational& c, const SparseMatrix& a, const SparseMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [j, x] : a.row(i)) {
      const Rational cx = c * x;
      for (std::size_t k = 0; k < br; ++k)
        for (const auto& [l, y] : b.row(k)) out.add(i * br + k, j * bc + l, cx * y);
    }
}

}  // namespace detail

/// rho(Delta^(n-1)(t)) on V^(x)n, first tensor factor most significant. Uses
/// Delta^(m-1)(h_i) = sum_jk c_i^jk h_j (x) Delta^(m-2)(h_k), which is the
/// last-slot expansion of coproduct_power regrouped by its first factor, so
/// rho_m(h_k) is shared between all terms instead of rebuilt per term.
inline TensorPowerAction tensor_power_action(const HopfAlgebraData& h, const Representation& rep,
                                             const LeftIntegral& t, std::size_t n, const OracleConfig& config = {}) {
  const std::size_t d = rep.dim;
  const std::size_t size = detail::checked_power(d, n, config.cap);
  if (size > config.cap)
    fail(ErrorKind::CapExceeded, "dim V^(x)" + std::to_string(n) + " exceeds cap " + std::to_string(config.cap));
  require(t.coeffs.size() == h.dim, ErrorKind::ShapeMismatch, "integral length != dim H");

  TensorPowerAction out{n, SparseMatrix(size, size)};
  if (n == 0) {
    Rational eps_t = 0;
    for (std::size_t i = 0; i < h.dim; ++i) eps_t += h.counit[i] * t.coeffs[i];
    if (eps_t != 0) out.matrix.add(0, 0, eps_t);
    return out;
  }

  std::vector<SparseMatrix> base(h.dim, SparseMatrix(d, d));
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (rep.action[i](a, b) != 0) base[i].add(a, b, rep.action[i](a, b));
  if (n == 1) {
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t a = 0; a < d && t.coeffs[i] != 0; ++a)
        for (const auto& [b, x] : base[i].row(a)) out.matrix.add(a, b, t.coeffs[i] * x);
    return out;
  }

  // the last level only needs t, so fold mu_i into the comultiplication there
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> comult_nz(h.dim);
  Matrix folded(h.dim, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k)
        if (h.comult(i, j, k) != 0) {
          comult_nz[i].emplace_back(j, k, h.comult(i, j, k));
          if (t.coeffs[i] != 0) folded(j, k) += t.coeffs[i] * h.comult(i, j, k);
        }

  std::vector<SparseMatrix> level = base;
  std::size_t dim = d;
  for (std::size_t m = 2; m < n; ++m) {
    dim *= d;
    std::vector<SparseMatrix> next(h.dim, SparseMatrix(dim, dim));
    for (std::size_t i = 0; i < h.dim; ++i)
      for (const auto& [j, k, c] : comult_nz[i]) detail::add_kronecker(next[i], c, base[j], level[k]);
    level = std::move(next);
  }
  for (std::size_t j = 0; j < h.dim; ++j)
    for (std::size_t k = 0; k < h.dim; ++k)
      if (folded(j, k) != 0) detail::add_kronecker(out.matrix, folded(j, k), base[j], level[k]);
  return out;
}

/// dim T(V)_n^H as the rank of rho(t) on V^(x)n, after asserting that rho(t)
/// is idempotent and that its trace equals its rank.
inline std::size_t invariant_dim(const HopfAlgebraData& h, const Representation& rep, const LeftIntegral& t,
                                 std::size_t n, const OracleConfig& config = {}) {
  if (n == 0) return 1;
  const auto action = tensor_power_action(h, rep, t, n, config);
  const SparseMatrix& p = action.matrix;
  require(p * p == p, ErrorKind::NotIdempotent,
          "rho(t) is not idempotent on tensor degree " + std::to_string(n));
  const std::size_t rk = p.rank();
  require(p.trace() == Rational(rk), ErrorKind::InternalAssertion,
          "trace(rho(t)) != rank(rho(t)) on tensor degree " + std::to_string(n));
  return rk;
}

enum class DegreeStatus { Match, Mismatch, Skipped };

inline std::string_view to_string(DegreeStatus s) {
  switch (s) {
    case DegreeStatus::Match: return "match";
    case DegreeStatus::Mismatch: return "mismatch";
    case DegreeStatus::Skipped: return "skipped";
  }
  return "unknown";
}

struct DegreeCheck {
  std::size_t n = 0;
  Rational expected;
  std::optional<std::size_t> oracle;
  DegreeStatus status = DegreeStatus::Skipped;
};

struct VerificationReport {
  HilbertResult result;
  std::vector<DegreeCheck> degrees;

  bool passed() const {
    for (const auto& d : degrees)
      if (d.status == DegreeStatus::Mismatch) return false;
    return true;
  }
};

/// Compares the Taylor coefficients of the Hilbert series with brute-force
/// invariant dimensions for n = 0..order. Degrees beyond the cap are skipped.
inline VerificationReport verify(const HopfAlgebraData& h, const Representation& rep, std::size_t order,
                                 const OracleConfig& config = {}) {
  VerificationReport report{hilbert_series(h, rep), {}};
  const auto coeffs = series_expand(report.result.series, order);
  for (std::size_t n = 0; n <= order; ++n) {
    DegreeCheck check{n, coeffs[n], std::nullopt, DegreeStatus::Skipped};
    try {
      check.oracle = invariant_dim(h, rep, report.result.integral, n, config);
      check.status = Rational(*check.oracle) == coeffs[n] ? DegreeStatus::Match : DegreeStatus::Mismatch;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::CapExceeded) throw;
    }
    report.degrees.push_back(std::move(check));
  }
  return report;
}

}  // namespace hopfhilbert
