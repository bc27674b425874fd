#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/linalg.hpp"
#include "hopfhilbert/matrix.hpp"
#include "hopfhilbert/rational.hpp"

namespace hopfhilbert {

/// Dense r x r x r array of structure constants.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t r) : r_(r), data_(r * r * r, Rational(0)) {}

  std::size_t extent() const { return r_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * r_ + j) * r_ + k];
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<Rational> data_;
};

/// A finite-dimensional Hopf algebra over Q in a fixed basis h_0..h_{r-1}:
///   h_i h_j   = sum_k mult(i, j, k) h_k
///   1         = sum_i unit[i] h_i
///   Delta(h_i) = sum_{j,k} comult(i, j, k) h_j (x) h_k
///   eps(h_i)  = counit[i]
///   S(h_i)    = sum_j antipode(j, i) h_j   (optional)
struct HopfAlgebraData {
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  Tensor3 mult;
  Vector unit;
  Tensor3 comult;
  Vector counit;
  std::optional<Matrix> antipode;

  friend bool operator==(const HopfAlgebraData&, const HopfAlgebraData&) = default;
};

/// An H-module structure on V = Q^dim: action[i] is the matrix of h_i.
struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> action;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// t = sum_i coeffs[i] h_i with h t = eps(h) t and eps(t) = 1.
struct LeftIntegral {
  Vector coeffs;
};

struct Violation {
  std::string axiom;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::string message) {
    violations.push_back({std::move(axiom), std::move(message)});
  }
};

namespace detail {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Rational>;

inline std::string index_list(std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) {
    if (!s.empty()) s += ", ";
    s += std::to_string(i);
  }
  return idx.size() == 1 ? s : "(" + s + ")";
}

// nonzero (k, coeff) of T(i, j, .)
inline std::vector<std::vector<SparseVec>> slice_nonzeros(const Tensor3& t) {
  const std::size_t r = t.extent();
  std::vector<std::vector<SparseVec>> nz(r, std::vector<SparseVec>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (t(i, j, k) != 0) nz[i][j].emplace_back(k, t(i, j, k));
  return nz;
}

inline Tensor2 coproduct_of(const Tensor3& comult, std::size_t i) {
  Tensor2 out;
  const std::size_t r = comult.extent();
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k)
      if (comult(i, j, k) != 0) out[{j, k}] = comult(i, j, k);
  return out;
}

inline void prune(Tensor2& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

inline void check_shape(const HopfAlgebraData& h) {
  const std::size_t r = h.dim;
  require(r > 0, ErrorKind::InvalidInput, "Hopf algebra must have positive dimension");
  require(h.basis_labels.size() == r, ErrorKind::InvalidInput, "basis label count != dim");
  require(h.mult.extent() == r && h.comult.extent() == r, ErrorKind::InvalidInput,
          "structure constant tensor extent != dim");
  require(h.unit.size() == r && h.counit.size() == r, ErrorKind::InvalidInput, "unit/counit length != dim");
  if (h.antipode)
    require(h.antipode->rows() == r && h.antipode->cols() == r, ErrorKind::InvalidInput,
            "antipode must be dim x dim");
}

}  // namespace detail

/// Checks every Hopf algebra axiom as an exact identity between structure
/// constants. One violation is recorded per failing axiom, at the first
/// offending basis index.
inline ValidationReport validate_hopf(const HopfAlgebraData& h) {
  using detail::index_list;
  detail::check_shape(h);
  const std::size_t r = h.dim;
  const auto& m = h.mult;
  const auto& d = h.comult;
  const auto& e = h.counit;
  const auto& u = h.unit;
  ValidationReport report;

  [&] {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t o = 0; o < r; ++o) {
            Rational lhs = 0, rhs = 0;
            for (std::size_t l = 0; l < r; ++l) {
              lhs += m(i, j, l) * m(l, k, o);
              rhs += m(j, k, l) * m(i, l, o);
            }
            if (lhs != rhs) {
              report.add("associativity", "associativity violated at basis indices " + index_list({i, j, k}));
              return;
            }
          }
  }();

  [&] {
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        Rational left = 0, right = 0;
        for (std::size_t a = 0; a < r; ++a) {
          left += u[a] * m(a, j, k);
          right += u[a] * m(j, a, k);
        }
        const Rational want = j == k ? 1 : 0;
        if (left != want || right != want) {
          report.add("unit", "unit law violated at basis index " + index_list({j}));
          return;
        }
      }
  }();

  [&] {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          for (std::size_t c = 0; c < r; ++c) {
            Rational lhs = 0, rhs = 0;
            for (std::size_t l = 0; l < r; ++l) {
              lhs += d(i, l, c) * d(l, a, b);
              rhs += d(i, a, l) * d(l, b, c);
            }
            if (lhs != rhs) {
              report.add("coassociativity", "coassociativity violated at basis index " + index_list({i}));
              return;
            }
          }
  }();

  [&] {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        Rational left = 0, right = 0;
        for (std::size_t j = 0; j < r; ++j) {
          left += e[j] * d(i, j, k);
          right += e[j] * d(i, k, j);
        }
        const Rational want = i == k ? 1 : 0;
        if (left != want || right != want) {
          report.add("counit", "counit law violated at basis index " + index_list({i}));
          return;
        }
      }
  }();

  const auto mult_nz = detail::slice_nonzeros(m);

  [&] {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        detail::Tensor2 diff;
        for (const auto& [l, c] : mult_nz[i][j])
          for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
              if (d(l, a, b) != 0) diff[{a, b}] += c * d(l, a, b);
        const auto di = detail::coproduct_of(d, i);
        const auto dj = detail::coproduct_of(d, j);
        for (const auto& [pq, x] : di)
          for (const auto& [st, y] : dj)
            for (const auto& [a, ca] : mult_nz[pq.first][st.first])
              for (const auto& [b, cb] : mult_nz[pq.second][st.second]) diff[{a, b}] -= x * y * ca * cb;
        detail::prune(diff);
        if (!diff.empty()) {
          report.add("comultiplication-multiplicative",
                     "comultiplication is not multiplicative at basis indices " + index_list({i, j}));
          return;
        }
      }
    detail::Tensor2 diff;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        Rational delta_one = 0;
        for (std::size_t i = 0; i < r; ++i) delta_one += u[i] * d(i, a, b);
        diff[{a, b}] = delta_one - u[a] * u[b];
      }
    detail::prune(diff);
    if (!diff.empty()) report.add("comultiplication-unital", "comultiplication does not send 1 to 1 (x) 1");
  }();

  [&] {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rational lhs = 0;
        for (std::size_t k = 0; k < r; ++k) lhs += m(i, j, k) * e[k];
        if (lhs != e[i] * e[j]) {
          report.add("counit-multiplicative", "counit is not multiplicative at basis indices " + index_list({i, j}));
          return;
        }
      }
  }();

  {
    Rational eps_one = 0;
    for (std::size_t i = 0; i < r; ++i) eps_one += u[i] * e[i];
    if (eps_one != 1) report.add("counit-unital", "counit of the unit is not 1");
  }

  if (h.antipode) {
    const Matrix& s = *h.antipode;
    [&] {
      for (std::size_t i = 0; i < r; ++i) {
        Vector left(r, Rational(0)), right(r, Rational(0));
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k) {
            const Rational& c = d(i, j, k);
            if (c == 0) continue;
            for (std::size_t a = 0; a < r; ++a) {
              if (s(a, j) != 0)
                for (const auto& [o, x] : mult_nz[a][k]) left[o] += c * s(a, j) * x;
              if (s(a, k) != 0)
                for (const auto& [o, x] : mult_nz[j][a]) right[o] += c * s(a, k) * x;
            }
          }
        for (std::size_t o = 0; o < r; ++o) {
          const Rational want = e[i] * u[o];
          if (left[o] != want || right[o] != want) {
            report.add("antipode", "antipode law violated at basis index " + index_list({i}));
            return;
          }
        }
      }
    }();
  }
  return report;
}

/// Checks that the matrices form an algebra map H -> End(V).
inline ValidationReport validate_representation(const HopfAlgebraData& h, const Representation& rep) {
  const std::size_t r = h.dim;
  const std::size_t n = rep.dim;
  ValidationReport report;
  if (rep.action.size() != r) {
    report.add("shape", "representation has " + std::to_string(rep.action.size()) + " matrices, expected " +
                            std::to_string(r));
    return report;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (rep.action[i].rows() != n || rep.action[i].cols() != n) {
      report.add("shape", "matrix for basis index " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                              std::to_string(n));
      return report;
    }

  [&] {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Matrix expected(n, n);
        for (std::size_t k = 0; k < r; ++k) {
          if (h.mult(i, j, k) == 0) continue;
          Matrix term = rep.action[k];
          expected += term.scale(h.mult(i, j, k));
        }
        if (rep.action[i] * rep.action[j] != expected) {
          report.add("module-multiplication", "action is not multiplicative at basis indices " +
                                                  detail::index_list({i, j}));
          return;
        }
      }
  }();

  Matrix one(n, n);
  for (std::size_t i = 0; i < r; ++i) {
    if (h.unit[i] == 0) continue;
    Matrix term = rep.action[i];
    one += term.scale(h.unit[i]);
  }
  if (one != Matrix::identity(n)) report.add("module-unit", "unit of H does not act as the identity");
  return report;
}

/// Matrix of left multiplication by h_i in the basis: column j holds h_i h_j.
inline Matrix left_multiplication(const HopfAlgebraData& h, std::size_t i) {
  Matrix l(h.dim, h.dim);
  for (std::size_t j = 0; j < h.dim; ++j)
    for (std::size_t k = 0; k < h.dim; ++k) l(k, j) = h.mult(i, j, k);
  return l;
}

/// Basis of the left integrals {t : h_i t = eps(h_i) t for all i}, as the
/// kernel of the stacked r^2 x r system (L_i - eps(h_i) I) t = 0.
inline std::vector<Vector> left_integral_space(const HopfAlgebraData& h) {
  const std::size_t r = h.dim;
  Matrix system(r * r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const Matrix l = left_multiplication(h, i);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) system(i * r + k, j) = l(k, j) - (j == k ? h.counit[i] : Rational(0));
  }
  return kernel_basis(system);
}

/// The left integral normalized to eps(t) = 1. Throws NotSemisimple when eps
/// vanishes on every integral, IntegralSpaceDimension when the integrals do
/// not form a single line.
inline LeftIntegral left_integral(const HopfAlgebraData& h) {
  const std::size_t r = h.dim;
  const auto kernel = left_integral_space(h);

  auto eps = [&](const Vector& v) {
    Rational acc = 0;
    for (std::size_t i = 0; i < r; ++i) acc += h.counit[i] * v[i];
    return acc;
  };
  bool eps_vanishes = true;
  for (const auto& v : kernel)
    if (eps(v) != 0) eps_vanishes = false;
  if (eps_vanishes)
    fail(ErrorKind::NotSemisimple, "not semisimple: no integral with \xCE\xB5(t)=1 (every left integral has counit 0)");
  if (kernel.size() != 1)
    fail(ErrorKind::IntegralSpaceDimension,
         "space of left integrals has dimension " + std::to_string(kernel.size()) + ", expected 1");

  LeftIntegral t{kernel.front()};
  const Rational scale = Rational(1) / eps(t.coeffs);
  for (auto& c : t.coeffs) c *= scale;
  return t;
}

/// Throws InvalidInput carrying the first violation when either check fails.
inline void require_valid(const HopfAlgebraData& h, const Representation& rep) {
  const auto hr = validate_hopf(h);
  if (!hr.ok()) fail(ErrorKind::InvalidInput, hr.violations.front().message);
  const auto rr = validate_representation(h, rep);
  if (!rr.ok()) fail(ErrorKind::InvalidInput, rr.violations.front().message);
}

/// R_i = eps(h_i) I on Q^dim.
inline Representation trivial_representation(const HopfAlgebraData& h, std::size_t dim) {
  Representation rep{dim, {}};
  for (std::size_t i = 0; i < h.dim; ++i) {
    Matrix m = Matrix::identity(dim);
    rep.action.push_back(std::move(m.scale(h.counit[i])));
  }
  return rep;
}

/// Relabels the basis so that new h_a is old h_{perm[a]}.
inline HopfAlgebraData permute_basis(const HopfAlgebraData& h, const std::vector<std::size_t>& perm) {
  const std::size_t r = h.dim;
  require(perm.size() == r, ErrorKind::InvalidInput, "permutation length != dim");
  HopfAlgebraData out;
  out.dim = r;
  out.mult = Tensor3(r);
  out.comult = Tensor3(r);
  out.unit.resize(r);
  out.counit.resize(r);
  for (std::size_t a = 0; a < r; ++a) {
    out.basis_labels.push_back(h.basis_labels[perm[a]]);
    out.unit[a] = h.unit[perm[a]];
    out.counit[a] = h.counit[perm[a]];
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        out.mult(a, b, c) = h.mult(perm[a], perm[b], perm[c]);
        out.comult(a, b, c) = h.comult(perm[a], perm[b], perm[c]);
      }
  }
  if (h.antipode) {
    Matrix s(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) s(a, b) = (*h.antipode)(perm[a], perm[b]);
    out.antipode = std::move(s);
  }
  return out;
}

inline Representation permute_representation(const Representation& rep, const std::vector<std::size_t>& perm) {
  Representation out{rep.dim, {}};
  for (auto p : perm) out.action.push_back(rep.action.at(p));
  return out;
}

}  // namespace hopfhilbert
