#pragma once

// Shared helpers for the test binaries: small groups, random exact data and
// random representations.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hopfhilbert/hopfhilbert.hpp"

#ifndef HOPFHILBERT_FIXTURE_DIR
#error "HOPFHILBERT_FIXTURE_DIR must be defined"
#endif

namespace hopfhilbert::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(HOPFHILBERT_FIXTURE_DIR) / name;
}

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline Poly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

inline GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  for (std::size_t a = 0; a < n; ++a) g.elements.push_back("c" + std::to_string(a));
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

/// Dihedral group of order 2n: element (s, k) = s^s r^k, index s * n + k.
inline GroupTable dihedral_group(std::size_t n) {
  GroupTable g;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t k = 0; k < n; ++k) g.elements.push_back((s ? "sr" : "r") + std::to_string(k));
  g.table.assign(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t s1 = 0; s1 < 2; ++s1)
    for (std::size_t k1 = 0; k1 < n; ++k1)
      for (std::size_t s2 = 0; s2 < 2; ++s2)
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          // r^k s = s r^-k
          const std::size_t k = s2 ? (n - k1 % n + k2) % n : (k1 + k2) % n;
          g.table[s1 * n + k1][s2 * n + k2] = ((s1 + s2) % 2) * n + k;
        }
  return g;
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) g.elements.push_back(x + "." + y);
  const std::size_t nb = b.order();
  g.table.assign(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      g.table[i][j] = a.table[i / nb][j / nb] * nb + b.table[i % nb][j % nb];
  return g;
}

/// The groups used by randomized tests: cyclic and dihedral up to order 8, Klein four.
inline std::vector<GroupTable> small_groups() {
  std::vector<GroupTable> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(cyclic_group(n));
  out.push_back(cyclic_group(8));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(dihedral_group(n));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  return out;
}

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }

  Rational rational(long bound = 5) {
    const long den = integer(1, bound);
    return Rational(integer(-bound, bound), den);
  }

  Poly polynomial(std::size_t max_degree, long bound = 5) {
    std::vector<Rational> c;
    const std::size_t deg = index(max_degree + 1);
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(rational(bound));
    return Poly(std::move(c));
  }

  Poly nonzero_polynomial(std::size_t max_degree, long bound = 5) {
    for (;;) {
      Poly p = polynomial(max_degree, bound);
      if (!p.is_zero()) return p;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long bound = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound);
    return m;
  }

  /// Unimodular-ish invertible matrix: random unit lower times unit upper
  /// triangular, with integer entries so its inverse is integral too.
  std::pair<Matrix, Matrix> invertible(std::size_t n) {
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lower(i, j) = integer(-2, 2);
        upper(j, i) = integer(-2, 2);
      }
    const Matrix m = lower * upper;
    return {m, inverse(m)};
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen_);
    return p;
  }

  static Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
      aug(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (aug(p, c) == 0) ++p;
      aug.swap_rows(p, c);
      const Rational inv = Rational(1) / aug(c, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || aug(i, c) == 0) continue;
        const Rational f = aug(i, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
      }
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

/// Homomorphisms G -> {+1, -1}, by exhaustive search over sign assignments.
inline std::vector<std::vector<int>> sign_characters(const GroupTable& g) {
  std::vector<std::vector<int>> out;
  const std::size_t n = g.order();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> f(n);
    for (std::size_t a = 0; a < n; ++a) f[a] = (mask >> a) & 1 ? -1 : 1;
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = f[g.table[a][b]] == f[a] * f[b];
    if (hom) out.push_back(std::move(f));
  }
  return out;
}

/// Permutation representation of G on the left cosets of <h>.
inline Representation coset_representation(const GroupTable& g, std::size_t h) {
  const std::size_t e = check_group(g);
  std::vector<std::size_t> sub{e};
  for (std::size_t x = g.table[e][h]; x != e; x = g.table[x][h]) sub.push_back(x);
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<std::size_t> coset_of(g.order(), g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset_of[a] != g.order()) continue;
    std::vector<std::size_t> c;
    for (auto s : sub) {
      c.push_back(g.table[a][s]);
      coset_of[g.table[a][s]] = cosets.size();
    }
    cosets.push_back(std::move(c));
  }
  const std::size_t d = cosets.size();
  Representation rep{d, {}};
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix m(d, d);
    for (std::size_t c = 0; c < d; ++c) m(coset_of[g.table[a][cosets[c][0]]], c) = 1;
    rep.action.push_back(std::move(m));
  }
  return rep;
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  Representation out{a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    Matrix m(out.dim, out.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = a.action[i](r, c);
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c) m(a.dim + r, a.dim + c) = b.action[i](r, c);
    out.action.push_back(std::move(m));
  }
  return out;
}

inline Representation conjugate(const Representation& rep, const Matrix& p, const Matrix& p_inv) {
  Representation out{rep.dim, {}};
  for (const auto& m : rep.action) out.action.push_back(p * m * p_inv);
  return out;
}

/// Random representation of kG of dimension <= max_dim: a direct sum of coset
/// permutation modules and sign characters, in a random rational basis.
inline Representation random_group_representation(const GroupTable& g, Random& rng, std::size_t max_dim) {
  const auto signs = sign_characters(g);
  Representation rep{0, std::vector<Matrix>(g.order(), Matrix(0, 0))};
  const std::size_t target = 1 + rng.index(max_dim);
  for (int attempts = 0; rep.dim < target && attempts < 20; ++attempts) {
    Representation piece;
    if (rng.index(2) == 0) {
      piece = coset_representation(g, rng.index(g.order()));
    } else {
      const auto& f = signs[rng.index(signs.size())];
      piece.dim = 1;
      for (auto s : f) piece.action.push_back(Matrix(1, 1, {Rational(s)}));
    }
    if (rep.dim + piece.dim <= max_dim) rep = direct_sum(rep, piece);
  }
  if (rep.dim == 0) rep = trivial_representation(group_algebra(g), 1);
  auto [p, p_inv] = rng.invertible(rep.dim);
  return conjugate(rep, p, p_inv);
}

/// Random (kG)*-module: a G-grading with one degree per basis vector, in a
/// random rational basis. Degrees are returned through `degrees`.
inline Representation random_grading(const GroupTable& g, Random& rng, std::size_t dim,
                                     std::vector<std::size_t>& degrees, bool conjugate_basis = true) {
  degrees.clear();
  for (std::size_t v = 0; v < dim; ++v) degrees.push_back(rng.index(g.order()));
  Representation rep{dim, {}};
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix m(dim, dim);
    for (std::size_t v = 0; v < dim; ++v)
      if (degrees[v] == a) m(v, v) = 1;
    rep.action.push_back(std::move(m));
  }
  if (!conjugate_basis) return rep;
  auto [p, p_inv] = rng.invertible(dim);
  return conjugate(rep, p, p_inv);
}

}  // namespace hopfhilbert::testing
