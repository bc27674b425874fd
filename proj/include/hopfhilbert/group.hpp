#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/hopf.hpp"

namespace hopfhilbert {

/// Finite group by Cayley table: table[a][b] is the index of elements[a] * elements[b].
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return elements.size(); }
};

/// Checks closure, associativity, a two-sided identity and inverses; returns
/// the identity index. Throws NotAGroup.
inline std::size_t check_group(const GroupTable& g) {
  const std::size_t n = g.order();
  require(n > 0, ErrorKind::NotAGroup, "group table is empty");
  require(g.table.size() == n, ErrorKind::NotAGroup, "group table must have one row per element");
  for (const auto& row : g.table) {
    require(row.size() == n, ErrorKind::NotAGroup, "group table must be square");
    for (auto x : row) require(x < n, ErrorKind::NotAGroup, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        require(g.table[g.table[a][b]][c] == g.table[a][g.table[b][c]], ErrorKind::NotAGroup,
                "group table is not associative at (" + g.elements[a] + ", " + g.elements[b] + ", " +
                    g.elements[c] + ")");
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
    if (ok) identity = e;
  }
  require(identity < n, ErrorKind::NotAGroup, "group table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = g.table[a][b] == identity && g.table[b][a] == identity;
    require(has_inverse, ErrorKind::NotAGroup, "element " + g.elements[a] + " has no inverse");
  }
  return identity;
}

inline std::vector<std::size_t> group_inverses(const GroupTable& g, std::size_t identity) {
  std::vector<std::size_t> inv(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.table[a][b] == identity) inv[a] = b;
  return inv;
}

/// kG: grouplike basis, Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
inline HopfAlgebraData group_algebra(const GroupTable& g) {
  const std::size_t e = check_group(g);
  const auto inv = group_inverses(g, e);
  const std::size_t n = g.order();
  HopfAlgebraData h;
  h.dim = n;
  h.basis_labels = g.elements;
  h.mult = Tensor3(n);
  h.comult = Tensor3(n);
  h.unit.assign(n, Rational(0));
  h.unit[e] = 1;
  h.counit.assign(n, Rational(1));
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.mult(a, b, g.table[a][b]) = 1;
    h.comult(a, a, a) = 1;
    s(inv[a], a) = 1;
  }
  h.antipode = std::move(s);
  return h;
}

/// (kG)*: dual basis p_g with p_g p_h = delta_{g,h} p_g, 1 = sum_g p_g,
/// Delta(p_g) = sum_{uv=g} p_u (x) p_v, eps(p_g) = delta_{g,e}, S(p_g) = p_{g^-1}.
inline HopfAlgebraData dual_group_algebra(const GroupTable& g) {
  const std::size_t e = check_group(g);
  const auto inv = group_inverses(g, e);
  const std::size_t n = g.order();
  HopfAlgebraData h;
  h.dim = n;
  for (const auto& label : g.elements) h.basis_labels.push_back(n == 1 ? label : "p_" + label);
  h.mult = Tensor3(n);
  h.comult = Tensor3(n);
  h.unit.assign(n, Rational(1));
  h.counit.assign(n, Rational(0));
  h.counit[e] = 1;
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.mult(a, a, a) = 1;
    s(inv[a], a) = 1;
    for (std::size_t b = 0; b < n; ++b) h.comult(g.table[a][b], a, b) = 1;
  }
  h.antipode = std::move(s);
  return h;
}

}  // namespace hopfhilbert
