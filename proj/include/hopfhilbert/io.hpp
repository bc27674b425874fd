#pragma once

// JSON fixture format.
//
// Inline Hopf algebra:
//   { "basis":  ["e", "g"],
//     "mult":   [{"left": "g", "right": "g", "out": "e", "coeff": "1"}, ...],
//     "unit":   ["1", "0"],
//     "comult": [{"in": "g", "out1": "g", "out2": "g", "coeff": "1"}, ...],
//     "counit": ["1", "1"],
//     "antipode": [["1", "0"], ["0", "1"]],          (optional; column i = S(h_i))
//     "rep": {"dim": 1, "matrices": [[["1"]], [["-1"]]]} }
//
// Basis references are labels or 0-based indices. Coefficients are "p/q"
// strings or JSON integers. Instead of inline data a fixture may name a group:
//   { "group": "z2.json" | {"elements": [...], "table": [[...]]}, "rep": ... }
//   { "dual_group": ..., "rep": ... }
// where "matrices" may also be an object keyed by basis label.

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/group.hpp"
#include "hopfhilbert/hilbert.hpp"
#include "hopfhilbert/hopf.hpp"
#include "hopfhilbert/oracle.hpp"
#include "hopfhilbert/rational.hpp"
#include "hopfhilbert/rational_function.hpp"

namespace hopfhilbert {

using json = nlohmann::ordered_json;

struct Fixture {
  HopfAlgebraData hopf;
  Representation rep;
  std::optional<GroupTable> group;  // set for group / dual_group fixtures
  bool dual = false;
};

namespace io_detail {

[[noreturn]] inline void parse_fail(const std::string& field, const std::string& what) {
  fail(ErrorKind::ParseError, "field '" + field + "': " + what);
}

inline const json& member(const json& obj, const char* key, const std::string& field) {
  if (!obj.is_object()) parse_fail(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

inline Rational scalar(const json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      parse_fail(field, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_fail(field, "expected a rational string like \"p/q\" or an integer");
}

inline std::size_t count(const json& v, const std::string& field) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    parse_fail(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

class LabelIndex {
 public:
  explicit LabelIndex(const std::vector<std::string>& labels) : size_(labels.size()) {
    for (std::size_t i = 0; i < labels.size(); ++i) index_[labels[i]] = i;
  }

  std::size_t operator()(const json& v, const std::string& field) const {
    if (v.is_string()) {
      auto it = index_.find(v.get<std::string>());
      if (it == index_.end()) parse_fail(field, "unknown basis label \"" + v.get<std::string>() + "\"");
      return it->second;
    }
    const std::size_t i = count(v, field);
    if (i >= size_) parse_fail(field, "basis index " + std::to_string(i) + " out of range");
    return i;
  }

 private:
  std::size_t size_;
  std::map<std::string, std::size_t> index_;
};

inline Vector dense_vector(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array() || v.size() != n) parse_fail(field, "expected an array of length " + std::to_string(n));
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline Matrix dense_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& field) {
  if (!v.is_array() || v.size() != rows)
    parse_fail(field, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rf = field + "[" + std::to_string(i) + "]";
    const Vector row = dense_vector(v[i], cols, rf);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
  }
  return m;
}

inline std::vector<std::string> labels(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) parse_fail(field, "expected a non-empty array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) parse_fail(field + "[" + std::to_string(i) + "]", "expected a string label");
    out.push_back(v[i].get<std::string>());
  }
  std::map<std::string, int> seen;
  for (const auto& l : out)
    if (seen[l]++) parse_fail(field, "duplicate label \"" + l + "\"");
  return out;
}

inline json scalar_json(const Rational& q) { return to_string(q); }

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

inline json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

inline json poly_json(const Poly& p) { return vector_json(p.coeffs()); }

}  // namespace io_detail

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline HopfAlgebraData hopf_from_json(const json& j) {
  using namespace io_detail;
  HopfAlgebraData h;
  h.basis_labels = labels(member(j, "basis", ""), "basis");
  h.dim = h.basis_labels.size();
  const std::size_t r = h.dim;
  const LabelIndex index(h.basis_labels);

  h.mult = Tensor3(r);
  const json& mult = member(j, "mult", "");
  if (!mult.is_array()) parse_fail("mult", "expected an array of terms");
  for (std::size_t t = 0; t < mult.size(); ++t) {
    const std::string f = "mult[" + std::to_string(t) + "]";
    const json& term = mult[t];
    const auto a = index(member(term, "left", f), f + ".left");
    const auto b = index(member(term, "right", f), f + ".right");
    const auto c = index(member(term, "out", f), f + ".out");
    h.mult(a, b, c) += scalar(member(term, "coeff", f), f + ".coeff");
  }

  h.comult = Tensor3(r);
  const json& comult = member(j, "comult", "");
  if (!comult.is_array()) parse_fail("comult", "expected an array of terms");
  for (std::size_t t = 0; t < comult.size(); ++t) {
    const std::string f = "comult[" + std::to_string(t) + "]";
    const json& term = comult[t];
    const auto a = index(member(term, "in", f), f + ".in");
    const auto b = index(member(term, "out1", f), f + ".out1");
    const auto c = index(member(term, "out2", f), f + ".out2");
    h.comult(a, b, c) += scalar(member(term, "coeff", f), f + ".coeff");
  }

  h.unit = dense_vector(member(j, "unit", ""), r, "unit");
  h.counit = dense_vector(member(j, "counit", ""), r, "counit");
  if (auto it = j.find("antipode"); it != j.end()) h.antipode = dense_matrix(*it, r, r, "antipode");
  return h;
}

inline GroupTable group_from_json(const json& j) {
  using namespace io_detail;
  GroupTable g;
  g.elements = labels(member(j, "elements", ""), "elements");
  const LabelIndex index(g.elements);
  const json& table = member(j, "table", "");
  if (!table.is_array() || table.size() != g.order())
    parse_fail("table", "expected " + std::to_string(g.order()) + " rows");
  for (std::size_t a = 0; a < table.size(); ++a) {
    const std::string f = "table[" + std::to_string(a) + "]";
    if (!table[a].is_array() || table[a].size() != g.order())
      parse_fail(f, "expected " + std::to_string(g.order()) + " entries");
    std::vector<std::size_t> row;
    for (std::size_t b = 0; b < table[a].size(); ++b)
      row.push_back(index(table[a][b], f + "[" + std::to_string(b) + "]"));
    g.table.push_back(std::move(row));
  }
  return g;
}

inline Representation representation_from_json(const json& j, const HopfAlgebraData& h) {
  using namespace io_detail;
  Representation rep;
  rep.dim = count(member(j, "dim", "rep"), "rep.dim");
  const json& mats = member(j, "matrices", "rep");
  if (mats.is_array()) {
    if (mats.size() != h.dim) parse_fail("rep.matrices", "expected one matrix per basis element");
    for (std::size_t i = 0; i < h.dim; ++i)
      rep.action.push_back(dense_matrix(mats[i], rep.dim, rep.dim, "rep.matrices[" + std::to_string(i) + "]"));
  } else if (mats.is_object()) {
    for (const auto& label : h.basis_labels)
      rep.action.push_back(
          dense_matrix(member(mats, label.c_str(), "rep.matrices"), rep.dim, rep.dim, "rep.matrices." + label));
    if (mats.size() != h.dim) parse_fail("rep.matrices", "unexpected extra keys");
  } else {
    parse_fail("rep.matrices", "expected an array or an object keyed by basis label");
  }
  return rep;
}

/// Group tables may be given inline or as a path relative to `base`.
inline GroupTable resolve_group(const json& ref, const std::filesystem::path& base) {
  if (ref.is_string()) return group_from_json(read_json_file(base / ref.get<std::string>()));
  return group_from_json(ref);
}

inline Fixture fixture_from_json(const json& j, const std::filesystem::path& base = ".") {
  using namespace io_detail;
  if (!j.is_object()) parse_fail("", "fixture must be a JSON object");
  Fixture f;
  const bool has_group = j.contains("group");
  const bool has_dual = j.contains("dual_group");
  if (has_group && has_dual) parse_fail("group", "give either \"group\" or \"dual_group\", not both");
  if (has_group || has_dual) {
    f.group = resolve_group(j.at(has_group ? "group" : "dual_group"), base);
    f.dual = has_dual;
    f.hopf = f.dual ? dual_group_algebra(*f.group) : group_algebra(*f.group);
  } else {
    f.hopf = hopf_from_json(j);
  }
  f.rep = representation_from_json(member(j, "rep", ""), f.hopf);
  return f;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
  return fixture_from_json(read_json_file(path), path.parent_path());
}

inline json to_json(const HopfAlgebraData& h) {
  using namespace io_detail;
  json j;
  j["basis"] = h.basis_labels;
  json mult = json::array(), comult = json::array();
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = 0; b < h.dim; ++b)
      for (std::size_t c = 0; c < h.dim; ++c) {
        if (h.mult(a, b, c) != 0)
          mult.push_back({{"left", h.basis_labels[a]},
                          {"right", h.basis_labels[b]},
                          {"out", h.basis_labels[c]},
                          {"coeff", scalar_json(h.mult(a, b, c))}});
        if (h.comult(a, b, c) != 0)
          comult.push_back({{"in", h.basis_labels[a]},
                            {"out1", h.basis_labels[b]},
                            {"out2", h.basis_labels[c]},
                            {"coeff", scalar_json(h.comult(a, b, c))}});
      }
  j["mult"] = std::move(mult);
  j["unit"] = vector_json(h.unit);
  j["comult"] = std::move(comult);
  j["counit"] = vector_json(h.counit);
  if (h.antipode) j["antipode"] = matrix_json(*h.antipode);
  return j;
}

inline json to_json(const Representation& rep) {
  json mats = json::array();
  for (const auto& m : rep.action) mats.push_back(io_detail::matrix_json(m));
  return {{"dim", rep.dim}, {"matrices", std::move(mats)}};
}

inline json to_json(const GroupTable& g) {
  json table = json::array();
  for (const auto& row : g.table) {
    json r = json::array();
    for (auto x : row) r.push_back(g.elements[x]);
    table.push_back(std::move(r));
  }
  return {{"elements", g.elements}, {"table", std::move(table)}};
}

/// Fixtures are always written back inline.
inline json to_json(const Fixture& f) {
  json j = to_json(f.hopf);
  j["rep"] = to_json(f.rep);
  return j;
}

inline json to_json(const RationalFunction& f) {
  return {{"numerator", io_detail::poly_json(f.numerator())},
          {"denominator", io_detail::poly_json(f.denominator())},
          {"text", to_string(f)}};
}

inline json to_json(const HilbertResult& res, std::size_t expand_order) {
  using namespace io_detail;
  json alpha = json::array();
  for (const auto& a : res.alpha) alpha.push_back(to_json(a));
  return {{"series", to_string(res.series)},
          {"numerator", poly_json(res.series.numerator())},
          {"denominator", poly_json(res.series.denominator())},
          {"coefficients", vector_json(series_expand(res.series, expand_order))},
          {"det_M", poly_json(res.det_m)},
          {"det_M_at_0", scalar_json(res.det_m.coeff(0))},
          {"integral", vector_json(res.integral.coeffs)},
          {"alpha", std::move(alpha)}};
}

inline json to_json(const VerificationReport& report) {
  json degrees = json::array();
  for (const auto& d : report.degrees) {
    json entry = {{"n", d.n}, {"expected", io_detail::scalar_json(d.expected)}};
    entry["oracle"] = d.oracle ? json(*d.oracle) : json(nullptr);
    entry["status"] = std::string(to_string(d.status));
    degrees.push_back(std::move(entry));
  }
  return {{"series", to_string(report.result.series)},
          {"passed", report.passed()},
          {"degrees", std::move(degrees)}};
}

}  // namespace hopfhilbert
