#pragma once

// Command implementations behind the hopfhilbert executable. Each command
// returns its exit code and the text it would print, so tests can drive the
// exact CLI behaviour in-process.

#include <cstddef>
#include <filesystem>
#include <sstream>
#include <string>

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/group.hpp"
#include "hopfhilbert/hilbert.hpp"
#include "hopfhilbert/hopf.hpp"
#include "hopfhilbert/io.hpp"
#include "hopfhilbert/oracle.hpp"

namespace hopfhilbert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kNotSemisimple = 2,
  kParseError = 3,
  kInternal = 4,
};

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::size_t expand_order = 8;
  std::size_t oracle_cap = 4096;
  OutputFormat format = OutputFormat::Text;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;
  bool is_error = false;  // text mode sends these to stderr
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kParseError;
    case ErrorKind::InvalidInput:
    case ErrorKind::NotAGroup: return kValidationFailure;
    case ErrorKind::NotSemisimple: return kNotSemisimple;
    default: return kInternal;
  }
}

namespace detail {

inline std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += ", ";
    s += to_string(x);
  }
  return s;
}

inline CommandResult error_result(const Error& err, const RunConfig& cfg) {
  CommandResult res{exit_code_for(err.kind()), {}, true};
  if (cfg.format == OutputFormat::Json) {
    json j = {{"error", {{"kind", std::string(to_string(err.kind()))}, {"message", err.what()}}},
              {"exit_code", res.exit_code}};
    res.output = j.dump(2) + "\n";
  } else {
    res.output = "error: " + std::string(err.what()) + "\n";
  }
  return res;
}

template <typename Body>
CommandResult guarded(const RunConfig& cfg, Body&& body) {
  try {
    return body();
  } catch (const Error& err) {
    return error_result(err, cfg);
  } catch (const std::exception& ex) {
    return error_result(Error(ErrorKind::InternalAssertion, ex.what()), cfg);
  }
}

inline void require_valid_fixture(const Fixture& f) { require_valid(f.hopf, f.rep); }

inline CommandResult series_output(const HilbertResult& res, const RunConfig& cfg) {
  CommandResult out;
  if (cfg.format == OutputFormat::Json) {
    out.output = to_json(res, cfg.expand_order).dump(2) + "\n";
    return out;
  }
  std::ostringstream os;
  os << "series: " << to_string(res.series) << "\n";
  os << "coefficients: " << join(series_expand(res.series, cfg.expand_order)) << "\n";
  os << "det M(z): " << to_string(res.det_m) << "\n";
  os << "integral: " << join(res.integral.coeffs) << "\n";
  out.output = os.str();
  return out;
}

}  // namespace detail

inline CommandResult cmd_validate(const std::filesystem::path& path, const RunConfig& cfg = {}) {
  return detail::guarded(cfg, [&] {
    const Fixture f = load_fixture(path);
    ValidationReport report = validate_hopf(f.hopf);
    const bool hopf_ok = report.ok();
    if (hopf_ok) report = validate_representation(f.hopf, f.rep);
    CommandResult res;
    res.exit_code = report.ok() ? kSuccess : kValidationFailure;
    res.is_error = !report.ok();
    if (cfg.format == OutputFormat::Json) {
      json violations = json::array();
      for (const auto& v : report.violations) violations.push_back({{"axiom", v.axiom}, {"message", v.message}});
      json j = {{"valid", report.ok()},
                {"hopf_valid", hopf_ok},
                {"representation_checked", hopf_ok},
                {"violations", std::move(violations)}};
      res.output = j.dump(2) + "\n";
    } else if (report.ok()) {
      res.output = "valid: Hopf algebra of dimension " + std::to_string(f.hopf.dim) +
                   ", representation of dimension " + std::to_string(f.rep.dim) + "\n";
    } else {
      for (const auto& v : report.violations) res.output += v.message + "\n";
    }
    return res;
  });
}

inline CommandResult cmd_series(const std::filesystem::path& path, const RunConfig& cfg = {}) {
  return detail::guarded(cfg, [&] {
    const Fixture f = load_fixture(path);
    detail::require_valid_fixture(f);
    return detail::series_output(hilbert_series(f.hopf, f.rep), cfg);
  });
}

inline CommandResult cmd_verify(const std::filesystem::path& path, std::size_t order, const RunConfig& cfg = {}) {
  return detail::guarded(cfg, [&] {
    const Fixture f = load_fixture(path);
    detail::require_valid_fixture(f);
    OracleConfig oc;
    oc.cap = cfg.oracle_cap;
    const VerificationReport report = verify(f.hopf, f.rep, order, oc);
    CommandResult res;
    res.exit_code = report.passed() ? kSuccess : kInternal;
    res.is_error = !report.passed();
    if (cfg.format == OutputFormat::Json) {
      res.output = to_json(report).dump(2) + "\n";
      return res;
    }
    std::ostringstream os;
    os << "series: " << to_string(report.result.series) << "\n";
    std::size_t matched = 0, mismatched = 0;
    std::string skipped;
    for (const auto& d : report.degrees) {
      os << "n=" << d.n << " expected=" << to_string(d.expected)
         << " oracle=" << (d.oracle ? std::to_string(*d.oracle) : std::string("-")) << " " << to_string(d.status)
         << "\n";
      if (d.status == DegreeStatus::Match) ++matched;
      if (d.status == DegreeStatus::Mismatch) ++mismatched;
      if (d.status == DegreeStatus::Skipped) skipped += (skipped.empty() ? "" : ", ") + std::to_string(d.n);
    }
    os << "matched: " << matched << ", mismatched: " << mismatched
       << ", skipped: " << (skipped.empty() ? std::string("none") : skipped) << "\n";
    res.output = os.str();
    return res;
  });
}

struct GroupFlags {
  bool closed_form = false;
  bool dual = false;
};

inline CommandResult cmd_group(const std::filesystem::path& table_path, const std::filesystem::path& rep_path,
                               GroupFlags flags, const RunConfig& cfg = {}) {
  return detail::guarded(cfg, [&] {
    const GroupTable g = group_from_json(read_json_file(table_path));
    if (flags.closed_form && flags.dual)
      fail(ErrorKind::InvalidInput, "--closed-form applies to group algebras only, not with --dual");
    const HopfAlgebraData h = flags.dual ? dual_group_algebra(g) : group_algebra(g);
    const Representation rep = representation_from_json(read_json_file(rep_path), h);
    require_valid(h, rep);
    if (!flags.closed_form) return detail::series_output(hilbert_series(h, rep), cfg);

    const RationalFunction p = dicks_formanek(g, rep);
    CommandResult res;
    if (cfg.format == OutputFormat::Json) {
      json j = to_json(p);
      j["series"] = to_string(p);
      j["coefficients"] = io_detail::vector_json(series_expand(p, cfg.expand_order));
      res.output = j.dump(2) + "\n";
    } else {
      res.output = "series: " + to_string(p) + "\ncoefficients: " + detail::join(series_expand(p, cfg.expand_order)) +
                   "\n";
    }
    return res;
  });
}

}  // namespace hopfhilbert::cli
