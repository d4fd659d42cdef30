#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtri/cfinite.hpp"
#include "dtri/durfee.hpp"
#include "dtri/error.hpp"
#include "dtri/json_io.hpp"
#include "dtri/qseries.hpp"

namespace dtri::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, bfile };

constexpr std::size_t kMaxPeriodWindow = 50'000'000;

struct OutputSpec {
  Format format = Format::text;
  std::string destination;  // empty: the caller's output stream
  std::size_t offset = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_output_options(CLI::App* cmd, OutputSpec& spec, bool sequence) {
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  if (sequence) formats.emplace("bfile", Format::bfile);
  cmd->add_option("--format", spec.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--output,-o", spec.destination, "Write to this file instead of standard output");
  if (sequence) cmd->add_option("--offset", spec.offset, "First index to export");
}

void emit(const OutputSpec& spec, const std::string& payload, std::ostream& out) {
  if (spec.destination.empty()) {
    out << payload;
    return;
  }
  std::filesystem::path path(spec.destination);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path.string());
  file << payload;
  if (!file) throw UsageError("failed writing " + path.string());
}

std::string format_sequence(const std::string& name, const std::vector<Integer>& values, const OutputSpec& spec) {
  if (spec.offset >= values.size()) throw UsageError("--offset is past the last exported index");
  std::ostringstream os;
  switch (spec.format) {
    case Format::text:
      for (std::size_t n = spec.offset; n < values.size(); ++n) os << (n > spec.offset ? " " : "") << values[n];
      os << '\n';
      break;
    case Format::bfile:
      for (std::size_t n = spec.offset; n < values.size(); ++n) os << n << ' ' << values[n] << '\n';
      break;
    case Format::json: {
      std::vector<std::string> v;
      for (std::size_t n = spec.offset; n < values.size(); ++n) v.push_back(values[n].get_str());
      os << json{{"sequence", name}, {"offset", spec.offset}, {"values", v}}.dump() << '\n';
      break;
    }
  }
  return os.str();
}

std::string format_alpha(unsigned d, const Format format) {
  IntPolynomial alpha = alpha_poly(d);
  AlphaReport r = check_alpha_structure(d);
  const long expected_degree = static_cast<long>(d - 1) * d;
  if (format == Format::json) {
    json j{{"object", "alpha"},
           {"d", d},
           {"poly", alpha},
           {"report",
            {{"degree", r.degree},
             {"expected_degree", expected_degree},
             {"constant_term", alpha.constant_term().get_str()},
             {"leading_coeff", alpha.leading().get_str()},
             {"value_at_1", r.value_at_1.get_str()},
             {"value_at_minus1", r.value_at_minus1.get_str()}}},
           {"conjectural",
            {{"value_at_minus1_is_pm1_floor_d_over_2", r.minus1_conjecture},
             {"gcd_with_pochhammer", r.gcd_with_pochhammer},
             {"gcd_is_one", r.gcd_is_one}}}};
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "alpha_" << d << "(q) = " << alpha << '\n'
     << "degree         " << r.degree << " (expected " << expected_degree << ")\n"
     << "constant term  " << alpha.constant_term() << '\n'
     << "leading coeff  " << alpha.leading() << '\n'
     << "value at 1     " << r.value_at_1 << '\n'
     << "value at -1    " << r.value_at_minus1 << '\n'
     << "conjectural:\n"
     << "  alpha(-1) == (-1)^floor(d/2)    " << (r.minus1_conjecture ? "yes" : "no") << '\n'
     << "  gcd(alpha, (q;q)_d)             " << r.gcd_with_pochhammer << '\n';
  return os.str();
}

std::string format_phi(unsigned k, bool reduced, const Format format) {
  PhiReport r = check_phi_structure(k);
  RationalFunction f = fk_ratfn(k, reduced);
  IntPolynomial phi = phi_poly(k);
  if (format == Format::json) {
    json j{{"object", "phi"},
           {"k", k},
           {"poly", phi},
           {"fk", f},
           {"report",
            {{"degree", r.degree},
             {"expected_degree", static_cast<long>(k) * k},
             {"constant_term", phi.constant_term().get_str()},
             {"leading_coeff", r.leading.get_str()},
             {"value_at_1", r.value_at_1.get_str()},
             {"value_at_minus1", r.value_at_minus1.get_str()},
             {"odd_factor_ok", r.odd_factor_ok}}},
           {"conjectural",
            {{"value_at_minus1_matches", r.minus1_conjecture},
             {"gcd_with_pochhammer", r.gcd_with_pochhammer},
             {"minimal_denominator_evidence", r.minimal_denominator_evidence}}}};
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "phi_" << k << "(q) = " << phi << '\n'
     << "F_" << k << "(q) = (" << f.num() << ") / (" << f.den() << ")\n"
     << "degree         " << r.degree << " (expected " << static_cast<long>(k) * k << ")\n"
     << "constant term  " << phi.constant_term() << '\n'
     << "leading coeff  " << r.leading << '\n'
     << "value at 1     " << r.value_at_1 << '\n'
     << "value at -1    " << r.value_at_minus1 << '\n'
     << "(1+q) | phi    " << (k % 2 == 1 ? (r.odd_factor_ok ? "yes" : "NO") : "n/a (k even)") << '\n'
     << "conjectural:\n"
     << "  phi(-1) matches (-2)^(k/2) or 0  " << (r.minus1_conjecture ? "yes" : "no") << '\n'
     << "  gcd(phi, (q;q)_k)                " << r.gcd_with_pochhammer << '\n';
  return os.str();
}

std::string format_quasipoly(const QuasiPolynomial& qp, unsigned k, const Format format) {
  if (format == Format::json) {
    json j = qp;
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "R_" << k << "(n) for n >= " << qp.valid_from() << ", period " << qp.period() << ", n = " << qp.period()
     << "m + nu\n";
  for (std::size_t nu = 0; nu < qp.period(); ++nu) {
    os << "  nu = " << nu << ":";
    const auto& p = qp.polys()[nu];
    if (p.empty()) os << " 0";
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] == 0) continue;
      const Rational mag = abs(p[i]);
      os << (first ? (p[i] < 0 ? " -" : " ") : (p[i] < 0 ? " - " : " + "));
      first = false;
      if (i == 0 || mag != 1) os << mag << (i > 0 ? "*" : "");
      if (i > 0) os << 'm' << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << '\n';
  }
  return os.str();
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t hard_fail = 0;
  os << "hard checks\n";
  for (const auto& c : checks) {
    if (!c.hard) continue;
    if (!c.passed) ++hard_fail;
    os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << "conjectural (reported only)\n";
  for (const auto& c : checks) {
    if (c.hard) continue;
    os << "  " << (c.passed ? "holds" : "fails") << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << (hard_fail == 0 ? "all hard checks passed\n" : std::to_string(hard_fail) + " hard check(s) failed\n");
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions for partitions by Durfee triangle size"};
  app.require_subcommand(1);

  OutputSpec spec;
  unsigned d = 1, k = 1, k_max = 8, d_max = 10, jobs = 0;
  std::size_t order = 10, n_max = 20;
  std::int64_t modulus = 2;
  std::optional<std::size_t> n_min;
  bool reduced = false;

  auto* ad = app.add_subcommand("ad", "Coefficients a_d(0..order) of A_d(q)");
  ad->add_option("--d", d, "Number of parts (0 gives A_0 = 1)")->required()->check(CLI::NonNegativeNumber);
  ad->add_option("--order", order, "Last index")->required()->check(CLI::NonNegativeNumber);
  add_output_options(ad, spec, true);

  auto* alpha = app.add_subcommand("alpha", "Numerator alpha_d(q) of A_d(q) over (q;q)_d");
  alpha->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  add_output_options(alpha, spec, false);

  auto* phi = app.add_subcommand("phi", "Numerator phi_k(q) of F_k(q) over (q;q)_k");
  phi->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  phi->add_flag("--reduced", reduced, "Cancel (1+q) from F_k for odd k >= 3");
  add_output_options(phi, spec, false);

  auto* rk = app.add_subcommand("rk", "R_k(0..n_max): partitions of n with Durfee triangle of size k");
  rk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  rk->add_option("--n-max", n_max)->required()->check(CLI::NonNegativeNumber);
  add_output_options(rk, spec, true);

  auto* dk = app.add_subcommand("dk", "D_k(0..n_max): partitions of n with Durfee square of size k");
  dk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  dk->add_option("--n-max", n_max)->required()->check(CLI::NonNegativeNumber);
  add_output_options(dk, spec, true);

  OutputSpec qp_spec;
  qp_spec.format = Format::json;
  auto* quasipoly = app.add_subcommand("quasipoly", "Quasi-polynomial for R_k(n), n > k^2");
  quasipoly->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_output_options(quasipoly, qp_spec, false);

  auto* period = app.add_subcommand("period", "Eventual period of R_k(n) modulo M");
  period->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  period->add_option("--modulus", modulus)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 31));
  period->add_option("--n-min", n_min, "Start of the window (default k^2+1)");
  add_output_options(period, spec, false);

  auto* verify = app.add_subcommand("verify", "Run the cross-check battery");
  verify->add_option("--k-max", k_max)->check(CLI::Range(1u, 16u));
  verify->add_option("--d-max", d_max)->check(CLI::Range(1u, 16u));
  verify->add_option("--jobs", jobs, "Worker threads (0: hardware concurrency)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (ad->parsed()) {
      PowerSeries s = ad_series_dp(d, order);
      emit(spec, format_sequence("a_" + std::to_string(d), s.coeffs(), spec), out);
    } else if (alpha->parsed()) {
      emit(spec, format_alpha(d, spec.format), out);
    } else if (phi->parsed()) {
      emit(spec, format_phi(k, reduced, spec.format), out);
    } else if (rk->parsed()) {
      emit(spec, format_sequence("R_" + std::to_string(k), rk_sequence(k, n_max), spec), out);
    } else if (dk->parsed()) {
      PowerSeries s = series_expand(dk_ratfn(k), n_max);
      emit(spec, format_sequence("D_" + std::to_string(k), s.coeffs(), spec), out);
    } else if (quasipoly->parsed()) {
      emit(qp_spec, format_quasipoly(fit_rk_quasipoly(k), k, qp_spec.format), out);
    } else if (period->parsed()) {
      const std::size_t start = n_min.value_or(static_cast<std::size_t>(k) * k + 1);
      const std::size_t bound = static_cast<std::size_t>(modulus) * rk_quasi_period(k);
      const std::size_t last = start + 6 * bound;
      if (last > kMaxPeriodWindow) throw UsageError("period window of " + std::to_string(last) + " terms is too large");
      std::vector<std::int64_t> residues = rk_sequence_mod(k, last, modulus);
      PeriodReport r = eventual_period_residues(residues, start);
      std::ostringstream os;
      if (spec.format == Format::json) {
        os << json{{"k", k},
                   {"modulus", modulus},
                   {"period", r.period},
                   {"window_begin", r.window_begin},
                   {"window_end", r.window_end},
                   {"period_bound", bound}}
                  .dump()
           << '\n';
      } else {
        os << r.period << '\n'
           << "witness window [" << r.window_begin << ", " << r.window_end << "), proven bound M*Q = " << bound << '\n';
      }
      emit(spec, os.str(), out);
    } else if (verify->parsed()) {
      auto checks = verification_battery(k_max, d_max, jobs);
      out << format_checks(checks);
      for (const auto& c : checks)
        if (c.hard && !c.passed) return kVerificationFailed;
    }
  } catch (const StructureViolation& e) {
    err << "structure violation: " << e.what() << '\n';
    return kStructureViolation;
  } catch (const FitMismatch& e) {
    err << "fit mismatch: " << e.what() << '\n';
    return kFitMismatch;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace dtri::cli
