#pragma once

// Command-line front end. `run` takes the arguments after the program name and returns
// the process exit code:
//   0 Member / success, 1 NotMember, 2 Indeterminate or unconverged, 3 incomplete
//   certificate, 4 property violation, 64 usage error, 70 inconclusive or internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lpc/certificates.hpp"
#include "lpc/errors.hpp"
#include "lpc/membership.hpp"
#include "lpc/param_scan.hpp"
#include "lpc/partial_theta.hpp"
#include "lpc/sequences.hpp"

namespace lpc::cli {

enum ExitCode : int {
  kOk = 0,
  kNotMember = 1,
  kIndeterminate = 2,
  kIncomplete = 3,
  kViolation = 4,
  kUsage = 64,
  kInternal = 70,
};

struct CliConfig {
  Precision precision = kDefaultPrecision;
  std::string tol = "1e-8";
  std::size_t depth = 12;
  std::string format = "json";
  std::uint64_t seed = 20240601;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
};

inline int exit_for(Status s) {
  switch (s) {
    case Status::Member: return kOk;
    case Status::NotMember: return kNotMember;
    case Status::Indeterminate: return kIndeterminate;
  }
  return kInternal;
}

inline std::vector<Precision> ladder_from(Precision p) { return {p, 2 * p, 4 * p}; }

namespace detail {

inline void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot open output file '" + cfg.out + "'");
  f << text;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline Rational positive_tol(const std::string& text) {
  const Rational t = parse_decimal(text);
  if (t <= 0) throw UsageError("--tol must be positive");
  return t;
}

}  // namespace detail

inline int cmd_check(const std::string& a, const std::string& b, const CliConfig& cfg, std::ostream& out) {
  const QuotientSpec spec = QuotientSpec::parse(a, b);
  ClassifyOptions opt;
  opt.ladder = ladder_from(cfg.precision);
  const MembershipVerdict v = classify(spec, opt);
  if (cfg.format == "csv") {
    detail::emit(cfg, out, scan_csv({ScanRecord{spec.a(), spec.b(), v}}));
  } else {
    nlohmann::json j = verdict_json(v);
    j["a"] = to_decimal_string(spec.a());
    j["b"] = to_decimal_string(spec.b());
    detail::emit(cfg, out, detail::dump(j));
  }
  return exit_for(v.status);
}

inline int cmd_certify(const std::string& a, const std::string& b, const CliConfig& cfg, std::ostream& out) {
  if (cfg.depth < 4 || cfg.depth % 2 == 1) throw UsageError("--depth must be even and at least 4");
  const QuotientSpec spec = QuotientSpec::parse(a, b);
  ClassifyOptions opt;
  opt.ladder = ladder_from(cfg.precision);
  const MembershipVerdict v = classify(spec, opt);
  if (v.status != Status::Member) {
    nlohmann::json j = verdict_json(v);
    j["a"] = to_decimal_string(spec.a());
    j["b"] = to_decimal_string(spec.b());
    out << detail::dump(j);
    return exit_for(v.status);
  }
  const SignChainCertificate cert = build_certificate(spec, *v.witness, cfg.depth, cfg.precision);
  detail::emit(cfg, out, certificate_to_string(cert));
  return cert.complete() ? kOk : kIncomplete;
}

inline int cmd_qinf(const CliConfig& cfg, std::ostream& out) {
  const BisectionResult r = compute_qinf_bisection(cfg.precision, detail::positive_tol(cfg.tol));
  const nlohmann::json j = {{"qinf", interval_json(r.enclosure, 25)},
                            {"width", to_decimal_string(Rational(r.hi - r.lo))},
                            {"iterations", r.iterations},
                            {"converged", r.converged},
                            {"precision", static_cast<long>(cfg.precision)}};
  detail::emit(cfg, out, detail::dump(j));
  return r.converged ? kOk : kIndeterminate;
}

inline int cmd_cn(std::size_t n, const CliConfig& cfg, std::ostream& out) {
  const BisectionResult r = compute_cn_bisection(n, cfg.precision, detail::positive_tol(cfg.tol));
  const nlohmann::json j = {{"n", n},
                            {"cn", interval_json(r.enclosure, 25)},
                            {"width", to_decimal_string(Rational(r.hi - r.lo))},
                            {"iterations", r.iterations},
                            {"precision", static_cast<long>(cfg.precision)}};
  detail::emit(cfg, out, detail::dump(j));
  return kOk;
}

inline int cmd_scan(const std::string& a_range, const std::string& b_range, const CliConfig& cfg, std::ostream& out) {
  ScanOptions opt;
  opt.classify.ladder = ladder_from(cfg.precision);
  opt.threads = cfg.threads;
  const auto records = scan_grid(Range::parse(a_range), Range::parse(b_range), opt);
  if (cfg.format == "csv") detail::emit(cfg, out, scan_csv(records));
  else detail::emit(cfg, out, detail::dump(scan_json(records)));
  return kOk;
}

inline nlohmann::json boundary_json(const BoundaryPoint& p, Precision prec) {
  nlohmann::json j = {{"a", to_decimal_string(p.a)}, {"regime", to_string(p.regime)}};
  if (p.b_star) {
    j["b_star"] = interval_json(*p.b_star);
    j["iterations"] = p.iterations;
    j["converged"] = p.converged;
  } else {
    j["b_star"] = nullptr;
  }
  if (p.a >= 3 && p.a < 4) {
    j["sufficient_bound"] = interval_json(sufficient_bound_H(p.a, prec));
    j["necessary_bound"] = interval_json(necessary_bound_I(p.a, prec));
  }
  return j;
}

inline int cmd_boundary(const std::vector<std::string>& as, const CliConfig& cfg, std::ostream& out) {
  const Rational tol = detail::positive_tol(cfg.tol);
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream csv;
  csv << "a,regime,b_star_lo,b_star_hi,iterations,converged\n";
  bool converged = true;
  for (const std::string& text : as) {
    const Rational a = parse_decimal(text);
    if (a <= 1) throw ParameterError("a must exceed 1");
    const BoundaryPoint p = critical_b(a, cfg.precision, tol);
    converged = converged && (!p.b_star || p.converged);
    arr.push_back(boundary_json(p, cfg.precision));
    csv << to_decimal_string(a) << ',' << to_string(p.regime) << ',' << (p.b_star ? p.b_star->lower_decimal(20) : "")
        << ',' << (p.b_star ? p.b_star->upper_decimal(20) : "") << ',' << p.iterations << ',' << p.converged << '\n';
  }
  detail::emit(cfg, out, cfg.format == "csv" ? csv.str() : detail::dump(arr));
  return converged ? kOk : kIndeterminate;
}

inline int cmd_ms_verify(const std::string& a, const std::string& b, std::size_t max_degree, std::size_t corpus_size,
                         const CliConfig& cfg, std::ostream& out) {
  const QuotientSpec spec = QuotientSpec::parse(a, b);
  ClassifyOptions opt;
  opt.ladder = ladder_from(cfg.precision);
  const MembershipVerdict v = classify(spec, opt);
  if (v.status != Status::Member) {
    out << detail::dump({{"status", to_string(v.status)}, {"reason", to_string(v.reason)}});
    return exit_for(v.status);
  }
  const GammaSequence ms = multiplier_sequence(spec, max_degree + 1, true);
  const GammaSequence cz = czds_sequence(spec, max_degree + 1, cfg.precision, true);

  nlohmann::json jensen = nlohmann::json::array();
  bool ok = true;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const RationalPolynomial p = jensen_polynomial(ms, n);
    const bool real = all_real(p);
    const RootSigns s = real_root_signs(p);
    const bool one_signed = s.positive == 0 || s.negative == 0;
    ok = ok && real && one_signed;
    jensen.push_back({{"n", n}, {"all_real", real}, {"one_signed", one_signed}, {"negative_roots", s.negative}});
  }
  CorpusOptions co;
  co.seed = cfg.seed;
  co.count = corpus_size;
  co.max_degree = std::min<std::size_t>(co.max_degree, max_degree);
  const CorpusReport ms_report = run_corpus(ms, real_rooted_corpus(co), false);
  const CorpusReport cz_report = run_corpus(cz, mixed_corpus(co), true);
  ok = ok && ms_report.failures.empty() && cz_report.failures.empty();
  const bool inconclusive = ms_report.inconclusive + cz_report.inconclusive > 0;
  auto report_json = [](const CorpusReport& r) {
    return nlohmann::json{{"trials", r.trials}, {"passed", r.passed}, {"inconclusive", r.inconclusive},
                          {"failures", r.failures}, {"records", r.records}};
  };
  nlohmann::json gamma = nlohmann::json::array();
  for (const Rational& g : ms.exact) gamma.push_back(g.get_str());
  const nlohmann::json j = {{"spec", {{"a", to_decimal_string(spec.a())}, {"b", to_decimal_string(spec.b())}}},
                            {"multiplier_sequence", gamma},
                            {"jensen", jensen},
                            {"ms_corpus", report_json(ms_report)},
                            {"czds_corpus", report_json(cz_report)},
                            {"seed", cfg.seed},
                            {"ok", ok}};
  detail::emit(cfg, out, detail::dump(j));
  if (!ok) return kViolation;
  return inconclusive ? kInternal : kOk;
}

/// Parses and dispatches; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Laguerre-Polya membership for 2-periodic second quotients", "lpc"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  if (const char* env = std::getenv("LPC_PRECISION")) {
    try {
      cfg.precision = std::stol(env);
    } catch (const std::exception&) {
      err << "error: LPC_PRECISION must be an integer\n";
      return kUsage;
    }
  }
  app.add_option("--precision", cfg.precision, "working precision in bits");
  app.add_option("--tol", cfg.tol, "bisection tolerance");
  app.add_option("--depth", cfg.depth, "certificate depth (even, >= 4)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "corpus seed");
  app.add_option("--threads", cfg.threads, "worker threads for scans");
  app.add_option("--out", cfg.out, "write output to FILE");

  std::string a;
  std::string b;
  auto* check = app.add_subcommand("check", "classify (a, b)");
  check->add_option("a", a)->required();
  check->add_option("b", b)->required();
  auto* certify = app.add_subcommand("certify", "build a sign-chain certificate");
  certify->add_option("a", a)->required();
  certify->add_option("b", b)->required();
  auto* qinf = app.add_subcommand("qinf", "enclose q_inf");
  std::size_t n = 0;
  auto* cn = app.add_subcommand("cn", "enclose the section constant c_n");
  cn->add_option("n", n)->required();
  std::string a_range = "3:4.5:0.05";
  std::string b_range = "3:6:0.05";
  auto* scan = app.add_subcommand("scan", "classify a parameter grid");
  scan->add_option("--a", a_range, "a range min:max:step");
  scan->add_option("--b", b_range, "b range min:max:step");
  std::vector<std::string> as;
  auto* boundary = app.add_subcommand("boundary", "critical b for each a");
  boundary->add_option("a", as)->required();
  std::size_t max_degree = 15;
  std::size_t corpus = 100;
  auto* ms = app.add_subcommand("ms-verify", "check the induced sequences");
  ms->add_option("a", a)->required();
  ms->add_option("b", b)->required();
  ms->add_option("--max-degree", max_degree, "largest Jensen degree");
  ms->add_option("--corpus", corpus, "corpus size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    require_precision(cfg.precision);
    if (cfg.threads == 0) throw ConfigError("--threads must be positive");
    if (*check) return cmd_check(a, b, cfg, out);
    if (*certify) return cmd_certify(a, b, cfg, out);
    if (*qinf) return cmd_qinf(cfg, out);
    if (*cn) return cmd_cn(n, cfg, out);
    if (*scan) return cmd_scan(a_range, b_range, cfg, out);
    if (*boundary) return cmd_boundary(as, cfg, out);
    if (*ms) return cmd_ms_verify(a, b, max_degree, corpus, cfg, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace lpc::cli
