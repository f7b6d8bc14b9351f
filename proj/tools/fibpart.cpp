// Command-line front end for the fibpart library.
//
//   fibpart rf <n>
//   fibpart powersum <p> <N>
//   fibpart series <p> <ell_max>
//   fibpart automaton <p> [--dot|--json] [--minimize] [--full]
//   fibpart verify-claims <p>
//   fibpart lambda <p>
//   fibpart table1 [--pmax 8]
//   fibpart gsr rhok <kmax> | gsr kron <p> | gsr trend <pmax>
//   fibpart zbound <hmax>
//
// Exit status: 0 success, 1 a verification check failed, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <fibpart.hpp>

namespace {

using namespace fibpart;

enum class Format { text, json, csv, dot };

struct RunConfig {
  Format format = Format::text;
  std::string output;
  std::size_t parallelism = 1;
  bool allow_large = false;
  std::string precision = "1/1000000000000";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Emission {
  std::string body;
  bool ok = true;
};

constexpr int kMaxP = 10;
constexpr std::uint64_t kLargeDirectCap = 200'000'000;

void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  for (auto f : allowed)
    if (f == cfg.format) return;
  throw UsageError("output format not supported by this subcommand");
}

void require_p(int p, int hi = kMaxP) {
  if (p < 1 || p > hi) throw UsageError("p must be in [1, " + std::to_string(hi) + "]");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t direct_cap(const RunConfig& cfg) { return cfg.allow_large ? kLargeDirectCap : kDefaultDirectCap; }

Emission run_rf(const RunConfig& cfg, const std::string& n_text, const std::string& method) {
  require_format(cfg, {Format::text, Format::json});
  BigInt n;
  if (n.set_str(n_text, 10) != 0 || n < 0) throw UsageError("n must be a nonnegative integer");
  BigInt r;
  if (method == "dp") {
    if (!n.fits_ulong_p() || n >= direct_cap(cfg)) throw UsageError("n above the table cap; use --method transfer");
    r = count_partitions(n.get_ui(), direct_cap(cfg));
  } else {
    r = count_partitions_transfer(n);
  }
  if (cfg.format == Format::json) return {dump({{"n", to_decimal(n)}, {"r_F", to_decimal(r)}})};
  return {to_decimal(r) + "\n"};
}

Emission run_powersum(const RunConfig& cfg, int p, std::uint64_t n) {
  require_format(cfg, {Format::text, Format::json});
  require_p(p);
  if (n > direct_cap(cfg)) throw UsageError("N above the table cap (use --allow-large)");
  const BigInt s = power_sum_direct(p, n, direct_cap(cfg));
  if (cfg.format == Format::json) return {dump({{"p", p}, {"N", std::to_string(n)}, {"S", to_decimal(s)}})};
  return {to_decimal(s) + "\n"};
}

Emission run_series(const RunConfig& cfg, int p, std::size_t ell_max) {
  require_format(cfg, {Format::text, Format::json, Format::csv});
  require_p(p, 8);
  const PowerSumSeries s = scaling_series(p, ell_max);
  if (cfg.format == Format::json) return {dump(to_json(s))};
  if (cfg.format == Format::csv) return {to_csv(s)};
  std::ostringstream os;
  os << "p = " << p << ", lambda = " << format_real(s.lambda) << ", exponent = " << format_real(s.exponent) << '\n';
  os << std::setw(5) << "ell" << "  " << std::setw(24) << "N" << "  " << std::setw(40) << "S" << "  ratio\n";
  for (std::size_t i = 0; i < s.ells.size(); ++i)
    os << std::setw(5) << s.ells[i] << "  " << std::setw(24) << to_decimal(s.cutoffs[i]) << "  " << std::setw(40)
       << to_decimal(s.sums[i]) << "  " << format_real(s.ratios[i]) << '\n';
  return {os.str()};
}

Emission run_automaton(const RunConfig& cfg, int p, bool minimized, bool full) {
  require_format(cfg, {Format::text, Format::json, Format::dot});
  require_p(p);
  Dfa d = full ? product(p) : accessible_product(p);
  if (minimized) d = minimize(d);
  if (cfg.format == Format::dot) return {export_dot(d)};
  if (cfg.format == Format::json) return {dump(export_json(d))};
  const bool scc = is_strongly_connected(d);
  std::ostringstream os;
  os << "p = " << p << '\n'
     << "states = " << d.size() << '\n'
     << "transitions = " << d.transition_count() << '\n'
     << "initial = " << d.state(d.initial()).str() << '\n'
     << "accepting =";
  for (auto a : d.accepting_states()) os << ' ' << d.state(a).str();
  os << '\n' << "strongly connected = " << (scc ? "yes" : "no") << '\n';
  if (scc) os << "aperiodic = " << (is_aperiodic(d) ? "yes" : "no") << '\n';
  return {os.str()};
}

Emission emit_report(const RunConfig& cfg, const Report& r) {
  require_format(cfg, {Format::text, Format::json});
  if (cfg.format == Format::json) return {dump(to_json(r)), r.passed()};
  return {to_text(r), r.passed()};
}

Emission run_verify_claims(const RunConfig& cfg, int p, bool blocks) {
  require_p(p);
  Report r = verify_transition_claims(p);
  if (blocks) r.append(verify_block_structure(p));
  return emit_report(cfg, r);
}

Emission run_lambda(const RunConfig& cfg, int p, bool rho) {
  require_format(cfg, {Format::text, Format::json});
  require_p(p);
  LambdaRecord rec = compute_lambda(p, parse_rational(cfg.precision));
  Report report("lambda_" + std::to_string(p));
  if (published_lambda(p)) report.append(verify_published_lambda(rec));
  if (rho && p <= 8) report.append(verify_rho_consistency(p, 1e-9, rec));
  if (cfg.format == Format::json)
    return {dump({{"record", to_json(rec)}, {"report", to_json(report)}}), report.passed()};
  std::ostringstream os;
  os << "p = " << p << '\n'
     << "lambda = " << format_real(rec.lambda_float) << '\n'
     << "interval = [" << to_fraction_string(rec.lambda.lo) << ", " << to_fraction_string(rec.lambda.hi) << "]\n"
     << "annihilator = " << rec.annihilator.to_string() << '\n'
     << "terms = " << rec.terms << '\n'
     << to_text(report);
  return {os.str(), report.passed()};
}

Emission run_table(const RunConfig& cfg, int pmax) {
  require_format(cfg, {Format::text, Format::json});
  require_p(pmax);
  std::vector<LambdaRecord> recs(static_cast<std::size_t>(pmax));
  std::vector<Report> reports(recs.size());
  parallel_for_index(recs.size(), cfg.parallelism, [&](std::size_t i) {
    recs[i] = compute_lambda(static_cast<int>(i) + 1);
    if (published_lambda(recs[i].p)) reports[i] = verify_published_lambda(recs[i]);
  });
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (const auto& r : recs) rows.push_back(to_json(r));
    return {dump(rows), ok};
  }
  std::ostringstream os;
  os << std::left << std::setw(4) << "p" << std::setw(16) << "lambda_p" << std::setw(10) << "checks"
     << "polynomial\n";
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    const auto row = published_lambda(r.p);
    std::string lam = format_real(r.lambda_float);
    os << std::setw(4) << r.p << std::setw(16) << lam;
    if (row) {
      os << std::setw(10) << (reports[i].passed() ? "ok" : "FAILED") << row->poly.to_string() << '\n';
    } else {
      os << std::setw(10) << "-" << r.annihilator.to_string() << " (annihilator)\n";
    }
  }
  for (const auto& r : reports)
    for (const auto& c : r.checks())
      if (!c.passed) os << "FAIL " << r.title() << ": " << c.name << " (" << c.detail << ")\n";
  return {os.str(), ok};
}

Emission run_gsr_rhok(const RunConfig& cfg, std::size_t kmax, bool no_skip) {
  require_format(cfg, {Format::text, Format::json, Format::csv});
  if (kmax < 1 || kmax > kMaxWordLength) throw UsageError("kmax must be in [1, 20]");
  std::vector<GsrEstimate> est;
  const Report r = verify_word_bound(berstel_family(), kmax, !no_skip, cfg.parallelism, &est);
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (const auto& e : est) rows.push_back(to_json(e));
    return {dump({{"estimates", rows}, {"report", to_json(r)}}), r.passed()};
  }
  std::ostringstream os;
  if (cfg.format == Format::csv) {
    os << "k,rho_k,normalized,witness\n";
    for (const auto& e : est)
      os << e.k << ',' << format_real(e.rho_k) << ',' << format_real(e.normalized) << ',' << e.witness.to_string()
         << '\n';
    return {os.str(), r.passed()};
  }
  os << std::left << std::setw(4) << "k" << std::setw(18) << "rho_k" << std::setw(18) << "rho_k^(1/k)"
     << "witness\n";
  for (const auto& e : est)
    os << std::setw(4) << e.k << std::setw(18) << format_real(e.rho_k) << std::setw(18) << format_real(e.normalized)
       << e.witness.to_string() << '\n';
  os << to_text(r);
  return {os.str(), r.passed()};
}

Emission run_gsr_kron(const RunConfig& cfg, int p) {
  require_format(cfg, {Format::text, Format::json});
  require_p(p, 9);
  const KroneckerRadius k = kronecker_radius(berstel_family(), p, 1e-13);
  const LambdaRecord rec = compute_lambda(p);
  Report r("Kronecker radius, p = " + std::to_string(p));
  const double err = std::fabs(k.radius - rec.lambda_float);
  r.add("radius equals lambda_p", err <= 1e-6, "|radius - lambda| = " + format_real(err, 3));
  if (cfg.format == Format::json)
    return {dump({{"kronecker", to_json(k)}, {"lambda", to_json(rec.lambda)}, {"report", to_json(r)}}), r.passed()};
  std::ostringstream os;
  os << "p = " << p << '\n'
     << "radius = " << format_real(k.radius) << '\n'
     << "radius^(1/p) = " << format_real(k.normalized) << '\n'
     << "lambda_p = " << format_real(rec.lambda_float) << '\n'
     << to_text(r);
  return {os.str(), r.passed()};
}

Emission run_gsr_trend(const RunConfig& cfg, int pmax) {
  require_format(cfg, {Format::text, Format::json, Format::csv});
  require_p(pmax, 9);
  const LambdaRootTrend t = lambda_root_trend(pmax, 1e-6, cfg.parallelism);
  if (cfg.format == Format::json) return {dump(to_json(t)), t.report.passed()};
  std::ostringstream os;
  if (cfg.format == Format::csv) {
    os << "p,lambda,root,kronecker_radius\n";
    for (const auto& r : t.rows)
      os << r.p << ',' << format_real(r.lambda.lambda_float) << ',' << format_real(r.root) << ','
         << format_real(r.kron.radius) << '\n';
    return {os.str(), t.report.passed()};
  }
  os << "sqrt(phi) = " << format_real(t.sqrt_phi.value()) << '\n';
  os << std::left << std::setw(4) << "p" << std::setw(18) << "lambda_p" << std::setw(18) << "lambda_p^(1/p)"
     << "Kronecker radius\n";
  for (const auto& r : t.rows)
    os << std::setw(4) << r.p << std::setw(18) << format_real(r.lambda.lambda_float) << std::setw(18)
       << format_real(r.root) << format_real(r.kron.radius) << '\n';
  os << to_text(t.report);
  return {os.str(), t.report.passed()};
}

Emission run_zbound(const RunConfig& cfg, long hmax) {
  if (hmax < 7) throw UsageError("hmax must be >= 7");
  Report r = verify_z_bounds(hmax);
  r.append(verify_z_reduction(std::min(hmax, 64L), 14));
  return emit_report(cfg, r);
}

void write_output(const RunConfig& cfg, const std::string& body) {
  if (cfg.output.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::path path(cfg.output);
  if (const char* dir = std::getenv("FIBPART_OUTPUT_DIR"); dir && *dir && path.is_relative())
    path = std::filesystem::path(dir) / path;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci partitions, power sums and the product Berstel automaton"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write to a file (relative paths resolve against FIBPART_OUTPUT_DIR)");
  app.add_option("-j,--parallelism", cfg.parallelism, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_flag("--allow-large", cfg.allow_large, "Lift the 10^7 cap on table-driven sums");
  app.add_option("--precision", cfg.precision, "Width of certified root intervals (decimal or num/den)")
      ->capture_default_str();

  std::string n_text, method = "transfer";
  auto* rf = app.add_subcommand("rf", "Number of Fibonacci partitions r_F(n)");
  rf->add_option("n", n_text)->required();
  rf->add_option("--method", method)->check(CLI::IsMember({"transfer", "dp"}))->capture_default_str();

  int p = 1;
  std::uint64_t big_n = 0;
  auto* ps = app.add_subcommand("powersum", "S_F^(p)(N) by direct summation");
  ps->add_option("p", p)->required();
  ps->add_option("N", big_n)->required();

  std::size_t ell_max = 0;
  auto* series = app.add_subcommand("series", "S_F^(p) at Fibonacci cutoffs with scaling ratios");
  series->add_option("p", p)->required();
  series->add_option("ell_max", ell_max)->required();

  bool dot = false, as_json = false, minimized = false, full = false;
  auto* aut = app.add_subcommand("automaton", "The accessible product automaton A_p");
  aut->add_option("p", p)->required();
  aut->add_flag("--dot", dot, "GraphViz output");
  aut->add_flag("--json", as_json, "JSON output");
  aut->add_flag("--minimize", minimized, "Minimize first");
  aut->add_flag("--full", full, "All 4^p states instead of the accessible part");

  bool blocks = false;
  auto* claims = app.add_subcommand("verify-claims", "Check the structural transition claims of B_p");
  claims->add_option("p", p)->required();
  claims->add_flag("--blocks", blocks, "Also check the block-triangular shape of U_p");

  bool rho = false;
  auto* lam = app.add_subcommand("lambda", "Certified growth constant lambda_p");
  lam->add_option("p", p)->required();
  lam->add_flag("--rho", rho, "Cross-check against floating spectral radii");

  int pmax = 8;
  auto* table = app.add_subcommand("table1", "lambda_p and minimal polynomials for p = 1..pmax");
  table->alias("lambda-table");
  table->add_option("--pmax", pmax)->capture_default_str();

  auto* gsr = app.add_subcommand("gsr", "Generalized spectral radius of {V0, V1}");
  gsr->require_subcommand(1);
  gsr->fallthrough();
  std::size_t kmax = 0;
  bool no_skip = false;
  auto* rhok = gsr->add_subcommand("rhok", "rho_k for k = 1..kmax");
  rhok->add_option("kmax", kmax)->required();
  rhok->add_flag("--no-skip", no_skip, "Also evaluate words containing 11");
  auto* kron = gsr->add_subcommand("kron", "rho(V0^(x)p + V1^(x)p)");
  kron->add_option("p", p)->required();
  auto* trend = gsr->add_subcommand("trend", "lambda_p^(1/p) for p = 1..pmax");
  trend->add_option("pmax", pmax)->required();

  long hmax = 7;
  auto* zb = app.add_subcommand("zbound", "Norm bounds for the 2x2 matrices Z_h");
  zb->add_option("hmax", hmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : format == "dot" ? Format::dot : Format::text;
  if (dot && as_json) {
    std::cerr << "error: --dot and --json are exclusive\n";
    return 2;
  }
  if (dot) cfg.format = Format::dot;
  if (as_json) cfg.format = Format::json;

  try {
    Emission e;
    if (*rf) e = run_rf(cfg, n_text, method);
    else if (*ps) e = run_powersum(cfg, p, big_n);
    else if (*series) e = run_series(cfg, p, ell_max);
    else if (*aut) e = run_automaton(cfg, p, minimized, full);
    else if (*claims) e = run_verify_claims(cfg, p, blocks);
    else if (*lam) e = run_lambda(cfg, p, rho);
    else if (*table) e = run_table(cfg, pmax);
    else if (*rhok) e = run_gsr_rhok(cfg, kmax, no_skip);
    else if (*kron) e = run_gsr_kron(cfg, p);
    else if (*trend) e = run_gsr_trend(cfg, pmax);
    else if (*zb) e = run_zbound(cfg, hmax);
    write_output(cfg, e.body);
    return e.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
