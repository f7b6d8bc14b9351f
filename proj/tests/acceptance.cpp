// Acceptance suite: one PASS/FAIL line per criterion, followed by indented
// detail lines. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <fibpart.hpp>

#include "oracles.hpp"

using namespace fibpart;

namespace {

// Pinned tolerances and fixtures.
constexpr double kRootWidth = 1e-12;
constexpr double kGrowthTol = 1e-4;
constexpr std::size_t kGrowthEll = 200;
constexpr double kWordBoundTol = 1e-9;
constexpr double kKroneckerTol = 1e-6;
constexpr double kOscillationMin = 1e-3;
constexpr std::size_t kBandLo = 20, kBandHi = 60;
struct Band {
  int p;
  double lo, hi;
};
// Frozen from the first run (min/max over the window, rounded outward).
constexpr std::array<Band, 2> kBands{{{1, 0.5311949, 0.5311953}, {2, 0.3360822, 0.3360825}}};

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  void note(std::string s) { notes.push_back(std::move(s)); }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      note("failed: " + what);
    }
  }
};

std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = std::string(FIBPART_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int st = pclose(pipe);
  *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Outcome lambda_table() {
  Outcome o;
  int status = 0;
  const auto rows = nlohmann::json::parse(run_cli("table1 --pmax 8 --format json", &status));
  o.require(status == 0, "table1 exit status " + std::to_string(status));
  o.require(rows.size() == 8, "table1 row count");
  for (const auto& row : rows) {
    const int p = row["p"];
    const auto published = published_lambda(p);
    const Rational lo = parse_rational(row["lambda"]["lo"].get<std::string>());
    const Rational hi = parse_rational(row["lambda"]["hi"].get<std::string>());
    o.require(row["table_poly_verified"].get<bool>(), "p = " + std::to_string(p) + " polynomial");
    o.require(row["table_value_matched"].get<bool>(), "p = " + std::to_string(p) + " digits");
    o.require(to_double(hi - lo) <= kRootWidth, "p = " + std::to_string(p) + " interval width");
    // re-derive the checks from the emitted interval
    std::vector<BigInt> asc;
    for (const auto& c : row["annihilator"]) asc.emplace_back(c.get<std::string>());
    const IntPolynomial ann(asc);
    CertifiedRoot root{squarefree_part(ann).primitive(), lo, hi};
    o.require(poly_divides(published->poly, ann), "p = " + std::to_string(p) + " division (re-check)");
    o.require(published->poly.sign_at(lo) * published->poly.sign_at(hi) < 0, "p = " + std::to_string(p) + " sign change");
    o.require(interval_matches_decimal(root, published->value), "p = " + std::to_string(p) + " printed digits");
    std::ostringstream os;
    os << "p = " << p << "  lambda = " << format_real(root.value()) << "  printed " << published->value;
    o.note(os.str());
  }
  return o;
}

Outcome automaton_structure() {
  Outcome o;
  for (int p = 1; p <= 8; ++p) {
    const Dfa a = accessible_product(p);
    const std::size_t expect = 3 * (std::size_t{1} << p) - 2;
    o.require(a.size() == expect, "|A_" + std::to_string(p) + "|");
    std::set<std::string> got;
    for (const auto& s : a.states()) got.insert(s.str());
    bool members = true;
    for (const auto& s : got) members = members && classify_state(StateLabel(s)) == StateClass::accessible;
    std::size_t total_in_sp = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * p)); ++code)
      total_in_sp += classify_state(StateLabel::from_code(code, p)) == StateClass::accessible ? 1 : 0;
    o.require(members && total_in_sp == got.size(), "state set of A_" + std::to_string(p));
    o.require(is_strongly_connected(a), "A_" + std::to_string(p) + " strongly connected");
    o.require(is_aperiodic(a), "A_" + std::to_string(p) + " aperiodic");
    const std::size_t m = minimize(a).size();
    if (p >= 2) o.require(m == (std::size_t{1} << (p + 1)), "minimized size p = " + std::to_string(p));
    o.note("p = " + std::to_string(p) + "  |A_p| = " + std::to_string(a.size()) + "  minimized " + std::to_string(m));
  }
  return o;
}

Outcome transition_claims() {
  Outcome o;
  for (int p = 1; p <= 8; ++p) {
    const Report r = verify_transition_claims(p);
    std::size_t vacuous = 0;
    for (const auto& c : r.checks()) {
      o.require(c.passed, "p = " + std::to_string(p) + " " + c.name);
      vacuous += c.vacuous ? 1 : 0;
    }
    o.require(r.checks().size() == 10, "ten claims at p = " + std::to_string(p));
    if (vacuous) o.note("p = " + std::to_string(p) + ": " + std::to_string(vacuous) + " vacuous");
  }
  return o;
}

Outcome counting_identity() {
  Outcome o;
  const std::uint64_t limit = 100000;
  const PartitionTable table(limit + 1);
  std::size_t compared = 0;
  for (int p = 1; p <= 3; ++p) {
    const auto sums = power_sums_at_cutoffs(p, 30);
    FibSequence fibs;
    for (std::size_t ell = 0; fibs(ell + 1) <= limit; ++ell, ++compared)
      o.require(sums[ell] == power_sum_direct(p, fibs(ell + 1).get_ui(), table),
                "p = " + std::to_string(p) + ", ell = " + std::to_string(ell));
  }
  bool all = true;
  for (std::uint64_t n = 0; n <= limit && all; ++n) all = count_partitions_transfer(n) == table.count(n);
  o.require(all, "r_F table vs transfer");
  o.note(std::to_string(compared) + " cutoff sums, " + std::to_string(limit + 1) + " r_F values");
  return o;
}

Outcome language() {
  Outcome o;
  std::uint64_t words = 0;
  for (int p = 1; p <= 3; ++p) {
    const Dfa a = accessible_product(p);
    for (std::size_t ell = 0; ell <= 10; ++ell) {
      const auto res = oracle::check_language(a, p, ell);
      o.require(res.ok, "p = " + std::to_string(p) + ", ell = " + std::to_string(ell) + ": " + res.failure);
      words += res.words_checked;
    }
  }
  o.note(std::to_string(words) + " words checked");
  return o;
}

Outcome growth_rate() {
  Outcome o;
  for (int p = 1; p <= 8; ++p) {
    const auto ratios = successive_ratios(power_sums_at_cutoffs(p, kGrowthEll + 1));
    const double lambda = compute_lambda(p).lambda_float;
    const double err = std::fabs(ratios[kGrowthEll] - lambda);
    o.require(err <= kGrowthTol, "p = " + std::to_string(p));
    o.note("p = " + std::to_string(p) + "  |A_201/A_200 - lambda| = " + format_real(err, 3));
  }
  return o;
}

Outcome asymptotic_band() {
  Outcome o;
  for (const auto& band : kBands) {
    const PowerSumSeries s = scaling_series(band.p, kBandHi);
    const RatioBand b = ratio_band(s, kBandLo, kBandHi);
    o.require(b.min > 0 && std::isfinite(b.max), "p = " + std::to_string(band.p) + " ratios positive and finite");
    o.require(band.lo <= b.min && b.max <= band.hi, "p = " + std::to_string(band.p) + " inside frozen band");
    o.note("p = " + std::to_string(band.p) + "  ratios in [" + format_real(b.min) + ", " + format_real(b.max) +
           "], max/min - 1 = " + format_real(b.spread() - 1, 3));
    if (band.p == 1) {
      o.require(b.spread() > 1 + kOscillationMin, "p = 1 oscillation over cutoffs (max/min > 1 + 1e-3)");
      const RatioBand all = ratio_band_direct(1, s.cutoffs[kBandLo - 1].get_ui(), s.cutoffs[29].get_ui(), s.exponent);
      o.note("p = 1 over every N in [f_20, f_30): max/min - 1 = " + format_real(all.spread() - 1, 3));
    }
  }
  return o;
}

Outcome word_bound() {
  Outcome o;
  std::vector<GsrEstimate> est;
  const Report r = verify_word_bound(berstel_family(), 16, true, 1, &est);
  for (const auto& c : r.checks()) o.require(c.passed, c.name + " (" + c.detail + ")");
  const Report z = verify_z_bounds(1000);
  for (const auto& c : z.checks()) o.require(c.passed, c.name);
  const double sqrt_phi = certified_sqrt_phi().value();
  double worst = -1;
  for (const auto& e : est) worst = std::max(worst, e.normalized - sqrt_phi);
  o.require(worst <= kWordBoundTol, "max excess");
  o.note("max rho_k^{1/k} - sqrt(phi) over k <= 16: " + format_real(worst, 3));
  return o;
}

Outcome kronecker() {
  Outcome o;
  const LambdaRootTrend t = lambda_root_trend(8, kKroneckerTol);
  for (const auto& c : t.report.checks()) o.require(c.passed, c.name + " (" + c.detail + ")");
  for (const auto& row : t.rows)
    o.note("p = " + std::to_string(row.p) + "  lambda^{1/p} = " + format_real(row.root) +
           "  |kron - lambda| = " + format_real(std::fabs(row.kron.radius - row.lambda.lambda_float), 3));
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> artifacts{
      {"table.json", "table1 --format json"},
      {"series1.csv", "series 1 60 --format csv"},
      {"series2.json", "series 2 60 --format json"},
      {"rhok.json", "gsr rhok 16 --format json"},
      {"trend.json", "gsr trend 8 --format json"},
      {"automaton4.json", "automaton 4 --json"},
      {"claims8.json", "verify-claims 8 --blocks --format json"},
      {"zbound.json", "zbound 1000 --format json"},
  };
  const auto base = std::filesystem::temp_directory_path() / ("fibpart_acceptance_" + std::to_string(::getpid()));
  for (const char* run : {"a", "b"}) {
    std::filesystem::create_directories(base / run);
    for (const auto& [file, args] : artifacts) {
      int status = 0;
      const std::string cmd = "env FIBPART_OUTPUT_DIR=" + (base / run).string() + " " + std::string(FIBPART_CLI_PATH) +
                              " " + args + " --output " + file;
      status = std::system(cmd.c_str());
      o.require(status == 0, args + " exit status");
    }
  }
  for (const auto& [file, args] : artifacts) {
    const std::string a = slurp(base / "a" / file), b = slurp(base / "b" / file);
    o.require(!a.empty() && a == b, file + " identical");
  }
  o.note(std::to_string(artifacts.size()) + " artifacts compared byte for byte");
  std::filesystem::remove_all(base);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 lambda table reproduction", lambda_table},
      {"2 automaton structure", automaton_structure},
      {"3 transition claims", transition_claims},
      {"4 counting identity", counting_identity},
      {"5 language correctness", language},
      {"6 growth rate", growth_rate},
      {"7 asymptotic band", asymptotic_band},
      {"8 word bound and Z_h bounds", word_bound},
      {"9 Kronecker radius and root trend", kronecker},
      {"10 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " (" << format_real(secs, 3) << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    failures += o.passed ? 0 : 1;
  }
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed") << '\n';
  return failures ? 1 : 0;
}
