// Acceptance suite. Usage: acceptance [criterion-number] [path-to-univalence-cli]
// Prints one PASS/FAIL line per criterion; exit status 0 iff all selected pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "univalence/criteria.hpp"
#include "univalence/rational.hpp"
#include "univalence/verifier.hpp"

using namespace univalence;

namespace {

// tolerances pinned per criterion
constexpr double kRuntimeConstants = 1.0;
constexpr double kG1 = 1.8959, kG2 = 1.1809, kGTolerance = 1e-4;
constexpr double kMultiplierRel = 1e-12, kRuntimeMultiplier = 5.0;
constexpr double kClosedFormTol = 1e-10, kRuntimeClosedForm = 10.0;
constexpr double kContainmentSlack = -1e-9, kRuntimeContainment = 60.0;
constexpr double kReductionTol = 1e-14;
constexpr double kQuadratureTol = 1e-9, kRuntimeQuadrature = 10.0;
constexpr double kCollision = 1e-8, kRuntimeInjectivity = 30.0;

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double x) { return format_number(x); }

Outcome constants_exact() {
  const auto t0 = Clock::now();
  auto at = [](Rational k) {
    return logderiv_bound(compute_quantities<Rational>(k, Rational(1), Rational(1), Rational(0), 0, 1));
  };
  const Rational a = at(Rational(5, 2)), b = at(Rational(3, 2));
  const double t = seconds_since(t0);
  const bool ok = a == Rational(28, 233) && b == Rational(20, 89) &&
                  Rational(1) / b == Rational(89, 20) && t < kRuntimeConstants;
  return {ok, "k=5/2 -> " + to_string(a) + ", k=3/2 -> " + to_string(b) + ", " + num(t) + " s"};
}

Outcome constants_float() {
  const auto t0 = Clock::now();
  const OperatorParams op(0.0, 0.0, 0);
  const double g1 = criterion_G({BesselParams(0.5, 1.0, 1.0), op, 1.0, 1}).threshold;
  const double g2 = criterion_G({BesselParams(-0.5, 1.0, -1.0), op, 1.0, 1}).threshold;
  const double t = seconds_since(t0);
  const bool ok = std::abs(g1 - kG1) <= kGTolerance && std::abs(g2 - kG2) <= kGTolerance &&
                  t < kRuntimeConstants;
  return {ok, "G radii " + num(g1) + ", " + num(g2) + ", " + num(t) + " s"};
}

Outcome multiplier_forms() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> lam(0.01, 3.0), gam(-1.0, 1.9);
  std::uniform_int_distribution<int> npick(0, 5);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const OperatorParams op(lam(rng), gam(rng), npick(rng));
    for (int m = 1; m <= 60; ++m) {
      const double a = multiplier(m, op), b = multiplier_pochhammer(m, op);
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
  }
  const double t = seconds_since(t0);
  return {worst <= kMultiplierRel && t < kRuntimeMultiplier,
          "max relative difference " + num(worst) + " over 200 tuples, m <= 60, " + num(t) + " s"};
}

Outcome closed_forms() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  const DiskGrid grid{64, 128, 0.9};
  std::vector<cplx> pts = grid.points();
  pts.push_back(0.0);
  for (const double v : {-0.5, 0.5, 1.5}) {
    for (const double d : {1.0, -1.0}) {
      const NormalizedSeries f = phi_series(BesselParams(v, 1.0, d), 40);
      for (const cplx z : pts) {
        const cplx series = evaluate(f, z).value;
        const cplx exact = z == 0.0 ? 0.0
                         : d > 0   ? oracle::closed_form_J(v, z)
                                   : oracle::closed_form_I(v, z);
        worst = std::max(worst, std::abs(series - exact));
      }
    }
  }
  const double t = seconds_since(t0);
  return {worst <= kClosedFormTol && t < kRuntimeClosedForm,
          "max |series - closed form| " + num(worst) + " on 64x128 grid, |z| <= 0.9, " + num(t) +
              " s"};
}

Outcome containment() {
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.command = "bounds-verify";
  const Report report = run_bounds_verify(cfg);
  const double t = seconds_since(t0);

  // the five supremum quantities named by the criterion
  const std::vector<std::string> names = {"ratio_upper", "diff", "logderiv", "deriv_upper",
                                          "second_deriv"};
  std::vector<std::vector<double>> tuples;
  int checked = 0, failed = 0, skipped = 0;
  int failed_by_n[3] = {0, 0, 0};
  double worst = 0.0;
  std::ostringstream failures;
  for (const auto& row : report.rows) {
    const bool tracked = std::find(names.begin(), names.end(), row.quantity) != names.end();
    if (row.status == RowStatus::Skip) {
      if (row.quantity.rfind("tuple", 0) != 0) ++skipped;
      continue;
    }
    if (tuples.empty() || tuples.back() != row.params) tuples.push_back(row.params);
    if (!tracked) continue;
    ++checked;
    if (*row.margin < kContainmentSlack) {
      ++failed;
      ++failed_by_n[static_cast<int>(row.params[6])];
      worst = std::min(worst, *row.margin);
    }
  }
  int n_values[3] = {0, 0, 0};
  for (const auto& p : tuples) ++n_values[static_cast<int>(p[6])];
  const bool spans = n_values[0] > 0 && n_values[1] > 0 && n_values[2] > 0;
  const bool ok = failed == 0 && tuples.size() >= 30 && spans && t < kRuntimeContainment;
  std::ostringstream detail;
  detail << tuples.size() << " admissible tuples, " << checked << " rows checked, " << failed
         << " below slack (n=0: " << failed_by_n[0] << ", n=1: " << failed_by_n[1]
         << ", n=2: " << failed_by_n[2] << "), worst margin " << num(worst) << ", " << skipped
         << " undefined bounds skipped, " << num(t) << " s";
  return {ok, detail.str()};
}

Outcome n0_reduction() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> kd(1.0, 8.0), dd(0.0, 1.0), lam(0.0, 3.0), gam(-1.0, 1.9);
  double worst = 0.0;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  for (int i = 0; i < 100; ++i) {
    const double k = kd(rng), d = dd(rng);
    const auto q = compute_quantities<double>(k, d, lam(rng), gam(rng), 0, 1);
    worst = std::max({worst, rel(ratio_lower_bound(q), oracle::n0::ratio_lower(k, d)),
                      rel(ratio_upper_bound(q), oracle::n0::ratio_upper(k, d)),
                      rel(diff_bound(q), oracle::n0::diff(k, d)),
                      rel(logderiv_bound(q), oracle::n0::logderiv(k, d)),
                      rel(deriv_lower_bound(q), oracle::n0::deriv_lower(k, d)),
                      rel(deriv_upper_bound(q), oracle::n0::deriv_upper(k, d)),
                      rel(second_deriv_bound(q), oracle::n0::second_deriv(k, d))});
  }
  return {worst <= kReductionTol, "max relative difference " + num(worst) + " over 100 tuples"};
}

Outcome quadrature_oracle() {
  const auto t0 = Clock::now();
  const OperatorParams op(0.0, 0.0, 0);
  const BesselParams bh(1.5, 1.0, 1.0), bg(0.5, 1.0, 1.0);
  const NormalizedSeries fh = operator_phi(bh, op), fg = operator_phi(bg, op);
  const std::vector<cplx> ch(fh.coefficients().begin(), fh.coefficients().end());
  const std::vector<cplx> cg(fg.coefficients().begin(), fg.coefficients().end());
  double worst_h = 0.0, worst_g = 0.0;
  for (int i = 0; i < 50; ++i) {
    const cplx z = std::polar(0.8 * (i % 5 + 1) / 5.0, 2.399963229728653 * i);
    const cplx h = integral_H({{bh}, op, {1.0}, 1.0, 0.0, 1}, z).value;
    const cplx g = integral_G({bg, op, 1.0, 1}, z).value;
    worst_h = std::max(worst_h, std::abs(h - oracle::integrate_over_t(ch, z)));
    worst_g = std::max(worst_g, std::abs(g - oracle::integrate_exp(cg, z)));
  }
  const double t = seconds_since(t0);
  return {worst_h <= kQuadratureTol && worst_g <= kQuadratureTol && t < kRuntimeQuadrature,
          "H max error " + num(worst_h) + ", G max error " + num(worst_g) + " at 50 points, " +
              num(t) + " s"};
}

Outcome sufficiency() {
  const auto t0 = Clock::now();
  const HParams p{{BesselParams(1.5, 1.0, 1.0)}, OperatorParams(0.0, 0.0, 0), {1.0}, 1.0, 0.0, 1};
  const CriterionReport r = criterion_H(p);
  const InjectivityReport inj = empirical_injectivity(
      [&](cplx z) { return integral_H(p, z).value; }, DiskGrid{32, 64, 0.999});
  const double t = seconds_since(t0);
  return {r.passed && !inj.collision && inj.min_ratio > kCollision && t < kRuntimeInjectivity,
          "criterion_H attained " + num(r.attained) + ", min difference ratio " +
              num(inj.min_ratio) + " over " + std::to_string(inj.pairs_checked) + " pairs, " +
              num(t) + " s"};
}

Outcome degenerate() {
  std::vector<std::string> problems;
  // d = 0: bounds collapse
  for (int n : {0, 1, 2}) {
    const auto adm = check_admissible(BesselParams(0.5, 1.0, 0.0), OperatorParams(0.5, 0.5, n));
    if (!adm) {
      problems.push_back("d=0 inadmissible");
      continue;
    }
    const auto& q = adm.params->bounds;
    if (ratio_lower_bound(q) != 1.0 || ratio_upper_bound(q) != 1.0 || diff_bound(q) != 0.0 ||
        logderiv_bound(q) != 0.0 || deriv_lower_bound(q) != 1.0 || deriv_upper_bound(q) != 1.0 ||
        second_deriv_bound(q) != 0.0) {
      problems.push_back("d=0 bounds at n=" + std::to_string(n));
    }
    if (!(operator_phi(BesselParams(0.5, 1.0, 0.0), OperatorParams(0.5, 0.5, n)) ==
          NormalizedSeries::identity(kDefaultTruncation))) {
      problems.push_back("d=0 operator image is not z");
    }
  }
  // d = 0: operators return z
  const BesselParams flat(0.5, 1.0, 0.0);
  const OperatorParams op(0.5, 0.5, 1);
  double worst = 0.0;
  for (const cplx z : {cplx(0.5, 0.3), cplx(-0.2, -0.9), cplx(0.95, 0.0)}) {
    worst = std::max(worst, std::abs(integral_H({{flat}, op, {1.0}, 2.0, 0.0, 1}, z).value - z));
    worst = std::max(worst, std::abs(integral_F({{flat}, op, 1.0, 1}, z).value - z));
    worst = std::max(worst, std::abs(integral_G_series(std::nullopt, 1.5, z).value - z));
  }
  if (worst > 1e-13) problems.push_back("d=0 operators differ from z by " + num(worst));
  // lambda = 0 multipliers: rising-factorial form equals the gamma form
  double mult = 0.0;
  for (int n : {1, 2, 3}) {
    for (double g : {0.0, 0.5, -0.5}) {
      const OperatorParams z0(0.0, g, n);
      for (int m = 1; m <= 60; ++m) {
        const double expected = oracle::multiplier(m, 0.0, g, n);
        mult = std::max(mult, std::abs(multiplier(m, z0) - expected) / expected);
        mult = std::max(mult, std::abs(multiplier_pochhammer(m, z0) - expected) / expected);
      }
    }
  }
  if (mult > 1e-12) problems.push_back("lambda=0 multiplier relative error " + num(mult));
  std::string detail = "d=0 operator error " + num(worst) + ", lambda=0 multiplier error " + num(mult);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const std::string dir = "acceptance_determinism";
  std::filesystem::create_directories(dir);
  {
    std::ofstream config(dir + "/sweep.cfg");
    config << "# default sweep, explicit\nn = 0,1,2\nlambda = 0,0.5,1\ngamma = 0,0.5\n"
              "v = -0.5:1.5:1\n";
  }
  auto run = [&](const std::string& out) {
    const std::string cmd =
        cli + " bounds-verify --config " + dir + "/sweep.cfg --out " + dir + "/" + out;
    return std::system(cmd.c_str());
  };
  auto slurp = [&](const std::string& name) {
    std::ifstream in(dir + "/" + name, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  run("a.csv");
  run("b.csv");
  const std::string a = slurp("a.csv"), b = slurp("b.csv");
  return {!a.empty() && a == b, std::to_string(a.size()) + " bytes, identical: " +
                                    (a == b ? std::string("yes") : std::string("no"))};
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const std::string cli = argc > 2 ? argv[2] : "";
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "constant reproduction (exact)", constants_exact},
      {2, "constant reproduction (floating)", constants_float},
      {3, "multiplier formula equivalence", multiplier_forms},
      {4, "closed-form identities", closed_forms},
      {5, "inequality containment", containment},
      {6, "n=0 reduction", n0_reduction},
      {7, "quadrature oracle", quadrature_oracle},
      {8, "sufficiency spot-check", sufficiency},
      {9, "degenerate cases", degenerate},
      {10, "determinism", [&] { return determinism(cli); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %-34s %s  %s\n", c.id, c.name, o.passed ? "PASS" : "FAIL",
                o.detail.c_str());
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
