#include "univalence/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "univalence/errors.hpp"

namespace univalence {
namespace {

constexpr double kGridTolerance = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (std::signbit(z.imag()) ? "" : "+") << z.imag() << "i";
  return os.str();
}

// Bessel entry with the smallest k; all entries must share (b, d).
const BesselParams& min_k_bessel(const std::vector<BesselParams>& bessels) {
  if (bessels.empty()) throw DomainError("at least one Bessel function is required");
  for (const auto& b : bessels) {
    if (b.b() != bessels.front().b() || b.d() != bessels.front().d()) {
      throw DomainError("all Bessel functions must share b and d");
    }
  }
  return *std::min_element(bessels.begin(), bessels.end(),
                           [](const auto& x, const auto& y) { return x.k() < y.k(); });
}

AdmissibleParams require_admissible(const BesselParams& b, const OperatorParams& op,
                                    int m_index) {
  Admissibility adm = check_admissible(b, op, m_index);
  if (!adm) throw DomainError("inadmissible parameters: " + adm.reason);
  return *adm.params;
}

void echo_common(CriterionReport& r, const BesselParams& b, const OperatorParams& op,
                 int m_index) {
  r.inputs.emplace_back("k", fmt(b.k()));
  r.inputs.emplace_back("b", fmt(b.b()));
  r.inputs.emplace_back("d", fmt(b.d()));
  r.inputs.emplace_back("lambda", fmt(op.lambda()));
  r.inputs.emplace_back("gamma", fmt(op.gamma_order()));
  r.inputs.emplace_back("n", std::to_string(op.n()));
  r.inputs.emplace_back("m_index", std::to_string(m_index));
}

// Grid maximum of a pointwise quantity. `quantity` returns nullopt where it is
// undefined; the first such point is recorded and the check fails.
template <typename Fn>
CriterionReport grid_sup(std::string name, double threshold, const DiskGrid& grid, Fn quantity) {
  double sup = -kInf;
  std::optional<cplx> undefined_at;
  for (const cplx z : grid.points()) {
    const std::optional<double> v = quantity(z);
    if (!v || !std::isfinite(*v)) {
      if (!undefined_at) undefined_at = z;
      continue;
    }
    sup = std::max(sup, *v);
  }
  CriterionReport r = make_report(std::move(name), threshold, sup, kGridTolerance);
  if (undefined_at) {
    r.passed = false;
    r.notes.push_back("quantity undefined (vanishing denominator) at z = " + fmt(*undefined_at));
  }
  r.notes.push_back("attained is a grid supremum");
  return r;
}

std::function<cplx(cplx)> over_z(NormalizedSeries s) {
  auto series = std::make_shared<const NormalizedSeries>(std::move(s));
  return [series](cplx t) { return evaluate_over_z(*series, t); };
}

}  // namespace

double DiskGrid::radius(int i) const {
  return 1.0 - std::pow(1.0 - max_radius, static_cast<double>(i + 1) / radii);
}

std::vector<cplx> DiskGrid::points() const {
  if (radii < 1 || angles < 1) throw DomainError("grid needs at least one radius and angle");
  if (!(max_radius > 0.0 && max_radius < 1.0)) throw DomainError("grid max radius must lie in (0, 1)");
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(radii) * static_cast<std::size_t>(angles));
  for (int i = 0; i < radii; ++i) {
    const double r = radius(i);
    for (int j = 0; j < angles; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
    }
  }
  return pts;
}

CriterionReport make_report(std::string name, double threshold, double attained,
                            double tolerance) {
  CriterionReport r;
  r.criterion_name = std::move(name);
  r.threshold = threshold;
  r.attained = attained;
  r.margin = threshold - attained;
  r.tolerance = tolerance;
  r.passed = r.margin >= -tolerance;
  return r;
}

NormalizedSeries operator_phi(const BesselParams& bessel, const OperatorParams& op, int order) {
  return apply_operator(phi_series(bessel, order), op);
}

CriterionReport criterion_H(const HParams& p) {
  if (p.mus.size() != p.bessels.size()) throw DomainError("criterion_H: need one mu per function");
  if (!(p.eta.real() > 0.0)) throw DomainError("criterion_H: requires Re(eta) > 0");
  if (std::abs(p.c) > 1.0 || p.c == cplx(-1.0)) {
    throw DomainError("criterion_H: requires |c| <= 1 and c != -1");
  }
  double sum = 0.0;
  for (const cplx mu : p.mus) {
    if (mu == 0.0) throw DomainError("criterion_H: mu_j must be nonzero");
    sum += 1.0 / std::abs(p.eta * mu);
  }
  const BesselParams& kmin = min_k_bessel(p.bessels);
  const AdmissibleParams adm = require_admissible(kmin, p.op, p.m_index);
  const double bound = logderiv_bound(adm);
  CriterionReport r = make_report("H", 1.0, std::abs(p.c) + bound * sum, 1e-12);
  echo_common(r, kmin, p.op, p.m_index);
  r.inputs.emplace_back("logderiv_bound", fmt(bound));
  r.inputs.emplace_back("sum_inv_eta_mu", fmt(sum));
  r.inputs.emplace_back("c", fmt(p.c));
  return r;
}

CriterionReport criterion_F(const FParams& p) {
  if (!(p.mu.real() > 0.0)) throw DomainError("criterion_F: requires Re(mu) > 0");
  const BesselParams& kmin = min_k_bessel(p.bessels);
  const AdmissibleParams adm = require_admissible(kmin, p.op, p.m_index);
  const double m = static_cast<double>(p.bessels.size());
  const double bound = logderiv_bound(adm);
  const double threshold = bound == 0.0 ? kInf : p.mu.real() / (m * bound);
  CriterionReport r = make_report("F", threshold, std::abs(p.mu), 1e-12);
  echo_common(r, kmin, p.op, p.m_index);
  r.inputs.emplace_back("logderiv_bound", fmt(bound));
  r.inputs.emplace_back("m", std::to_string(p.bessels.size()));
  r.inputs.emplace_back("mu", fmt(p.mu));
  return r;
}

CriterionReport criterion_G(const GParams& p) {
  const AdmissibleParams adm = require_admissible(p.bessel, p.op, p.m_index);
  const double radius = exponential_radius(adm.bounds);
  CriterionReport r = make_report("G", radius, std::abs(p.zeta), 1e-12);
  if (p.zeta.real() < 1.0) {
    r.passed = false;
    r.notes.push_back("Re(zeta) < 1");
  }
  echo_common(r, p.bessel, p.op, p.m_index);
  r.inputs.emplace_back("zeta", fmt(p.zeta));
  return r;
}

CriterionReport lemma_pescar_check(const NormalizedSeries& f, cplx eta, cplx c,
                                   const DiskGrid& grid, PescarVariant variant) {
  if (!(eta.real() > 0.0)) throw DomainError("lemma_pescar_check: requires Re(eta) > 0");
  if (std::abs(c) > 1.0 || c == cplx(-1.0)) {
    throw DomainError("lemma_pescar_check: requires |c| <= 1 and c != -1");
  }
  const double sign = variant == PescarVariant::Plus ? 1.0 : -1.0;
  CriterionReport r = grid_sup(
      variant == PescarVariant::Plus ? "pescar" : "pescar_minus", 1.0, grid,
      [&](cplx z) -> std::optional<double> {
        const EvaluationResult e = evaluate(f, z);
        if (e.first_derivative == 0.0) return std::nullopt;
        const cplx power = std::exp(2.0 * eta * std::log(std::abs(z)));
        return std::abs(c * power +
                        (1.0 + sign * power) * z * e.second_derivative / (eta * e.first_derivative));
      });
  r.inputs.emplace_back("eta", fmt(eta));
  r.inputs.emplace_back("c", fmt(c));
  return r;
}

CriterionReport lemma_pascu_check(const NormalizedSeries& f, cplx mu, const DiskGrid& grid) {
  const double a = mu.real();
  if (!(a > 0.0)) throw DomainError("lemma_pascu_check: requires Re(mu) > 0");
  CriterionReport r = grid_sup("pascu", 1.0, grid, [&](cplx z) -> std::optional<double> {
    const EvaluationResult e = evaluate(f, z);
    if (e.first_derivative == 0.0) return std::nullopt;
    return (1.0 - std::pow(std::abs(z), 2.0 * a)) / a *
           std::abs(z * e.second_derivative / e.first_derivative);
  });
  r.inputs.emplace_back("mu", fmt(mu));
  return r;
}

CriterionReport lemma_becker_check(const std::optional<NormalizedSeries>& q, cplx zeta,
                                   double theta, const DiskGrid& grid) {
  if (!(theta > 1.0)) throw DomainError("lemma_becker_check: requires theta > 1");
  CriterionReport r = grid_sup("becker", theta, grid, [&](cplx z) -> std::optional<double> {
    if (!q) return 0.0;
    return std::abs(z * evaluate(*q, z).first_derivative);
  });
  if (zeta.real() < 1.0) {
    r.passed = false;
    r.notes.push_back("Re(zeta) < 1");
  }
  if (2.0 * theta * std::abs(zeta) > 3.0 * std::sqrt(3.0)) {
    r.passed = false;
    r.notes.push_back("2 theta |zeta| > 3 sqrt 3");
  }
  r.inputs.emplace_back("zeta", fmt(zeta));
  r.inputs.emplace_back("theta", fmt(theta));
  return r;
}

std::vector<CriterionReport> direct_criteria_check(const BesselParams& bessel,
                                                   const OperatorParams& op,
                                                   const DiskGrid& grid, int order) {
  require_admissible(bessel, op, 1);
  const NormalizedSeries f = operator_phi(bessel, op, order);

  struct Pieces {
    cplx a, b;
  };
  // A = z^2 f'/f^2, B = (z f)''/f' - 2 z f'/f; nullopt where f or f' vanishes
  auto pieces = [&](cplx z) -> std::optional<Pieces> {
    const EvaluationResult e = evaluate(f, z);
    if (e.value == 0.0 || e.first_derivative == 0.0) return std::nullopt;
    const cplx zf2 = 2.0 * e.first_derivative + z * e.second_derivative;
    return Pieces{z * z * e.first_derivative / (e.value * e.value),
                  zf2 / e.first_derivative - 2.0 * z * e.first_derivative / e.value};
  };
  constexpr double kDegenerate = 1e-12;

  std::vector<CriterionReport> out;
  out.push_back(grid_sup("direct_product", 1.0, grid, [&](cplx z) -> std::optional<double> {
    const auto p = pieces(z);
    if (!p) return std::nullopt;
    return std::abs(p->a * p->b);
  }));
  out.push_back(grid_sup("direct_quotient", 0.25, grid, [&](cplx z) -> std::optional<double> {
    const auto p = pieces(z);
    if (!p || p->a == 0.0) return std::nullopt;
    return std::abs(p->b / p->a);
  }));
  out.push_back(grid_sup("direct_shifted", 0.5, grid, [&](cplx z) -> std::optional<double> {
    const auto p = pieces(z);
    if (!p || std::abs(p->a - 1.0) <= kDegenerate) return std::nullopt;
    return std::abs(p->b / (p->a - 1.0));
  }));
  out.push_back(grid_sup("direct_real_part", 1.0, grid, [&](cplx z) -> std::optional<double> {
    const auto p = pieces(z);
    if (!p || std::abs(p->a - 1.0) <= kDegenerate) return std::nullopt;
    return (p->a * p->b / (p->a - 1.0)).real();
  }));
  for (auto& r : out) echo_common(r, bessel, op, 1);
  return out;
}

IntegralResult integral_H(const HParams& p, cplx z, const QuadratureSpec& quad, int order) {
  if (p.mus.size() != p.bessels.size()) throw DomainError("integral_H: need one mu per function");
  min_k_bessel(p.bessels);
  std::vector<PowerFactor> factors;
  for (std::size_t j = 0; j < p.bessels.size(); ++j) {
    if (p.mus[j] == 0.0) throw DomainError("integral_H: mu_j must be nonzero");
    factors.push_back({over_z(operator_phi(p.bessels[j], p.op, order)), 1.0 / p.mus[j]});
  }
  return power_integral(z, p.eta, factors, quad);
}

IntegralResult integral_F(const FParams& p, cplx z, const QuadratureSpec& quad, int order) {
  if (!(p.mu.real() > 0.0)) throw DomainError("integral_F: requires Re(mu) > 0");
  min_k_bessel(p.bessels);
  std::vector<PowerFactor> factors;
  for (const auto& b : p.bessels) {
    factors.push_back({over_z(operator_phi(b, p.op, order)), p.mu});
  }
  const cplx eta = static_cast<double>(p.bessels.size()) * p.mu + 1.0;
  return power_integral(z, eta, factors, quad);
}

IntegralResult integral_G_series(const std::optional<NormalizedSeries>& q, cplx zeta, cplx z,
                                 const QuadratureSpec& quad) {
  std::vector<PowerFactor> factors;
  if (q) {
    auto series = std::make_shared<const NormalizedSeries>(*q);
    factors.push_back(
        {[series](cplx t) { return std::exp(t * evaluate_over_z(*series, t)); }, zeta});
  }
  return power_integral(z, zeta, factors, quad);
}

IntegralResult integral_G(const GParams& p, cplx z, const QuadratureSpec& quad, int order) {
  return integral_G_series(operator_phi(p.bessel, p.op, order), p.zeta, z, quad);
}

InjectivityReport empirical_injectivity(const std::function<cplx(cplx)>& f,
                                        const DiskGrid& grid, std::uint64_t pair_budget,
                                        std::uint64_t seed) {
  const std::vector<cplx> pts = grid.points();
  std::vector<cplx> values;
  values.reserve(pts.size());
  for (const cplx z : pts) values.push_back(f(z));

  InjectivityReport rep;
  rep.min_ratio = kInf;
  auto visit = [&](std::size_t i, std::size_t j) {
    const double ratio = std::abs(values[i] - values[j]) / std::abs(pts[i] - pts[j]);
    ++rep.pairs_checked;
    if (ratio < rep.min_ratio) {
      rep.min_ratio = ratio;
      rep.z1 = pts[i];
      rep.z2 = pts[j];
    }
  };
  const std::size_t n = pts.size();
  if (n <= kAllPairsLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) visit(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < pair_budget; ++s) {
      const std::size_t i = pick(rng), j = pick(rng);
      if (i != j) visit(i, j);
    }
  }
  rep.collision = rep.min_ratio <= kCollisionThreshold;
  return rep;
}

}  // namespace univalence
