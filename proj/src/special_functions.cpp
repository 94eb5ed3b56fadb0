#include "univalence/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace univalence {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos series for x >= 1/2: Gamma(x) = sqrt(2 pi) t^(x-1/2) e^-t A(x).
double lanczos_sum(double x) {
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return a;
}

}  // namespace

double sinpi(double x) {
  // reduce to [-1, 1) exactly, then to [-1/2, 1/2]
  double r = std::fmod(x, 2.0);
  if (r >= 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma: pole at " + std::to_string(x));
  }
  if (x < 0.5) return std::numbers::pi / (sinpi(x) * gamma(1.0 - x));
  const double t = x - 0.5 + kLanczosG;
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
  // split the power so t^(x-1/2) e^-t does not overflow before the product
  const double half = std::pow(t, 0.5 * (x - 0.5));
  return sqrt_2pi * half * (half * std::exp(-t)) * lanczos_sum(x);
}

LogGamma log_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw DomainError("log_gamma: pole at " + std::to_string(x));
  }
  if (x < 0.5) {
    const double s = sinpi(x);
    const LogGamma reflected = log_gamma(1.0 - x);
    return {std::log(std::numbers::pi) - std::log(std::abs(s)) - reflected.log_abs,
            (s < 0.0 ? -1 : 1) * reflected.sign};
  }
  const double t = x - 0.5 + kLanczosG;
  return {0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t +
              std::log(lanczos_sum(x)),
          1};
}

BesselParams::BesselParams(double v, double b, std::complex<double> d) : v_(v), b_(b), d_(d) {
  if (!std::isfinite(v) || !std::isfinite(b) || !std::isfinite(d.real()) ||
      !std::isfinite(d.imag())) {
    throw DomainError("Bessel parameters must be finite");
  }
  if (is_nonpositive_integer(k())) {
    throw DomainError("k = v + (b+1)/2 = " + std::to_string(k()) +
                      " is a nonpositive integer; (k)_m vanishes");
  }
}

NormalizedSeries phi_series(const BesselParams& p, int order) {
  if (order < 2) throw DomainError("phi_series: truncation order must be >= 2");
  const double k = p.k();
  std::vector<cplx> c(static_cast<std::size_t>(order));
  c[0] = 1.0;
  // c_{m+1} = c_m (-d) / (4 m (k+m-1))
  for (int m = 1; m < order; ++m) {
    const double km = k + m - 1;
    if (km == 0.0) throw DomainError("phi_series: (k)_m vanishes at m = " + std::to_string(m));
    c[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m - 1)] * (-p.d()) / (4.0 * m * km);
  }
  return NormalizedSeries(std::move(c));
}

double phi_tail_bound(const BesselParams& p, int order, double radius) {
  const NormalizedSeries s = phi_series(p, order);
  // first discarded term is z^{K+1}, i.e. index m = K in the (-d)^m / (4^m m! (k)_m) form
  const int m = order;
  const double k = p.k();
  const double next = std::abs(s[order]) * std::abs(p.d()) / (4.0 * m * std::abs(k + m - 1)) *
                      std::pow(radius, order + 1);
  if (next == 0.0) return 0.0;
  // successive ratios |d| r / (4 j |k+j-1|) are nonincreasing once k + j - 1 > 0
  if (k + m - 1 <= 0.0) return std::numeric_limits<double>::infinity();
  const double ratio = std::abs(p.d()) * radius / (4.0 * (m + 1) * (k + m));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return next / (1.0 - ratio);
}

int phi_truncation_for(const BesselParams& p, double radius, double tolerance) {
  for (int order = 2; order <= 10000; ++order) {
    if (phi_tail_bound(p, order, radius) <= tolerance) return order;
  }
  throw AccuracyError("phi_truncation_for: tolerance not reachable below order 10000");
}

std::complex<double> closed_form_value(BesselFamily family, double v, std::complex<double> z) {
  if (std::abs(z) >= 1.0) throw DomainError("closed_form_value: requires |z| < 1");
  const int twice_v = static_cast<int>(std::lround(2.0 * v));
  if (2.0 * v != twice_v || (twice_v != -1 && twice_v != 1 && twice_v != 3)) {
    throw UnsupportedError("closed_form_value: no closed form for v = " + std::to_string(v));
  }
  if (z == 0.0) return 0.0;
  const std::complex<double> w = std::sqrt(z);
  if (family == BesselFamily::J) {
    switch (twice_v) {
      case 3: return 3.0 * std::sin(w) / w - 3.0 * std::cos(w);
      case 1: return w * std::sin(w);
      default: return z * std::cos(w);
    }
  }
  switch (twice_v) {
    case 3: return 3.0 * std::cosh(w) - 3.0 * std::sinh(w) / w;
    case 1: return w * std::sinh(w);
    default: return z * std::cosh(w);
  }
}

}  // namespace univalence
