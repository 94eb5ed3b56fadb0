#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace univalence {

using cplx = std::complex<double>;

struct QuadratureSpec {
  int nodes = 16;            ///< Gauss-Legendre nodes per panel
  double tolerance = 1e-10;  ///< relative tolerance on the whole integral
  int max_depth = 60;        ///< maximum number of panel halvings
};

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre_rule(int n);

struct QuadratureResult {
  cplx value;
  int panels = 0;  ///< accepted panels
};

/// Adaptive composite Gauss-Legendre on [a, b]: a panel is accepted once it
/// agrees with the sum over its two halves. Throws AccuracyError when a panel
/// still disagrees after spec.max_depth halvings.
QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// One factor base(t)^exponent of a product integrand, principal branch.
struct PowerFactor {
  std::function<cplx(cplx)> base;
  cplx exponent;
};

struct IntegralResult {
  cplx value;
  /// Some fractional-power base met the negative real axis on the path, where
  /// the principal branch jumps.
  bool branch_warning = false;
  int panels = 0;
};

/// [eta * int_0^z t^(eta-1) prod_j base_j(t)^(e_j) dt]^(1/eta) along the
/// segment [0, z], Re(eta) > 0.
///
/// With t = s z the bracket is z^eta J, J = eta int_0^1 s^(eta-1) g(s z) ds, and
/// the result is returned as z * J^(1/eta), the branch with value ~ z near 0.
/// s = u^(1/Re eta) removes the endpoint singularity of s^(eta-1).
IntegralResult power_integral(cplx z, cplx eta, std::span<const PowerFactor> factors,
                              const QuadratureSpec& spec = {});

/// Principal power w^p = exp(p Log w).
cplx principal_pow(cplx w, cplx p);

}  // namespace univalence
