#pragma once

#include <complex>

#include "univalence/series.hpp"

namespace univalence {

/// Parameters of the linear fractional differential operator D_lambda^{n,gamma}.
///
/// `gamma_order` is the fractional order (written alpha in some sources and
/// gamma in others; both name the same parameter).
class OperatorParams {
 public:
  /// Throws DomainError unless lambda >= 0, gamma_order is not in {2, 3, 4, ...}
  /// and n >= 0.
  OperatorParams(double lambda, double gamma_order, int n);

  double lambda() const { return lambda_; }
  double gamma_order() const { return gamma_order_; }
  int n() const { return n_; }

  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;

 private:
  double lambda_;
  double gamma_order_;
  int n_;
};

/// Value and first two derivatives of a truncated series at one point.
struct EvaluationResult {
  cplx value;
  cplx first_derivative;
  cplx second_derivative;
  /// Bound on the discarded tail of `value`, assuming the coefficient moduli
  /// keep decaying at least as fast as the last retained ratio |c_K / c_{K-1}|.
  double tail_estimate = 0.0;
};

/// Coefficient multiplier of D_lambda^{n,gamma} on z^m:
///   [ Gamma(m+1) Gamma(2-gamma) / Gamma(m+1-gamma) * (1 + lambda(m-1)) ]^n.
/// Evaluated in log space; overflow is a DomainError.
double multiplier(int m, const OperatorParams& op);

/// Same multiplier through rising factorials:
///   lambda > 0: [ (1+1/lambda)_{m-1} (2)_{m-1} / ((1/lambda)_{m-1} (2-gamma)_{m-1}) ]^n
///   lambda = 0: [ (2)_{m-1} / (2-gamma)_{m-1} ]^n
double multiplier_pochhammer(int m, const OperatorParams& op);

/// D_lambda^{n,gamma} f: c_m -> multiplier(m) c_m.
NormalizedSeries apply_operator(const NormalizedSeries& f, const OperatorParams& op);

/// Coefficient-wise product, truncated at the shorter order.
NormalizedSeries hadamard(const NormalizedSeries& f, const NormalizedSeries& g);

/// g_lambda(z) = (z - (1-lambda) z^2) / (1-z)^2 = z + sum [1 + lambda(m-1)] z^m.
NormalizedSeries g_lambda_series(double lambda, int order);

/// f, f', f'' of the truncated polynomial at z. Throws DomainError for |z| >= 1.
EvaluationResult evaluate(const NormalizedSeries& f, cplx z);

/// f(z)/z evaluated as the shifted polynomial c_1 + c_2 z + ..., so z = 0 is fine.
cplx evaluate_over_z(const NormalizedSeries& f, cplx z);

}  // namespace univalence
