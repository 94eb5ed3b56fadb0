#include "univalence/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "univalence/errors.hpp"
#include "univalence/special_functions.hpp"

namespace univalence {
namespace {

void require_index(int m) {
  if (m < 1) throw DomainError("multiplier index m must be >= 1");
}

double checked_exp(double log_value, int sign, int m) {
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw DomainError("operator multiplier overflows at m = " + std::to_string(m));
  }
  return sign * std::exp(log_value);
}

}  // namespace

OperatorParams::OperatorParams(double lambda, double gamma_order, int n)
    : lambda_(lambda), gamma_order_(gamma_order), n_(n) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("operator: lambda must be finite and >= 0");
  }
  if (!std::isfinite(gamma_order) ||
      (gamma_order >= 2.0 && gamma_order == std::floor(gamma_order))) {
    throw DomainError("operator: gamma_order must not be one of 2, 3, 4, ...");
  }
  if (n < 0) throw DomainError("operator: n must be >= 0");
}

double multiplier(int m, const OperatorParams& op) {
  require_index(m);
  if (op.n() == 0 || m == 1) return 1.0;
  const double g = op.gamma_order();
  const LogGamma num = log_gamma(m + 1.0);
  const LogGamma shift = log_gamma(2.0 - g);
  const LogGamma den = log_gamma(m + 1.0 - g);
  const double log_base =
      num.log_abs + shift.log_abs - den.log_abs + std::log1p(op.lambda() * (m - 1));
  const int base_sign = num.sign * shift.sign * den.sign;
  const int sign = (base_sign < 0 && op.n() % 2 == 1) ? -1 : 1;
  return checked_exp(op.n() * log_base, sign, m);
}

double multiplier_pochhammer(int m, const OperatorParams& op) {
  require_index(m);
  if (op.n() == 0 || m == 1) return 1.0;
  const double g = op.gamma_order();
  // ratio of rising factorials, accumulated factor by factor to stay in range
  double base = 1.0;
  for (int j = 0; j < m - 1; ++j) {
    double factor = (2.0 + j) / (2.0 - g + j);
    if (op.lambda() > 0.0) {
      const double inv = 1.0 / op.lambda();
      factor *= (1.0 + inv + j) / (inv + j);
    }
    base *= factor;
  }
  const double value = std::pow(base, op.n());
  if (!std::isfinite(value)) {
    throw DomainError("operator multiplier overflows at m = " + std::to_string(m));
  }
  return value;
}

NormalizedSeries apply_operator(const NormalizedSeries& f, const OperatorParams& op) {
  std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
  for (int m = 2; m <= f.order(); ++m) {
    auto& cm = c[static_cast<std::size_t>(m - 1)];
    if (cm != 0.0) cm *= multiplier(m, op);
  }
  return NormalizedSeries(std::move(c));
}

NormalizedSeries hadamard(const NormalizedSeries& f, const NormalizedSeries& g) {
  const int order = std::min(f.order(), g.order());
  std::vector<cplx> c(static_cast<std::size_t>(order));
  for (int m = 1; m <= order; ++m) c[static_cast<std::size_t>(m - 1)] = f[m] * g[m];
  return NormalizedSeries(std::move(c));
}

NormalizedSeries g_lambda_series(double lambda, int order) {
  if (order < 2) throw DomainError("g_lambda_series: truncation order must be >= 2");
  std::vector<cplx> c(static_cast<std::size_t>(order));
  for (int m = 1; m <= order; ++m) c[static_cast<std::size_t>(m - 1)] = 1.0 + lambda * (m - 1);
  return NormalizedSeries(std::move(c));
}

EvaluationResult evaluate(const NormalizedSeries& f, cplx z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("evaluate: requires |z| < 1");
  const auto c = f.coefficients();
  const int order = f.order();
  // Horner on f, f', f'' simultaneously
  cplx p = 0.0, dp = 0.0, ddp = 0.0;
  for (int m = order; m >= 1; --m) {
    ddp = ddp * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + c[static_cast<std::size_t>(m - 1)];
  }
  // p now holds sum c_m z^{m-1}; multiply through by z
  EvaluationResult out;
  out.value = p * z;
  out.first_derivative = dp * z + p;
  out.second_derivative = ddp * z + 2.0 * dp;

  const double last = std::abs(c[static_cast<std::size_t>(order - 1)]);
  const double prev = std::abs(c[static_cast<std::size_t>(order - 2)]);
  if (last == 0.0) {
    out.tail_estimate = 0.0;
  } else if (prev == 0.0) {
    out.tail_estimate = std::numeric_limits<double>::infinity();
  } else {
    const double q = last / prev * r;
    out.tail_estimate = q < 1.0 ? last * std::pow(r, order) * q / (1.0 - q)
                                : std::numeric_limits<double>::infinity();
  }
  return out;
}

cplx evaluate_over_z(const NormalizedSeries& f, cplx z) {
  const auto c = f.coefficients();
  cplx p = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * z + *it;
  return p;
}

}  // namespace univalence
