#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "univalence/errors.hpp"
#include "univalence/operator.hpp"
#include "univalence/special_functions.hpp"

namespace univalence {

/// Integer power for any field type (double, Rational).
template <typename T>
T ipow(T base, int exponent) {
  T result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// delta(k+w), beta(d), M, N and the alpha combinations for one parameter set.
///
/// For lambda > 0 every (1/lambda + w) factor appears literally. For lambda = 0
/// the quantities are stored multiplied by lambda^n, i.e. (1/lambda + w) is
/// replaced by (1 + lambda w) -> 1; every bound below is homogeneous of degree
/// zero in that scale, so bound values are the lambda -> 0 limits.
template <typename T>
struct BoundQuantitiesT {
  T k;
  T delta_k;   ///< delta(k)
  T delta_k1;  ///< delta(k+1)
  T delta_k2;  ///< delta(k+2)
  T beta_d;    ///< beta(d)
  T big_m;     ///< M
  T big_n;     ///< N
  int m_index = 1;
  bool lambda_rescaled = false;
  /// 4 (1 + 1/lambda)^n (3 - gamma)^n, in the same scale as beta_d.
  T admissibility_scale;

  /// alpha((w +- 1)k + w) = w N delta(k+1) +- M k
  T alpha(int w, int sign) const { return T(w) * big_n * delta_k1 + T(sign) * big_m * k; }
  T alpha_2k1() const { return alpha(1, +1); }
  T alpha_3k2() const { return alpha(2, +1); }
  T alpha_k2() const { return alpha(2, -1); }
};

using BoundQuantities = BoundQuantitiesT<double>;

template <typename T>
BoundQuantitiesT<T> compute_quantities(const T& k, const T& abs_d, const T& lambda,
                                       const T& gamma_order, int n, int m_index) {
  const bool rescaled = (lambda == T(0));
  // (1/lambda + w), or its rescaled limit 1 when lambda = 0
  auto inv_shift = [&](int w) -> T { return rescaled ? T(1) : T(1) / lambda + T(w); };
  auto delta = [&](int w) -> T {
    return (k + T(w)) * ipow<T>(inv_shift(w), n) * ipow<T>(T(2) - gamma_order + T(w), n);
  };
  const T common = ipow<T>(inv_shift(m_index), n) * ipow<T>(T(m_index + 1), n);
  BoundQuantitiesT<T> q{
      .k = k,
      .delta_k = delta(0),
      .delta_k1 = delta(1),
      .delta_k2 = delta(2),
      .beta_d = abs_d * common,
      .big_m = ipow<T>(T(2) - gamma_order, n) * common,
      .big_n = ipow<T>(T(2) * (lambda + T(1)), n),
      .m_index = m_index,
      .lambda_rescaled = rescaled,
      .admissibility_scale =
          T(4) * ipow<T>(inv_shift(1), n) * ipow<T>(T(3) - gamma_order, n),
  };
  return q;
}

/// Empty string when admissible, otherwise the violated condition.
template <typename T>
std::string admissibility_violation(const BoundQuantitiesT<T>& q) {
  if (!(q.k > T(0))) return "k > 0 violated";
  if (!(q.k > q.beta_d / q.admissibility_scale - T(1))) {
    return "k > beta(d) / (4 (1+1/lambda)^n (3-gamma)^n) - 1 violated";
  }
  if (!(T(4) * q.delta_k1 - q.beta_d > T(0))) return "4 delta(k+1) - beta(d) > 0 violated";
  return {};
}

namespace detail {
template <typename T>
T positive_or_throw(const T& value, const char* what) {
  if (!(value > T(0))) throw DomainError(std::string("nonpositive ") + what);
  return value;
}
// M k [4 delta(k+1) - beta(d)], shared denominator of several bounds
template <typename T>
T shared_denominator(const BoundQuantitiesT<T>& q) {
  return positive_or_throw(q.big_m * q.k * (T(4) * q.delta_k1 - q.beta_d),
                           "denominator M k [4 delta(k+1) - beta(d)]");
}
}  // namespace detail

/// Lower bound of |D phi(z) / z|.
template <typename T>
T ratio_lower_bound(const BoundQuantitiesT<T>& q) {
  const T den = detail::shared_denominator(q);
  return (T(4) * q.big_m * q.k * q.delta_k1 - q.alpha_2k1() * q.beta_d +
          q.big_n / T(8) * q.beta_d * q.beta_d) /
         den;
}

/// Upper bound of |D phi(z) / z|.
template <typename T>
T ratio_upper_bound(const BoundQuantitiesT<T>& q) {
  const T den = detail::positive_or_throw(T(8) * q.delta_k * (T(4) * q.delta_k - q.beta_d),
                                          "denominator 8 delta(k) [4 delta(k) - beta(d)]");
  return (T(32) * q.delta_k * q.delta_k - q.beta_d * q.beta_d) / den;
}

/// Bound of |(D phi)'(z) - D phi(z)/z|.
template <typename T>
T diff_bound(const BoundQuantitiesT<T>& q) {
  return q.big_n * q.delta_k1 * q.beta_d / detail::shared_denominator(q);
}

/// Bound of |z (D phi)'(z) / D phi(z) - 1|.
template <typename T>
T logderiv_bound(const BoundQuantitiesT<T>& q) {
  const T den = detail::positive_or_throw(
      T(32) * q.big_m * q.k * q.delta_k1 - T(8) * q.alpha_2k1() * q.beta_d +
          q.big_n * q.beta_d * q.beta_d,
      "denominator 32 M k delta(k+1) - 8 alpha(2k+1) beta(d) + N beta(d)^2");
  return T(8) * q.big_n * q.delta_k1 * q.beta_d / den;
}

/// Lower side of the two-sided bound on the derivative.
template <typename T>
T deriv_lower_bound(const BoundQuantitiesT<T>& q) {
  const T den = detail::shared_denominator(q);
  const T num = detail::positive_or_throw(
      T(4) * q.big_m * q.k * q.delta_k1 - q.alpha_3k2() * q.beta_d,
      "lower numerator 4 M k delta(k+1) - alpha(3k+2) beta(d)");
  return num / den;
}

/// Upper bound of |z (D phi)'(z)|.
template <typename T>
T deriv_upper_bound(const BoundQuantitiesT<T>& q) {
  const T den = detail::shared_denominator(q);
  const T num = detail::positive_or_throw(
      T(4) * q.big_m * q.k * q.delta_k1 + q.alpha_k2() * q.beta_d,
      "upper numerator 4 M k delta(k+1) + alpha(k+2) beta(d)");
  return num / den;
}

/// Bound of |z^2 (D phi)''(z)|.
template <typename T>
T second_deriv_bound(const BoundQuantitiesT<T>& q) {
  const T gap = detail::positive_or_throw(T(4) * q.delta_k1 - q.beta_d,
                                          "factor 4 delta(k+1) - beta(d)");
  const T mk = detail::positive_or_throw(T(2) * q.big_m * q.k, "factor 2 M k");
  return q.big_n * q.beta_d / mk * (T(4) * q.delta_k1 + q.beta_d) / gap;
}

/// Radius bound on |zeta| for the exponential integral operator:
///   3 sqrt(3) M k [4 delta(k+1) - beta(d)] / (8 M k delta(k+1) + 2 alpha(k+2) beta(d)).
inline double exponential_radius(const BoundQuantities& q) {
  const double num = 3.0 * std::sqrt(3.0) * detail::shared_denominator(q);
  const double den = detail::positive_or_throw(
      8.0 * q.big_m * q.k * q.delta_k1 + 2.0 * q.alpha_k2() * q.beta_d,
      "denominator 8 M k delta(k+1) + 2 alpha(k+2) beta(d)");
  return num / den;
}

/// Parameter set that satisfies the admissibility constraint. Only
/// check_admissible produces these.
struct AdmissibleParams {
  BesselParams bessel;
  OperatorParams op;
  BoundQuantities bounds;
};

struct Admissibility {
  std::optional<AdmissibleParams> params;
  std::string reason;  ///< violated condition when params is empty
  explicit operator bool() const { return params.has_value(); }
};

BoundQuantities compute_quantities(const BesselParams& bessel, const OperatorParams& op,
                                   int m_index = 1);

Admissibility check_admissible(const BesselParams& bessel, const OperatorParams& op,
                               int m_index = 1);

struct TwoSidedBound {
  double lower;
  double upper;
};

TwoSidedBound ratio_bounds(const AdmissibleParams& a);
double diff_bound(const AdmissibleParams& a);
double logderiv_bound(const AdmissibleParams& a);
TwoSidedBound deriv_bounds(const AdmissibleParams& a);
double second_deriv_bound(const AdmissibleParams& a);

}  // namespace univalence
