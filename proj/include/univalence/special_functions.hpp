#pragma once

#include <complex>

#include "univalence/errors.hpp"
#include "univalence/series.hpp"

namespace univalence {

/// Default truncation order for series built from Bessel normalizations.
inline constexpr int kDefaultTruncation = 40;

/// Rising factorial a(a+1)...(a+m-1), with (a)_0 = 1. Running product, so
/// negative integers and complex a need no special handling.
template <typename T>
T pochhammer(const T& a, int m) {
  if (m < 0) throw DomainError("pochhammer: m must be nonnegative");
  T result(1);
  for (int j = 0; j < m; ++j) result *= a + T(j);
  return result;
}

/// Euler gamma (Lanczos g = 7, reflection below 1/2). Throws DomainError at
/// the poles 0, -1, -2, ...
double gamma(double x);

struct LogGamma {
  double log_abs;  ///< log|Gamma(x)|
  int sign;        ///< sign of Gamma(x), +1 or -1
};

/// log|Gamma(x)| with the sign carried separately; same poles as gamma().
LogGamma log_gamma(double x);

/// sin(pi x) with exact argument reduction, so sinpi(n) == 0 for integer n.
double sinpi(double x);

/// Parameters (v, b, d) of the generalized Bessel function w_{v,b,d}.
/// The shifted order k = v + (b+1)/2 is derived on demand.
class BesselParams {
 public:
  /// Throws DomainError when k is 0, -1, -2, ... (some (k)_m would vanish).
  BesselParams(double v, double b, std::complex<double> d);

  double v() const { return v_; }
  double b() const { return b_; }
  std::complex<double> d() const { return d_; }
  double k() const { return v_ + (b_ + 1.0) / 2.0; }

  friend bool operator==(const BesselParams&, const BesselParams&) = default;

 private:
  double v_;
  double b_;
  std::complex<double> d_;
};

/// phi_{v,b,d}(z) = z + sum_{m>=1} (-d)^m z^{m+1} / (4^m m! (k)_m), truncated
/// at z^K.
NormalizedSeries phi_series(const BesselParams& p, int order = kDefaultTruncation);

/// Upper bound on |sum_{j>K} c_j z^j| for phi_series(p, order) at |z| <= radius,
/// from the geometric majorant with ratio |d| radius / (4 K (k+K-1)).
/// Returns +inf when the majorant does not converge.
double phi_tail_bound(const BesselParams& p, int order, double radius);

/// Smallest truncation order whose phi_tail_bound at `radius` is <= tolerance.
int phi_truncation_for(const BesselParams& p, double radius, double tolerance);

enum class BesselFamily { J, I };

/// Elementary closed forms of the normalized Bessel functions for
/// v in {-1/2, 1/2, 3/2}:
///   J: 3 sin(sqrt z)/sqrt z - 3 cos(sqrt z),  sqrt z sin(sqrt z),  z cos(sqrt z)
///   I: 3 cosh(sqrt z) - 3 sinh(sqrt z)/sqrt z, sqrt z sinh(sqrt z), z cosh(sqrt z)
/// Principal sqrt; the value at z = 0 is 0. Throws UnsupportedError for other
/// orders and DomainError for |z| >= 1.
std::complex<double> closed_form_value(BesselFamily family, double v, std::complex<double> z);

}  // namespace univalence
