#pragma once

#include <complex>
#include <span>
#include <vector>

namespace univalence {

using cplx = std::complex<double>;

/// Truncated power series of a function in class A:
///   f(z) = z + c_2 z^2 + ... + c_K z^K,  c_1 = 1.
///
/// Coefficients are stored 1-based through operator[]; `coefficients()`
/// exposes them as a contiguous span starting at c_1.
class NormalizedSeries {
 public:
  /// Takes c_1..c_K. Throws DomainError unless K >= 2, c_1 == 1 exactly and
  /// every coefficient is finite.
  explicit NormalizedSeries(std::vector<cplx> coefficients);

  /// f(z) = z truncated at order K.
  static NormalizedSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()); }

  /// c_m for 1 <= m <= order(); zero beyond the truncation order.
  cplx operator[](int m) const;

  std::span<const cplx> coefficients() const { return coeffs_; }

  friend bool operator==(const NormalizedSeries&, const NormalizedSeries&) = default;

 private:
  std::vector<cplx> coeffs_;
};

}  // namespace univalence
