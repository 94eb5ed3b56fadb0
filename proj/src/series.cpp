#include "univalence/series.hpp"

#include <cmath>
#include <string>

#include "univalence/errors.hpp"

namespace univalence {

NormalizedSeries::NormalizedSeries(std::vector<cplx> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2) {
    throw DomainError("normalized series needs truncation order K >= 2");
  }
  if (coeffs_.front() != cplx(1.0, 0.0)) {
    throw DomainError("normalized series must have c_1 = 1");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i].real()) || !std::isfinite(coeffs_[i].imag())) {
      throw DomainError("non-finite coefficient c_" + std::to_string(i + 1));
    }
  }
}

NormalizedSeries NormalizedSeries::identity(int order) {
  if (order < 2) throw DomainError("normalized series needs truncation order K >= 2");
  std::vector<cplx> c(static_cast<std::size_t>(order), cplx{});
  c[0] = 1.0;
  return NormalizedSeries(std::move(c));
}

cplx NormalizedSeries::operator[](int m) const {
  if (m < 1 || m > order()) return {};
  return coeffs_[static_cast<std::size_t>(m - 1)];
}

}  // namespace univalence
