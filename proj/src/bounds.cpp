#include "univalence/bounds.hpp"

#include <cmath>
#include <regex>

#include "univalence/rational.hpp"

namespace univalence {

Rational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    const Rational den(m[2].str());
    if (den == 0) throw DomainError("parse_rational: zero denominator in '" + text + "'");
    return Rational(m[1].str()) / den;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    Rational value(boost::multiprecision::cpp_int(digits.empty() ? "0" : digits));
    for (long i = 0; i < m[3].length(); ++i) value /= 10;
    return m[1].str() == "-" ? -value : value;
  }
  throw DomainError("parse_rational: cannot parse '" + text + "'");
}

BoundQuantities compute_quantities(const BesselParams& bessel, const OperatorParams& op,
                                   int m_index) {
  if (m_index < 1) throw DomainError("m_index must be >= 1");
  return compute_quantities<double>(bessel.k(), std::abs(bessel.d()), op.lambda(),
                                    op.gamma_order(), op.n(), m_index);
}

Admissibility check_admissible(const BesselParams& bessel, const OperatorParams& op,
                               int m_index) {
  const BoundQuantities q = compute_quantities(bessel, op, m_index);
  std::string why = admissibility_violation(q);
  if (!why.empty()) return {std::nullopt, std::move(why)};
  return {AdmissibleParams{bessel, op, q}, {}};
}

TwoSidedBound ratio_bounds(const AdmissibleParams& a) {
  return {ratio_lower_bound(a.bounds), ratio_upper_bound(a.bounds)};
}

double diff_bound(const AdmissibleParams& a) { return diff_bound(a.bounds); }

double logderiv_bound(const AdmissibleParams& a) { return logderiv_bound(a.bounds); }

TwoSidedBound deriv_bounds(const AdmissibleParams& a) {
  return {deriv_lower_bound(a.bounds), deriv_upper_bound(a.bounds)};
}

double second_deriv_bound(const AdmissibleParams& a) { return second_deriv_bound(a.bounds); }

}  // namespace univalence
