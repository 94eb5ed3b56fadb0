#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "univalence/bounds.hpp"
#include "univalence/quadrature.hpp"

namespace univalence {

/// Polar sampling of the open unit disk. Radii approach max_radius
/// geometrically: 1 - r_i = (1 - max_radius)^((i+1)/radii), i = 0..radii-1.
/// The centre is never sampled.
struct DiskGrid {
  int radii = 64;
  int angles = 128;
  double max_radius = 0.999;

  double radius(int i) const;
  std::vector<cplx> points() const;
};

/// Outcome of one univalence criterion.
struct CriterionReport {
  std::string criterion_name;
  double threshold = 0.0;
  double attained = 0.0;
  double margin = 0.0;  ///< threshold - attained
  bool passed = false;
  double tolerance = 1e-12;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> notes;  ///< failure locations, warnings
};

/// Build a report with margin = threshold - attained and
/// passed = margin >= -tolerance.
CriterionReport make_report(std::string name, double threshold, double attained,
                            double tolerance);

/// Product-type operator H: shared (b, d), one order v_j per factor.
struct HParams {
  std::vector<BesselParams> bessels;
  OperatorParams op;
  std::vector<cplx> mus;
  cplx eta;
  cplx c;
  int m_index = 1;
};

/// Power-type operator F.
struct FParams {
  std::vector<BesselParams> bessels;
  OperatorParams op;
  cplx mu;
  int m_index = 1;
};

/// Exponential-type operator G.
struct GParams {
  BesselParams bessel;
  OperatorParams op;
  cplx zeta;
  int m_index = 1;
};

/// |c| + logderiv_bound(k_min) * sum_j 1/|eta mu_j| <= 1.
CriterionReport criterion_H(const HParams& p);

/// |mu| <= Re(mu) / (m * logderiv_bound(k_min)); d = 0 passes unconditionally.
CriterionReport criterion_F(const FParams& p);

/// Re(zeta) >= 1 and |zeta| <= exponential_radius(k).
CriterionReport criterion_G(const GParams& p);

enum class PescarVariant {
  Plus,   ///< |c |z|^(2 eta) + (1 + |z|^(2 eta)) z f''/(eta f')| <= 1
  Minus,  ///< same with (1 - |z|^(2 eta))
};

/// Grid check of the two-parameter Pescar hypothesis. |z|^(2 eta) is the
/// principal power exp(2 eta ln|z|).
CriterionReport lemma_pescar_check(const NormalizedSeries& f, cplx eta, cplx c,
                                   const DiskGrid& grid,
                                   PescarVariant variant = PescarVariant::Plus);

/// Grid check of (1 - |z|^(2 Re mu))/Re(mu) |z f''/f'| <= 1.
CriterionReport lemma_pascu_check(const NormalizedSeries& f, cplx mu, const DiskGrid& grid);

/// Grid check of |z q'(z)| <= theta together with Re(zeta) >= 1 and
/// 2 theta |zeta| <= 3 sqrt 3. An empty q stands for q = 0.
CriterionReport lemma_becker_check(const std::optional<NormalizedSeries>& q, cplx zeta,
                                   double theta, const DiskGrid& grid);

/// Four grid checks of the direct univalence criteria for D phi, in order:
///   |A B| < 1,  |B / A| < 1/4,  |B / (A - 1)| < 1/2,  Re(A B / (A - 1)) < 1
/// with A = z^2 f'/f^2 and B = (z f)''/f' - 2 z f'/f, f = D phi.
std::vector<CriterionReport> direct_criteria_check(const BesselParams& bessel,
                                                   const OperatorParams& op,
                                                   const DiskGrid& grid,
                                                   int order = kDefaultTruncation);

/// H(z) = [eta int_0^z t^(eta-1) prod (D phi_j(t)/t)^(1/mu_j) dt]^(1/eta).
IntegralResult integral_H(const HParams& p, cplx z, const QuadratureSpec& quad = {},
                          int order = kDefaultTruncation);

/// F(z) = [(m mu + 1) int_0^z t^(m mu) prod (D phi_j(t)/t)^mu dt]^(1/(m mu + 1)).
IntegralResult integral_F(const FParams& p, cplx z, const QuadratureSpec& quad = {},
                          int order = kDefaultTruncation);

/// G(z) = [zeta int_0^z t^(zeta-1) (exp(D phi(t)))^zeta dt]^(1/zeta).
IntegralResult integral_G(const GParams& p, cplx z, const QuadratureSpec& quad = {},
                          int order = kDefaultTruncation);

/// Same operator with an arbitrary series q in the exponent (empty q = 0).
IntegralResult integral_G_series(const std::optional<NormalizedSeries>& q, cplx zeta, cplx z,
                                 const QuadratureSpec& quad = {});

struct InjectivityReport {
  double min_ratio = 0.0;  ///< min |f(z1) - f(z2)| / |z1 - z2| over sampled pairs
  cplx z1, z2;             ///< pair attaining the minimum
  std::uint64_t pairs_checked = 0;
  bool collision = false;  ///< min_ratio <= 1e-8
};

inline constexpr double kCollisionThreshold = 1e-8;
inline constexpr std::size_t kAllPairsLimit = 4096;

/// Sampled injectivity test on grid points: every pair when the grid has at
/// most 4096 points, otherwise `pair_budget` pairs drawn with a fixed seed.
InjectivityReport empirical_injectivity(const std::function<cplx(cplx)>& f,
                                        const DiskGrid& grid,
                                        std::uint64_t pair_budget = 2'000'000,
                                        std::uint64_t seed = 42);

/// D phi series for one Bessel parameter set.
NormalizedSeries operator_phi(const BesselParams& bessel, const OperatorParams& op,
                              int order = kDefaultTruncation);

}  // namespace univalence
