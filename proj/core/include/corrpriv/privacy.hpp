#pragma once

#include <cstdint>
#include <vector>

#include "corrpriv/distribution.hpp"
#include "corrpriv/report.hpp"

namespace corrpriv {

enum class LeakageMeasure { mutual_information, maximal_correlation };

/// A privacy filter P_{Z|Y} with its achieved leakage (I(X;Z) bits, or
/// rho_m(X;Z) for the maximal-correlation variant) and utility I(Y;Z) bits.
/// Markov structure X -> Y -> Z holds by construction: Z is built from Y only.
struct PrivacyFilterSpec {
  Channel filter;
  double achieved_leakage = 0.0;
  double achieved_utility = 0.0;
  bool constraint_vacuous = false;  // epsilon at/above the unconstrained level
  bool budget_exhausted = false;    // search stopped at the proposal cap
  long iterations = 0;
};

struct PrivacyCurve {
  std::vector<double> epsilons;
  std::vector<double> values;  // running-max of solver utilities
  std::vector<PrivacyFilterSpec> filters;
  LeakageMeasure measure = LeakageMeasure::mutual_information;
  int restarts = 0;
};

/// Rate-privacy function g_eps: best found filter with I(X;Z) <= eps + 1e-6
/// maximizing I(Y;Z), |Z| = |Y|+1. Multi-start derivative-free local search
/// over the channel simplex; the returned value is a lower bound on the
/// supremum. Desk scale: alphabets up to 6x6.
/// eps >= I(X;Y) makes the constraint vacuous: returns Z = Y with utility H(Y).
PrivacyFilterSpec rate_privacy(const JointDistribution& dist, double epsilon,
                               int budget = 64, std::uint64_t seed = 0);

/// ghat_eps: same search under the constraint rho_m(X;Z) <= eps (computed
/// spectrally per candidate). eps >= 1 is vacuous.
PrivacyFilterSpec rate_privacy_maxcorr(const JointDistribution& dist,
                                       double epsilon, int budget = 64,
                                       std::uint64_t seed = 0);

/// Perfect privacy (g_0 > 0) holds iff the columns P_{X|Y}(.|y) are linearly
/// dependent; numerical rank with relative threshold 1e-10. In particular
/// true whenever |Y| > |X|.
bool perfect_privacy_test(const JointDistribution& dist);

/// Solves the curve over an epsilon grid and post-processes with a running
/// maximum (the true curve is non-decreasing; raw solver dips are noise).
PrivacyCurve privacy_curve(const JointDistribution& dist,
                           const std::vector<double>& epsilons, int restarts,
                           std::uint64_t seed,
                           LeakageMeasure measure = LeakageMeasure::mutual_information);

// Solver suboptimality allowance used by the curve checks below.
inline constexpr double kSolverTol = 2e-3;

/// Ratio monotonicity of eps -> g_eps/eps plus the eps*H(Y)/I(X;Y) lower
/// bound, both within kSolverTol. One report per adjacent grid pair and one
/// per lower-bound point.
std::vector<BoundReport> ratio_monotonicity_check(const PrivacyCurve& curve,
                                      const JointDistribution& dist);

std::string privacy_curve_csv(const PrivacyCurve& curve);

}  // namespace corrpriv
