#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "corrpriv/errors.hpp"

namespace corrpriv {

/// Parameters of an alpha-stable law with characteristic function
/// exp(i t c - b |t|^alpha (1 + i kappa sgn(t) omega_alpha(t))).
/// kappa follows the right-tail-weight convention: kappa=+1 is fully
/// right-skewed (one-sided support on [c, inf) when alpha < 1).
/// alpha=2 is Gaussian with mean c and variance 2b; alpha=1, kappa=0 is
/// Cauchy; alpha=1/2, kappa=1 is Levy.
struct StableParams {
  double alpha = 2.0;    // in (0, 2]
  double scale_b = 0.5;  // b > 0
  double kappa = 0.0;    // in [-1, 1]
  double location = 0.0;

  static StableParams validated(double alpha, double scale_b, double kappa,
                                double location);
  static StableParams standard_gaussian() { return {2.0, 0.5, 0.0, 0.0}; }
  static StableParams standard_cauchy() { return {1.0, 1.0, 0.0, 0.0}; }
};

/// Mapping to the common sampling parameterization (alpha, beta, gamma, delta):
/// beta = kappa, gamma = b^(1/alpha), delta = c. Kept in one place so the
/// skew/scale conventions cannot drift between sampler and closed forms.
struct StableSamplingParams {
  double alpha, beta, gamma, delta;
};
StableSamplingParams to_sampling_params(const StableParams& p);

/// i.i.d. draws by the Chambers-Mallows-Stuck construction; exact for the
/// Gaussian, Cauchy and Levy special cases.
std::vector<double> sample_stable(const StableParams& params, std::size_t n,
                                  std::uint64_t seed);

/// Additive-noise privacy filter Z = X + lambda * N, with N an independent
/// copy of the same alpha-stable law as X.
struct StableFilterSpec {
  StableParams params;
  double lambda = 0.0;  // >= 0
};

/// Closed form rho_m(X, X + lambda N) = 1 / sqrt(1 + lambda^alpha) for X, N
/// i.i.d. alpha-stable.
double rho_m_stable(double alpha, double lambda);

/// Smallest noise gain achieving rho_m(X; X + lambda N) <= epsilon:
/// lambda* = (1/eps^2 - 1)^(1/alpha). Throws EpsilonOutOfRange for eps <= 0
/// (infinite noise) or eps > 1.
double lambda_star(double epsilon, double alpha);

/// Utility ceiling rho_m(Y; X + lambda* N) in the jointly Gaussian model:
/// equals |rho_xy| * epsilon.
double varrho_epsilon_gaussian(double rho_xy, double epsilon);

/// Produces equal-length (x, y) sample vectors; used by the sample-based
/// probes below and by the MMSE Monte Carlo estimator.
using PairSampler = std::function<std::pair<std::vector<double>, std::vector<double>>(
    std::size_t n, std::uint64_t seed)>;

/// Jointly Gaussian standard pair with correlation rho.
PairSampler gaussian_pair_sampler(double rho);

/// ACE estimates of rho_m(Y; X + lambda N) along an increasing lambda grid.
/// Estimates, not exact values: downstream checks must leave estimator-noise
/// margin.
std::vector<double> monotonicity_probe(const PairSampler& sampler,
                                       const StableParams& params,
                                       const std::vector<double>& lambdas,
                                       std::size_t n, std::uint64_t seed,
                                       int bins = 32);

}  // namespace corrpriv
