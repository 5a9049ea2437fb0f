#pragma once

#include <cstdint>
#include <vector>

#include "corrpriv/stable.hpp"

namespace corrpriv {

enum class MmseMethod { gaussian_closed_form, monte_carlo_binned };

struct MmseResult {
  double lambda = 0.0;
  double mmse = 0.0;  // units: variance of Y
  MmseMethod method = MmseMethod::gaussian_closed_form;
  std::size_t n = 0;
  int bins = 0;
  std::uint64_t seed = 0;
  double ci_halfwidth = 0.0;
};

/// Closed-form mmse(Y; lambda) for the jointly Gaussian model with X, N
/// standard Gaussian: var_y * (1 - rho_xy^2 / (1 + lambda^2)).
MmseResult mmse_gaussian(double rho_xy, double var_y, double lambda);

/// Binned conditional-mean predictor: equal-mass bins on z, within-bin mean
/// of y. Returns one prediction per sample.
std::vector<double> binned_conditional_mean(const std::vector<double>& z,
                                            const std::vector<double>& y,
                                            int bins);

/// Monte Carlo mmse(Y; lambda) through the additive stable filter
/// Z = X + lambda N. Positively biased by the O(bins^-2) binning smoothing
/// error; ci_halfwidth comes from 10 batch means.
MmseResult mmse_monte_carlo(const PairSampler& sampler,
                            const StableFilterSpec& filter, std::size_t n,
                            int bins, std::uint64_t seed);

/// Privacy-constrained MMSE lower bound (1 - varrho_eps^2) * var_y.
double mmse_bound(double varrho_eps, double var_y);

/// Minimum achievable mmse(Y; lambda) under rho_m(X;Z) <= epsilon for the
/// Gaussian model; attained at lambda = lambda*(epsilon) since mmse is
/// increasing in lambda.
MmseResult mmse_eps(double rho_xy, double var_y, double epsilon);

}  // namespace corrpriv
