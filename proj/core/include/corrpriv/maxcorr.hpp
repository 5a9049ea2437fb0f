#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corrpriv/distribution.hpp"
#include "corrpriv/report.hpp"

namespace corrpriv {

enum class MaxCorrMethod { spectral, power_iteration, closed_form, ace_sample };

const char* to_string(MaxCorrMethod m);

struct MaxCorrResult {
  double value = 0.0;  // in [0,1]
  MaxCorrMethod method = MaxCorrMethod::spectral;
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  // Maximizing functions: zero mean and unit second moment under the
  // respective marginal. Absent when the iteration collapses (independence).
  std::optional<Vector> optimal_g;
  std::optional<Vector> optimal_f;
};

/// Maximal correlation as the second-largest singular value of the matrix
/// Q(x,y) = P_XY(x,y) / sqrt(P_X(x) P_Y(y)). The known top pair
/// (sqrt-marginals, singular value 1) is deflated before the SVD so that a
/// numerical tie can never be misread as dependence. Alphabets up to 64x64.
MaxCorrResult maximal_correlation_spectral(const JointDistribution& dist);

/// Alternating conditional expectations on the exact pmf:
/// g <- normalize(center(E[f(Y)|X])), f <- normalize(center(E[g(X)|Y])).
/// Residual is the sup-norm change of g per sweep. On non-convergence the
/// best iterate is returned with converged=false (eigenvalue multiplicity or
/// tol too tight).
MaxCorrResult maximal_correlation_power(const JointDistribution& dist,
                                        double tol = 1e-10, int max_iter = 10000);

/// ACE estimate of maximal correlation from paired samples. Continuous inputs
/// are discretized by equal-mass (quantile) binning; the estimate is
/// statistically consistent, not exact. Throws TooFewSamples when
/// n < 10 * bins^2.
MaxCorrResult maximal_correlation_from_samples_ace(
    const std::vector<double>& x_samples, const std::vector<double>& y_samples,
    int bins, double tol = 1e-10, int max_iter = 10000);

/// Checks rho_m^2(X;Y) == rho_m(X;X') where X' is the output of the
/// backward-forward composition applied to X.
BoundReport backward_identity_check(const JointDistribution& dist);

/// Quantile bin assignments (equal-mass); returns the per-sample bin index
/// and the number of nonempty bins actually produced (ties can merge bins).
std::pair<std::vector<int>, int> quantile_bins(const std::vector<double>& samples,
                                               int bins);

/// Empirical joint pmf of two binned sample vectors.
JointDistribution binned_joint(const std::vector<double>& x_samples,
                               const std::vector<double>& y_samples, int bins);

}  // namespace corrpriv
