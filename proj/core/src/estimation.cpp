#include "corrpriv/estimation.hpp"

#include <cmath>
#include <numeric>

#include "corrpriv/maxcorr.hpp"
#include "corrpriv/rng.hpp"

namespace corrpriv {

MmseResult mmse_gaussian(double rho_xy, double var_y, double lambda) {
  if (!(std::abs(rho_xy) < 1.0)) throw InvalidParams("|rho_xy| must be < 1");
  if (!(var_y > 0.0)) throw InvalidParams("var_y must be positive");
  if (!(lambda >= 0.0)) throw InvalidParams("lambda must be >= 0");
  MmseResult r;
  r.lambda = lambda;
  r.method = MmseMethod::gaussian_closed_form;
  r.mmse = var_y * (1.0 - rho_xy * rho_xy / (1.0 + lambda * lambda));
  return r;
}

std::vector<double> binned_conditional_mean(const std::vector<double>& z,
                                            const std::vector<double>& y,
                                            int bins) {
  if (z.size() != y.size()) {
    throw InvalidParams("binned_conditional_mean: length mismatch");
  }
  auto [assign, k] = quantile_bins(z, bins);
  std::vector<double> sum(k, 0.0);
  std::vector<std::size_t> count(k, 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    sum[assign[i]] += y[i];
    ++count[assign[i]];
  }
  std::vector<double> pred(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    pred[i] = sum[assign[i]] / static_cast<double>(count[assign[i]]);
  }
  return pred;
}

MmseResult mmse_monte_carlo(const PairSampler& sampler,
                            const StableFilterSpec& filter, std::size_t n,
                            int bins, std::uint64_t seed) {
  if (n < 10000) throw TooFewSamples("mmse_monte_carlo needs n >= 10^4");
  if (bins < 8) throw InvalidParams("mmse_monte_carlo needs bins >= 8");
  if (!(filter.lambda >= 0.0)) throw InvalidParams("lambda must be >= 0");

  auto [x, y] = sampler(n, derive_seed(seed, "mmse_pair"));
  auto noise = sample_stable(filter.params, n, derive_seed(seed, "mmse_noise"));
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + filter.lambda * noise[i];

  std::vector<double> pred = binned_conditional_mean(z, y, bins);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - pred[i];
    sq[i] = r * r;
  }

  MmseResult res;
  res.lambda = filter.lambda;
  res.method = MmseMethod::monte_carlo_binned;
  res.n = n;
  res.bins = bins;
  res.seed = seed;
  res.mmse = std::accumulate(sq.begin(), sq.end(), 0.0) / static_cast<double>(n);

  // Batch means over 10 contiguous batches; t_{9, 0.975} = 2.262.
  const int kBatches = 10;
  std::vector<double> means(kBatches, 0.0);
  std::size_t batch = n / kBatches;
  for (int b = 0; b < kBatches; ++b) {
    double s = 0.0;
    for (std::size_t i = b * batch; i < (b + 1) * batch; ++i) s += sq[i];
    means[b] = s / static_cast<double>(batch);
  }
  double mbar = std::accumulate(means.begin(), means.end(), 0.0) / kBatches;
  double var = 0.0;
  for (double m : means) var += (m - mbar) * (m - mbar);
  var /= (kBatches - 1);
  res.ci_halfwidth = 2.262 * std::sqrt(var / kBatches);
  return res;
}

double mmse_bound(double varrho_eps, double var_y) {
  if (!(varrho_eps >= 0.0 && varrho_eps <= 1.0)) {
    throw InvalidParams("varrho_eps must be in [0,1]");
  }
  if (!(var_y > 0.0)) throw InvalidParams("var_y must be positive");
  return (1.0 - varrho_eps * varrho_eps) * var_y;
}

MmseResult mmse_eps(double rho_xy, double var_y, double epsilon) {
  double lam = lambda_star(epsilon, 2.0);
  return mmse_gaussian(rho_xy, var_y, lam);
}

}  // namespace corrpriv
