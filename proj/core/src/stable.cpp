#include "corrpriv/stable.hpp"

#include <cmath>
#include <numbers>

#include "corrpriv/maxcorr.hpp"
#include "corrpriv/rng.hpp"

namespace corrpriv {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform_open01(std::mt19937_64& rng) {
  // strictly inside (0,1): logs and tangents below must stay finite
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double v;
  do {
    v = u(rng);
  } while (v <= 0.0 || v >= 1.0);
  return v;
}

}  // namespace

StableParams StableParams::validated(double alpha, double scale_b, double kappa,
                                     double location) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw InvalidParams("alpha must be in (0,2], got " + std::to_string(alpha));
  }
  if (!(scale_b > 0.0) || !std::isfinite(scale_b)) {
    throw InvalidParams("scale b must be positive");
  }
  if (!(std::abs(kappa) <= 1.0)) {
    throw InvalidParams("kappa must be in [-1,1]");
  }
  if (!std::isfinite(location)) throw InvalidParams("location must be finite");
  return {alpha, scale_b, kappa, location};
}

StableSamplingParams to_sampling_params(const StableParams& p) {
  return {p.alpha, p.kappa, std::pow(p.scale_b, 1.0 / p.alpha), p.location};
}

std::vector<double> sample_stable(const StableParams& params, std::size_t n,
                                  std::uint64_t seed) {
  StableParams checked = StableParams::validated(params.alpha, params.scale_b,
                                                 params.kappa, params.location);
  auto [alpha, beta, gamma, delta] = to_sampling_params(checked);
  auto rng = make_engine(derive_seed(seed, "stable_cms"));

  std::vector<double> out(n);
  if (alpha != 1.0) {
    const double t = beta * std::tan(kPi * alpha / 2.0);
    const double b0 = std::atan(t) / alpha;
    const double s0 = std::pow(1.0 + t * t, 0.5 / alpha);
    for (std::size_t i = 0; i < n; ++i) {
      double v = kPi * (uniform_open01(rng) - 0.5);
      double w = -std::log(uniform_open01(rng));
      double x = s0 * std::sin(alpha * (v + b0)) /
                 std::pow(std::cos(v), 1.0 / alpha) *
                 std::pow(std::cos(v - alpha * (v + b0)) / w, (1.0 - alpha) / alpha);
      out[i] = gamma * x + delta;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double v = kPi * (uniform_open01(rng) - 0.5);
      double w = -std::log(uniform_open01(rng));
      double a = kPi / 2.0 + beta * v;
      double x = (2.0 / kPi) *
                 (a * std::tan(v) -
                  beta * std::log((kPi / 2.0) * w * std::cos(v) / a));
      out[i] = gamma * x + (2.0 / kPi) * beta * gamma * std::log(gamma) + delta;
    }
  }
  return out;
}

double rho_m_stable(double alpha, double lambda) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw InvalidParams("alpha must be in (0,2]");
  }
  if (!(lambda >= 0.0)) throw InvalidParams("lambda must be >= 0");
  return 1.0 / std::sqrt(1.0 + std::pow(lambda, alpha));
}

double lambda_star(double epsilon, double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw InvalidParams("alpha must be in (0,2]");
  }
  if (!(epsilon > 0.0)) {
    throw EpsilonOutOfRange(
        "epsilon = 0 demands rho_m(X;Z) = 0, which needs infinite noise gain");
  }
  if (epsilon > 1.0) {
    throw EpsilonOutOfRange("epsilon > 1 is vacuous: rho_m never exceeds 1");
  }
  return std::pow(1.0 / (epsilon * epsilon) - 1.0, 1.0 / alpha);
}

double varrho_epsilon_gaussian(double rho_xy, double epsilon) {
  if (!(std::abs(rho_xy) < 1.0)) {
    throw DegenerateRho("varrho_epsilon_gaussian needs |rho_xy| < 1");
  }
  double lam = lambda_star(epsilon, 2.0);  // validates epsilon
  // Cov(Y, X + lam N) = Cov(Y, X), so the correlation shrinks by the same
  // factor as rho_m(X; Z): |rho_xy| / sqrt(1 + lam^2) = |rho_xy| * epsilon.
  return std::abs(rho_xy) / std::sqrt(1.0 + lam * lam);
}

PairSampler gaussian_pair_sampler(double rho) {
  if (!(std::abs(rho) <= 1.0)) throw DegenerateRho("|rho| must be <= 1");
  return [rho](std::size_t n, std::uint64_t seed) {
    auto rng = make_engine(derive_seed(seed, "gaussian_pair"));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(n), y(n);
    double c = std::sqrt(1.0 - rho * rho);
    for (std::size_t i = 0; i < n; ++i) {
      double g1 = normal(rng);
      double g2 = normal(rng);
      x[i] = g1;
      y[i] = rho * g1 + c * g2;
    }
    return std::make_pair(std::move(x), std::move(y));
  };
}

std::vector<double> monotonicity_probe(const PairSampler& sampler,
                                       const StableParams& params,
                                       const std::vector<double>& lambdas,
                                       std::size_t n, std::uint64_t seed,
                                       int bins) {
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    if (!(lambdas[k] > lambdas[k - 1])) {
      throw InvalidParams("lambda grid must be strictly increasing");
    }
  }
  std::vector<double> estimates;
  estimates.reserve(lambdas.size());
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    auto [x, y] = sampler(n, derive_seed(seed, "probe_pair", k));
    auto noise = sample_stable(params, n, derive_seed(seed, "probe_noise", k));
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + lambdas[k] * noise[i];
    estimates.push_back(maximal_correlation_from_samples_ace(y, z, bins).value);
  }
  return estimates;
}

}  // namespace corrpriv
