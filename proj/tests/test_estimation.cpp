#include <doctest.h>

#include <cmath>
#include <random>

#include "corrpriv/estimation.hpp"
#include "corrpriv/rng.hpp"

using namespace corrpriv;

TEST_CASE("gaussian closed form at zero noise is the regression residual") {
  CHECK(mmse_gaussian(0.8, 1.0, 0.0).mmse == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("gaussian closed form with an uninformative observation") {
  CHECK(mmse_gaussian(0.0, 2.5, 1.0).mmse == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("gaussian closed form at the worked point") {
  CHECK(mmse_gaussian(0.8, 1.0, std::sqrt(3.0)).mmse ==
        doctest::Approx(0.84).epsilon(1e-12));
}

TEST_CASE("closed form rejects degenerate parameters") {
  CHECK_THROWS_AS(mmse_gaussian(1.0, 1.0, 1.0), InvalidParams);
  CHECK_THROWS_AS(mmse_gaussian(0.5, -1.0, 1.0), InvalidParams);
  CHECK_THROWS_AS(mmse_gaussian(0.5, 1.0, -1.0), InvalidParams);
}

TEST_CASE("lower bound closed form") {
  CHECK(mmse_bound(0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mmse_bound(1.0, 2.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mmse_bound(0.4, 1.0) == doctest::Approx(0.84).epsilon(1e-12));
}

TEST_CASE("constrained minimum matches the bound across a grid") {
  for (double rho : {0.2, 0.5, 0.8}) {
    for (double eps : {0.25, 0.5, 0.75, 1.0}) {
      double closed = mmse_eps(rho, 1.0, eps).mmse;
      double bound = mmse_bound(varrho_epsilon_gaussian(rho, eps), 1.0);
      CHECK(closed >= bound - 1e-12);
      CHECK(std::abs(closed - bound) <= 1e-12);
    }
  }
}

TEST_CASE("constrained minimum is non-increasing in the budget") {
  double prev = 1e300;
  for (double eps : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    double v = mmse_eps(0.8, 1.0, eps).mmse;
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
  CHECK(mmse_eps(0.8, 1.0, 1.0).mmse == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("monte carlo estimate matches the closed form at the worked point") {
  auto mc = mmse_monte_carlo(gaussian_pair_sampler(0.8),
                             {StableParams::standard_gaussian(), std::sqrt(3.0)},
                             1000000, 64, 21);
  CHECK(mc.method == MmseMethod::monte_carlo_binned);
  CHECK(std::abs(mc.mmse - 0.84) <= std::max(0.01, 3.0 * mc.ci_halfwidth));
}

TEST_CASE("deterministic pair leaves only binning error") {
  PairSampler same = [](std::size_t n, std::uint64_t seed) {
    auto rng = make_engine(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = g(rng);
    return std::pair{x, x};
  };
  auto mc = mmse_monte_carlo(same, {StableParams::standard_gaussian(), 0.0},
                             200000, 64, 3);
  CHECK(mc.mmse <= 0.01);
}

TEST_CASE("independent pair estimates the full variance") {
  auto mc = mmse_monte_carlo(gaussian_pair_sampler(0.0),
                             {StableParams::standard_gaussian(), 1.0}, 200000,
                             64, 5);
  CHECK(std::abs(mc.mmse - 1.0) <= 0.01);
}

TEST_CASE("monte carlo rejects undersized runs") {
  CHECK_THROWS_AS(mmse_monte_carlo(gaussian_pair_sampler(0.5),
                                   {StableParams::standard_gaussian(), 1.0}, 100,
                                   8, 1),
                  TooFewSamples);
}

TEST_CASE("binned conditional mean is the within-bin average") {
  std::vector<double> z{1, 1, 1, 2, 2, 2};
  std::vector<double> y{1, 2, 3, 10, 20, 30};
  auto pred = binned_conditional_mean(z, y, 2);
  REQUIRE(pred.size() == 6);
  CHECK(pred[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pred[5] == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("residual variance identity of the binned regression") {
  // mmse == var(Y) (1 - rho^2(Y, E[Y|Z])) computed from the same regression
  const std::size_t n = 200000;
  auto [x, y] = gaussian_pair_sampler(0.8)(n, 77);
  auto noise = sample_stable(StableParams::standard_gaussian(), n,
                             derive_seed(77, "resid"));
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + std::sqrt(3.0) * noise[i];
  auto pred = binned_conditional_mean(z, y, 64);
  double my = 0.0, mp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    my += y[i];
    mp += pred[i];
  }
  my /= static_cast<double>(n);
  mp /= static_cast<double>(n);
  double vy = 0.0, vp = 0.0, cov = 0.0, mse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vy += (y[i] - my) * (y[i] - my);
    vp += (pred[i] - mp) * (pred[i] - mp);
    cov += (y[i] - my) * (pred[i] - mp);
    mse += (y[i] - pred[i]) * (y[i] - pred[i]);
  }
  vy /= static_cast<double>(n);
  vp /= static_cast<double>(n);
  cov /= static_cast<double>(n);
  mse /= static_cast<double>(n);
  double rho2 = cov * cov / (vy * vp);
  CHECK(std::abs(mse - vy * (1.0 - rho2)) <= 0.01);
}
