// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins the tolerances the library must meet; the
// stochastic ones use fixed seeds and margins frozen during calibration.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corrpriv/bounds.hpp"
#include "corrpriv/estimation.hpp"
#include "corrpriv/info_measures.hpp"
#include "corrpriv/maxcorr.hpp"
#include "corrpriv/privacy.hpp"
#include "corrpriv/rng.hpp"
#include "corrpriv/stable.hpp"
#include "support/oracles.hpp"

using namespace corrpriv;
using namespace corrpriv::testing;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %2d %-38s %s%s%s\n", number, name,
              pass ? "PASS" : "FAIL", detail.empty() ? "" : "  ",
              detail.c_str());
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1. rho_m^2 == chi^2 whenever an alphabet is binary, 1000 random dists.
void criterion_1() {
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    auto rng = make_engine(derive_seed(101, "c1", t));
    auto d = (t % 2 == 0) ? random_joint(2, 2 + t % 9, rng)
                          : random_joint(2 + t % 9, 2, rng);
    double rm = maximal_correlation_spectral(d).value;
    worst = std::max(worst, std::abs(rm * rm - chi_squared(d)));
  }
  report(1, "binary chi-squared identity", worst <= 1e-9,
         "max gap " + num(worst));
}

// 2. rho_m^2(X;Y) == rho_m(X;X') through the backward-forward composition,
// 500 random dists up to 8x8.
void criterion_2() {
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    auto rng = make_engine(derive_seed(102, "c2", t));
    auto d = random_joint(2 + t % 7, 2 + (t / 7) % 7, rng);
    worst = std::max(worst, std::abs(backward_identity_check(d).slack));
  }
  report(2, "backward-channel identity", worst <= 1e-9, "max gap " + num(worst));
}

// 3. ratio supremum: never exceeded by random filters, attained by the
// backward-channel construction. 100 dists x 50 filters.
void criterion_3() {
  double min_slack = 1e300, worst_ach = 0.0;
  int tested = 0;
  for (int t = 0; t < 100; ++t) {
    auto rng = make_engine(derive_seed(103, "c3", t));
    auto d = random_joint(4, 4, rng);
    auto rep = check_ratio_supremum(d, 50, derive_seed(103, "c3f", t));
    if (rep.skipped) continue;
    ++tested;
    min_slack = std::min(min_slack, rep.sup_bound.slack);
    worst_ach = std::max(worst_ach, std::abs(rep.achievability.slack));
  }
  bool pass = tested > 90 && min_slack >= -1e-9 && worst_ach <= 1e-8;
  report(3, "ratio supremum and achievability", pass,
         "min slack " + num(min_slack) + ", max attain gap " + num(worst_ach));
}

// 4. gaussian two-step chain: first step an equality, second holds, both at
// 1e-12, over the 0.01..0.99 grid.
void criterion_4() {
  double worst_eq = 0.0, worst_ub = 0.0;
  for (int i = 1; i <= 99; ++i) {
    auto reps = check_gaussian_bound(i / 100.0);
    worst_eq = std::max(worst_eq, std::abs(reps[0].slack));
    worst_ub = std::max(worst_ub, -reps[1].slack);
  }
  bool pass = worst_eq <= 1e-12 && worst_ub <= 1e-12;
  report(4, "gaussian bound chain", pass,
         "tightness " + num(worst_eq) + ", chain slack margin " + num(worst_ub));
}

// 5. binary lower bound 2^I - 1 <= rho_m^2: 1000 random 2xK dists plus the
// 0.1-crossover instance.
void criterion_5() {
  bool all_hold = true;
  for (int t = 0; t < 1000; ++t) {
    auto rng = make_engine(derive_seed(105, "c5", t));
    all_hold = all_hold && check_binary_lower_bound(random_joint(2, 2 + t % 9, rng)).holds;
  }
  auto fix = check_binary_lower_bound(dsbs(0.1));
  bool fixture_ok = fix.holds && std::abs(fix.lhs - 0.4452) <= 1e-3 &&
                    std::abs(fix.rhs - 0.64) <= 1e-9;
  report(5, "binary lower bound", all_hold && fixture_ok,
         "fixture " + num(fix.lhs) + " <= " + num(fix.rhs));
}

// 6. min-mass upper bound: 1000 random dists up to 8x8 plus the fixture.
void criterion_6() {
  bool all_hold = true;
  for (int t = 0; t < 1000; ++t) {
    auto rng = make_engine(derive_seed(106, "c6", t));
    auto d = random_joint(2 + t % 7, 2 + (t / 7) % 7, rng);
    all_hold = all_hold && check_pmin_upper_bound(d).holds;
  }
  auto fix = check_pmin_upper_bound(dsbs(0.1));
  bool fixture_ok = fix.holds && std::abs(fix.lhs - 0.32) <= 1e-9 &&
                    std::abs(fix.rhs - 0.8580) <= 1e-3;
  report(6, "min-mass upper bound", all_hold && fixture_ok,
         "fixture " + num(fix.lhs) + " <= " + num(fix.rhs));
}

// 7. sample-based estimates of rho_m(X; X + lambda N) against the closed
// form, for the gaussian and cauchy cases.
void criterion_7() {
  double worst_g = 0.0, worst_c = 0.0;
  for (double lam : {0.5, 1.0, 2.0}) {
    for (double alpha : {2.0, 1.0}) {
      StableParams p = alpha == 2.0 ? StableParams::standard_gaussian()
                                    : StableParams::standard_cauchy();
      auto x = sample_stable(p, 100000, derive_seed(107, "c7x", int(lam * 10)));
      auto nn = sample_stable(p, 100000, derive_seed(107, "c7n", int(lam * 10)));
      std::vector<double> z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + lam * nn[i];
      double err = std::abs(maximal_correlation_from_samples_ace(x, z, 64).value -
                            rho_m_stable(alpha, lam));
      (alpha == 2.0 ? worst_g : worst_c) = std::max(alpha == 2.0 ? worst_g : worst_c, err);
    }
  }
  bool pass = worst_g <= 0.02 && worst_c <= 0.05;
  report(7, "noisy-copy closed form via samples", pass,
         "gaussian err " + num(worst_g) + ", cauchy err " + num(worst_c));
}

// 8. non-increasing utility in the noise gain, plus the disjoint-support
// caveat where large noise hides nothing.
void criterion_8() {
  auto est = monotonicity_probe(gaussian_pair_sampler(0.8),
                                StableParams::standard_gaussian(),
                                {0.0, 1.0, 2.0, 4.0}, 100000, 11);
  bool mono = true;
  for (std::size_t i = 0; i + 1 < est.size(); ++i) {
    mono = mono && est[i + 1] <= est[i] + 0.03;
  }
  auto rng = make_engine(derive_seed(108, "c8"));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(100000), z(100000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = u(rng);
    z[i] = x[i] + 2.0 * (u(rng) < 0.5 ? 1.0 : -1.0);
  }
  double caveat = maximal_correlation_from_samples_ace(x, z, 32).value;
  report(8, "noise monotonicity and caveat", mono && caveat >= 0.95,
         "probe end " + num(est.back()) + ", caveat " + num(caveat));
}

// 9. uncorrelated but maximally dependent fixture.
void criterion_9() {
  auto d = sign_product_pair();
  double rho = linear_correlation(d);
  double rm = maximal_correlation_spectral(d).value;
  bool pass = std::abs(rho) <= 1e-12 && std::abs(rm - 1.0) <= 1e-9;
  report(9, "zero-correlation dependence fixture", pass,
         "rho " + num(rho) + ", rho_m " + num(rm));
}

// 10. noise-gain inverse identity across an (alpha, epsilon) grid.
void criterion_10() {
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    for (int i = 1; i <= 20; ++i) {
      double eps = i / 20.0;
      worst = std::max(worst,
                       std::abs(rho_m_stable(alpha, lambda_star(eps, alpha)) - eps));
    }
  }
  double sqrt3 = lambda_star(0.5, 2.0);
  bool pass = worst <= 1e-12 && std::abs(sqrt3 - std::sqrt(3.0)) <= 1e-12;
  report(10, "minimal noise gain inverse", pass, "max gap " + num(worst));
}

// 11. rate-privacy suite: equal-pair exactness, fixture curve bounds,
// oracle domination, and a larger-output-cap probe.
void criterion_11() {
  Matrix pm(2, 2);
  pm << 0.5, 0.0, 0.0, 0.5;
  auto xy = validate({{}, {}, pm, std::nullopt, std::nullopt});
  double worst_eq = 0.0;
  for (double eps : {0.1, 0.3, 0.5, 0.8}) {
    auto s = rate_privacy(xy, eps, 16, 5);
    worst_eq = std::max(worst_eq, std::abs(s.achieved_utility - eps));
  }

  auto d = dsbs(0.1);
  auto curve = privacy_curve(d, {0.1, 0.2, 0.3, 0.4, 0.5}, 64,
                             derive_seed(111, "c11"));
  bool checks = true;
  for (const auto& r : ratio_monotonicity_check(curve, d)) checks = checks && r.holds;

  double solver = curve.values[1];  // eps = 0.2
  double oracle3 = rate_privacy_grid_oracle(d, 0.2, 3, 50);
  double oracle4 = rate_privacy_grid_oracle(d, 0.2, 4, 10);  // cap probe
  bool oracle_ok = solver >= oracle3 - 1e-3 && solver >= oracle4 - 1e-3;

  bool pass = worst_eq <= 1e-3 && checks && oracle_ok;
  report(11, "rate-privacy solver suite", pass,
         "equal-pair err " + num(worst_eq) + ", solver " + num(solver) +
             " vs oracle " + num(oracle3));
}

// 12. perfect-privacy rank test against the exhaustive filter search.
void criterion_12() {
  bool agree = true;
  auto check = [&](const JointDistribution& d) {
    agree = agree && perfect_privacy_test(d) == perfect_privacy_oracle(d);
  };
  check(dsbs(0.1));
  check(dsbs(0.3));
  Matrix dup(2, 3);
  dup << 0.45, 0.025, 0.025, 0.05, 0.225, 0.225;
  check(validate({{}, {}, dup, std::nullopt, std::nullopt}));
  for (int t = 0; t < 5; ++t) {
    auto rng = make_engine(derive_seed(112, "c12", t));
    check(random_joint(2, 3, rng));
  }
  for (int t = 0; t < 2; ++t) {
    auto rng = make_engine(derive_seed(112, "c12b", t));
    check(random_joint(2, 2, rng));
  }
  report(12, "perfect-privacy rank test", agree, "10 fixtures");
}

// 13. constrained MMSE: closed form equals the lower bound on the gaussian
// grid, the Monte Carlo route agrees, and the worked value reproduces.
void criterion_13() {
  double worst_gap = 0.0;
  for (double rho : {0.2, 0.5, 0.8}) {
    for (double eps : {0.25, 0.5, 0.75, 1.0}) {
      double closed = mmse_eps(rho, 1.0, eps).mmse;
      double bound = mmse_bound(varrho_epsilon_gaussian(rho, eps), 1.0);
      worst_gap = std::max(worst_gap, std::abs(closed - bound));
      if (closed < bound - 1e-12) worst_gap = 1.0;
    }
  }
  auto mc = mmse_monte_carlo(gaussian_pair_sampler(0.8),
                             {StableParams::standard_gaussian(), std::sqrt(3.0)},
                             1000000, 64, derive_seed(113, "c13"));
  double mc_err = std::abs(mc.mmse - 0.84);
  bool mc_ok = mc_err <= std::max(0.01, 3.0 * mc.ci_halfwidth);
  double worked = mmse_eps(0.8, 1.0, 0.5).mmse;
  bool pass = worst_gap <= 1e-12 && mc_ok && std::abs(worked - 0.84) <= 1e-12;
  report(13, "constrained MMSE tightness", pass,
         "grid gap " + num(worst_gap) + ", mc err " + num(mc_err));
}

// 14. CLI determinism: fixed seed reproduces output byte for byte.
void criterion_14() {
  const std::string cli = CORRPRIV_CLI_PATH;
  const std::string in = "/tmp/corrpriv_accept_dsbs.csv";
  std::ofstream(in) << ",0,1\n0,0.45,0.05\n1,0.05,0.45\n";
  auto capture = [&](const std::string& args, const std::string& tag) {
    std::string out = "/tmp/corrpriv_accept_" + tag + ".txt";
    std::string cmd = cli + " " + args + " > " + out + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out.c_str());
    return std::pair{WEXITSTATUS(rc), ss.str()};
  };
  bool pass = true;
  const std::string cmds[] = {
      "measures --input " + in,
      "--seed 42 bounds-sweep --trials 50 --max-dims 6",
      "--seed 9 privacy-curve --input " + in + " --eps-grid 0.1:0.5:0.2 --restarts 16",
      "--seed 5 stable-filter --alpha 2 --eps-grid 0.25:1:0.25 --lambda-grid 1:2:1 --n 50000 --bins 32",
      "--seed 9 mmse --rho 0.8 --eps-grid 0.5:1:0.25 --n 50000 --bins 32",
  };
  for (const auto& c : cmds) {
    auto a = capture(c, "a");
    auto b = capture(c, "b");
    pass = pass && a.first == 0 && a.first == b.first && a.second == b.second &&
           !a.second.empty();
  }
  std::remove(in.c_str());
  report(14, "CLI determinism", pass, "5 commands, two runs each");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 14 criteria passed\n");
  return 0;
}
