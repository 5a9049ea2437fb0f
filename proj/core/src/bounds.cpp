#include "corrpriv/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "corrpriv/info_measures.hpp"
#include "corrpriv/maxcorr.hpp"
#include "corrpriv/rng.hpp"

namespace corrpriv {

JointDistribution make_joint_dropping_empty(Matrix pmf) {
  std::vector<Eigen::Index> rows, cols;
  for (Eigen::Index i = 0; i < pmf.rows(); ++i) {
    if (pmf.row(i).sum() > kStructuralZero) rows.push_back(i);
  }
  for (Eigen::Index j = 0; j < pmf.cols(); ++j) {
    if (pmf.col(j).sum() > kStructuralZero) cols.push_back(j);
  }
  Matrix kept(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) kept(a, b) = pmf(rows[a], cols[b]);
  }
  kept /= kept.sum();
  return validate(JointDistribution{{}, {}, std::move(kept), std::nullopt,
                                    std::nullopt});
}

JointDistribution apply_filter_y(const JointDistribution& dist,
                                 const Channel& filter) {
  if (filter.input_size() != dist.y_size()) {
    throw AlphabetMismatch("filter input alphabet does not match Y alphabet");
  }
  return make_joint_dropping_empty(dist.pmf * filter.rows);
}

std::array<BoundReport, 2> check_gaussian_bound(double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw DegenerateRho("check_gaussian_bound needs |rho| < 1");
  }
  double rm2 = rho * rho;
  double mi = -0.5 * std::log2(1.0 - rm2);  // bits
  double mid = 1.0 - std::exp2(-2.0 * mi);
  double linear = 2.0 * bits_to_nats(mi);
  std::string ctx = "gaussian rho=" + std::to_string(rho);
  return {BoundReport::make("gaussian_rho_m2_le_1m2pow", rm2, mid, ctx),
          BoundReport::make("gaussian_1m2pow_le_2ln2_I", mid, linear, ctx)};
}

double linfoot(double mutual_info_bits) {
  if (mutual_info_bits < 0.0) {
    throw InvalidParams("linfoot needs nonnegative mutual information");
  }
  double r = std::sqrt(-std::expm1(-2.0 * kLn2 * mutual_info_bits));
  // the range is [0, 1): keep the asymptote strictly below one
  return std::min(r, std::nextafter(1.0, 0.0));
}

BoundReport check_binary_lower_bound(const JointDistribution& dist) {
  if (std::min(dist.x_size(), dist.y_size()) != 2) {
    throw AlphabetTooLarge(
        "binary lower bound requires min alphabet exactly 2; refusing to "
        "extrapolate");
  }
  double mi = mutual_information(dist);
  double lhs = std::exp2(mi) - 1.0;
  double rhs = chi_squared(dist);  // == rho_m^2 when min alphabet is 2
  return BoundReport::make("binary_lower_bound", lhs, rhs,
                           "I=" + std::to_string(mi));
}

BoundReport check_pmin_upper_bound(const JointDistribution& dist) {
  auto [px, py] = marginals(dist);
  double pmin = px.minCoeff();
  double rm = maximal_correlation_spectral(dist).value;
  double mi = mutual_information(dist);
  double lhs = pmin * rm * rm;
  double rhs = std::sqrt(2.0 * bits_to_nats(mi));
  return BoundReport::make("pmin_upper_bound", lhs, rhs,
                           "Pmin=" + std::to_string(pmin));
}

RatioSupremumReport check_ratio_supremum(const JointDistribution& dist,
                                       int num_filters, std::uint64_t seed) {
  RatioSupremumReport rep;
  rep.rho_xy = maximal_correlation_spectral(dist).value;
  if (rep.rho_xy < 1e-9) {
    rep.skipped = true;
    return rep;
  }
  auto [px, py] = marginals(dist);
  auto rng = make_engine(derive_seed(seed, "ratio_supremum"));
  const int z_card = static_cast<int>(dist.y_size()) + 1;
  for (int t = 0; t < num_filters; ++t) {
    Channel f = random_channel(dist.y_alphabet, z_card, rng);
    double rho_yz =
        maximal_correlation_spectral(make_joint_dropping_empty(
                                         py.asDiagonal() * f.rows))
            .value;
    if (rho_yz < 1e-9) continue;  // degenerate filter, outside the supremum
    double rho_xz = maximal_correlation_spectral(apply_filter_y(dist, f)).value;
    rep.max_ratio = std::max(rep.max_ratio, rho_xz / rho_yz);
  }
  rep.sup_bound = BoundReport::make("ratio_sup_bound", rep.max_ratio, rep.rho_xy,
                                    std::to_string(num_filters) + " filters");

  // Achievability: Z = X', the output of the backward-forward composition.
  auto [p, w] = decompose(dist);
  Channel wt = backward_channel(dist);
  double rho_xz = maximal_correlation_spectral(join(p, compose(w, wt))).value;
  double rho_yz = maximal_correlation_spectral(join(py, wt)).value;
  rep.achievability = BoundReport::make_identity(
      "ratio_achievability", rho_xz / rho_yz, rep.rho_xy, "", 1e-8);
  return rep;
}

std::vector<BoundReport> bounds_sweep(int trials, int max_dim, std::uint64_t seed) {
  std::vector<BoundReport> reports;
  for (int t = 0; t < trials; ++t) {
    auto rng = make_engine(derive_seed(seed, "bounds_sweep", t));
    std::uniform_int_distribution<int> dim(2, std::max(2, max_dim));
    int m = dim(rng);
    int n = dim(rng);
    std::string ctx = "trial=" + std::to_string(t) + " dims=" +
                      std::to_string(m) + "x" + std::to_string(n);

    JointDistribution d = random_joint(m, n, rng);
    if (std::min(m, n) == 2) {
      double rm = maximal_correlation_spectral(d).value;
      auto id = BoundReport::make_identity("chi_squared_identity", rm * rm,
                                           chi_squared(d), ctx);
      reports.push_back(id);
      auto t3 = check_binary_lower_bound(d);
      t3.context = ctx;
      reports.push_back(t3);
    }
    auto t4 = check_pmin_upper_bound(d);
    t4.context = ctx;
    reports.push_back(t4);
    auto bw = backward_identity_check(d);
    bw.context = ctx;
    reports.push_back(bw);
  }
  return reports;
}

}  // namespace corrpriv
