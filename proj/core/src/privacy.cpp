#include "corrpriv/privacy.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "corrpriv/bounds.hpp"
#include "corrpriv/info_measures.hpp"
#include "corrpriv/io.hpp"
#include "corrpriv/maxcorr.hpp"
#include "corrpriv/rng.hpp"

namespace corrpriv {

namespace {

constexpr double kLeakSlack = 1e-6;
constexpr int kMaxPrivacyAlphabet = 6;

std::vector<std::string> z_labels(int z_card) {
  std::vector<std::string> out;
  for (int j = 0; j < z_card; ++j) out.push_back("z" + std::to_string(j));
  return out;
}

// Leakage/utility evaluation for candidate filter rows (|Y| x |Z|).
struct FilterObjective {
  const JointDistribution& dist;
  Vector py;
  LeakageMeasure measure;

  double leakage(const Matrix& rows) const {
    JointDistribution xz = make_joint_dropping_empty(dist.pmf * rows);
    return measure == LeakageMeasure::mutual_information
               ? mutual_information(xz)
               : maximal_correlation_spectral(xz).value;
  }

  double utility(const Matrix& rows) const {
    return mutual_information(
        make_joint_dropping_empty(py.asDiagonal() * rows));
  }
};

// Rows of the filter family (1-t)*[all mass on the last output] + t*target.
Matrix blend_rows(const Matrix& target, double t) {
  Matrix rows = t * target;
  rows.col(rows.cols() - 1).array() += 1.0 - t;
  return rows;
}

// Largest t in [0,1] with leakage(blend(t)) <= eps; t=0 is always feasible
// (constant Z). The blend's leakage need not be exactly monotone for the
// maximal-correlation measure, so keep the best feasible t seen.
double bisect_blend(const FilterObjective& obj, const Matrix& target, double eps,
                    long& evals) {
  ++evals;
  if (obj.leakage(blend_rows(target, 1.0)) <= eps + kLeakSlack) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 50; ++i) {
    double mid = 0.5 * (lo + hi);
    ++evals;
    if (obj.leakage(blend_rows(target, mid)) <= eps + kLeakSlack) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

struct SearchResult {
  Matrix rows;
  double utility = 0.0;
  long evals = 0;
  bool exhausted = false;
};

SearchResult local_search(Matrix rows, const FilterObjective& obj, double eps,
                          std::mt19937_64& rng) {
  SearchResult res;
  res.utility = obj.utility(rows);
  ++res.evals;

  const auto ny = rows.rows();
  const auto nz = rows.cols();
  std::uniform_int_distribution<int> pick_y(0, static_cast<int>(ny) - 1);
  std::uniform_int_distribution<int> pick_z(0, static_cast<int>(nz) - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const long cap = 4000;
  double step = 0.25;
  long it = 0;
  while (step > 1e-7 && it < cap) {
    bool improved = false;
    for (int a = 0; a < 48 && it < cap; ++a, ++it) {
      Matrix cand = rows;
      int y = pick_y(rng);
      if (unit(rng) < 0.15) {
        // pull one row toward a vertex of the simplex
        int z = pick_z(rng);
        double s = step * unit(rng);
        cand.row(y) *= (1.0 - s);
        cand(y, z) += s;
      } else {
        int z1 = pick_z(rng);
        int z2 = pick_z(rng);
        if (z1 == z2 || cand(y, z1) < 1e-12) continue;
        double m = std::min(step * unit(rng), cand(y, z1));
        cand(y, z1) -= m;
        cand(y, z2) += m;
      }
      res.evals += 2;
      if (obj.leakage(cand) > eps + kLeakSlack) continue;
      double u = obj.utility(cand);
      if (u > res.utility + 1e-12) {
        rows = std::move(cand);
        res.utility = u;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  res.exhausted = it >= cap && step > 1e-7;
  res.rows = std::move(rows);
  return res;
}

PrivacyFilterSpec solve(const JointDistribution& dist, double epsilon, int budget,
                        std::uint64_t seed, LeakageMeasure measure) {
  if (dist.x_size() > kMaxPrivacyAlphabet || dist.y_size() > kMaxPrivacyAlphabet) {
    throw AlphabetTooLarge("rate-privacy solver is limited to 6x6 alphabets");
  }
  if (!(epsilon >= 0.0)) throw InvalidParams("epsilon must be >= 0");

  auto [px, py] = marginals(dist);
  FilterObjective obj{dist, py, measure};
  const int ny = static_cast<int>(dist.y_size());
  const int nz = ny + 1;

  double unconstrained = measure == LeakageMeasure::mutual_information
                             ? mutual_information(dist)
                             : maximal_correlation_spectral(dist).value;
  if (epsilon >= unconstrained - 1e-12) {
    // Constraint removed; Z = Y achieves the utility ceiling H(Y).
    PrivacyFilterSpec spec;
    spec.filter = Channel::identity(dist.y_alphabet);
    spec.achieved_leakage = unconstrained;
    spec.achieved_utility = entropy(py);
    spec.constraint_vacuous = true;
    return spec;
  }

  // Identity embedded into |Z| = |Y|+1 outputs; blending it against the
  // constant channel sweeps out the erasure-filter family.
  Matrix identity_ext = Matrix::Zero(ny, nz);
  for (int y = 0; y < ny; ++y) identity_ext(y, y) = 1.0;

  PrivacyFilterSpec best;
  long evals = 0;
  Matrix best_rows = blend_rows(identity_ext, 0.0);
  double best_utility = -1.0;
  bool exhausted = false;

  auto consider = [&](const Matrix& rows, double utility) {
    if (utility > best_utility) {
      best_utility = utility;
      best_rows = rows;
    }
  };

  {
    double t = bisect_blend(obj, identity_ext, epsilon, evals);
    Matrix rows = blend_rows(identity_ext, t);
    consider(rows, obj.utility(rows));
    ++evals;
  }

  for (int r = 0; r < budget; ++r) {
    auto rng = make_engine(derive_seed(seed, "rate_privacy_restart", r));
    Matrix start;
    if (r == 0) {
      start = best_rows;  // erasure candidate
    } else {
      Channel random = random_channel(dist.y_alphabet, nz, rng);
      double t = bisect_blend(obj, random.rows, epsilon, evals);
      start = blend_rows(random.rows, t);
    }
    SearchResult sr = local_search(std::move(start), obj, epsilon, rng);
    evals += sr.evals;
    exhausted = exhausted || sr.exhausted;

    // Spend any remaining leakage budget by pushing toward Z = Y.
    double t = bisect_blend(obj, sr.rows, epsilon, evals);
    Matrix pushed = blend_rows(sr.rows, t);
    double pushed_u = obj.utility(pushed);
    ++evals;
    if (pushed_u > sr.utility) {
      consider(pushed, pushed_u);
    } else {
      consider(sr.rows, sr.utility);
    }
  }

  best.filter = Channel::validated(dist.y_alphabet, z_labels(nz), best_rows);
  best.achieved_leakage = obj.leakage(best.filter.rows);
  best.achieved_utility = obj.utility(best.filter.rows);
  best.budget_exhausted = exhausted;
  best.iterations = evals;
  return best;
}

}  // namespace

PrivacyFilterSpec rate_privacy(const JointDistribution& dist, double epsilon,
                               int budget, std::uint64_t seed) {
  return solve(dist, epsilon, budget, seed, LeakageMeasure::mutual_information);
}

PrivacyFilterSpec rate_privacy_maxcorr(const JointDistribution& dist,
                                       double epsilon, int budget,
                                       std::uint64_t seed) {
  return solve(dist, epsilon, budget, seed, LeakageMeasure::maximal_correlation);
}

bool perfect_privacy_test(const JointDistribution& dist) {
  // Columns P_{X|Y}(.|y); dependent columns <=> rank below |Y|.
  Channel wt = backward_channel(dist);
  Matrix cols = wt.rows.transpose();  // |X| x |Y|
  Eigen::JacobiSVD<Matrix> svd(cols);
  const auto& sv = svd.singularValues();
  double top = sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * top) ++rank;
  }
  return rank < static_cast<int>(dist.y_size());
}

PrivacyCurve privacy_curve(const JointDistribution& dist,
                           const std::vector<double>& epsilons, int restarts,
                           std::uint64_t seed, LeakageMeasure measure) {
  PrivacyCurve curve;
  curve.measure = measure;
  curve.restarts = restarts;
  curve.epsilons = epsilons;
  double running = 0.0;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    PrivacyFilterSpec spec =
        solve(dist, epsilons[i], restarts, derive_seed(seed, "curve_point", i),
              measure);
    running = std::max(running, spec.achieved_utility);
    curve.values.push_back(running);
    curve.filters.push_back(std::move(spec));
  }
  return curve;
}

std::vector<BoundReport> ratio_monotonicity_check(const PrivacyCurve& curve,
                                      const JointDistribution& dist) {
  std::vector<BoundReport> reports;
  auto [px, py] = marginals(dist);
  double hy = entropy(py);
  double mi = mutual_information(dist);
  for (std::size_t i = 0; i < curve.epsilons.size(); ++i) {
    double eps = curve.epsilons[i];
    if (eps <= 0.0) continue;
    double lower = std::min(eps, mi) * hy / mi;
    reports.push_back(BoundReport::make(
        "scaled_entropy_lower_bound", lower, curve.values[i],
        "eps=" + format_double(eps), kSolverTol));
    if (i + 1 < curve.epsilons.size() && curve.epsilons[i + 1] > 0.0) {
      double r0 = curve.values[i] / eps;
      double r1 = curve.values[i + 1] / curve.epsilons[i + 1];
      reports.push_back(BoundReport::make(
          "ratio_nonincreasing", r1, r0,
          "eps=" + format_double(eps) + "->" + format_double(curve.epsilons[i + 1]),
          kSolverTol));
    }
  }
  return reports;
}

std::string privacy_curve_csv(const PrivacyCurve& curve) {
  std::ostringstream out;
  out << "epsilon,value,leakage_achieved,vacuous,restarts\n";
  for (std::size_t i = 0; i < curve.epsilons.size(); ++i) {
    out << format_double(curve.epsilons[i]) << ","
        << format_double(curve.values[i]) << ","
        << format_double(curve.filters[i].achieved_leakage) << ","
        << (curve.filters[i].constraint_vacuous ? "true" : "false") << ","
        << curve.restarts << "\n";
  }
  return out.str();
}

}  // namespace corrpriv
