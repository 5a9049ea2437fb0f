#include "corrpriv/maxcorr.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "corrpriv/rng.hpp"

namespace corrpriv {

namespace {

constexpr int kMaxDenseAlphabet = 64;
constexpr double kCollapseTol = 1e-13;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Center under weights w and scale to unit second moment. Returns false when
// the vector collapses (conditional expectations of a constant).
bool center_normalize(Vector& v, const Vector& w) {
  v.array() -= w.dot(v);
  double norm2 = w.dot(v.cwiseProduct(v));
  if (norm2 < kCollapseTol) return false;
  v /= std::sqrt(norm2);
  return true;
}

}  // namespace

const char* to_string(MaxCorrMethod m) {
  switch (m) {
    case MaxCorrMethod::spectral: return "spectral";
    case MaxCorrMethod::power_iteration: return "power_iteration";
    case MaxCorrMethod::closed_form: return "closed_form";
    case MaxCorrMethod::ace_sample: return "ace_sample";
  }
  return "?";
}

MaxCorrResult maximal_correlation_spectral(const JointDistribution& dist) {
  if (dist.pmf.rows() > kMaxDenseAlphabet || dist.pmf.cols() > kMaxDenseAlphabet) {
    throw AlphabetTooLarge("dense SVD limited to 64x64; use the power iteration");
  }
  auto [px, py] = marginals(dist);
  Vector sx = px.cwiseSqrt();
  Vector sy = py.cwiseSqrt();
  Matrix q = dist.pmf.array() / (sx * sy.transpose()).array();
  // The top singular pair of Q is always (1, sqrt-marginals); subtract it so
  // the largest remaining singular value is rho_m even under numerical ties.
  q -= sx * sy.transpose();

  Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeThinU | Eigen::ComputeThinV);
  MaxCorrResult res;
  res.method = MaxCorrMethod::spectral;
  res.value = clamp01(svd.singularValues()(0));

  Vector g = svd.matrixU().col(0).cwiseQuotient(sx);
  Vector f = svd.matrixV().col(0).cwiseQuotient(sy);
  if (center_normalize(g, px) && center_normalize(f, py)) {
    if (g.dot(dist.pmf * f) < 0.0) f = -f;
    res.optimal_g = std::move(g);
    res.optimal_f = std::move(f);
  }
  return res;
}

MaxCorrResult maximal_correlation_power(const JointDistribution& dist, double tol,
                                        int max_iter) {
  auto [px, py] = marginals(dist);
  const Matrix& p = dist.pmf;

  MaxCorrResult res;
  res.method = MaxCorrMethod::power_iteration;

  // Deterministic pseudo-random start; a structured start risks being
  // orthogonal to the maximizing pair on symmetric fixtures.
  auto rng = make_engine(0x9d2c5680u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vector f(p.cols());
  for (Eigen::Index j = 0; j < f.size(); ++j) f(j) = unit(rng);
  if (!center_normalize(f, py)) {
    return res;  // |Y| = 1: everything is independent of Y
  }

  Vector g = Vector::Zero(p.rows());
  Vector g_prev = g;
  for (int it = 1; it <= max_iter; ++it) {
    g = (p * f).cwiseQuotient(px);       // E[f(Y) | X = x]
    if (!center_normalize(g, px)) {
      res.iterations = it;
      return res;  // independence: conditional expectation collapses
    }
    f = (p.transpose() * g).cwiseQuotient(py);  // E[g(X) | Y = y]
    if (!center_normalize(f, py)) {
      res.iterations = it;
      return res;
    }
    res.iterations = it;
    res.residual = (g - g_prev).cwiseAbs().maxCoeff();
    g_prev = g;
    if (res.residual < tol) break;
  }
  res.converged = res.residual < tol;
  res.value = clamp01(g.dot(p * f));
  res.optimal_g = std::move(g);
  res.optimal_f = std::move(f);
  return res;
}

std::pair<std::vector<int>, int> quantile_bins(const std::vector<double>& samples,
                                               int bins) {
  if (bins < 2) throw InvalidParams("quantile_bins: bins must be >= 2");
  const std::size_t n = samples.size();
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cuts;
  for (int k = 1; k < bins; ++k) {
    double c = sorted[static_cast<std::size_t>(k) * n / bins];
    if (cuts.empty() || c > cuts.back()) cuts.push_back(c);
  }
  std::vector<int> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw[i] = static_cast<int>(
        std::upper_bound(cuts.begin(), cuts.end(), samples[i]) - cuts.begin());
  }
  // Compress away empty bins so downstream pmfs have positive marginals.
  std::vector<int> remap(cuts.size() + 1, -1);
  for (int b : raw) remap[b] = 0;
  int next = 0;
  for (auto& r : remap) {
    if (r == 0) r = next++;
  }
  for (auto& b : raw) b = remap[b];
  return {std::move(raw), next};
}

JointDistribution binned_joint(const std::vector<double>& x_samples,
                               const std::vector<double>& y_samples, int bins) {
  if (x_samples.size() != y_samples.size()) {
    throw InvalidParams("binned_joint: sample vectors differ in length");
  }
  auto [bx, kx] = quantile_bins(x_samples, bins);
  auto [by, ky] = quantile_bins(y_samples, bins);
  Matrix counts = Matrix::Zero(kx, ky);
  for (std::size_t i = 0; i < bx.size(); ++i) counts(bx[i], by[i]) += 1.0;
  counts /= static_cast<double>(bx.size());
  return validate(JointDistribution{{}, {}, std::move(counts), std::nullopt,
                                    std::nullopt});
}

MaxCorrResult maximal_correlation_from_samples_ace(
    const std::vector<double>& x_samples, const std::vector<double>& y_samples,
    int bins, double tol, int max_iter) {
  if (x_samples.size() != y_samples.size()) {
    throw InvalidParams("ace: sample vectors differ in length");
  }
  if (bins < 2) throw InvalidParams("ace: bins must be >= 2");
  if (x_samples.size() < 10u * static_cast<std::size_t>(bins) * bins) {
    throw TooFewSamples("ace: need at least 10*bins^2 samples, got " +
                        std::to_string(x_samples.size()));
  }
  JointDistribution emp = binned_joint(x_samples, y_samples, bins);
  MaxCorrResult res =
      (emp.pmf.rows() <= kMaxDenseAlphabet && emp.pmf.cols() <= kMaxDenseAlphabet)
          ? maximal_correlation_spectral(emp)
          : maximal_correlation_power(emp, tol, max_iter);
  res.method = MaxCorrMethod::ace_sample;
  return res;
}

BoundReport backward_identity_check(const JointDistribution& dist) {
  auto [p, w] = decompose(dist);
  Channel wt = backward_channel(dist);
  Channel roundtrip = compose(w, wt);  // X -> X'
  double lhs = maximal_correlation_spectral(dist).value;
  double rhs = maximal_correlation_spectral(join(p, roundtrip)).value;
  return BoundReport::make_identity("backward_channel_identity", lhs * lhs, rhs);
}

}  // namespace corrpriv
