#include "corrpriv/info_measures.hpp"

#include <cmath>

namespace corrpriv {

double entropy(const Vector& pmf) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < pmf.size(); ++i) {
    double p = pmf(i);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double mutual_information(const JointDistribution& dist) {
  auto [px, py] = marginals(dist);
  double mi = 0.0;
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
      double p = dist.pmf(i, j);
      if (p > 0.0) mi += p * std::log2(p / (px(i) * py(j)));
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double chi_squared(const JointDistribution& dist) {
  auto [px, py] = marginals(dist);
  double s = 0.0;
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
      double p = dist.pmf(i, j);
      if (p > 0.0) s += p * p / (px(i) * py(j));
    }
  }
  double v = s - 1.0;
  return v < 0.0 ? 0.0 : v;
}

double total_variation_from_product(const JointDistribution& dist) {
  auto [px, py] = marginals(dist);
  double tv = 0.0;
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
      tv += std::abs(dist.pmf(i, j) - px(i) * py(j));
    }
  }
  return tv;
}

double linear_correlation(const JointDistribution& dist) {
  if (!dist.x_values || !dist.y_values) {
    throw MissingValues("linear_correlation needs x_values and y_values");
  }
  auto [px, py] = marginals(dist);
  const Vector& xv = *dist.x_values;
  const Vector& yv = *dist.y_values;
  double mx = px.dot(xv);
  double my = py.dot(yv);
  double vx = px.dot((xv.array() - mx).square().matrix());
  double vy = py.dot((yv.array() - my).square().matrix());
  if (vx <= 0.0) throw DegenerateVariable("X embedding has zero variance");
  if (vy <= 0.0) throw DegenerateVariable("Y embedding has zero variance");
  double cov = 0.0;
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
      cov += dist.pmf(i, j) * (xv(i) - mx) * (yv(j) - my);
    }
  }
  return cov / std::sqrt(vx * vy);
}

Matrix information_density(const JointDistribution& dist) {
  auto [px, py] = marginals(dist);
  Matrix d(dist.pmf.rows(), dist.pmf.cols());
  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
      double p = dist.pmf(i, j);
      d(i, j) = p > 0.0 ? p / (px(i) * py(j)) : 0.0;
    }
  }
  return d;
}

}  // namespace corrpriv
