#include "corrpriv/distribution.hpp"

#include <cmath>
#include <sstream>

namespace corrpriv {

namespace {

std::vector<std::string> default_labels(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void check_entries(const Matrix& m, const char* what) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double v = m(i, j);
      if (!std::isfinite(v)) {
        throw NegativeProbability(std::string(what) + ": non-finite entry at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (v < -kStructuralZero) {
        throw NegativeProbability(std::string(what) + ": negative entry " +
                                  std::to_string(v) + " at (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

Channel Channel::validated(std::vector<std::string> input_alphabet,
                           std::vector<std::string> output_alphabet, Matrix rows) {
  if (input_alphabet.empty()) input_alphabet = default_labels("x", rows.rows());
  if (output_alphabet.empty()) output_alphabet = default_labels("y", rows.cols());
  if (static_cast<Eigen::Index>(input_alphabet.size()) != rows.rows() ||
      static_cast<Eigen::Index>(output_alphabet.size()) != rows.cols()) {
    throw AlphabetMismatch("channel alphabet sizes do not match row matrix shape");
  }
  check_entries(rows, "channel");
  rows = rows.cwiseMax(0.0);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    double s = rows.row(i).sum();
    if (std::abs(s - 1.0) > kSumRejectTol) {
      throw SumNotOne("channel row " + std::to_string(i) + " sums to " +
                      std::to_string(s));
    }
    rows.row(i) /= s;
  }
  return Channel{std::move(input_alphabet), std::move(output_alphabet),
                 std::move(rows)};
}

Channel Channel::identity(const std::vector<std::string>& alphabet) {
  auto n = static_cast<Eigen::Index>(alphabet.size());
  return Channel{alphabet, alphabet, Matrix::Identity(n, n)};
}

Channel Channel::bsc(double crossover) {
  Matrix rows(2, 2);
  rows << 1.0 - crossover, crossover, crossover, 1.0 - crossover;
  return validated({"0", "1"}, {"0", "1"}, std::move(rows));
}

JointDistribution validate(JointDistribution dist) {
  if (dist.pmf.rows() == 0 || dist.pmf.cols() == 0) {
    throw EmptyMarginal("empty pmf grid");
  }
  if (dist.x_alphabet.empty()) dist.x_alphabet = default_labels("x", dist.pmf.rows());
  if (dist.y_alphabet.empty()) dist.y_alphabet = default_labels("y", dist.pmf.cols());
  if (static_cast<Eigen::Index>(dist.x_alphabet.size()) != dist.pmf.rows() ||
      static_cast<Eigen::Index>(dist.y_alphabet.size()) != dist.pmf.cols()) {
    throw AlphabetMismatch("alphabet sizes do not match pmf shape");
  }
  if (dist.x_values &&
      dist.x_values->size() != static_cast<Eigen::Index>(dist.x_alphabet.size())) {
    throw AlphabetMismatch("x_values length does not match x alphabet");
  }
  if (dist.y_values &&
      dist.y_values->size() != static_cast<Eigen::Index>(dist.y_alphabet.size())) {
    throw AlphabetMismatch("y_values length does not match y alphabet");
  }
  check_entries(dist.pmf, "joint pmf");

  double total = dist.pmf.sum();
  if (std::abs(total - 1.0) > kSumRejectTol) {
    throw SumNotOne("joint pmf sums to " + std::to_string(total));
  }
  // Clamp structural zeros, then renormalize the roundoff-level deviation.
  dist.pmf = (dist.pmf.array() < kStructuralZero).select(0.0, dist.pmf);
  dist.pmf /= dist.pmf.sum();

  for (Eigen::Index i = 0; i < dist.pmf.rows(); ++i) {
    if (dist.pmf.row(i).sum() <= 0.0) {
      throw EmptyMarginal("x symbol '" + dist.x_alphabet[i] + "' has zero mass");
    }
  }
  for (Eigen::Index j = 0; j < dist.pmf.cols(); ++j) {
    if (dist.pmf.col(j).sum() <= 0.0) {
      throw EmptyMarginal("y symbol '" + dist.y_alphabet[j] + "' has zero mass");
    }
  }
  return dist;
}

std::pair<Vector, Vector> marginals(const JointDistribution& dist) {
  return {dist.pmf.rowwise().sum(), dist.pmf.colwise().sum().transpose()};
}

std::pair<Vector, Channel> decompose(const JointDistribution& dist) {
  Vector px = dist.pmf.rowwise().sum();
  Matrix rows = dist.pmf.array().colwise() / px.array();
  return {std::move(px),
          Channel{dist.x_alphabet, dist.y_alphabet, std::move(rows)}};
}

Channel backward_channel(const JointDistribution& dist) {
  Vector py = dist.pmf.colwise().sum().transpose();
  Matrix rows = dist.pmf.transpose().array().colwise() / py.array();
  return Channel{dist.y_alphabet, dist.x_alphabet, std::move(rows)};
}

Channel compose(const Channel& w, const Channel& v) {
  if (w.output_alphabet != v.input_alphabet) {
    throw AlphabetMismatch("compose: W output alphabet differs from V input alphabet");
  }
  return Channel{w.input_alphabet, v.output_alphabet, w.rows * v.rows};
}

Vector push_forward(const Vector& p, const Channel& w) {
  if (p.size() != static_cast<Eigen::Index>(w.input_size())) {
    throw AlphabetMismatch("push_forward: pmf length differs from channel input size");
  }
  return w.rows.transpose() * p;
}

JointDistribution join(const Vector& p, const Channel& w) {
  if (p.size() != static_cast<Eigen::Index>(w.input_size())) {
    throw AlphabetMismatch("join: pmf length differs from channel input size");
  }
  Matrix pmf = p.asDiagonal() * w.rows;
  return validate(JointDistribution{w.input_alphabet, w.output_alphabet,
                                    std::move(pmf), std::nullopt, std::nullopt});
}

JointDistribution transpose(const JointDistribution& dist) {
  return JointDistribution{dist.y_alphabet, dist.x_alphabet,
                           dist.pmf.transpose(), dist.y_values, dist.x_values};
}

JointDistribution dsbs(double p) {
  Matrix pmf(2, 2);
  pmf << 0.5 * (1 - p), 0.5 * p, 0.5 * p, 0.5 * (1 - p);
  Vector values(2);
  values << 1.0, -1.0;
  return validate(
      JointDistribution{{"0", "1"}, {"0", "1"}, std::move(pmf), values, values});
}

JointDistribution independent_product(const Vector& px, const Vector& py) {
  Matrix pmf = px * py.transpose();
  return validate(JointDistribution{{}, {}, std::move(pmf), std::nullopt, std::nullopt});
}

JointDistribution sign_product_pair() {
  // Alphabets {-2,-1,+1,+2} for both coordinates; mass 1/8 on each of the
  // eight pairs with equal magnitude.
  std::vector<std::string> labels = {"-2", "-1", "+1", "+2"};
  Vector values(4);
  values << -2.0, -1.0, 1.0, 2.0;
  Matrix pmf = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (std::abs(values(i)) == std::abs(values(j))) pmf(i, j) = 0.125;
    }
  }
  return validate(JointDistribution{labels, labels, std::move(pmf), values, values});
}

JointDistribution random_joint(int m, int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  Matrix pmf(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) pmf(i, j) = exp1(rng);
  }
  pmf /= pmf.sum();
  return validate(JointDistribution{{}, {}, std::move(pmf), std::nullopt, std::nullopt});
}

Channel random_channel(const std::vector<std::string>& input_alphabet,
                       int output_size, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  auto m = static_cast<Eigen::Index>(input_alphabet.size());
  Matrix rows(m, output_size);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (int j = 0; j < output_size; ++j) rows(i, j) = exp1(rng);
    rows.row(i) /= rows.row(i).sum();
  }
  std::vector<std::string> out;
  for (int j = 0; j < output_size; ++j) out.push_back("z" + std::to_string(j));
  return Channel{input_alphabet, std::move(out), std::move(rows)};
}

}  // namespace corrpriv
