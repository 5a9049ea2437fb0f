#pragma once

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "corrpriv/errors.hpp"

namespace corrpriv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Validation tolerances. Input pmfs further than kSumRejectTol from
// normalized are rejected instead of silently rescaled; entries below
// kStructuralZero are treated as exact zeros.
inline constexpr double kSumTol = 1e-12;
inline constexpr double kSumRejectTol = 1e-9;
inline constexpr double kStructuralZero = 1e-15;

/// Row-stochastic conditional distribution P(output|input).
struct Channel {
  std::vector<std::string> input_alphabet;
  std::vector<std::string> output_alphabet;
  Matrix rows;  // |input| x |output|

  std::size_t input_size() const { return input_alphabet.size(); }
  std::size_t output_size() const { return output_alphabet.size(); }

  /// Checks shape and row-stochasticity (each row sums to 1 within kSumRejectTol,
  /// renormalized to kSumTol); throws NegativeProbability/SumNotOne.
  static Channel validated(std::vector<std::string> input_alphabet,
                           std::vector<std::string> output_alphabet, Matrix rows);

  static Channel identity(const std::vector<std::string>& alphabet);
  /// Binary symmetric channel with the given crossover probability.
  static Channel bsc(double crossover);
};

/// Finite-alphabet joint pmf over X x Y. Symbols are opaque labels;
/// optional numeric embeddings (x_values/y_values) are carried separately
/// because only correlation/MMSE-type measures need them.
struct JointDistribution {
  std::vector<std::string> x_alphabet;
  std::vector<std::string> y_alphabet;
  Matrix pmf;  // |X| x |Y|
  std::optional<Vector> x_values;
  std::optional<Vector> y_values;

  std::size_t x_size() const { return x_alphabet.size(); }
  std::size_t y_size() const { return y_alphabet.size(); }
};

/// Normalizes and checks a joint pmf: entries finite and nonnegative, total
/// mass 1 within kSumRejectTol, strictly positive marginals, value vectors
/// (if present) matching the alphabets.
/// Throws NegativeProbability, SumNotOne, EmptyMarginal, AlphabetMismatch.
JointDistribution validate(JointDistribution dist);

/// Exact row/column sums of a validated distribution.
std::pair<Vector, Vector> marginals(const JointDistribution& dist);

/// Splits P_XY into the input pmf P_X and the forward channel P_{Y|X}.
std::pair<Vector, Channel> decompose(const JointDistribution& dist);

/// Backward channel P_{X|Y} of a validated distribution.
Channel backward_channel(const JointDistribution& dist);

/// Channel composition (V after W): matrix product of row-stochastic maps.
Channel compose(const Channel& w, const Channel& v);

/// Output distribution of channel w under input pmf p.
Vector push_forward(const Vector& p, const Channel& w);

/// Joint distribution of (input, output) for input pmf p through channel w.
JointDistribution join(const Vector& p, const Channel& w);

JointDistribution transpose(const JointDistribution& dist);

// Fixtures used throughout the test and sweep machinery.

/// Doubly symmetric binary source: uniform binary X through BSC(p),
/// with +-1 numeric values attached to both axes.
JointDistribution dsbs(double p);

/// Product distribution P_X x P_Y (independent pair).
JointDistribution independent_product(const Vector& px, const Vector& py);

/// The sign-product pair X = U1*V, Y = U2*V with U1, U2 uniform on {-1,+1}
/// and V uniform on {1,2}: linear correlation 0 but |X| = |Y| almost surely.
JointDistribution sign_product_pair();

/// Uniform draw from the probability simplex over an m x n grid
/// (symmetric Dirichlet(1)), validated.
JointDistribution random_joint(int m, int n, std::mt19937_64& rng);

/// Random row-stochastic channel with Dirichlet(1) rows.
Channel random_channel(const std::vector<std::string>& input_alphabet,
                       int output_size, std::mt19937_64& rng);

}  // namespace corrpriv
