#pragma once

#include "corrpriv/distribution.hpp"

namespace corrpriv {

// All entropic quantities are in bits. Formulas written with
// 2^(...) take bits and the ones written with e^(...) take nats; keep the
// conversions in one place.
inline constexpr double kLn2 = 0.693147180559945309417232121458;
inline double bits_to_nats(double bits) { return bits * kLn2; }
inline double nats_to_bits(double nats) { return nats / kLn2; }

/// Shannon entropy of a pmf, in bits (0 log 0 = 0).
double entropy(const Vector& pmf);

/// Mutual information I(X;Y) in bits; clamped to 0 from below.
double mutual_information(const JointDistribution& dist);

/// chi^2(P_XY || P_X x P_Y) = sum p(x,y)^2 / (p_X(x) p_Y(y)) - 1.
double chi_squared(const JointDistribution& dist);

/// Unnormalized total variation sum |p(x,y) - p_X(x) p_Y(y)|, in [0,2].
double total_variation_from_product(const JointDistribution& dist);

/// Pearson correlation of the numeric embeddings under the joint pmf.
/// Requires x_values and y_values; throws MissingValues / DegenerateVariable.
double linear_correlation(const JointDistribution& dist);

/// Entrywise density dP_XY / d(P_X x P_Y); structural zeros map to 0.
Matrix information_density(const JointDistribution& dist);

}  // namespace corrpriv
