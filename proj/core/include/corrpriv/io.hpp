#pragma once

#include <iosfwd>
#include <string>

#include "corrpriv/distribution.hpp"

namespace corrpriv {

// Joint-distribution file formats.
//
// JSON: {"x_alphabet": [...], "y_alphabet": [...], "pmf": [[...]],
//        "x_values": [...]?, "y_values": [...]?}
//
// CSV: header row = y labels, first column = x labels, cells = probabilities.
// Numeric value embeddings are side-loaded from one-number-per-line files.

JointDistribution load_joint_json(const std::string& path);
JointDistribution load_joint_csv(const std::string& path);

/// Dispatches on extension (.json vs anything else -> CSV).
JointDistribution load_joint(const std::string& path);

std::string joint_to_json(const JointDistribution& dist);
std::string joint_to_csv(const JointDistribution& dist);

/// One real number per line; blank lines ignored.
Vector load_values_file(const std::string& path);

/// Prints a double with enough digits to round-trip, in a fixed format so
/// that repeated runs produce byte-identical reports.
std::string format_double(double v);

}  // namespace corrpriv
