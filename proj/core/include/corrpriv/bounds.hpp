#pragma once

#include <array>
#include <cstdint>

#include "corrpriv/distribution.hpp"
#include "corrpriv/report.hpp"

namespace corrpriv {

/// Joint of (X, Z) for a filter P_{Z|Y} applied to the Y coordinate, and of
/// (input, output) grids in general: drops zero-mass output symbols before
/// validation so filters with unused outputs stay usable.
JointDistribution make_joint_dropping_empty(Matrix pmf);

/// Joint distribution of (X, Z) where Z is the output of `filter` fed with Y.
JointDistribution apply_filter_y(const JointDistribution& dist,
                                 const Channel& filter);

/// For jointly Gaussian (X,Y) with correlation rho: rho_m = |rho| and
/// I = -1/2 log2(1-rho^2) bits. Emits the two-step chain
/// rho_m^2 <= 1 - 2^(-2I) <= (2 ln 2) I; the first step is an equality for
/// Gaussians. Throws DegenerateRho for |rho| >= 1.
std::array<BoundReport, 2> check_gaussian_bound(double rho);

/// Linfoot informational correlation sqrt(1 - 2^(-2I)), I in bits.
double linfoot(double mutual_info_bits);

/// Binary-alphabet lower bound 2^I - 1 <= rho_m^2 (via the chi^2 identity).
/// Requires min alphabet exactly 2; throws AlphabetTooLarge otherwise.
BoundReport check_binary_lower_bound(const JointDistribution& dist);

/// P_min * rho_m^2 <= sqrt((2 ln 2) I).
BoundReport check_pmin_upper_bound(const JointDistribution& dist);

struct RatioSupremumReport {
  bool skipped = false;   // rho_m(X;Y) == 0: the ratio supremum is vacuous
  double rho_xy = 0.0;
  double max_ratio = 0.0;  // over the random filters tried
  BoundReport sup_bound;       // max_ratio <= rho_m(X;Y)
  BoundReport achievability;   // backward-channel filter attains the supremum
};

/// Probes sup_{X->Y->Z} rho_m(X;Z)/rho_m(Y;Z) = rho_m(X;Y): random filters
/// P_{Z|Y} with |Z| <= |Y|+1 must never exceed the bound, and the
/// backward-channel construction must attain it.
RatioSupremumReport check_ratio_supremum(const JointDistribution& dist,
                                       int num_filters = 100,
                                       std::uint64_t seed = 0);

/// Randomized verification sweep over Dirichlet(1) joints up to
/// max_dim x max_dim (2 x K for the binary-only bound): chi^2 identity,
/// backward-channel identity, binary lower bound, P_min upper bound.
std::vector<BoundReport> bounds_sweep(int trials, int max_dim, std::uint64_t seed);

}  // namespace corrpriv
