#pragma once

#include <cstdint>

namespace timing::stage {

// Limit outcome probabilities of an infinitely repeated stopping round in
// which players i and j stop with constant per-round probabilities x and y.
//
//   leader_prob(x,y) = x(1-y) / (x+y-xy)   probability i stops strictly first
//   both_prob(x,y)   = xy / (x+y-xy)       probability of a simultaneous stop
//
// leader_prob has no continuous extension at the origin; (0,0) is rejected.
double leader_prob(double x, double y);
double both_prob(double x, double y);

struct StageOutcome {
  double leader_i;  // i stops first
  double leader_j;  // j stops first
  double both;      // simultaneous
};

// Closed-form split; the three probabilities sum to one.
StageOutcome outcome(double a_i, double a_j);

// Independent oracle: sums the geometric series
//   sum_k [(1-a_i)(1-a_j)]^k * { a_i(1-a_j), a_j(1-a_i), a_i a_j }
// term by term (compensated) instead of using the rational closed form.
StageOutcome repeated_oracle(double a_i, double a_j);

// Empirical frequencies over `trials` simulated repeated rounds.
// Identical seed gives identical output.
StageOutcome simulate(double a_i, double a_j, std::uint64_t trials, std::uint64_t seed);

}  // namespace timing::stage
