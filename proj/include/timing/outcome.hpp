#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "timing/grid.hpp"
#include "timing/strategy.hpp"

namespace timing::outcome {

/// Per-path view of one player's extended strategy, cheap enough for
/// simulation loops: the stopping distribution as its sorted jump list and
/// the extension process as a node-indexed callable.  g before the first
/// jump is 0; g(inf)=1 and alpha(inf)=1 are the usual terminal conventions.
struct StrategyView {
  std::vector<std::pair<node_t, double>> g_jumps;  // (node, value after jump)
  std::function<double(node_t)> alpha;             // finite nodes only
  node_t alpha_start = 0;  // first finite node >= start with alpha > 0, else grid.infinity()
  node_t start = 0;

  double g_at(node_t k) const {
    double v = 0.0;
    for (const auto& [n, val] : g_jumps) {
      if (n > k) break;
      v = val;
    }
    return v;
  }
  double g_before(node_t k) const { return k == 0 ? 0.0 : g_at(k - 1); }
  double g_jump(node_t k) const { return g_at(k) - g_before(k); }
  double g_final() const { return g_jumps.empty() ? 0.0 : g_jumps.back().second; }
};

/// Build a view from dense samples (desk-scale fixtures).
StrategyView view_of(const TimeGrid& grid, const strategy::StrategyPath& s);

struct RightLimitEstimate {
  double liminf_est = 0.0;
  double limsup_est = 0.0;
  bool converged = false;
  int window_count = 0;
};

struct SweepParams {
  double window0_steps = 64.0;  // initial window, in multiples of the local grid step
  double shrink = 0.5;
  double tol = 1e-6;
  int min_samples = 4;
};

/// Estimate liminf/limsup of leader_prob(alpha_i(t), alpha_j(t)) over t
/// approaching tau_hat from the right (restricted to alpha_i+alpha_j > 0)
/// by taking min/max over geometrically shrinking windows.  The estimates
/// come from the last window pair that agreed within tol; if no pair
/// stabilises before the sample floor, the widest window's envelope is
/// reported with converged=false.
/// Throws std::runtime_error when no window contains a qualifying sample.
RightLimitEstimate right_limit_estimate(const TimeGrid& grid,
                                        const std::function<double(node_t)>& alpha_i,
                                        const std::function<double(node_t)>& alpha_j,
                                        node_t tau_hat, const SweepParams& sp = {});

struct OutcomeDistribution {
  node_t tau_hat = 0;      // grid.infinity() when no extension is ever used
  double leader_i = 0.0;   // lambda_{L,i}
  double leader_j = 0.0;   // lambda_{L,j}
  double both = 0.0;       // lambda_M
  double residual = 0.0;   // mass at tau_hat left unassigned (0 in every case)
  int rule = 0;            // which case fired: 1,2,3,4, or 0 for tau_hat = inf
};

/// Outcome masses at the first node where some extension is positive.
/// The sum leader_i + leader_j + both equals
/// (1 - g_i(tau_hat-)) (1 - g_j(tau_hat-)); mass stopped strictly before
/// tau_hat belongs to the payoff integrals, not to the outcome split.
OutcomeDistribution resolve(const TimeGrid& grid, const StrategyView& s_i,
                            const StrategyView& s_j, const SweepParams& sp = {});

/// Dense-sample convenience overload; validates both strategies first.
OutcomeDistribution resolve(const TimeGrid& grid, const strategy::StrategyPath& s_i,
                            const strategy::StrategyPath& s_j, const SweepParams& sp = {});

}  // namespace timing::outcome
