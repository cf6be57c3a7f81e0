#include "timing/outcome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "timing/stage_game.hpp"

namespace timing::outcome {

StrategyView view_of(const TimeGrid& grid, const strategy::StrategyPath& s) {
  StrategyView v;
  v.start = s.start;
  double prev = 0.0;
  for (node_t k = 0; k < s.g.size(); ++k) {
    if (s.g[k] != prev) {
      v.g_jumps.emplace_back(k, s.g[k]);
      prev = s.g[k];
    }
  }
  v.alpha_start = grid.infinity();
  for (node_t k = s.start; k < s.alpha.size(); ++k) {
    if (s.alpha[k] > 0.0) {
      v.alpha_start = k;
      break;
    }
  }
  const std::vector<double>* a = &s.alpha;
  v.alpha = [a](node_t k) { return (*a)[k]; };
  return v;
}

RightLimitEstimate right_limit_estimate(const TimeGrid& grid,
                                        const std::function<double(node_t)>& alpha_i,
                                        const std::function<double(node_t)>& alpha_j,
                                        node_t tau_hat, const SweepParams& sp) {
  if (tau_hat + 1 >= grid.size())
    throw std::runtime_error("right limit: no finite nodes after tau_hat");
  const double t0 = grid.time(tau_hat);
  const double base_step = grid.time(tau_hat + 1) - t0;

  struct Level {
    double lo, hi;
    int count;
  };
  std::vector<Level> levels;

  double w = sp.window0_steps * base_step;
  while (w >= base_step) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    for (node_t n = tau_hat + 1; n < grid.size() && grid.time(n) <= t0 + w; ++n) {
      double ai = alpha_i(n), aj = alpha_j(n);
      if (ai + aj <= 0.0) continue;
      double v = stage::leader_prob(ai, aj);
      if (count == 0) {
        lo = hi = v;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      ++count;
    }
    if (count == 0) break;  // windows are nested; deeper ones stay empty
    levels.push_back({lo, hi, count});
    if (count < sp.min_samples) break;
    w *= sp.shrink;
  }

  if (levels.empty())
    throw std::runtime_error("right limit: no sample with positive extensions after tau_hat");

  RightLimitEstimate est;
  est.window_count = static_cast<int>(levels.size());
  est.liminf_est = levels.front().lo;
  est.limsup_est = levels.front().hi;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (std::abs(levels[k].lo - levels[k - 1].lo) <= sp.tol &&
        std::abs(levels[k].hi - levels[k - 1].hi) <= sp.tol) {
      est.liminf_est = levels[k].lo;
      est.limsup_est = levels[k].hi;
      est.converged = true;
    }
  }
  return est;
}

namespace {

double clamp_mass(double x) {
  if (x < 0.0 && x > -1e-12) return 0.0;
  return x;
}

}  // namespace

OutcomeDistribution resolve(const TimeGrid& grid, const StrategyView& s_i,
                            const StrategyView& s_j, const SweepParams& sp) {
  OutcomeDistribution out;
  const node_t tau = std::min(s_i.alpha_start, s_j.alpha_start);
  out.tau_hat = tau;

  if (grid.is_infinite(tau)) {
    // no extension ever used: remaining joint mass stops "at infinity"
    out.rule = 0;
    out.both = (1.0 - s_i.g_final()) * (1.0 - s_j.g_final());
    out.residual = 0.0;
    return out;
  }

  const double gi_m = s_i.g_before(tau);
  const double gj_m = s_j.g_before(tau);
  const double total = (1.0 - gi_m) * (1.0 - gj_m);

  const double a_i = s_i.alpha_start == tau ? s_i.alpha(tau) : 0.0;
  const double a_j = s_j.alpha_start == tau ? s_j.alpha(tau) : 0.0;
  // "support starts at tau in the limit sense": positive at tau or at the
  // very next node.  One grid step is the surrogate for t -> tau+.
  const bool imm_i = s_i.alpha_start <= tau + 1 && !grid.is_infinite(s_i.alpha_start);
  const bool imm_j = s_j.alpha_start <= tau + 1 && !grid.is_infinite(s_j.alpha_start);

  if (imm_i && !imm_j) {
    // i acts alone at tau against a possible atom of j's distribution
    out.rule = 1;
    out.leader_i = (1.0 - gi_m) * (1.0 - s_j.g_at(tau));
    out.both = (1.0 - gi_m) * a_i * s_j.g_jump(tau);
    out.leader_j = clamp_mass(total - out.leader_i - out.both);
  } else if (imm_j && !imm_i) {
    out.rule = 2;
    out.leader_j = (1.0 - gj_m) * (1.0 - s_i.g_at(tau));
    out.both = (1.0 - gj_m) * a_j * s_i.g_jump(tau);
    out.leader_i = clamp_mass(total - out.leader_j - out.both);
  } else if (std::max(a_i, a_j) == 1.0 || std::min(a_i, a_j) > 0.0) {
    out.rule = 3;
    auto s = stage::outcome(a_i, a_j);
    out.leader_i = total * s.leader_i;
    out.leader_j = total * s.leader_j;
    out.both = total * s.both;
  } else {
    // one extension is zero at tau with support immediately after, the other
    // is interior: combine liminf and limsup of the stage leader probability
    out.rule = 4;
    auto est_i = right_limit_estimate(grid, s_i.alpha, s_j.alpha, tau, sp);
    auto est_j = right_limit_estimate(grid, s_j.alpha, s_i.alpha, tau, sp);
    double half_i = 0.5 * (est_i.liminf_est + est_i.limsup_est);
    double half_j = 0.5 * (est_j.liminf_est + est_j.limsup_est);
    out.leader_i = total * (1.0 - a_j) * (a_i + (1.0 - a_i) * half_i);
    out.leader_j = total * (1.0 - a_i) * (a_j + (1.0 - a_j) * half_j);
    out.both = clamp_mass(total - out.leader_i - out.leader_j);
  }

  out.residual = total - out.leader_i - out.leader_j - out.both;
  return out;
}

OutcomeDistribution resolve(const TimeGrid& grid, const strategy::StrategyPath& s_i,
                            const strategy::StrategyPath& s_j, const SweepParams& sp) {
  if (s_i.g.size() != grid.size() || s_j.g.size() != grid.size() ||
      s_i.alpha.size() != grid.size() || s_j.alpha.size() != grid.size())
    throw std::invalid_argument("resolve: strategy samples do not match the grid");
  auto rep_i = strategy::validate(grid, s_i);
  auto rep_j = strategy::validate(grid, s_j);
  if (!rep_i.ok() || !rep_j.ok()) {
    const auto& v = rep_i.ok() ? rep_j.violations.front() : rep_i.violations.front();
    throw std::invalid_argument(std::string("resolve: invalid strategy (") +
                                strategy::clause_name(v.clause) + " at node " +
                                std::to_string(v.node) + ")");
  }
  return resolve(grid, view_of(grid, s_i), view_of(grid, s_j), sp);
}

}  // namespace timing::outcome
