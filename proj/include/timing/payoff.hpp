#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "timing/grid.hpp"
#include "timing/outcome.hpp"
#include "timing/rng.hpp"
#include "timing/strategy.hpp"

namespace timing::payoff {

/// One player's payoff processes along a path: leader / follower /
/// simultaneous values per node, plus the terminal simultaneous value
/// (the follower's terminal value coincides with it by convention).
struct ProcessView {
  std::function<double(node_t)> leader;
  std::function<double(node_t)> follower;
  std::function<double(node_t)> both;
  double terminal_both = 0.0;
};

/// The six payoff processes of a two-player game on one path, sampled on
/// the grid (values are already discounted to time 0).
struct GameProcesses {
  std::vector<double> L1, F1, M1, L2, F2, M2;
  double m_inf1 = 0.0, m_inf2 = 0.0;
};

struct ProcessCheck {
  bool ok = true;
  std::string what;
  double max_abs = 0.0;  // boundedness spot check
};

/// Assumption checks: F >= M at every node, all values finite.
ProcessCheck check_processes(const TimeGrid& grid, const GameProcesses& gp);

/// View of player 0 or 1 into the six processes (gp must outlive the view).
ProcessView player_view(const GameProcesses& gp, int player);

/// Expected payoff of the viewed player on one path, given both extended
/// strategies:
///   int_[theta,tau)(1-g_j) L_i dg_i  +  int_[theta,tau)(1-g_i) F_i dg_j
///   + sum_{s<tau} dg_i dg_j M_i
///   + lambda_{L,i} L_i(tau) + lambda_{L,j} F_i(tau) + lambda_M M_i(tau),
/// with tau and the lambdas from outcome::resolve.  Inside the integrals
/// the opposing distribution enters at its post-jump node value, so the
/// three terms exactly partition the stopping mass; when no extension is
/// ever used the terminal term is (1-g_i(inf-))(1-g_j(inf-)) M_inf.
double path_payoff(const TimeGrid& grid, const ProcessView& procs,
                   const outcome::StrategyView& s_i, const outcome::StrategyView& s_j,
                   const outcome::SweepParams& sp = {});

/// Dense convenience overload (validates the strategies).
double path_payoff(const TimeGrid& grid, const GameProcesses& gp, int player,
                   const strategy::StrategyPath& s_own, const strategy::StrategyPath& s_opp,
                   const outcome::SweepParams& sp = {});

struct PayoffEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_paths = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo mean of a per-path evaluation.  Every path gets its own
/// counter-split substream, and per-path values are reduced in path order,
/// so the result does not depend on the worker count.
template <class Eval>  // double eval(std::uint64_t path_index, Rng&)
PayoffEstimate mc_estimate(std::uint64_t n_paths, std::uint64_t seed, Eval&& eval,
                           unsigned workers = 1) {
  std::vector<double> vals(n_paths);
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t p = lo; p < hi; ++p) {
      Rng rng(substream(seed, p));
      vals[p] = eval(p, rng);
    }
  };
  if (workers <= 1 || n_paths < 2 * workers) {
    run(0, n_paths);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n_paths + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = w * chunk, hi = std::min<std::uint64_t>(n_paths, lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  double sum = 0.0;
  for (double v : vals) sum += v;
  double mean = sum / static_cast<double>(n_paths);
  double ss = 0.0;
  for (double v : vals) ss += (v - mean) * (v - mean);
  PayoffEstimate est;
  est.mean = mean;
  est.n_paths = n_paths;
  est.seed = seed;
  est.std_error =
      n_paths > 1 ? std::sqrt(ss / (static_cast<double>(n_paths) * (n_paths - 1.0))) : 0.0;
  return est;
}

/// Both routes of the change-of-variable identity for a Stieltjes integral
/// against a nondecreasing step function G on node range [a, b):
///   direct  = node-wise jump summation of |L| dG
///   inverse = integral of |L(tau_G(x))| over the occupation variable x,
///             with tau_G the left-continuous inverse of G, evaluated on a
///             refinement of G's jump levels.
std::pair<double, double> stieltjes_changevar(const std::vector<double>& L,
                                              const std::vector<double>& G, node_t a,
                                              node_t b);

}  // namespace timing::payoff
