#include "timing/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace timing::payoff {

ProcessCheck check_processes(const TimeGrid& grid, const GameProcesses& gp) {
  ProcessCheck c;
  const std::size_t n = grid.size();
  const std::vector<double>* all[] = {&gp.L1, &gp.F1, &gp.M1, &gp.L2, &gp.F2, &gp.M2};
  for (const auto* v : all) {
    if (v->size() != n) {
      c.ok = false;
      c.what = "process length does not match the grid";
      return c;
    }
  }
  for (node_t k = 0; k < n; ++k) {
    for (const auto* v : all) {
      double x = (*v)[k];
      if (!std::isfinite(x)) {
        c.ok = false;
        c.what = "non-finite process value at node " + std::to_string(k);
        return c;
      }
      c.max_abs = std::max(c.max_abs, std::abs(x));
    }
    if (gp.F1[k] < gp.M1[k] || gp.F2[k] < gp.M2[k]) {
      c.ok = false;
      c.what = "follower value below simultaneous value at node " + std::to_string(k);
      return c;
    }
  }
  c.max_abs = std::max({c.max_abs, std::abs(gp.m_inf1), std::abs(gp.m_inf2)});
  return c;
}

ProcessView player_view(const GameProcesses& gp, int player) {
  if (player != 0 && player != 1) throw std::invalid_argument("player must be 0 or 1");
  const std::vector<double>* L = player == 0 ? &gp.L1 : &gp.L2;
  const std::vector<double>* F = player == 0 ? &gp.F1 : &gp.F2;
  const std::vector<double>* M = player == 0 ? &gp.M1 : &gp.M2;
  ProcessView v;
  v.leader = [L](node_t k) { return (*L)[k]; };
  v.follower = [F](node_t k) { return (*F)[k]; };
  v.both = [M](node_t k) { return (*M)[k]; };
  v.terminal_both = player == 0 ? gp.m_inf1 : gp.m_inf2;
  return v;
}

double path_payoff(const TimeGrid& grid, const ProcessView& procs,
                   const outcome::StrategyView& s_i, const outcome::StrategyView& s_j,
                   const outcome::SweepParams& sp) {
  const auto od = outcome::resolve(grid, s_i, s_j, sp);

  double v = 0.0;
  std::size_t pi = 0, pj = 0;
  double gi = 0.0, gj = 0.0;
  const node_t inf = grid.infinity();
  while (pi < s_i.g_jumps.size() || pj < s_j.g_jumps.size()) {
    node_t ni = pi < s_i.g_jumps.size() ? s_i.g_jumps[pi].first : inf;
    node_t nj = pj < s_j.g_jumps.size() ? s_j.g_jumps[pj].first : inf;
    node_t s = std::min(ni, nj);
    if (s >= od.tau_hat) break;  // the node mass at tau_hat belongs to the lambdas
    double dgi = 0.0, dgj = 0.0;
    if (ni == s) {
      dgi = s_i.g_jumps[pi].second - gi;
      gi = s_i.g_jumps[pi].second;
      ++pi;
    }
    if (nj == s) {
      dgj = s_j.g_jumps[pj].second - gj;
      gj = s_j.g_jumps[pj].second;
      ++pj;
    }
    if (dgi != 0.0) v += dgi * (1.0 - gj) * procs.leader(s);
    if (dgj != 0.0) v += dgj * (1.0 - gi) * procs.follower(s);
    if (dgi != 0.0 && dgj != 0.0) v += dgi * dgj * procs.both(s);
  }

  if (grid.is_infinite(od.tau_hat)) {
    v += od.both * procs.terminal_both;
  } else {
    v += od.leader_i * procs.leader(od.tau_hat) + od.leader_j * procs.follower(od.tau_hat) +
         od.both * procs.both(od.tau_hat);
  }
  return v;
}

double path_payoff(const TimeGrid& grid, const GameProcesses& gp, int player,
                   const strategy::StrategyPath& s_own, const strategy::StrategyPath& s_opp,
                   const outcome::SweepParams& sp) {
  auto check = check_processes(grid, gp);
  if (!check.ok) throw std::invalid_argument("path_payoff: " + check.what);
  auto rep_own = strategy::validate(grid, s_own);
  auto rep_opp = strategy::validate(grid, s_opp);
  if (!rep_own.ok() || !rep_opp.ok())
    throw std::invalid_argument("path_payoff: invalid strategy");
  return path_payoff(grid, player_view(gp, player), outcome::view_of(grid, s_own),
                     outcome::view_of(grid, s_opp), sp);
}

std::pair<double, double> stieltjes_changevar(const std::vector<double>& L,
                                              const std::vector<double>& G, node_t a,
                                              node_t b) {
  if (L.size() != G.size()) throw std::invalid_argument("changevar: length mismatch");
  if (b > L.size()) b = L.size();
  double prev = 0.0;
  for (double g : G) {
    if (g < prev) throw std::invalid_argument("changevar: G not nondecreasing");
    if (g < 0.0) throw std::invalid_argument("changevar: G negative");
    prev = g;
  }

  double direct = 0.0;
  for (node_t k = a; k < b; ++k) {
    double dg = G[k] - (k == 0 ? 0.0 : G[k - 1]);
    direct += std::abs(L[k]) * dg;
  }

  // inverse route: tau_G(x) = inf{ t : G_t >= x }, integrated in x over a
  // refinement of the jump levels, each evaluated by independent bisection
  double inverse = 0.0;
  double lo = 0.0;
  for (node_t k = 0; k < G.size(); ++k) {
    double hi = G[k];
    if (hi <= lo) continue;  // no jump here
    const int refine = 4;
    for (int r = 0; r < refine; ++r) {
      double x = lo + (hi - lo) * (r + 0.5) / refine;
      auto it = std::lower_bound(G.begin(), G.end(), x);
      node_t tau = static_cast<node_t>(it - G.begin());
      if (tau >= a && tau < b) inverse += std::abs(L[tau]) * (hi - lo) / refine;
    }
    lo = hi;
  }
  return {direct, inverse};
}

}  // namespace timing::payoff
