#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "timing/grid.hpp"

namespace timing::strategy {

/// One player's extended mixed strategy sampled on a grid, for one path.
/// `g` is the cumulative stopping distribution (right-continuous step
/// function, node value applies on [t_k, t_{k+1})), `alpha` the extension
/// process.  Terminal conventions g(inf)=1, alpha(inf)=1 are implicit.
struct StrategyPath {
  std::vector<double> g;
  std::vector<double> alpha;
  node_t start = 0;  // subgame start on this path
};

enum class Clause {
  shape,          // array sizes inconsistent with the grid
  g_range,        // g outside [0,1]
  g_monotone,     // g decreasing
  g_before_start, // g positive before the subgame start
  alpha_range,    // alpha outside [0,1]
  alpha_support,  // alpha > 0 at a node where g < 1
};

struct Violation {
  std::size_t path;
  node_t node;
  Clause clause;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* clause_name(Clause c);

ValidationReport validate(const TimeGrid& grid, const StrategyPath& s, std::size_t path_id = 0);
ValidationReport validate(const TimeGrid& grid, const std::vector<StrategyPath>& paths);

/// Pure stopping time embedded as an extended strategy: g = alpha = 1 from
/// the stop node on (all zero on the finite grid when the rule never fires).
StrategyPath pure(const TimeGrid& grid, node_t stop, node_t start);

/// First grid index >= start at which `hit` holds; grid.infinity() if never.
node_t first_hit(const TimeGrid& grid, node_t start, const std::function<bool(node_t)>& hit);

// --- strategy families over a finite subgame catalog --------------------

struct Subgame {
  std::string name;
  // per fixture path: the start node of this subgame
  std::function<node_t(std::size_t path)> start;
};

/// Strategies of one player for every subgame in a catalog, on a fixed set
/// of fixture paths: family[subgame][path].
struct Family {
  std::vector<Subgame> catalog;
  std::vector<std::vector<StrategyPath>> per_subgame;
};

struct ConsistencyIssue {
  std::size_t path;
  node_t node;
  std::string what;
};

struct ConsistencyReport {
  std::vector<ConsistencyIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Bayes-law consistency between the strategies for two nested subgame
/// starts theta <= theta':
///   g[theta](t) = g[theta](theta'-) + (1 - g[theta](theta'-)) g[theta'](t)
/// for grid t >= theta', and alpha[theta] = alpha[theta'] there.
ConsistencyReport check_time_consistency(const TimeGrid& grid,
                                         const std::vector<StrategyPath>& at_theta,
                                         const std::vector<StrategyPath>& at_theta_prime,
                                         double tol = 1e-12);

// --- JSON fixture form ---------------------------------------------------
// {grid: [...], paths: n, G: [[...]], alpha: [[...]], theta_rule: name,
//  theta: [start per path]}

std::string to_json(const TimeGrid& grid, const std::vector<StrategyPath>& paths,
                    const std::string& theta_rule);
std::pair<TimeGrid, std::vector<StrategyPath>> from_json(const std::string& text,
                                                         std::string* theta_rule = nullptr);

}  // namespace timing::strategy
