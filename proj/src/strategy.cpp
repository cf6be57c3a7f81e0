#include "timing/strategy.hpp"

#include <stdexcept>

#include <json.hpp>

namespace timing::strategy {

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::shape: return "shape";
    case Clause::g_range: return "g_range";
    case Clause::g_monotone: return "g_monotone";
    case Clause::g_before_start: return "g_before_start";
    case Clause::alpha_range: return "alpha_range";
    case Clause::alpha_support: return "alpha_support";
  }
  return "?";
}

ValidationReport validate(const TimeGrid& grid, const StrategyPath& s, std::size_t path_id) {
  ValidationReport rep;
  const std::size_t n = grid.size();
  if (s.g.size() != n || s.alpha.size() != n || s.start > grid.infinity()) {
    rep.violations.push_back({path_id, 0, Clause::shape});
    return rep;
  }
  double prev = 0.0;
  for (node_t k = 0; k < n; ++k) {
    if (s.g[k] < 0.0 || s.g[k] > 1.0) rep.violations.push_back({path_id, k, Clause::g_range});
    if (s.g[k] < prev) rep.violations.push_back({path_id, k, Clause::g_monotone});
    prev = s.g[k];
    if (k < s.start && s.g[k] != 0.0)
      rep.violations.push_back({path_id, k, Clause::g_before_start});
    if (s.alpha[k] < 0.0 || s.alpha[k] > 1.0)
      rep.violations.push_back({path_id, k, Clause::alpha_range});
    if (s.alpha[k] > 0.0 && s.g[k] != 1.0)
      rep.violations.push_back({path_id, k, Clause::alpha_support});
  }
  return rep;
}

ValidationReport validate(const TimeGrid& grid, const std::vector<StrategyPath>& paths) {
  ValidationReport rep;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    auto one = validate(grid, paths[p], p);
    rep.violations.insert(rep.violations.end(), one.violations.begin(), one.violations.end());
  }
  return rep;
}

StrategyPath pure(const TimeGrid& grid, node_t stop, node_t start) {
  if (stop < start) throw std::invalid_argument("pure strategy: stop time precedes subgame start");
  StrategyPath s;
  s.start = start;
  s.g.assign(grid.size(), 0.0);
  s.alpha.assign(grid.size(), 0.0);
  for (node_t k = stop; k < grid.size(); ++k) {
    s.g[k] = 1.0;
    s.alpha[k] = 1.0;
  }
  return s;
}

node_t first_hit(const TimeGrid& grid, node_t start, const std::function<bool(node_t)>& hit) {
  for (node_t k = start; k < grid.size(); ++k)
    if (hit(k)) return k;
  return grid.infinity();
}

ConsistencyReport check_time_consistency(const TimeGrid& grid,
                                         const std::vector<StrategyPath>& at_theta,
                                         const std::vector<StrategyPath>& at_theta_prime,
                                         double tol) {
  if (at_theta.size() != at_theta_prime.size())
    throw std::invalid_argument("time consistency: path counts differ");
  ConsistencyReport rep;
  for (std::size_t p = 0; p < at_theta.size(); ++p) {
    const auto& a = at_theta[p];
    const auto& b = at_theta_prime[p];
    if (a.g.size() != grid.size() || b.g.size() != grid.size())
      throw std::invalid_argument("time consistency: grid shapes differ");
    if (a.start > b.start)
      throw std::invalid_argument("time consistency: theta > theta' on path " +
                                  std::to_string(p));
    const node_t tp = b.start;
    const double g_left = tp == 0 ? 0.0 : a.g[tp - 1];  // g[theta](theta'-)
    bool flagged = false;
    for (node_t k = tp; k < grid.size() && !flagged; ++k) {
      double want = g_left + (1.0 - g_left) * b.g[k];
      if (std::abs(a.g[k] - want) > tol) {
        rep.issues.push_back({p, k, "g mismatch: got " + std::to_string(a.g[k]) +
                                        " want " + std::to_string(want)});
        flagged = true;
      }
      if (a.alpha[k] != b.alpha[k]) {
        rep.issues.push_back({p, k, "alpha mismatch"});
        flagged = true;
      }
    }
  }
  return rep;
}

std::string to_json(const TimeGrid& grid, const std::vector<StrategyPath>& paths,
                    const std::string& theta_rule) {
  nlohmann::json j;
  j["grid"] = grid.times();
  j["paths"] = paths.size();
  j["theta_rule"] = theta_rule;
  auto& G = j["G"] = nlohmann::json::array();
  auto& A = j["alpha"] = nlohmann::json::array();
  auto& T = j["theta"] = nlohmann::json::array();
  for (const auto& p : paths) {
    G.push_back(p.g);
    A.push_back(p.alpha);
    T.push_back(p.start);
  }
  return j.dump(2);
}

std::pair<TimeGrid, std::vector<StrategyPath>> from_json(const std::string& text,
                                                         std::string* theta_rule) {
  auto j = nlohmann::json::parse(text);
  TimeGrid grid(j.at("grid").get<std::vector<double>>());
  std::size_t n = j.at("paths").get<std::size_t>();
  if (theta_rule) *theta_rule = j.at("theta_rule").get<std::string>();
  std::vector<StrategyPath> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    out[p].g = j.at("G").at(p).get<std::vector<double>>();
    out[p].alpha = j.at("alpha").at(p).get<std::vector<double>>();
    out[p].start = j.at("theta").at(p).get<node_t>();
  }
  return {std::move(grid), std::move(out)};
}

}  // namespace timing::strategy
