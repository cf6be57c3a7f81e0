#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace timing {

using node_t = std::size_t;

/// Discrete time axis: strictly increasing finite node times plus a
/// designated terminal slot representing t = infinity.  A step function
/// sampled on the grid takes its node value on [t_k, t_{k+1}).
class TimeGrid {
 public:
  TimeGrid() = default;
  explicit TimeGrid(std::vector<double> times);

  static TimeGrid uniform(std::size_t steps, double dt, double t0 = 0.0);

  std::size_t size() const { return times_.size(); }
  node_t infinity() const { return times_.size(); }
  bool is_infinite(node_t k) const { return k >= times_.size(); }

  double time(node_t k) const {
    return is_infinite(k) ? std::numeric_limits<double>::infinity() : times_[k];
  }
  const std::vector<double>& times() const { return times_; }

  // smallest spacing between consecutive nodes in [k, k+span]
  double min_step(node_t k, std::size_t span) const;

  // first node with time >= t (clamped to the terminal slot)
  node_t node_at_or_after(double t) const;

 private:
  std::vector<double> times_;
};

}  // namespace timing
