#include "timing/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace timing {

TimeGrid::TimeGrid(std::vector<double> times) : times_(std::move(times)) {
  if (times_.empty()) throw std::invalid_argument("time grid: no nodes");
  if (times_.front() < 0.0) throw std::invalid_argument("time grid: t0 < 0");
  for (std::size_t k = 1; k < times_.size(); ++k) {
    if (!(times_[k] > times_[k - 1]))
      throw std::invalid_argument("time grid: times not strictly increasing");
  }
}

TimeGrid TimeGrid::uniform(std::size_t steps, double dt, double t0) {
  if (steps == 0 || dt <= 0.0) throw std::invalid_argument("time grid: bad uniform spec");
  std::vector<double> t(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) t[k] = t0 + static_cast<double>(k) * dt;
  return TimeGrid(std::move(t));
}

double TimeGrid::min_step(node_t k, std::size_t span) const {
  double m = std::numeric_limits<double>::infinity();
  node_t end = std::min(times_.size() - 1, k + span);
  for (node_t i = k; i < end; ++i) m = std::min(m, times_[i + 1] - times_[i]);
  return m;
}

node_t TimeGrid::node_at_or_after(double t) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  return static_cast<node_t>(it - times_.begin());
}

}  // namespace timing
