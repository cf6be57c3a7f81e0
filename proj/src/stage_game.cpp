#include "timing/stage_game.hpp"

#include <stdexcept>

#include "timing/rng.hpp"

namespace timing::stage {

namespace {

void check_args(double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw std::domain_error("stage probabilities must lie in [0,1]");
  if (x == 0.0 && y == 0.0)
    throw std::domain_error("stage outcome undefined at (0,0): no continuous extension");
}

}  // namespace

double leader_prob(double x, double y) {
  check_args(x, y);
  return x * (1.0 - y) / (x + y - x * y);
}

double both_prob(double x, double y) {
  if (x == 0.0 && y == 0.0) return 0.0;  // continuous extension exists here
  check_args(x, y);
  return x * y / (x + y - x * y);
}

StageOutcome outcome(double a_i, double a_j) {
  check_args(a_i, a_j);
  double denom = a_i + a_j - a_i * a_j;
  return {a_i * (1.0 - a_j) / denom, a_j * (1.0 - a_i) / denom, a_i * a_j / denom};
}

StageOutcome repeated_oracle(double a_i, double a_j) {
  check_args(a_i, a_j);
  const double q = (1.0 - a_i) * (1.0 - a_j);  // both survive one round
  const double wi = a_i * (1.0 - a_j);
  const double wj = a_j * (1.0 - a_i);
  const double wb = a_i * a_j;

  // Kahan-compensated sums
  double si = 0, sj = 0, sb = 0, ci = 0, cj = 0, cb = 0;
  auto add = [](double& s, double& c, double term) {
    double y = term - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  };
  double pk = 1.0;
  for (int k = 0; k < 1 << 20; ++k) {
    add(si, ci, wi * pk);
    add(sj, cj, wj * pk);
    add(sb, cb, wb * pk);
    pk *= q;
    if (pk < 1e-18) break;
  }
  return {si, sj, sb};
}

StageOutcome simulate(double a_i, double a_j, std::uint64_t trials, std::uint64_t seed) {
  check_args(a_i, a_j);
  if (trials == 0) throw std::invalid_argument("simulate: need at least one trial");
  std::uint64_t ni = 0, nj = 0, nb = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(substream(seed, t));
    for (;;) {
      bool si = rng.bernoulli(a_i);
      bool sj = rng.bernoulli(a_j);
      if (si && sj) {
        ++nb;
        break;
      }
      if (si) {
        ++ni;
        break;
      }
      if (sj) {
        ++nj;
        break;
      }
    }
  }
  double n = static_cast<double>(trials);
  return {ni / n, nj / n, nb / n};
}

}  // namespace timing::stage
