#include "opsat/scores.hpp"

#include <stdexcept>

namespace opsat {

namespace {
// Far beyond anything reachable with unit bumps and decay < 1, but float
// scores are clamped back into range all the same.
constexpr double kRescaleThreshold = 1e100;
constexpr double kRescaleFactor = 1e-100;
}  // namespace

ScoreState::ScoreState(ScoreMode mode, int var_count, double decay)
    : mode_(mode), decay_(decay) {
  if (mode == ScoreMode::kFloat && (decay <= 0.0 || decay >= 1.0))
    throw std::invalid_argument("ScoreState: decay must be in (0, 1)");
  if (mode == ScoreMode::kExact)
    bumps_.resize(static_cast<std::size_t>(var_count) + 1);
  else
    score_.resize(static_cast<std::size_t>(var_count) + 1, 0.0);
}

void ScoreState::bump_and_decay(const Clause& learned) {
  ++conflicts_;
  if (mode_ == ScoreMode::kExact) {
    for (Lit l : learned) bumps_[static_cast<std::size_t>(l.var())].push_back(conflicts_);
    return;
  }
  bool rescale = false;
  for (double& q : score_) {
    q *= decay_;
    if (q > kRescaleThreshold) rescale = true;
  }
  for (Lit l : learned) {
    double& q = score_[static_cast<std::size_t>(l.var())];
    q += 1.0;
    if (q > kRescaleThreshold) rescale = true;
  }
  if (rescale)
    for (double& q : score_) q *= kRescaleFactor;
}

bool ScoreState::ranks_above(Var a, Var b) const {
  if (mode_ == ScoreMode::kFloat) return score_[a] > score_[b];
  const auto& x = bumps_[static_cast<std::size_t>(a)];
  const auto& y = bumps_[static_cast<std::size_t>(b)];
  auto i = x.rbegin();
  auto j = y.rbegin();
  for (; i != x.rend() && j != y.rend(); ++i, ++j)
    if (*i != *j) return *i > *j;
  return i != x.rend();  // extra older bumps still outrank nothing at all
}

bool ScoreState::ranks_equal(Var a, Var b) const {
  if (mode_ == ScoreMode::kFloat) return score_[a] == score_[b];
  return bumps_[static_cast<std::size_t>(a)] ==
         bumps_[static_cast<std::size_t>(b)];
}

}  // namespace opsat
