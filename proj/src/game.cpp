#include "prefspace/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace prefspace {

int outcome_count(std::span<const int> strategy_counts) {
  long long total = 1;
  for (int c : strategy_counts) {
    total *= c;
    if (total > std::numeric_limits<int>::max()) throw std::invalid_argument("outcome space too large");
  }
  return static_cast<int>(total);
}

int outcome_index(std::span<const int> profile, std::span<const int> strategy_counts) {
  int idx = 0;
  for (size_t p = 0; p < strategy_counts.size(); ++p) {
    if (profile[p] < 0 || profile[p] >= strategy_counts[p])
      throw std::invalid_argument("strategy index out of range");
    idx = idx * strategy_counts[p] + profile[p];
  }
  return idx;
}

std::vector<int> outcome_profile(int index, std::span<const int> strategy_counts) {
  std::vector<int> profile(strategy_counts.size());
  for (int p = static_cast<int>(strategy_counts.size()) - 1; p >= 0; --p) {
    profile[p] = index % strategy_counts[p];
    index /= strategy_counts[p];
  }
  return profile;
}

FiniteGame::FiniteGame(std::vector<int> strategy_counts, std::vector<double> payoffs)
    : counts_(std::move(strategy_counts)), payoffs_(std::move(payoffs)) {
  if (counts_.size() < 2) throw std::invalid_argument("player count must be at least 2");
  for (int c : counts_)
    if (c < 2) throw std::invalid_argument("each player needs at least 2 strategies");
  outcomes_ = outcome_count(counts_);
  if (payoffs_.size() != static_cast<size_t>(outcomes_) * counts_.size())
    throw std::invalid_argument("payoff tensor shape mismatch");
  for (double u : payoffs_) {
    if (!std::isfinite(u)) throw std::invalid_argument("payoff entries must be finite");
    if (u < 0.0) throw std::invalid_argument("negative payoff");
  }
}

double FiniteGame::max_payoff(int player) const {
  double m = payoff(0, player);
  for (int o = 1; o < outcomes_; ++o) m = std::max(m, payoff(o, player));
  return m;
}

double FiniteGame::min_payoff(int player) const {
  double m = payoff(0, player);
  for (int o = 1; o < outcomes_; ++o) m = std::min(m, payoff(o, player));
  return m;
}

bool FiniteGame::constant_payoff(int player) const {
  return max_payoff(player) == min_payoff(player);
}

FiniteGame make_finite_game(std::vector<int> strategy_counts, std::vector<double> payoffs) {
  return FiniteGame(std::move(strategy_counts), std::move(payoffs));
}

std::vector<double> subjective_payoffs(const FiniteGame& g, const Matrix& v) {
  const int n = g.player_count();
  if (v.rows() != n || v.cols() != n) throw std::invalid_argument("preference dimension mismatch");
  std::vector<double> out(g.payoffs().size());
  for (int o = 0; o < g.outcomes(); ++o) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += v(i, j) * g.payoff(o, j);
      out[static_cast<size_t>(o) * n + i] = s;
    }
  }
  return out;
}

CournotDuopoly::CournotDuopoly(double a, double c)
    : CournotDuopoly(a, c, {0.0, (a - c) / 2.0}, {0.0, (a - c) / 2.0}) {}

CournotDuopoly::CournotDuopoly(double a, double c, std::pair<double, double> bounds1,
                               std::pair<double, double> bounds2)
    : a_(a), c_(c), bounds_{bounds1, bounds2} {
  if (!(a > 0.0)) throw std::invalid_argument("demand intercept a must be positive");
  if (!(c >= 0.0) || !(c < a)) throw std::invalid_argument("unit cost c must satisfy 0 <= c < a");
  for (auto [lo, hi] : bounds_) {
    if (lo < 0.0 || hi > (a - c) / 2.0 || lo > hi)
      throw std::invalid_argument("quantity bounds must lie within [0, (a-c)/2]");
  }
}

std::vector<double> CournotDuopoly::payoffs(std::span<const double> q) const {
  const double margin = a_ - q[0] - q[1] - c_;
  return {q[0] * margin, q[1] * margin};
}

double CournotDuopoly::best_response(int player, std::span<const double> profile,
                                     std::span<const double> weights) const {
  // Objective: w_self * q (a - c - q - q_other) + w_other * q_other (a - c - q - q_other),
  // a quadratic in q with leading coefficient -w_self.
  const double q_other = profile[1 - player];
  const double w_self = weights[player];
  const double w_other = weights[1 - player];
  const auto [lo, hi] = bounds_[player];
  const double slack = a_ - c_ - q_other;

  auto value = [&](double q) {
    const double margin = a_ - c_ - q - q_other;
    return w_self * q * margin + w_other * q_other * margin;
  };

  if (w_self > 0.0) {
    const double vertex = (w_self * slack - w_other * q_other) / (2.0 * w_self);
    return std::clamp(vertex, lo, hi);
  }
  // Convex or linear objective: the maximum is at an interval endpoint.
  const double v_lo = value(lo), v_hi = value(hi);
  return v_hi > v_lo ? hi : lo;  // ties resolve to the lower quantity
}

std::vector<double> cournot_profits(const CournotDuopoly& g, std::span<const double> quantities) {
  for (int p = 0; p < 2; ++p) {
    const auto [lo, hi] = g.bounds(p);
    if (quantities[p] < lo || quantities[p] > hi)
      throw std::invalid_argument("quantity out of bounds");
  }
  return g.payoffs(quantities);
}

VotingGame::VotingGame(std::vector<double> w, double q) : weights(std::move(w)), quota(q) {
  if (weights.empty()) throw std::invalid_argument("voting game needs players");
  double total = 0.0;
  for (double wi : weights) {
    if (!(wi > 0.0)) throw std::invalid_argument("weights must be positive");
    total += wi;
  }
  if (!(quota > 0.0)) throw std::invalid_argument("quota must be positive");
  if (quota > total) throw std::invalid_argument("quota exceeds total weight");
}

int voting_outcome(const VotingGame& g, std::span<const int> votes) {
  if (votes.size() != g.weights.size()) throw std::invalid_argument("vote profile size mismatch");
  double yes = 0.0;
  for (size_t i = 0; i < votes.size(); ++i) {
    if (votes[i] != 0 && votes[i] != 1) throw std::invalid_argument("votes must be 0 or 1");
    if (votes[i] == 1) yes += g.weights[i];
  }
  return yes >= g.quota ? 1 : 0;
}

std::vector<int> voting_payoffs(const VotingGame& g, std::span<const int> votes) {
  const int outcome = voting_outcome(g, votes);
  std::vector<int> u(votes.size());
  for (size_t i = 0; i < votes.size(); ++i) u[i] = (votes[i] == outcome) ? 1 : 0;
  return u;
}

}  // namespace prefspace
