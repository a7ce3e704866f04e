#ifndef PREFSPACE_GAME_HPP
#define PREFSPACE_GAME_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "prefspace/matrix.hpp"

namespace prefspace {

// Outcomes are enumerated lexicographically over strategy indices, with the
// first player's index most significant. All distributions and CSV columns
// follow this order.
int outcome_count(std::span<const int> strategy_counts);
int outcome_index(std::span<const int> profile, std::span<const int> strategy_counts);
std::vector<int> outcome_profile(int index, std::span<const int> strategy_counts);

// Finite normal-form game with nonnegative objective payoffs.
// Payoffs are stored outcome-major: payoffs[outcome * n + player].
class FiniteGame {
 public:
  FiniteGame(std::vector<int> strategy_counts, std::vector<double> payoffs);

  int player_count() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& strategy_counts() const { return counts_; }
  int outcomes() const { return outcomes_; }

  double payoff(int outcome, int player) const {
    return payoffs_[static_cast<size_t>(outcome) * counts_.size() + player];
  }
  const std::vector<double>& payoffs() const { return payoffs_; }

  double max_payoff(int player) const;
  double min_payoff(int player) const;

  // True when a player's payoff is the same at every outcome; such a player
  // has no payoff range to normalize against (rho is undefined for them).
  bool constant_payoff(int player) const;

 private:
  std::vector<int> counts_;
  std::vector<double> payoffs_;
  int outcomes_ = 0;
};

FiniteGame make_finite_game(std::vector<int> strategy_counts, std::vector<double> payoffs);

// Subjective payoff tensor (V u)_i(o) = sum_j v_ij u_j(o), same layout as
// FiniteGame::payoffs(). Entries may be negative. V may be any real matrix
// of matching dimension; unit rows are not required here.
std::vector<double> subjective_payoffs(const FiniteGame& g, const Matrix& v);

// Two-player continuous game with scalar strategies on closed intervals.
// The analysis layer only needs payoffs at a profile and a per-player scalar
// best response against a linear combination of the objective payoffs.
class ContinuousGame {
 public:
  virtual ~ContinuousGame() = default;
  virtual int player_count() const = 0;
  virtual std::pair<double, double> bounds(int player) const = 0;
  virtual std::vector<double> payoffs(std::span<const double> profile) const = 0;
  // argmax over q in bounds(player) of sum_j weights[j] * payoff_j, holding
  // the other coordinates of `profile` fixed. Ties resolve to the lower q.
  virtual double best_response(int player, std::span<const double> profile,
                               std::span<const double> weights) const = 0;
};

// Cournot duopoly: price P = a - q1 - q2, profit pi_i = q_i (P - c).
class CournotDuopoly final : public ContinuousGame {
 public:
  CournotDuopoly(double a, double c);
  CournotDuopoly(double a, double c, std::pair<double, double> bounds1,
                 std::pair<double, double> bounds2);

  double a() const { return a_; }
  double c() const { return c_; }

  int player_count() const override { return 2; }
  std::pair<double, double> bounds(int player) const override { return bounds_[player]; }
  std::vector<double> payoffs(std::span<const double> q) const override;
  double best_response(int player, std::span<const double> profile,
                       std::span<const double> weights) const override;

 private:
  double a_, c_;
  std::pair<double, double> bounds_[2];
};

std::vector<double> cournot_profits(const CournotDuopoly& g, std::span<const double> quantities);

// Weighted binary voting. The collective outcome is 1 iff the yes-weight
// reaches the quota; a player's payoff is 1 iff the outcome coincides with
// their own vote.
struct VotingGame {
  std::vector<double> weights;
  double quota = 0.0;

  VotingGame(std::vector<double> w, double q);
  int player_count() const { return static_cast<int>(weights.size()); }
};

int voting_outcome(const VotingGame& g, std::span<const int> votes);
std::vector<int> voting_payoffs(const VotingGame& g, std::span<const int> votes);

}  // namespace prefspace

#endif
