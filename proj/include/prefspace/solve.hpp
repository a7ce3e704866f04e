#ifndef PREFSPACE_SOLVE_HPP
#define PREFSPACE_SOLVE_HPP

#include <optional>
#include <span>
#include <vector>

#include "prefspace/game.hpp"
#include "prefspace/preference.hpp"

namespace prefspace {

struct SolveOptions {
  double tol = 1e-9;          // indifference / best-response tolerance
  double support_tol = 1e-9;  // probabilities above this count as support
};

struct Equilibrium {
  std::vector<std::vector<double>> strategies;  // one probability vector per player
  std::vector<std::vector<int>> supports;       // indices with probability > support_tol
  std::vector<double> outcome_distribution;     // product distribution, lexicographic
};

struct EquilibriumSet {
  std::vector<Equilibrium> equilibria;
  // Set when some candidate support system was singular; the continuum of
  // equilibria of a degenerate game is represented only by its vertices.
  bool degenerate = false;
};

// All Nash equilibria of a 2-player game found by support enumeration:
// every pair of supports (equal and unequal sizes) is tried, the indifference
// linear system is solved, and solutions are kept when probabilities are
// nonnegative and no deviation outside the support is profitable (within
// tol). Duplicates within tol are merged. `payoffs` uses the FiniteGame
// layout and may contain negative (subjective) entries.
EquilibriumSet nash_support_enumeration(std::span<const double> payoffs,
                                        std::span<const int> strategy_counts,
                                        const SolveOptions& opts = {});

// All pure-strategy Nash equilibria of an n-player payoff tensor; ties count
// as equilibria. The empty list is a legal result for n >= 3.
EquilibriumSet pure_nash(std::span<const double> payoffs, std::span<const int> strategy_counts,
                         const SolveOptions& opts = {});

// Keeps equilibria whose expected subjective payoff vector is not strictly
// dominated by another equilibrium's (>= everywhere, > somewhere).
std::vector<Equilibrium> pareto_filter(const std::vector<Equilibrium>& equilibria,
                                       std::span<const double> subjective,
                                       std::span<const int> strategy_counts,
                                       double tol = 1e-9);

// Expected payoff vector of an equilibrium under a payoff tensor.
std::vector<double> equilibrium_payoffs(const Equilibrium& eq, std::span<const double> payoffs,
                                        std::span<const int> strategy_counts);

// The outcome mapping: a uniform mixture over the Pareto-efficient Nash
// equilibria of the subjective game. Support enumeration for 2 players,
// pure equilibria for n >= 3. nullopt means no equilibrium was found.
std::optional<std::vector<double>> mu_from_payoffs(std::span<const double> subjective,
                                                   std::span<const int> strategy_counts,
                                                   const SolveOptions& opts = {});

std::optional<std::vector<double>> mu(const FiniteGame& g, const PreferenceMatrix& v,
                                      const SolveOptions& opts = {});

// E_i(V) = sum_o u_i(o) mu_o(Vu), with objective payoffs. nullopt propagates
// the no-equilibrium marker.
std::optional<double> expected_payoff(const FiniteGame& g, const PreferenceMatrix& v, int player,
                                      const SolveOptions& opts = {});

struct BestResponseOptions {
  int max_iter = 200;
  double step_tol = 1e-8;
};

struct BestResponseResult {
  std::vector<double> profile;
  bool converged = false;
  int iterations = 0;
};

// Round-robin best-response dynamics on a continuous game: each player in
// turn maximizes their subjective payoff sum_j v_ij pi_j over their interval.
BestResponseResult best_response_dynamics(const ContinuousGame& g, const PreferenceMatrix& v,
                                          std::span<const double> start,
                                          const BestResponseOptions& opts = {});

// Objective payoffs at the best-response fixed point reached from the zero
// profile (the continuous-game counterpart of expected_payoff).
std::vector<double> continuous_expected_payoffs(const ContinuousGame& g, const PreferenceMatrix& v,
                                                const BestResponseOptions& opts = {});

}  // namespace prefspace

#endif
