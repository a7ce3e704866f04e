#ifndef PREFSPACE_POWER_HPP
#define PREFSPACE_POWER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "prefspace/game.hpp"
#include "prefspace/preference.hpp"
#include "prefspace/solve.hpp"

namespace prefspace {

// How to cover the preference space: one grid, or `repeats` independent
// Monte Carlo runs (seeds seed, seed+1, ...) whose spread gives the
// statistical error.
struct SamplingPlan {
  SampleSet::Kind kind = SampleSet::Kind::grid;
  int n = 2;
  int resolution = 90;
  int count = 20000;
  std::uint64_t seed = 0;
  int repeats = 8;

  static SamplingPlan grid(int resolution = 90);
  static SamplingPlan monte_carlo(int n, int count = 20000, std::uint64_t seed = 0, int repeats = 8);
  std::vector<SampleSet> runs() const;
};

// Weighted average position (integral of V f(V) over the sampled measure,
// normalized by the field mass). Rows are generally not unit vectors; rows
// whose norm falls below the degeneracy threshold carry no direction.
struct CoMMatrix {
  Matrix entries;
  std::vector<double> row_norms;
  std::vector<bool> degenerate_rows;
  double statistical_error = 0.0;   // std error across repeat seeds; 0 for grids
  double degeneracy_threshold = 0.0;
  double no_equilibrium_fraction = 0.0;
  std::vector<Matrix> run_entries;  // per-run centers (size 1 for grids)
};

struct IndexReport {
  double D = 0, H = 0, R = 0, R_plus = 0, R_minus = 0;
  std::vector<bool> degenerate_rows;
};

struct IndexErrors {
  double D = 0, H = 0, R = 0, R_plus = 0, R_minus = 0;
};

using FieldFn = std::function<double(const PreferenceMatrix&)>;

CoMMatrix center_of_mass(const FieldFn& field, const std::vector<SampleSet>& runs);
CoMMatrix center_of_mass(const FieldFn& field, const SamplingPlan& plan);

// Centers of mass of the standard landscape fields: a player's expected
// objective payoff, a single outcome's probability, and the total
// probability that a player uses a given strategy.
CoMMatrix payoff_com(const FiniteGame& g, int player, const SamplingPlan& plan,
                     const SolveOptions& opts = {});
CoMMatrix outcome_com(const FiniteGame& g, int outcome, const SamplingPlan& plan,
                      const SolveOptions& opts = {});
CoMMatrix strategy_com(const FiniteGame& g, int player, int strategy, const SamplingPlan& plan,
                       const SolveOptions& opts = {});

// Global center of mass: row i collects the self-row of player i's payoff
// CoM, filtering out the trivial fact that everyone wants to be favored.
CoMMatrix gcom(const FiniteGame& g, const SamplingPlan& plan, const SolveOptions& opts = {});

CoMMatrix payoff_com(const ContinuousGame& g, int player, const SamplingPlan& plan,
                     const BestResponseOptions& opts = {});
CoMMatrix gcom(const ContinuousGame& g, const SamplingPlan& plan,
               const BestResponseOptions& opts = {});

// D/H/R decomposition of a matrix read as a preference position: rows above
// the degeneracy threshold are normalized, degenerate rows are zeroed and
// reported. With no degenerate rows, D + H + R = 1 and R = R+ + R-.
IndexReport indices(const Matrix& m, double degeneracy_threshold = 0.0);
IndexReport indices(const CoMMatrix& com);
IndexErrors index_std_errors(const CoMMatrix& com);

struct RhoValue {
  double value = 0.0;
  bool defined = false;
};

// Local bargaining power of i on j: the payoff swing j experiences when i
// flips from pure favor (e_j) to pure harm (-e_j) at the selfish baseline,
// normalized by j's total payoff range over the preference space.
RhoValue rho_local(const FiniteGame& g, int i, int j, const SolveOptions& opts = {});

struct RhoMatrix {
  int n = 0;
  Matrix entries;
  std::vector<bool> undefined;  // row-major n x n
  bool is_undefined(int i, int j) const { return undefined[static_cast<size_t>(i) * n + j]; }
};

RhoMatrix rho_matrix(const FiniteGame& g, const SolveOptions& opts = {});

struct RhoIntegral {
  double value = 0.0;
  double std_error = 0.0;
  bool defined = false;
  int used_draws = 0;  // draws where both counterfactuals had equilibria
};

// Integral version: the other players' rows vary uniformly over the sphere
// product instead of staying at the selfish baseline.
RhoIntegral rho_integral(const FiniteGame& g, int i, int j, int count, std::uint64_t seed,
                         const SolveOptions& opts = {});
RhoIntegral rho_integral_over(const FiniteGame& g, int i, int j,
                              std::span<const PreferenceMatrix> contexts,
                              const SolveOptions& opts = {});

struct SelfHarmReport {
  std::vector<int> players;    // rho_ii < 0
  std::vector<int> undefined;  // constant-payoff players, rho undefined
};

SelfHarmReport self_harm_scan(const FiniteGame& g, const SolveOptions& opts = {});

// Characteristic function of the induced coalition game, indexed by
// coalition bitmask (bit i = player i); value[0] = 0 by convention.
struct CharacteristicFunction {
  int n = 0;
  std::vector<double> value;
  std::vector<bool> no_equilibrium;

  double operator()(unsigned coalition) const { return value[coalition]; }
  unsigned grand() const { return (1u << n) - 1; }
};

CharacteristicFunction coalition_game(const FiniteGame& g, const SolveOptions& opts = {});
std::vector<double> shapley_value(const CharacteristicFunction& cf);
bool core_check(const CharacteristicFunction& cf, std::span<const double> allocation,
                double tol = 1e-9);

// 1 iff flipping player i's vote flips the collective outcome.
int pivotality(const VotingGame& g, std::span<const int> profile, int i);

std::vector<double> banzhaf_exact(const VotingGame& g);
std::vector<double> shapley_shubik_exact(const VotingGame& g);

struct PowerEstimate {
  std::vector<double> value;
  std::vector<double> std_error;
  int samples = 0;
};

// Mean pivotality under i.i.d. uniform votes (impartial culture).
PowerEstimate banzhaf_estimate(const VotingGame& g, int samples, std::uint64_t seed);
// Mean pivotality when a yes-coalition size is drawn uniformly first, then a
// uniform coalition of that size.
PowerEstimate shapley_shubik_estimate(const VotingGame& g, int samples, std::uint64_t seed);

// Outcomes that are pure Nash equilibria of the subjective game at every
// rotation of the k-cycle (k >= 2) over the given players; non-cycle players
// keep their rows from `fixed_rows` (selfish when null).
std::vector<int> reciprocity_check(const FiniteGame& g, std::span<const int> cycle,
                                   const PreferenceMatrix* fixed_rows = nullptr,
                                   const SolveOptions& opts = {});

}  // namespace prefspace

#endif
