#include "prefspace/solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prefspace {

namespace {

// Probability vector for one side of a bimatrix candidate: solves for the
// opponent-side mixture that makes `mover` indifferent across `mover_support`
// while being supported inside `own_support`. Unknowns are restricted to
// own_support; equations are payoff differences plus the simplex constraint.
//   payoff_of(m, k): mover's payoff when mover plays m and opponent plays k.
template <typename PayoffFn>
std::optional<std::vector<double>> solve_indifference(int own_size,
                                                      std::span<const int> own_support,
                                                      std::span<const int> mover_support,
                                                      PayoffFn payoff_of, double tol,
                                                      bool* singular) {
  const int k = static_cast<int>(own_support.size());
  const int rows = static_cast<int>(mover_support.size());  // (rows-1) diffs + 1 simplex
  // rows < k is underdetermined: a continuum of candidates. Those points are
  // represented by the vertex solutions of smaller supports, so the pair is
  // skipped without marking the game degenerate. rows > k is consistent only
  // for degenerate payoffs; least squares plus a residual check handles it.
  if (rows < k) return std::nullopt;

  Matrix a(rows, k, 0.0);
  std::vector<double> b(rows, 0.0);
  for (int r = 0; r + 1 < rows; ++r) {
    const int m0 = mover_support[r], m1 = mover_support[r + 1];
    for (int c = 0; c < k; ++c) a(r, c) = payoff_of(m0, own_support[c]) - payoff_of(m1, own_support[c]);
  }
  for (int c = 0; c < k; ++c) a(rows - 1, c) = 1.0;
  b[rows - 1] = 1.0;

  auto sol = solve_least_squares(a, b);
  if (!sol) {
    *singular = true;
    return std::nullopt;
  }
  if (residual_inf(a, *sol, b) > tol) return std::nullopt;

  std::vector<double> full(own_size, 0.0);
  for (int c = 0; c < k; ++c) {
    if ((*sol)[c] < -tol) return std::nullopt;
    full[own_support[c]] = std::max((*sol)[c], 0.0);
  }
  double total = 0.0;
  for (double p : full) total += p;
  if (total <= 0.5) return std::nullopt;
  for (double& p : full) p /= total;
  return full;
}

std::vector<int> support_of(std::span<const double> probs, double support_tol) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i)
    if (probs[i] > support_tol) s.push_back(i);
  return s;
}

std::vector<double> product_distribution(const std::vector<std::vector<double>>& strategies,
                                         std::span<const int> counts) {
  const int outcomes = outcome_count(counts);
  std::vector<double> dist(outcomes, 0.0);
  for (int o = 0; o < outcomes; ++o) {
    const auto profile = outcome_profile(o, counts);
    double p = 1.0;
    for (size_t pl = 0; pl < counts.size(); ++pl) p *= strategies[pl][profile[pl]];
    dist[o] = p;
  }
  return dist;
}

bool same_equilibrium(const Equilibrium& a, const Equilibrium& b, double tol) {
  for (size_t pl = 0; pl < a.strategies.size(); ++pl)
    for (size_t s = 0; s < a.strategies[pl].size(); ++s)
      if (std::abs(a.strategies[pl][s] - b.strategies[pl][s]) > tol) return false;
  return true;
}

Equilibrium make_equilibrium(std::vector<std::vector<double>> strategies,
                             std::span<const int> counts, double support_tol) {
  Equilibrium eq;
  eq.outcome_distribution = product_distribution(strategies, counts);
  eq.supports.reserve(strategies.size());
  for (const auto& s : strategies) eq.supports.push_back(support_of(s, support_tol));
  eq.strategies = std::move(strategies);
  return eq;
}

}  // namespace

EquilibriumSet nash_support_enumeration(std::span<const double> payoffs,
                                        std::span<const int> strategy_counts,
                                        const SolveOptions& opts) {
  if (strategy_counts.size() != 2) throw std::invalid_argument("support enumeration needs 2 players");
  const int m1 = strategy_counts[0], m2 = strategy_counts[1];
  auto u = [&](int player, int s1, int s2) {
    return payoffs[static_cast<size_t>(s1 * m2 + s2) * 2 + player];
  };

  EquilibriumSet result;
  std::vector<int> s1, s2;
  for (unsigned mask1 = 1; mask1 < (1u << m1); ++mask1) {
    s1.clear();
    for (int i = 0; i < m1; ++i)
      if (mask1 & (1u << i)) s1.push_back(i);
    for (unsigned mask2 = 1; mask2 < (1u << m2); ++mask2) {
      s2.clear();
      for (int j = 0; j < m2; ++j)
        if (mask2 & (1u << j)) s2.push_back(j);

      bool singular = false;
      // y: player 2's mixture making player 1 indifferent across s1.
      auto y = solve_indifference(
          m2, s2, s1, [&](int i, int j) { return u(0, i, j); }, opts.tol, &singular);
      // x: player 1's mixture making player 2 indifferent across s2.
      std::optional<std::vector<double>> x;
      if (y)
        x = solve_indifference(
            m1, s1, s2, [&](int j, int i) { return u(1, i, j); }, opts.tol, &singular);
      if (singular) result.degenerate = true;
      if (!y || !x) continue;

      // Best-response check: no pure deviation beats the support payoff.
      double v1 = 0.0, v2 = 0.0;
      for (int j = 0; j < m2; ++j) v1 += u(0, s1[0], j) * (*y)[j];
      for (int i = 0; i < m1; ++i) v2 += u(1, i, s2[0]) * (*x)[i];
      bool ok = true;
      for (int i = 0; i < m1 && ok; ++i) {
        double p = 0.0;
        for (int j = 0; j < m2; ++j) p += u(0, i, j) * (*y)[j];
        if (p > v1 + opts.tol) ok = false;
      }
      for (int j = 0; j < m2 && ok; ++j) {
        double p = 0.0;
        for (int i = 0; i < m1; ++i) p += u(1, i, j) * (*x)[i];
        if (p > v2 + opts.tol) ok = false;
      }
      if (!ok) continue;

      auto eq = make_equilibrium({*x, *y}, strategy_counts, opts.support_tol);
      bool duplicate = false;
      for (const auto& prev : result.equilibria)
        if (same_equilibrium(prev, eq, std::max(opts.tol, 1e-12))) {
          duplicate = true;
          break;
        }
      if (!duplicate) result.equilibria.push_back(std::move(eq));
    }
  }
  return result;
}

EquilibriumSet pure_nash(std::span<const double> payoffs, std::span<const int> strategy_counts,
                         const SolveOptions& opts) {
  const int n = static_cast<int>(strategy_counts.size());
  const int outcomes = outcome_count(strategy_counts);
  auto u = [&](int o, int pl) { return payoffs[static_cast<size_t>(o) * n + pl]; };

  EquilibriumSet result;
  for (int o = 0; o < outcomes; ++o) {
    const auto profile = outcome_profile(o, strategy_counts);
    bool stable = true;
    for (int pl = 0; pl < n && stable; ++pl) {
      auto dev = profile;
      for (int s = 0; s < strategy_counts[pl] && stable; ++s) {
        if (s == profile[pl]) continue;
        dev[pl] = s;
        if (u(outcome_index(dev, strategy_counts), pl) > u(o, pl) + opts.tol) stable = false;
      }
    }
    if (!stable) continue;

    std::vector<std::vector<double>> strategies(n);
    for (int pl = 0; pl < n; ++pl) {
      strategies[pl].assign(strategy_counts[pl], 0.0);
      strategies[pl][profile[pl]] = 1.0;
    }
    result.equilibria.push_back(make_equilibrium(std::move(strategies), strategy_counts, opts.support_tol));
  }
  return result;
}

std::vector<double> equilibrium_payoffs(const Equilibrium& eq, std::span<const double> payoffs,
                                        std::span<const int> strategy_counts) {
  const int n = static_cast<int>(strategy_counts.size());
  std::vector<double> out(n, 0.0);
  for (size_t o = 0; o < eq.outcome_distribution.size(); ++o)
    for (int pl = 0; pl < n; ++pl) out[pl] += eq.outcome_distribution[o] * payoffs[o * n + pl];
  return out;
}

std::vector<Equilibrium> pareto_filter(const std::vector<Equilibrium>& equilibria,
                                       std::span<const double> subjective,
                                       std::span<const int> strategy_counts, double tol) {
  if (equilibria.empty()) throw std::invalid_argument("pareto_filter needs at least one equilibrium");
  const int n = static_cast<int>(strategy_counts.size());
  std::vector<std::vector<double>> values;
  values.reserve(equilibria.size());
  for (const auto& eq : equilibria)
    values.push_back(equilibrium_payoffs(eq, subjective, strategy_counts));

  std::vector<Equilibrium> kept;
  for (size_t i = 0; i < equilibria.size(); ++i) {
    bool dominated = false;
    for (size_t k = 0; k < equilibria.size() && !dominated; ++k) {
      if (k == i) continue;
      bool all_ge = true, some_gt = false;
      for (int pl = 0; pl < n; ++pl) {
        if (values[k][pl] < values[i][pl] - tol) all_ge = false;
        if (values[k][pl] > values[i][pl] + tol) some_gt = true;
      }
      dominated = all_ge && some_gt;
    }
    if (!dominated) kept.push_back(equilibria[i]);
  }
  return kept;
}

std::optional<std::vector<double>> mu_from_payoffs(std::span<const double> subjective,
                                                   std::span<const int> strategy_counts,
                                                   const SolveOptions& opts) {
  EquilibriumSet set = strategy_counts.size() == 2
                           ? nash_support_enumeration(subjective, strategy_counts, opts)
                           : pure_nash(subjective, strategy_counts, opts);
  if (set.equilibria.empty()) return std::nullopt;
  auto efficient = pareto_filter(set.equilibria, subjective, strategy_counts, opts.tol);

  const int outcomes = outcome_count(strategy_counts);
  std::vector<double> dist(outcomes, 0.0);
  for (const auto& eq : efficient)
    for (int o = 0; o < outcomes; ++o) dist[o] += eq.outcome_distribution[o];
  for (double& p : dist) p /= static_cast<double>(efficient.size());
  return dist;
}

std::optional<std::vector<double>> mu(const FiniteGame& g, const PreferenceMatrix& v,
                                      const SolveOptions& opts) {
  return mu_from_payoffs(subjective_payoffs(g, v.matrix()), g.strategy_counts(), opts);
}

std::optional<double> expected_payoff(const FiniteGame& g, const PreferenceMatrix& v, int player,
                                      const SolveOptions& opts) {
  if (player < 0 || player >= g.player_count()) throw std::invalid_argument("player index out of range");
  auto dist = mu(g, v, opts);
  if (!dist) return std::nullopt;
  double e = 0.0;
  for (int o = 0; o < g.outcomes(); ++o) e += g.payoff(o, player) * (*dist)[o];
  return e;
}

BestResponseResult best_response_dynamics(const ContinuousGame& g, const PreferenceMatrix& v,
                                          std::span<const double> start,
                                          const BestResponseOptions& opts) {
  const int n = g.player_count();
  if (v.size() != n) throw std::invalid_argument("preference dimension mismatch");
  BestResponseResult r;
  r.profile.assign(start.begin(), start.end());
  for (int p = 0; p < n; ++p) {
    const auto [lo, hi] = g.bounds(p);
    if (r.profile[p] < lo || r.profile[p] > hi)
      throw std::invalid_argument("start profile out of bounds");
  }

  for (int it = 0; it < opts.max_iter; ++it) {
    double max_step = 0.0;
    for (int p = 0; p < n; ++p) {
      const double q = g.best_response(p, r.profile, v.row(p));
      max_step = std::max(max_step, std::abs(q - r.profile[p]));
      r.profile[p] = q;
    }
    r.iterations = it + 1;
    if (max_step < opts.step_tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

std::vector<double> continuous_expected_payoffs(const ContinuousGame& g, const PreferenceMatrix& v,
                                                const BestResponseOptions& opts) {
  std::vector<double> start(g.player_count(), 0.0);
  for (int p = 0; p < g.player_count(); ++p) start[p] = g.bounds(p).first;
  const auto r = best_response_dynamics(g, v, start, opts);
  return g.payoffs(r.profile);
}

}  // namespace prefspace
