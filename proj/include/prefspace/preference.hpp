#ifndef PREFSPACE_PREFERENCE_HPP
#define PREFSPACE_PREFERENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "prefspace/matrix.hpp"

namespace prefspace {

// A point of the preference space (S^{n-1})^n: an n x n matrix whose row i is
// player i's attitude vector, identified up to positive scaling and stored
// with unit Euclidean norm.
class PreferenceMatrix {
 public:
  // Normalizes each row; throws "undefined direction" on a zero row.
  static PreferenceMatrix from_rows(Matrix raw);
  static PreferenceMatrix identity(int n);

  int size() const { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }
  std::span<const double> row(int i) const { return m_.row(i); }

 private:
  explicit PreferenceMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

PreferenceMatrix normalize_rows(Matrix raw);

// Two-player angle coordinates: rows (cos a, sin a) and (cos b, sin b).
struct AnglePair {
  double alpha = 0.0;
  double beta = 0.0;
};

PreferenceMatrix from_angles(AnglePair p);
AnglePair angles_of(const PreferenceMatrix& v);  // 2-player only; angles in [0, 2pi)

// All matrices whose every row is +-e_k; count (2n)^n. Guarded at n <= 5.
std::vector<PreferenceMatrix> cardinal_points(int n);

// +-1 e_j^T: every row is sign * e_j (expected maximum/minimum point for j).
PreferenceMatrix extreme_point(int n, int j, int sign);

// Row i = e_{xi(i)}; xi given 0-based, must be a bijection.
PreferenceMatrix permutation_point(std::span<const int> xi);

// Rows of coalition members point along the normalized coalition indicator;
// everyone else stays selfish (e_k).
PreferenceMatrix coalition_position(std::span<const int> members, int n);

// Row i replaced by the normalized direction; other rows untouched.
PreferenceMatrix replace_row(const PreferenceMatrix& v, int i, std::span<const double> direction);

struct SampleSet {
  enum class Kind { grid, monte_carlo };
  Kind kind;
  int n = 2;
  std::uint64_t seed = 0;
  int resolution = 0;  // grid only
  std::vector<PreferenceMatrix> points;
  std::vector<double> weights;  // nonnegative, sum to 1
};

// Grid samples are cell centers: alpha = (k + 1/2) * 2pi / resolution, so
// cardinal points are never hit exactly. 2-player only.
SampleSet grid_samples(int resolution);

// Each row drawn uniformly on S^{n-1} by normalizing independent standard
// normal deviates. Point k is a pure function of (seed, k).
SampleSet monte_carlo_samples(int n, int count, std::uint64_t seed);

// Deterministic uniform direction on S^{n-1}; used by the samplers and by
// the rho integral. The state evolves with the engine it wraps.
class SphereSampler {
 public:
  SphereSampler(std::uint64_t seed, std::uint64_t stream);
  std::vector<double> unit_vector(int n);
  double normal();
  double uniform01();

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace prefspace

#endif
