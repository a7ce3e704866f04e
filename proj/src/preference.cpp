#include "prefspace/preference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prefspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

PreferenceMatrix PreferenceMatrix::from_rows(Matrix raw) {
  if (raw.rows() != raw.cols() || raw.rows() < 2)
    throw std::invalid_argument("preference matrix must be square, n >= 2");
  for (int i = 0; i < raw.rows(); ++i) {
    const double r = norm(raw.row(i));
    if (r <= 0.0 || !std::isfinite(r))
      throw std::invalid_argument("undefined direction: row " + std::to_string(i));
    for (int j = 0; j < raw.cols(); ++j) raw(i, j) /= r;
  }
  return PreferenceMatrix(std::move(raw));
}

PreferenceMatrix PreferenceMatrix::identity(int n) {
  return PreferenceMatrix(Matrix::identity(n));
}

PreferenceMatrix normalize_rows(Matrix raw) { return PreferenceMatrix::from_rows(std::move(raw)); }

PreferenceMatrix from_angles(AnglePair p) {
  Matrix m(2, 2);
  m(0, 0) = std::cos(p.alpha);
  m(0, 1) = std::sin(p.alpha);
  m(1, 0) = std::cos(p.beta);
  m(1, 1) = std::sin(p.beta);
  return PreferenceMatrix::from_rows(std::move(m));
}

AnglePair angles_of(const PreferenceMatrix& v) {
  if (v.size() != 2) throw std::invalid_argument("angle coordinates exist only for 2 players");
  auto wrap = [](double a) { return a < 0.0 ? a + kTwoPi : a; };
  return {wrap(std::atan2(v(0, 1), v(0, 0))), wrap(std::atan2(v(1, 1), v(1, 0)))};
}

std::vector<PreferenceMatrix> cardinal_points(int n) {
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  if (n > 5) throw std::invalid_argument("cardinal point enumeration guarded at n <= 5");
  const int choices = 2 * n;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= choices;

  std::vector<PreferenceMatrix> points;
  points.reserve(total);
  for (long long code = 0; code < total; ++code) {
    Matrix m(n, n, 0.0);
    long long rest = code;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>(rest % choices);
      rest /= choices;
      m(i, digit % n) = digit < n ? 1.0 : -1.0;
    }
    points.push_back(PreferenceMatrix::from_rows(std::move(m)));
  }
  return points;
}

PreferenceMatrix extreme_point(int n, int j, int sign) {
  if (j < 0 || j >= n) throw std::invalid_argument("player index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Matrix m(n, n, 0.0);
  for (int i = 0; i < n; ++i) m(i, j) = static_cast<double>(sign);
  return PreferenceMatrix::from_rows(std::move(m));
}

PreferenceMatrix permutation_point(std::span<const int> xi) {
  const int n = static_cast<int>(xi.size());
  std::vector<bool> seen(n, false);
  for (int v : xi) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  Matrix m(n, n, 0.0);
  for (int i = 0; i < n; ++i) m(i, xi[i]) = 1.0;
  return PreferenceMatrix::from_rows(std::move(m));
}

PreferenceMatrix coalition_position(std::span<const int> members, int n) {
  if (members.empty()) throw std::invalid_argument("coalition must be non-empty");
  std::vector<bool> in(n, false);
  for (int i : members) {
    if (i < 0 || i >= n) throw std::invalid_argument("player index out of range");
    if (in[i]) throw std::invalid_argument("duplicate coalition member");
    in[i] = true;
  }
  Matrix m(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (in[i]) {
      for (int j = 0; j < n; ++j)
        if (in[j]) m(i, j) = 1.0;
    } else {
      m(i, i) = 1.0;
    }
  }
  return PreferenceMatrix::from_rows(std::move(m));
}

PreferenceMatrix replace_row(const PreferenceMatrix& v, int i, std::span<const double> direction) {
  const int n = v.size();
  if (i < 0 || i >= n) throw std::invalid_argument("row index out of range");
  if (static_cast<int>(direction.size()) != n) throw std::invalid_argument("direction dimension mismatch");
  Matrix m = v.matrix();
  for (int j = 0; j < n; ++j) m(i, j) = direction[j];
  return PreferenceMatrix::from_rows(std::move(m));
}

SphereSampler::SphereSampler(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + 0x9E3779B97F4A7C15ULL) ^ mix64(stream + 0x632BE59BD9B4E019ULL)) {}

double SphereSampler::uniform01() {
  state_ += 0x9E3779B97F4A7C15ULL;
  const std::uint64_t bits = mix64(state_);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double SphereSampler::normal() {
  // Box-Muller; the second deviate of each pair is cached.
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_ = r * std::sin(kTwoPi * u2);
  has_cached_ = true;
  return r * std::cos(kTwoPi * u2);
}

std::vector<double> SphereSampler::unit_vector(int n) {
  std::vector<double> v(n);
  while (true) {
    for (int i = 0; i < n; ++i) v[i] = normal();
    const double r = norm(v);
    if (r > 1e-12) {
      for (double& x : v) x /= r;
      return v;
    }
  }
}

SampleSet grid_samples(int resolution) {
  if (resolution < 8) throw std::invalid_argument("grid resolution must be >= 8");
  SampleSet s;
  s.kind = SampleSet::Kind::grid;
  s.n = 2;
  s.resolution = resolution;
  const int count = resolution * resolution;
  s.points.reserve(count);
  s.weights.assign(count, 1.0 / count);
  const double step = kTwoPi / resolution;
  for (int ia = 0; ia < resolution; ++ia) {
    const double alpha = (ia + 0.5) * step;
    for (int ib = 0; ib < resolution; ++ib) {
      const double beta = (ib + 0.5) * step;
      s.points.push_back(from_angles({alpha, beta}));
    }
  }
  return s;
}

SampleSet monte_carlo_samples(int n, int count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  SampleSet s;
  s.kind = SampleSet::Kind::monte_carlo;
  s.n = n;
  s.seed = seed;
  s.points.reserve(count);
  s.weights.assign(count, 1.0 / count);
  for (int k = 0; k < count; ++k) {
    SphereSampler rng(seed, static_cast<std::uint64_t>(k));
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      const auto row = rng.unit_vector(n);
      for (int j = 0; j < n; ++j) m(i, j) = row[j];
    }
    s.points.push_back(PreferenceMatrix::from_rows(std::move(m)));
  }
  return s;
}

}  // namespace prefspace
