#include "prefspace/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace prefspace {

Matrix Matrix::identity(int n) {
  Matrix m(n, n, 0.0);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

std::optional<std::vector<double>> solve_square(Matrix a, std::vector<double> b,
                                                double pivot_tol) {
  const int n = a.rows();
  if (n != a.cols() || static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_square: shape");

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  if (scale == 0.0) return std::nullopt;
  const double eps = pivot_tol * scale;

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) <= eps) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::optional<std::vector<double>> solve_least_squares(const Matrix& a,
                                                       std::span<const double> b) {
  const int m = a.rows(), k = a.cols();
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_least_squares: shape");
  if (m < k) return std::nullopt;
  if (m == k) {
    return solve_square(a, std::vector<double>(b.begin(), b.end()));
  }
  Matrix ata(k, k, 0.0);
  std::vector<double> atb(k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double s = 0.0;
      for (int r = 0; r < m; ++r) s += a(r, i) * a(r, j);
      ata(i, j) = s;
    }
    double s = 0.0;
    for (int r = 0; r < m; ++r) s += a(r, i) * b[r];
    atb[i] = s;
  }
  return solve_square(std::move(ata), std::move(atb));
}

double residual_inf(const Matrix& a, std::span<const double> x, std::span<const double> b) {
  double worst = 0.0;
  for (int r = 0; r < a.rows(); ++r) {
    double s = -b[r];
    for (int c = 0; c < a.cols(); ++c) s += a(r, c) * x[c];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace prefspace
