#ifndef PREFSPACE_MATRIX_HPP
#define PREFSPACE_MATRIX_HPP

#include <optional>
#include <span>
#include <vector>

namespace prefspace {

// Small dense row-major matrix. Everything in this project is n x n with
// n <= 12 or an m x k indifference system with m, k <= strategy counts,
// so no effort is spent on large-scale performance.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n);

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::span<double> row(int r) { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator*=(double s);

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);

// Gaussian elimination with partial pivoting. Returns nullopt when a pivot
// falls below pivot_tol relative to the largest entry of A (singular system).
std::optional<std::vector<double>> solve_square(Matrix a, std::vector<double> b,
                                                double pivot_tol = 1e-12);

// Least-squares solve of an overdetermined (rows >= cols) system via normal
// equations. Square systems are forwarded to solve_square. Underdetermined
// systems are reported as singular (nullopt): callers treat them as
// degenerate rather than picking one of infinitely many solutions.
std::optional<std::vector<double>> solve_least_squares(const Matrix& a,
                                                       std::span<const double> b);

// max_i |(A x - b)_i|
double residual_inf(const Matrix& a, std::span<const double> x, std::span<const double> b);

}  // namespace prefspace

#endif
