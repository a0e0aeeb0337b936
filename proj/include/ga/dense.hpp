#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ga {

/// Row-major dense real matrix. Plain value type; products go through the
/// active kernel table.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }
  std::vector<double> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const double> values);

  Matrix transpose() const;
  double max_abs() const noexcept;
  /// Largest absolute row sum.
  double inf_norm() const noexcept;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& a, std::span<const double> x);

/// Determinant by partial-pivot elimination. Used for Gram matrices of
/// bases; operator determinants go through the exterior algebra.
double elimination_determinant(Matrix a);

/// Gauss-Jordan inverse with partial pivoting; throws SingularError when a
/// pivot vanishes.
Matrix elimination_inverse(Matrix a);

/// max|a - b| <= tol_abs + tol_rel * max(max|a|, max|b|)
bool approx_equal(const Matrix& a, const Matrix& b, double tol_rel, double tol_abs = 0.0);

}  // namespace ga
