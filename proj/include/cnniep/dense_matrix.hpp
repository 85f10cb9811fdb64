#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cnniep {

using Vector = std::vector<double>;

/// Row-major real matrix. Square in almost every use; the few rectangular
/// uses (eigenvector frames for low-rank updates) share the same storage.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  explicit DenseMatrix(std::size_t order) : DenseMatrix(order, order) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t order);
  static DenseMatrix from_rows(const std::vector<Vector>& rows);
  /// Column vector (n x 1).
  static DenseMatrix column(std::span<const double> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Order of a square matrix; throws DimensionMismatch otherwise.
  std::size_t order() const;

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> entries() const noexcept { return data_; }
  std::span<double> entries() noexcept { return data_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }

  DenseMatrix transpose() const;
  /// Copy of the block starting at (r0, c0) with the given shape.
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b);

  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);
Vector operator*(const DenseMatrix& a, std::span<const double> v);

/// s * u v^T
DenseMatrix outer(std::span<const double> u, std::span<const double> v, double s = 1.0);

/// Largest absolute entrywise difference; shapes must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// P M P^T for the permutation that sends new index k to old index perm[k].
DenseMatrix permute_symmetric(const DenseMatrix& m, std::span<const std::size_t> perm);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

}  // namespace cnniep
