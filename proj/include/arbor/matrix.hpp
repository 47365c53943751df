#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are legal
/// (a graph with no edges has 0 x p incidence matrices).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// Bounds-checked access; throws Error(IndexOutOfRange).
  const Rational& at(std::size_t i, std::size_t j) const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column_sums() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using IndexSet = std::vector<std::size_t>;

/// Exact determinant by fraction-free elimination; det of 0x0 is 1.
Rational det(const Matrix& m);

Matrix delete_row_col(const Matrix& m, std::size_t r);
Matrix delete_row(const Matrix& m, std::size_t r);
Matrix delete_col(const Matrix& m, std::size_t c);

/// (-1)^(i+j) det(m without row i and column j).
Rational cofactor(const Matrix& m, std::size_t i, std::size_t j);

/// Submatrix of the chosen rows/columns in ascending original order; an empty
/// optional keeps every row (column). Selectors must be strictly ascending.
Matrix select(const Matrix& m, const std::optional<IndexSet>& rows,
              const std::optional<IndexSet>& cols);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, const Rational& factor);
std::vector<Rational> multiply(const Matrix& m, std::span<const Rational> v);

/// a * diag(weights) * b, summed edge by edge. With a = (weighted incidence)^T
/// style factors carrying sqrt(w_k) on both sides, each term pairs the two
/// square roots of the same edge k, so the result is w_k-exact.
Matrix paired_product(const Matrix& a, std::span<const Rational> weights, const Matrix& b);

/// True iff m^k is the zero matrix. Requires k >= 1.
bool power_is_zero(const Matrix& m, std::size_t k);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }

std::string to_string(const Matrix& m);

}  // namespace arbor
