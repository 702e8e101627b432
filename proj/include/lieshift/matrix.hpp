#pragma once

// Dense matrices over the field tower and fraction-free elimination.

#include <lieshift/field.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lieshift {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Row echelon form by fraction-free elimination; pivot columns reported.
struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivots;
};
Echelon echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, each vector with cleared denominators.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Reduced row echelon form (pivots equal to 1).
Echelon row_reduce(const Matrix& m);
/// Some solution of m x = b, or nothing if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Scales v by a nonzero field element so that entries are polynomial with
/// no common factor and the first nonzero entry is normalized.
Vector clear_denominators(const Vector& v);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const FieldElement& c);
FieldElement dot(const Vector& a, const Vector& b);

}  // namespace lieshift
