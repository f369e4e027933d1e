#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ratfib/rational.hpp"

namespace ratfib {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots are scanned left to right.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right kernel. One vector per free column, with that column
/// set to 1 and the other free columns 0, so the basis is canonical for the
/// row space.
std::vector<Vec> mat_kernel(const Matrix& m);

Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
/// True when `v` lies in the span of `basis`.
bool in_span(const std::vector<Vec>& basis, const Vec& v);
/// True when the vectors are linearly independent.
bool independent(const std::vector<Vec>& vs);

}  // namespace ratfib
