#pragma once

#include "fmlat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fmlat {

// Dense row-major matrix over exact rationals. Small sizes only (2x2, 4x4).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RVec row(std::size_t i) const;
  RVec col(std::size_t j) const;
  std::vector<RVec> to_rows() const;

  Matrix transpose() const;
  Rational determinant() const;
  // Throws SingularMatrixError.
  Matrix inverse() const;
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  RVec operator*(const RVec& v) const;
  friend Matrix operator*(const Rational& s, const Matrix& m);

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Right-aligned grid, one row per line.
std::string render_grid(const Matrix& m);

// First (row, col) where a and b differ, as "(i,j): x vs y"; empty if equal.
std::string first_difference(const Matrix& a, const Matrix& b);

}  // namespace fmlat
