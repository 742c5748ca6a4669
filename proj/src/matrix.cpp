#include "fmlat/matrix.hpp"

#include "fmlat/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fmlat {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix shape mismatch");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RVec>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RVec Matrix::row(std::size_t i) const {
  return RVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RVec Matrix::col(std::size_t j) const {
  RVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<RVec> Matrix::to_rows() const {
  std::vector<RVec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  Matrix a = *this;
  Rational det = 1;
  for (std::size_t k = 0; k < rows_; ++k) {
    std::size_t p = k;
    while (p < rows_ && a(p, k) == 0) ++p;
    if (p == rows_) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < rows_; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < cols_; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    }
    Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& q : r.data_) q = -q;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RVec Matrix::operator*(const RVec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  RVec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r = m;
  for (auto& q : r.data_) q *= s;
  return r;
}

std::string render_grid(const Matrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(to_string(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      os << (j ? "  " : " ") << std::string(width - c.size(), ' ') << c;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
               to_string(a(i, j)) + " vs " + to_string(b(i, j));
  return {};
}

}  // namespace fmlat
