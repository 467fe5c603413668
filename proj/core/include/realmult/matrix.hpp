#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realmult/integer.hpp"
#include "realmult/polynomial.hpp"

namespace realmult {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Throws InvalidArgument when an entry is not integral.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(const RatMatrix& m);
// Rows form a basis of {x : m x = 0}, in the order of the free columns.
RatMatrix nullspace(const RatMatrix& m);
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

// det(xI - m), Faddeev-LeVerrier.
RatPolynomial charpoly(const RatMatrix& m);
IntPolynomial charpoly(const IntMatrix& m);

// Row Hermite normal form; zero rows removed.
IntMatrix hnf(const IntMatrix& m);
// Rows form a Z-basis of {x in Z^n : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

IntMatrix matrix_power(const IntMatrix& m, unsigned e);
bool commute(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& m);
std::vector<std::vector<std::string>> to_string_rows(const IntMatrix& m);

}  // namespace realmult
