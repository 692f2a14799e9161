#pragma once

#include <optional>
#include <vector>

#include "operforge/rational.hpp"

namespace operforge {

// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form; pivot columns are appended to `pivots` when given.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column, in RREF order.
std::vector<Vec> nullspace(const Matrix& m);

// Unique solution of m x = b; nullopt when m has a kernel or b is outside
// the column span.
std::optional<Vec> solve_unique(const Matrix& m, const Vec& b);

}  // namespace operforge
