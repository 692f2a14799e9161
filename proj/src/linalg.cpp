#include "operforge/linalg.hpp"

#include <cassert>

namespace operforge {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

Vec Matrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vec Matrix::apply(const Vec& x) const {
  assert(int(x.size()) == cols_);
  Vec y = zero_vec(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols_ == b.rows_);
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int rank(const Matrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return int(piv.size());
}

Rational determinant(Matrix m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  Matrix r = rref(aug, &piv);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

std::vector<Vec> nullspace(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = 1;
    for (int k = 0; k < int(piv.size()); ++k) v[piv[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_unique(const Matrix& m, const Vec& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<int> piv;
  Matrix r = rref(aug, &piv);
  if (int(piv.size()) != m.cols() || (!piv.empty() && piv.back() == m.cols()))
    return std::nullopt;
  Vec x(m.cols());
  for (int k = 0; k < m.cols(); ++k) x[k] = r(k, m.cols());
  return x;
}

}  // namespace operforge
