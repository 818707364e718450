#pragma once

#include <gmpxx.h>

#include <vector>

#include "twodet/common.hpp"
#include "twodet/scalar.hpp"

namespace twodet {

// Small dense matrix over an exact field; plain Gaussian elimination is fine
// at the sizes that occur here (pencils, block transforms).
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, Field f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(int n, Field f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(int i, int j) { return a_[i * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const {
    require(cols_ == o.rows_, Errc::input, "matrix shape mismatch");
    Mat r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::input, "matrix shape mismatch");
    Mat r(rows_, cols_, field_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  Mat scaled(const Scalar& c) const {
    Mat r(*this);
    for (auto& x : r.a_) x = x * c;
    return r;
  }

  Mat transposed() const {
    Mat r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  int rank() const {
    Mat w(*this);
    return w.echelonize();
  }

  // inverse, or failure if singular
  bool try_inverse(Mat& out) const {
    require(rows_ == cols_, Errc::input, "inverse of non-square matrix");
    int n = rows_;
    Mat w(n, 2 * n, field_);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w.at(i, j) = at(i, j);
      w.at(i, n + i) = Scalar::one(field_);
    }
    std::vector<int> pivots;
    int r = w.echelonize(&pivots);
    if (r < n) return false;
    for (int i = 0; i < n; ++i)
      if (pivots[i] != i) return false;
    out = Mat(n, n, field_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
    return true;
  }

  Mat inverse() const {
    Mat out;
    require(try_inverse(out), Errc::input, "singular matrix");
    return out;
  }

  // reduced row echelon form in place; returns rank, optionally pivot columns
  int echelonize(std::vector<int>* pivot_cols = nullptr) {
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!at(i, c).is_zero()) { p = i; break; }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Scalar inv = at(r, c).inv();
      for (int j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        Scalar f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
      }
      if (pivot_cols) pivot_cols->push_back(c);
      ++r;
    }
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> a_;
};

// Exact rank of an integer matrix via fraction-free (Bareiss) elimination
// with arbitrary-precision pivots. Used for homology over the rationals.
inline int rank_int_bareiss(std::vector<std::vector<mpz_class>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] /= prev;  // exact by Bareiss
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace twodet
