#pragma once

#include <string>
#include <vector>

#include "twodet/groebner.hpp"
#include "twodet/matrix.hpp"
#include "twodet/polynomial.hpp"

namespace twodet {

// Building blocks of Kronecker-Weierstrass normal forms. `size` is the
// column count for scroll and Jordan blocks; a nilpotent block of size p has
// p variables and p+1 columns.
struct Block {
  enum class Kind { scroll, jordan, nilpotent };
  Kind kind;
  int size = 0;
  Scalar eigenvalue;  // Jordan only

  static Block scroll(int p) {
    require(p >= 1, Errc::input, "block size must be positive");
    return {Kind::scroll, p, Scalar()};
  }
  static Block jordan(int p, Scalar eps) {
    require(p >= 1, Errc::input, "block size must be positive");
    return {Kind::jordan, p, std::move(eps)};
  }
  static Block nilpotent(int p) {
    require(p >= 1, Errc::input, "block size must be positive");
    return {Kind::nilpotent, p, Scalar()};
  }

  int columns() const { return kind == Kind::nilpotent ? size + 1 : size; }
  int variables() const { return kind == Kind::scroll ? size + 1 : size; }
};

// 2 x (c+1) matrix of linear forms.
struct LinearMatrix2 {
  RingPtr ring;
  Field field;
  std::array<std::vector<Polynomial>, 2> rows;

  int cols() const { return static_cast<int>(rows[0].size()); }
  const Polynomial& entry(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-based
};

// A matrix remembered together with its block structure.
struct BlockMatrix {
  std::vector<Block> blocks;
  LinearMatrix2 matrix;
  std::vector<std::pair<int, int>> var_range;  // [begin, end) variable ids per block
  std::vector<std::pair<int, int>> col_range;  // [begin, end) 0-based columns per block
};

// Concatenation of blocks over fresh disjoint variables. Default naming
// follows the primary-decomposition convention: the s-th scroll block uses
// x{s}_1..x{s}_{p+1}, the j-th Jordan or nilpotent block uses y{j}_1..y{j}_p.
// Callers may instead supply one flat name list, one name per variable.
inline BlockMatrix build_matrix(const std::vector<Block>& blocks, Field field,
                                std::vector<std::string> names = {}) {
  require(!blocks.empty(), Errc::input, "empty block list");
  int total_vars = 0;
  for (auto& b : blocks) total_vars += b.variables();
  if (names.empty()) {
    int ns = 0, nj = 0;
    for (auto& b : blocks) {
      if (b.kind == Block::Kind::scroll) {
        ++ns;
        for (int k = 1; k <= b.variables(); ++k)
          names.push_back("x" + std::to_string(ns) + "_" + std::to_string(k));
      } else {
        ++nj;
        for (int k = 1; k <= b.variables(); ++k)
          names.push_back("y" + std::to_string(nj) + "_" + std::to_string(k));
      }
    }
  }
  require(static_cast<int>(names.size()) == total_vars, Errc::input,
          "expected " + std::to_string(total_vars) + " variable names");
  std::vector<Variable> vars;
  for (auto& n : names) vars.push_back({n, VarRole::Generic, 0, 0});
  RingPtr ring = make_ring(std::move(vars));

  BlockMatrix bm;
  bm.blocks = blocks;
  bm.matrix.ring = ring;
  bm.matrix.field = field;
  auto var = [&](int k) { return Polynomial::variable(ring, k, field); };
  int v = 0, col = 0;
  for (auto& b : blocks) {
    bm.var_range.push_back({v, v + b.variables()});
    bm.col_range.push_back({col, col + b.columns()});
    switch (b.kind) {
      case Block::Kind::scroll:
        for (int k = 0; k < b.size; ++k) {
          bm.matrix.rows[0].push_back(var(v + k));
          bm.matrix.rows[1].push_back(var(v + k + 1));
        }
        break;
      case Block::Kind::jordan: {
        Scalar eps = b.eigenvalue;
        require(eps.field() == field, Errc::input, "eigenvalue in the wrong field");
        for (int k = 0; k < b.size; ++k) {
          bm.matrix.rows[0].push_back(var(v + k));
          Polynomial second = var(v + k) * eps;
          if (k + 1 < b.size) second = var(v + k + 1) + second;
          bm.matrix.rows[1].push_back(second);
        }
        break;
      }
      case Block::Kind::nilpotent:
        for (int k = 0; k <= b.size; ++k) {
          bm.matrix.rows[0].push_back(k == 0 ? Polynomial::zero(ring, field) : var(v + k - 1));
          bm.matrix.rows[1].push_back(k == b.size ? Polynomial::zero(ring, field) : var(v + k));
        }
        break;
    }
    v += b.variables();
    col += b.columns();
  }
  return bm;
}

// Row-slice coefficient matrices: entry(i,j) = sum_k slice_i(j,k) * var_k.
inline std::pair<Mat, Mat> slices(const LinearMatrix2& m) {
  int n = m.ring->size();
  int cols = m.cols();
  Mat A(cols, n, m.field), B(cols, n, m.field);
  for (int i = 0; i < 2; ++i) {
    Mat& S = i == 0 ? A : B;
    for (int j = 0; j < cols; ++j) {
      for (auto& t : m.rows[i][j].terms()) {
        require(t.mono.degree() == 1, Errc::input, "nonlinear entry in matrix");
        S.at(j, t.mono.exponents().front().first) = t.coeff;
      }
    }
  }
  return {std::move(A), std::move(B)};
}

inline LinearMatrix2 from_slices(RingPtr ring, Field f, const Mat& A, const Mat& B) {
  LinearMatrix2 m;
  m.ring = ring;
  m.field = f;
  for (int i = 0; i < 2; ++i) {
    const Mat& S = i == 0 ? A : B;
    for (int j = 0; j < S.rows(); ++j) {
      Polynomial p = Polynomial::zero(ring, f);
      for (int k = 0; k < S.cols(); ++k)
        if (!S.at(j, k).is_zero())
          p = p + Polynomial::term(ring, Monomial::var(k), S.at(j, k));
      m.rows[i].push_back(std::move(p));
    }
  }
  return m;
}

// det of the column pair (a, b), a < b
inline Polynomial minor2(const LinearMatrix2& m, int a, int b) {
  require(1 <= a && a < b && b <= m.cols(), Errc::input, "minor column indices out of range");
  return m.entry(1, a) * m.entry(2, b) - m.entry(2, a) * m.entry(1, b);
}

inline Ideal minors_ideal(const LinearMatrix2& m) {
  std::vector<Polynomial> gens;
  for (int a = 1; a <= m.cols(); ++a)
    for (int b = a + 1; b <= m.cols(); ++b) gens.push_back(minor2(m, a, b));
  return Ideal::of(m.ring, m.field, std::move(gens));
}

// apply a 2x2 row operation, a GL(c+1) column operation, or a variable
// substitution; all preserve the ideal of minors up to the stated equivalence
inline LinearMatrix2 row_transform(const LinearMatrix2& m, const Mat& g2) {
  require(g2.rows() == 2 && g2.cols() == 2, Errc::input, "row transform must be 2x2");
  LinearMatrix2 r = m;
  for (int j = 0; j < m.cols(); ++j) {
    r.rows[0][j] = m.rows[0][j] * g2.at(0, 0) + m.rows[1][j] * g2.at(0, 1);
    r.rows[1][j] = m.rows[0][j] * g2.at(1, 0) + m.rows[1][j] * g2.at(1, 1);
  }
  return r;
}

inline LinearMatrix2 column_transform(const LinearMatrix2& m, const Mat& q) {
  int n = m.cols();
  require(q.rows() == n && q.cols() == n, Errc::input, "column transform shape mismatch");
  LinearMatrix2 r = m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial p = Polynomial::zero(m.ring, m.field);
      for (int k = 0; k < n; ++k)
        if (!q.at(k, j).is_zero()) p = p + m.rows[i][k] * q.at(k, j);
      r.rows[i][j] = std::move(p);
    }
  return r;
}

// invertible linear substitution x_k -> sum_l Q(k,l) x_l
struct LinearAutomorphism {
  RingPtr ring;
  Field field;
  Mat forward;
  Mat backward;

  static LinearAutomorphism identity(RingPtr ring, Field f) {
    int n = ring->size();
    return {ring, f, Mat::identity(n, f), Mat::identity(n, f)};
  }

  static LinearAutomorphism of(RingPtr ring, Field f, Mat q) {
    Mat inv = q.inverse();
    return {std::move(ring), f, std::move(q), std::move(inv)};
  }

  Polynomial apply(const Polynomial& p, bool inverse = false) const {
    const Mat& Q = inverse ? backward : forward;
    std::map<int, Polynomial> images;
    for (int k = 0; k < ring->size(); ++k) {
      Polynomial img = Polynomial::zero(ring, field);
      for (int l = 0; l < ring->size(); ++l)
        if (!Q.at(k, l).is_zero())
          img = img + Polynomial::term(ring, Monomial::var(l), Q.at(k, l));
      images.emplace(k, std::move(img));
    }
    return p.substitute(images, ring);
  }

  LinearMatrix2 apply(const LinearMatrix2& m, bool inverse = false) const {
    LinearMatrix2 r = m;
    for (int i = 0; i < 2; ++i)
      for (auto& e : r.rows[i]) e = apply(e, inverse);
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < forward.rows(); ++i)
      for (int j = 0; j < forward.cols(); ++j) {
        if (i == j && !forward.at(i, j).is_one()) return false;
        if (i != j && !forward.at(i, j).is_zero()) return false;
      }
    return true;
  }
};

}  // namespace twodet
