// Hermite and Smith normal forms over the integers, and integer linear solving.
//
// Conventions, fixed once for the whole library:
//  - hnf() is column-style: unimodular column operations only, zero columns
//    dropped, each pivot is the topmost nonzero entry of its column, pivot
//    rows strictly increase left to right, pivots are positive, and entries
//    to the left of a pivot (same row) are reduced into [0, pivot).
//    The result is the unique canonical basis of the column span.
//  - snf() returns U, A |-> U*A*V = diag(d1,...,dk) with di >= 0 and di | di+1.
//    Pivot selection: minimal absolute value, ties by lowest (row, col).

#pragma once

#include "matrix.hpp"

#include <optional>
#include <vector>

namespace isoconj {

struct HnfResult {
  IntMatrix basis; // rows x rank, canonical
  int rank = 0;
};

inline HnfResult hnf(const IntMatrix& a) {
  int n = a.rows(), m = a.cols();
  IntMatrix w(a);
  auto swap_cols = [&](int x, int y) {
    for (int i = 0; i < n; ++i) std::swap(w.at(i, x), w.at(i, y));
  };
  auto addmul_col = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < n; ++i) w.at(i, dst) += f * w.at(i, src);
  };
  int c = 0;
  for (int r = 0; r < n && c < m; ++r) {
    // gcd-eliminate row r across the active columns
    for (;;) {
      int best = -1;
      for (int j = c; j < m; ++j) {
        if (w.at(r, j) == 0) continue;
        if (best < 0 || mpz_cmpabs(w.at(r, j).get_mpz_t(), w.at(r, best).get_mpz_t()) < 0) best = j;
      }
      if (best < 0) break;
      if (best != c) swap_cols(c, best);
      bool clean = true;
      for (int j = c + 1; j < m; ++j) {
        if (w.at(r, j) == 0) continue;
        Int q = floor_div(w.at(r, j), w.at(r, c));
        addmul_col(j, c, -q);
        if (w.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w.at(r, c) == 0) continue;
    if (w.at(r, c) < 0)
      for (int i = 0; i < n; ++i) w.at(i, c) = -w.at(i, c);
    for (int j = 0; j < c; ++j) {
      Int q = floor_div(w.at(r, j), w.at(r, c));
      addmul_col(j, c, -q);
    }
    ++c;
  }
  HnfResult res;
  res.rank = c;
  res.basis = IntMatrix(n, c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) res.basis.at(i, j) = w.at(i, j);
  return res;
}

struct SmithDecomposition {
  IntMatrix u, v;            // unimodular, u*a*v = diag(divisors)
  std::vector<Int> divisors; // length min(rows, cols), nonneg, divisibility chain
  int rank() const {
    int r = 0;
    for (const Int& d : divisors)
      if (d != 0) ++r;
    return r;
  }
};

inline SmithDecomposition snf(const IntMatrix& a) {
  int m = a.rows(), n = a.cols();
  IntMatrix s(a);
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_rows = [&](int x, int y) {
    for (int j = 0; j < n; ++j) std::swap(s.at(x, j), s.at(y, j));
    for (int j = 0; j < m; ++j) std::swap(u.at(x, j), u.at(y, j));
  };
  auto swap_cols = [&](int x, int y) {
    for (int i = 0; i < m; ++i) std::swap(s.at(i, x), s.at(i, y));
    for (int i = 0; i < n; ++i) std::swap(v.at(i, x), v.at(i, y));
  };
  auto addmul_row = [&](int dst, int src, const Int& f) {
    for (int j = 0; j < n; ++j) s.at(dst, j) += f * s.at(src, j);
    for (int j = 0; j < m; ++j) u.at(dst, j) += f * u.at(src, j);
  };
  auto addmul_col = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < m; ++i) s.at(i, dst) += f * s.at(i, src);
    for (int i = 0; i < n; ++i) v.at(i, dst) += f * v.at(i, src);
  };
  auto negate_row = [&](int x) {
    for (int j = 0; j < n; ++j) s.at(x, j) = -s.at(x, j);
    for (int j = 0; j < m; ++j) u.at(x, j) = -u.at(x, j);
  };

  int mn = std::min(m, n);
  for (int t = 0; t < mn; ++t) {
    for (;;) {
      // minimal |entry| in the trailing submatrix, ties by lowest (row, col)
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (s.at(i, j) == 0) continue;
          if (pi < 0 || mpz_cmpabs(s.at(i, j).get_mpz_t(), s.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) { pi = pj = t; } // submatrix is zero, done with all stages
      if (s.at(pi, pj) == 0) break;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = floor_div(s.at(i, t), s.at(t, t));
        addmul_row(i, t, -q);
        if (s.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = floor_div(s.at(t, j), s.at(t, t));
        addmul_col(j, t, -q);
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix
      const Int& p = s.at(t, t);
      int bi = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (s.at(i, j) % p != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      addmul_row(t, bi, 1); // drags a non-multiple into row t; next pass shrinks the pivot
    }
    if (s.at(t, t) < 0) negate_row(t);
  }

  SmithDecomposition d;
  d.u = std::move(u);
  d.v = std::move(v);
  d.divisors.resize(mn);
  for (int t = 0; t < mn; ++t) d.divisors[t] = s.at(t, t);
  return d;
}

// Some particular integer solution of A*x = b, through the Smith decomposition;
// empty when no integral solution exists.
inline std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve_integer: rhs length mismatch");
  SmithDecomposition d = snf(a);
  int m = a.rows(), n = a.cols(), mn = std::min(m, n);
  IntVec c = d.u * b;
  IntVec y(n);
  for (int i = 0; i < m; ++i) {
    if (i < mn && d.divisors[i] != 0) {
      if (c[i] % d.divisors[i] != 0) return std::nullopt;
      y[i] = c[i] / d.divisors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v * y;
}

} // namespace isoconj
