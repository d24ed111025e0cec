// isoconj: exact conjugacy geometry for split groups of Euclidean isometries.
//
// Dense matrices over arbitrary-precision integers (mpz) and rationals (mpq).
// Everything here is exact; no floating point.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoconj {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// floor division (round toward -inf), so remainders land in [0, |b|)
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(check_size(rows, cols)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // row-major convenience constructor, used by the catalog and tests
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(int n, const std::vector<IntVec>& cols) {
    IntMatrix m(n, int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      if (int(cols[j].size()) != n) throw std::invalid_argument("bad column length");
      for (int i = 0; i < n; ++i) m.at(i, int(j)) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntVec column(int j) const {
    IntVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
      }
    return p;
  }

  IntVec operator*(const IntVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    require_same_shape(o);
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    require_same_shape(o);
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }

  IntMatrix operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  // shape-then-entries ordering; used as a map key during closure
  bool operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
  }

  bool is_zero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  // Bareiss fraction-free elimination; exact for arbitrary size
  Int determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix w(*this);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (w.at(k, k) == 0) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
          if (w.at(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) {
          Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
          mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        }
      prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

private:
  static size_t check_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return size_t(rows) * size_t(cols);
  }
  void require_same_shape(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int d = m.determinant();
  return d == 1 || d == -1;
}

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix from_int(const IntMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) m.at(i, j) = Rat(a.at(i, j));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (int j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
      }
    return p;
  }

  RatVec operator*(const RatVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    RatVec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  // Sylvester criterion: all leading principal minors positive
  bool is_positive_definite() const {
    if (!is_symmetric()) return false;
    for (int k = 1; k <= rows_; ++k) {
      RatMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
      if (sub.determinant() <= 0) return false;
    }
    return true;
  }

  Rat determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix w(*this);
    Rat det = 1;
    for (int k = 0; k < rows_; ++k) {
      int p = -1;
      for (int i = k; i < rows_; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return Rat(0);
      if (p != k) {
        for (int j = 0; j < cols_; ++j) std::swap(w.at(k, j), w.at(p, j));
        det = -det;
      }
      det *= w.at(k, k);
      for (int i = k + 1; i < rows_; ++i) {
        if (w.at(i, k) == 0) continue;
        Rat f = w.at(i, k) / w.at(k, k);
        for (int j = k; j < cols_; ++j) w.at(i, j) -= f * w.at(k, j);
      }
    }
    return det;
  }

  // Gauss-Jordan; empty result when singular
  std::optional<RatMatrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    RatMatrix w(*this);
    RatMatrix inv = identity(n);
    for (int k = 0; k < n; ++k) {
      int p = -1;
      for (int i = k; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return std::nullopt;
      if (p != k)
        for (int j = 0; j < n; ++j) {
          std::swap(w.at(k, j), w.at(p, j));
          std::swap(inv.at(k, j), inv.at(p, j));
        }
      Rat piv = w.at(k, k);
      for (int j = 0; j < n; ++j) {
        w.at(k, j) /= piv;
        inv.at(k, j) /= piv;
      }
      for (int i = 0; i < n; ++i) {
        if (i == k || w.at(i, k) == 0) continue;
        Rat f = w.at(i, k);
        for (int j = 0; j < n; ++j) {
          w.at(i, j) -= f * w.at(k, j);
          inv.at(i, j) -= f * inv.at(k, j);
        }
      }
    }
    return inv;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

} // namespace isoconj
