// Sublattices of Z^n in canonical Hermite form, and their integer cosets.
//
// A Sublattice stores the unique column-style HNF basis of its span, so
// equality of sublattices (and of canonicalized cosets) is plain value
// equality. Coset offsets are always kept reduced modulo the lattice.

#pragma once

#include "matrix.hpp"
#include "normal_form.hpp"

#include <stdexcept>
#include <vector>

namespace isoconj {

class Sublattice {
public:
  Sublattice() = default;
  explicit Sublattice(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  static Sublattice from_generators(const IntMatrix& gens) {
    Sublattice s;
    s.ambient_ = gens.rows();
    HnfResult h = hnf(gens);
    s.basis_ = std::move(h.basis);
    s.init_pivots();
    return s;
  }

  static Sublattice full(int n) { return from_generators(IntMatrix::identity(n)); }

  int ambient_dim() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_zero() const { return rank() == 0; }

  // pivot row of basis column j (topmost nonzero entry)
  int pivot_row(int j) const { return pivots_[j]; }

  bool contains(const IntVec& v) const {
    check_dim(v);
    IntVec r = v;
    for (int j = 0; j < rank(); ++j) {
      int p = pivots_[j];
      if (r[p] % basis_.at(p, j) != 0) return false;
      Int q = r[p] / basis_.at(p, j);
      if (q != 0)
        for (int i = 0; i < ambient_; ++i) r[i] -= q * basis_.at(i, j);
    }
    return isoconj::is_zero(r);
  }

  // canonical coset representative: pivot-row coordinates land in [0, pivot)
  IntVec reduce(const IntVec& v) const {
    check_dim(v);
    IntVec r = v;
    for (int j = 0; j < rank(); ++j) {
      int p = pivots_[j];
      Int q = floor_div(r[p], basis_.at(p, j));
      if (q != 0)
        for (int i = 0; i < ambient_; ++i) r[i] -= q * basis_.at(i, j);
    }
    return r;
  }

  bool contains_sublattice(const Sublattice& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (int j = 0; j < other.rank(); ++j)
      if (!contains(other.basis_.column(j))) return false;
    return true;
  }

  Sublattice transformed(const IntMatrix& m) const { return from_generators(m * basis_); }

  bool operator==(const Sublattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Sublattice& o) const { return !(*this == o); }
  bool operator<(const Sublattice& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    return basis_ < o.basis_;
  }

private:
  void check_dim(const IntVec& v) const {
    if (int(v.size()) != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  }
  void init_pivots() {
    pivots_.clear();
    for (int j = 0; j < basis_.cols(); ++j) {
      int p = 0;
      while (basis_.at(p, j) == 0) ++p;
      pivots_.push_back(p);
    }
  }

  int ambient_ = 0;
  IntMatrix basis_{0, 0};
  std::vector<int> pivots_;
};

// {x in Z^n : A x = 0}; always a saturated sublattice
inline Sublattice integer_kernel(const IntMatrix& a) {
  SmithDecomposition d = snf(a);
  int m = a.rows(), n = a.cols(), mn = std::min(m, n);
  std::vector<IntVec> cols;
  for (int i = 0; i < n; ++i)
    if (i >= mn || d.divisors[i] == 0) cols.push_back(d.v.column(i));
  return Sublattice::from_generators(IntMatrix::from_columns(n, cols));
}

// smallest sublattice with torsion-free quotient containing S: (Q-span of S) meet Z^n,
// computed as the kernel of the integral forms vanishing on S
inline Sublattice saturation(const Sublattice& s) {
  Sublattice perp = integer_kernel(s.basis().transposed());
  return integer_kernel(perp.basis().transposed());
}

class AffineSublattice {
public:
  AffineSublattice() = default;
  AffineSublattice(IntVec offset, Sublattice lattice)
      : lattice_(std::move(lattice)), offset_(lattice_.reduce(offset)) {}

  const IntVec& offset() const { return offset_; }
  const Sublattice& lattice() const { return lattice_; }
  int ambient_dim() const { return lattice_.ambient_dim(); }

  bool contains(const IntVec& v) const { return lattice_.contains(vec_sub(v, offset_)); }

  AffineSublattice translated(const IntVec& t) const {
    return AffineSublattice(vec_add(offset_, t), lattice_);
  }

  // image under a linear map, recanonicalized
  AffineSublattice transformed(const IntMatrix& m) const {
    return AffineSublattice(m * offset_, lattice_.transformed(m));
  }

  bool operator==(const AffineSublattice& o) const {
    return offset_ == o.offset_ && lattice_ == o.lattice_;
  }
  bool operator!=(const AffineSublattice& o) const { return !(*this == o); }
  bool operator<(const AffineSublattice& o) const {
    if (offset_ != o.offset_) return offset_ < o.offset_;
    return lattice_ < o.lattice_;
  }

private:
  Sublattice lattice_;
  IntVec offset_;
};

inline bool coset_contains(const AffineSublattice& c, const IntVec& v) { return c.contains(v); }

inline bool coset_equal(const AffineSublattice& a, const AffineSublattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  return a.lattice() == b.lattice() && a.lattice().contains(vec_sub(a.offset(), b.offset()));
}

inline bool sublattice_equal(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  return a == b;
}

} // namespace isoconj
