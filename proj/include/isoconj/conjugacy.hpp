// Geometric invariants of conjugation: mod-sets, move-sets, fix-sets,
// filling, closed-form conjugacy classes, their components and stabilizers.
//
// For h = t^lambda h0 the mod-set is the integer coset lambda + (h0 - Id)Z^n;
// the conjugacy class of h is the finite union over point-group elements u of
// the components (u h0 u^-1, u(lambda + Mod(h0))), each a coset of a sublattice.

#pragma once

#include "group.hpp"
#include "lattice.hpp"
#include "normal_form.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace isoconj {

// (P - Id) Z^n for the point element p
inline Sublattice mod_lattice(const PointGroup& g, int p) {
  return Sublattice::from_generators(g.matrix(p) - IntMatrix::identity(g.dim()));
}

inline AffineSublattice mod_set(const PointGroup& g, const Isometry& h) {
  return AffineSublattice(h.trans, mod_lattice(g, h.point));
}

// Mov(h0) meet Z^n = saturation of the mod lattice
inline Sublattice mov_lattice(const PointGroup& g, int p) {
  return saturation(mod_lattice(g, p));
}

struct MovSet {
  RatVec offset;   // lambda
  RatMatrix basis; // rational basis of the direction space (n x dim)
  int dim = 0;
};

inline MovSet mov_set(const PointGroup& g, const Isometry& h) {
  Sublattice sat = mov_lattice(g, h.point);
  MovSet m;
  m.dim = sat.rank();
  m.basis = RatMatrix::from_int(sat.basis());
  m.offset.resize(h.trans.size());
  for (size_t i = 0; i < h.trans.size(); ++i) m.offset[i] = Rat(h.trans[i]);
  return m;
}

// Fix(h0) meet Z^n = Ker(P - Id) over the integers; saturated by construction
inline Sublattice fix_lattice(const PointGroup& g, int p) {
  return integer_kernel(g.matrix(p) - IntMatrix::identity(g.dim()));
}

// rational kernel basis of (P - Id)
inline RatMatrix fix_set(const PointGroup& g, int p) {
  return RatMatrix::from_int(fix_lattice(g, p).basis());
}

// h fills its move-set iff Z^n / Mod(h0) is torsion-free, i.e. every nonzero
// Smith divisor of (P - Id) equals 1. Depends only on the point part.
inline bool filling_check(const PointGroup& g, const Isometry& h) {
  SmithDecomposition d = snf(g.matrix(h.point) - IntMatrix::identity(g.dim()));
  for (const Int& div : d.divisors)
    if (div != 0 && div != 1) return false;
  return true;
}

// independent route for the same predicate: Mod(h0) = Mov(h0) meet Z^n
inline bool filling_check_saturation(const PointGroup& g, const Isometry& h) {
  Sublattice mod = mod_lattice(g, h.point);
  return saturation(mod) == mod;
}

struct Component {
  int point = 0;          // spherical part u h0 u^-1
  AffineSublattice coset; // u(lambda + Mod(h0)), canonical

  bool operator==(const Component& o) const { return point == o.point && coset == o.coset; }
  bool operator<(const Component& o) const {
    if (point != o.point) return point < o.point;
    return coset < o.coset;
  }
};

struct ClassDescription {
  Isometry representative;
  std::vector<Component> components; // deduplicated, sorted by (point, offset)
};

inline std::vector<Component> components(const PointGroup& g, const Isometry& h) {
  Sublattice mod = mod_lattice(g, h.point);
  AffineSublattice base(h.trans, mod);
  std::set<Component> out;
  for (int u = 0; u < g.size(); ++u)
    out.insert(Component{g.conjugate_point(u, h.point), base.transformed(g.matrix(u))});
  return std::vector<Component>(out.begin(), out.end());
}

inline ClassDescription conjugacy_class(const PointGroup& g, const Isometry& h) {
  return ClassDescription{h, components(g, h)};
}

inline int component_count(const PointGroup& g, const Isometry& h) {
  return int(components(g, h).size());
}

// stabilizer of the base component under the conjugation action of the point
// group: u centralizes h0 and (Id - u) lambda lies in Mod(h0)
inline std::vector<int> component_stabilizer(const PointGroup& g, const Isometry& h) {
  Sublattice mod = mod_lattice(g, h.point);
  std::vector<int> stab;
  for (int u = 0; u < g.size(); ++u) {
    if (g.multiply(u, h.point) != g.multiply(h.point, u)) continue;
    if (!mod.contains(vec_sub(h.trans, g.matrix(u) * h.trans))) continue;
    stab.push_back(u);
  }
  return stab;
}

} // namespace isoconj
