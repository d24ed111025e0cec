// Brute-force ground truth, restricted to boxes in lattice coordinates.
//
// brute_class enumerates conjugators k = t^eta u with ||eta||_inf <= R and
// collects k h k^-1; brute_coconj collects the conjugators themselves.
// compare() restricts both a closed-form description and an oracle output to
// the same translation window and reports exact set equality with witnesses.

#pragma once

#include "coconjugation.hpp"
#include "conjugacy.hpp"
#include "group.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace isoconj {

struct Ball {
  long radius = 0; // max-norm bound on translation coordinates
};

template <typename Fn>
inline void for_each_box_point(int dim, long radius, Fn&& fn) {
  IntVec v(dim, Int(-radius));
  if (radius < 0) return;
  for (;;) {
    fn(std::as_const(v));
    int i = 0;
    while (i < dim) {
      v[i] += 1;
      if (v[i] <= radius) break;
      v[i] = -radius;
      ++i;
    }
    if (i == dim) return;
  }
}

inline bool in_ball(const IntVec& v, const Ball& b) {
  for (const Int& x : v)
    if (x > b.radius || x < -b.radius) return false;
  return true;
}

inline std::set<Isometry> brute_class(const PointGroup& g, const Isometry& h, Ball b) {
  std::set<Isometry> out;
  for (int u = 0; u < g.size(); ++u) {
    // k h k^-1 = t^{u lambda + (Id - c) eta} c with c = u h0 u^-1
    int c = g.conjugate_point(u, h.point);
    IntVec ulam = g.matrix(u) * h.trans;
    IntMatrix m = IntMatrix::identity(g.dim()) - g.matrix(c);
    for_each_box_point(g.dim(), b.radius, [&](const IntVec& eta) {
      out.insert(Isometry{vec_add(ulam, m * eta), c});
    });
  }
  return out;
}

inline std::set<Isometry> brute_coconj(const PointGroup& g, const Isometry& h, const Isometry& h2,
                                       Ball b) {
  std::set<Isometry> out;
  for (int u = 0; u < g.size(); ++u) {
    for_each_box_point(g.dim(), b.radius, [&](const IntVec& eta) {
      Isometry k{eta, u};
      if (conjugate(g, k, h) == h2) out.insert(k);
    });
  }
  return out;
}

// all members of the described class whose translation lies in the ball
inline std::set<Isometry> class_members_in_ball(const ClassDescription& d, Ball b) {
  std::set<Isometry> out;
  for (const Component& comp : d.components) {
    for_each_box_point(comp.coset.ambient_dim(), b.radius, [&](const IntVec& xi) {
      if (comp.coset.contains(xi)) out.insert(Isometry{xi, comp.point});
    });
  }
  return out;
}

// all conjugators described, with translation in the ball
inline std::set<Isometry> coconj_members_in_ball(const CoconjDescription& d, int dim, Ball b) {
  std::set<Isometry> out;
  for (const CoconjBranch& br : d.branches) {
    for_each_box_point(dim, b.radius, [&](const IntVec& w) {
      if (br.fix.contains(vec_sub(w, br.eta))) out.insert(Isometry{w, br.u});
    });
  }
  return out;
}

struct CompareReport {
  bool equal = true;
  std::vector<Isometry> only_in_description; // witnesses
  std::vector<Isometry> only_in_oracle;

  std::string summary() const {
    if (equal) return "equal";
    return "DISCREPANCY: " + std::to_string(only_in_description.size()) +
           " only in closed form, " + std::to_string(only_in_oracle.size()) + " only in oracle";
  }
};

namespace detail {
inline CompareReport compare_sets(const std::set<Isometry>& described,
                                  const std::set<Isometry>& oracle, Ball b) {
  CompareReport rep;
  for (const Isometry& x : described)
    if (!oracle.count(x)) rep.only_in_description.push_back(x);
  for (const Isometry& x : oracle)
    if (in_ball(x.trans, b) && !described.count(x)) rep.only_in_oracle.push_back(x);
  rep.equal = rep.only_in_description.empty() && rep.only_in_oracle.empty();
  return rep;
}
} // namespace detail

inline CompareReport compare(const ClassDescription& d, const std::set<Isometry>& oracle, Ball b) {
  return detail::compare_sets(class_members_in_ball(d, b), oracle, b);
}

inline CompareReport compare(const CoconjDescription& d, int dim, const std::set<Isometry>& oracle,
                             Ball b) {
  return detail::compare_sets(coconj_members_in_ball(d, dim, b), oracle, b);
}

} // namespace isoconj
