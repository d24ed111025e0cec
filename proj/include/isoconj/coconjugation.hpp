// Coconjugation sets, centralizers, and the conjugacy decision procedure.
//
// coconj(h, h') = { k : k h k^-1 = h' } decomposes as a finite disjoint union,
// over the translation-compatible spherical conjugators u, of integer cosets
// t^{eta_u + (Fix(h0') meet Z^n)} u, where eta_u solves (Id - P') eta = lambda' - u lambda.

#pragma once

#include "conjugacy.hpp"
#include "group.hpp"

#include <optional>
#include <vector>

namespace isoconj {

struct CoconjBranch {
  int u = 0;      // spherical conjugator
  IntVec eta;     // particular solution, reduced modulo fix
  Sublattice fix; // Fix(h0') meet Z^n
};

struct CoconjDescription {
  std::vector<CoconjBranch> branches; // sorted by u; pairwise distinct u
  bool empty() const { return branches.empty(); }
};

// { u in H0 : u h0 u^-1 = h0' } by exhaustive scan. This is the single place
// where spherical conjugacy is decided; plugging in anything smarter than a
// scan only requires replacing this function.
inline std::vector<int> spherical_coconj(const PointGroup& g, int p, int p2) {
  std::vector<int> out;
  for (int u = 0; u < g.size(); ++u)
    if (g.conjugate_point(u, p) == p2) out.push_back(u);
  return out;
}

// the u with lambda' - u lambda in Mod(h0'), i.e. with (Id - P') eta = lambda' - u lambda
// solvable over the integers
inline std::vector<int> translation_compatible_part(const PointGroup& g, const Isometry& h,
                                                    const Isometry& h2) {
  IntMatrix lhs = IntMatrix::identity(g.dim()) - g.matrix(h2.point);
  std::vector<int> out;
  for (int u : spherical_coconj(g, h.point, h2.point)) {
    IntVec rhs = vec_sub(h2.trans, g.matrix(u) * h.trans);
    if (solve_integer(lhs, rhs).has_value()) out.push_back(u);
  }
  return out;
}

inline CoconjDescription coconjugation_set(const PointGroup& g, const Isometry& h,
                                           const Isometry& h2) {
  if (h.trans.size() != h2.trans.size())
    throw std::invalid_argument("isometries from different groups");
  IntMatrix lhs = IntMatrix::identity(g.dim()) - g.matrix(h2.point);
  Sublattice fix = integer_kernel(lhs);

  // Fix = {0}: (Id - P') is invertible, each compatible u has a unique eta
  std::optional<RatMatrix> lhs_inv;
  if (fix.rank() == 0) lhs_inv = RatMatrix::from_int(lhs).inverse();

  CoconjDescription out;
  for (int u : spherical_coconj(g, h.point, h2.point)) {
    IntVec rhs = vec_sub(h2.trans, g.matrix(u) * h.trans);
    if (lhs_inv) {
      RatVec rv(rhs.size());
      for (size_t i = 0; i < rhs.size(); ++i) rv[i] = Rat(rhs[i]);
      RatVec sol = *lhs_inv * rv;
      IntVec eta(sol.size());
      bool integral = true;
      for (size_t i = 0; i < sol.size(); ++i) {
        if (sol[i].get_den() != 1) {
          integral = false;
          break;
        }
        eta[i] = sol[i].get_num();
      }
      if (integral) out.branches.push_back(CoconjBranch{u, std::move(eta), fix});
    } else if (auto eta = solve_integer(lhs, rhs)) {
      out.branches.push_back(CoconjBranch{u, fix.reduce(*eta), fix});
    }
  }
  return out;
}

inline bool is_conjugate(const PointGroup& g, const Isometry& h, const Isometry& h2) {
  return !translation_compatible_part(g, h, h2).empty();
}

// coconjugation from h to itself; never empty (u = identity, eta = 0)
inline CoconjDescription centralizer(const PointGroup& g, const Isometry& h) {
  return coconjugation_set(g, h, h);
}

} // namespace isoconj
