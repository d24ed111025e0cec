// Built-in group models: the 13 symmorphic wallpaper groups and small affine
// Coxeter groups, in lattice-basis coordinates.
//
// Wallpaper models use an integer Gram form with generic parameters wherever
// the lattice is not rigid, so no accidental extra symmetry appears. Coxeter
// entries are Weyl groups acting on the coroot lattice in the simple-coroot
// basis, which makes every reflection matrix integral.

#pragma once

#include "group.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace isoconj {

struct CatalogEntry {
  std::string key;
  GroupSpec spec;
  std::string notes;
  int known_order = 1; // documented point-group order, re-verified by closure
};

namespace detail {

inline RatMatrix gram2(long a, long b, long c) {
  RatMatrix g(2, 2);
  g.at(0, 0) = a;
  g.at(0, 1) = b;
  g.at(1, 0) = b;
  g.at(1, 1) = c;
  return g;
}

inline CatalogEntry entry(std::string key, int dim, RatMatrix gram,
                          std::vector<std::vector<std::vector<long>>> gens,
                          std::vector<std::string> names, std::string notes, int order) {
  CatalogEntry e;
  e.key = key;
  e.spec.name = std::move(key);
  e.spec.dim = dim;
  e.spec.gram = std::move(gram);
  for (const auto& rows : gens) e.spec.generators.push_back(IntMatrix::from_rows(rows));
  e.spec.generator_names = std::move(names);
  e.notes = std::move(notes);
  e.known_order = order;
  return e;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;

  // oblique lattice, generic gram
  cat.push_back(entry("p1", 2, gram2(2, 1, 3), {}, {},
                      "oblique lattice, trivial point group", 1));
  cat.push_back(entry("p2", 2, gram2(2, 1, 3), {{{-1, 0}, {0, -1}}}, {"r2"},
                      "oblique lattice, half-turn", 2));

  // rectangular lattice (a = 1, b = 2), mirrors along the axes;
  // centered rectangular lattice with basis (2,1), (2,-1), mirrors swap it
  cat.push_back(entry("pm", 2, gram2(1, 0, 2), {{{1, 0}, {0, -1}}}, {"s1"},
                      "rectangular lattice, one mirror", 2));
  cat.push_back(entry("cm", 2, gram2(5, 3, 5), {{{0, 1}, {1, 0}}}, {"s1"},
                      "centered rectangular lattice (a=2, b=1), one mirror", 2));
  cat.push_back(entry("pmm", 2, gram2(1, 0, 2),
                      {{{1, 0}, {0, -1}}, {{-1, 0}, {0, 1}}}, {"s1", "s2"},
                      "rectangular lattice, perpendicular mirrors", 4));
  cat.push_back(entry("cmm", 2, gram2(5, 3, 5),
                      {{{0, 1}, {1, 0}}, {{0, -1}, {-1, 0}}}, {"s1", "s2"},
                      "centered rectangular lattice (a=2, b=1), two mirrors", 4));

  // square lattice
  cat.push_back(entry("p4", 2, gram2(1, 0, 1), {{{0, -1}, {1, 0}}}, {"r4"},
                      "square lattice, quarter-turn", 4));
  cat.push_back(entry("p4m", 2, gram2(1, 0, 1),
                      {{{0, -1}, {1, 0}}, {{1, 0}, {0, -1}}}, {"r4", "s1"},
                      "square lattice, quarter-turn and mirror", 8));

  // hexagonal lattice, basis vectors at 120 degrees
  cat.push_back(entry("p3", 2, gram2(2, -1, 2), {{{0, -1}, {1, -1}}}, {"r3"},
                      "hexagonal lattice, third-turn", 3));
  cat.push_back(entry("p3m1", 2, gram2(2, -1, 2),
                      {{{0, -1}, {1, -1}}, {{0, -1}, {-1, 0}}}, {"r3", "s1"},
                      "hexagonal lattice, third-turn, mirror (x,y)->(-y,-x)", 6));
  cat.push_back(entry("p31m", 2, gram2(2, -1, 2),
                      {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}}, {"r3", "s1"},
                      "hexagonal lattice, third-turn, mirror (x,y)->(y,x)", 6));
  cat.push_back(entry("p6", 2, gram2(2, -1, 2), {{{1, -1}, {1, 0}}}, {"r6"},
                      "hexagonal lattice, sixth-turn", 6));
  cat.push_back(entry("p6m", 2, gram2(2, -1, 2),
                      {{{1, -1}, {1, 0}}, {{0, 1}, {1, 0}}}, {"r6", "s1"},
                      "hexagonal lattice, sixth-turn and mirror", 12));

  // Weyl groups on the coroot lattice, simple-coroot basis
  cat.push_back(entry("coxeter_A2", 2, gram2(2, -1, 2),
                      {{{-1, 1}, {0, 1}}, {{1, 0}, {1, -1}}}, {"s1", "s2"},
                      "Weyl group A2 on its coroot lattice", 6));
  cat.push_back(entry("coxeter_C2", 2, gram2(2, -1, 1),
                      {{{-1, 1}, {0, 1}}, {{1, 0}, {2, -1}}}, {"s1", "s2"},
                      "Weyl group C2 on its coroot lattice", 8));
  cat.push_back(entry("coxeter_G2", 2, gram2(6, -3, 2),
                      {{{-1, 1}, {0, 1}}, {{1, 0}, {3, -1}}}, {"s1", "s2"},
                      "Weyl group G2 on its coroot lattice (gram scaled by 3)", 12));

  {
    RatMatrix g(3, 3);
    long rows[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.at(i, j) = rows[i][j];
    cat.push_back(entry("coxeter_A3", 3, std::move(g),
                        {{{-1, 1, 0}, {0, 1, 0}, {0, 0, 1}},
                         {{1, 0, 0}, {1, -1, 1}, {0, 0, 1}},
                         {{1, 0, 0}, {0, 1, 0}, {0, 1, -1}}},
                        {"s1", "s2", "s3"}, "Weyl group A3 on its coroot lattice", 24));
  }
  return cat;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> cat = detail::build_catalog();
  return cat;
}

inline std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const CatalogEntry& e : catalog_entries()) keys.push_back(e.key);
  return keys;
}

inline const CatalogEntry& catalog_get(const std::string& key) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.key == key) return e;
  throw std::invalid_argument("unknown catalog group '" + key + "'");
}

} // namespace isoconj
