#include "isoconj/catalog.hpp"
#include "isoconj/conjugacy.hpp"
#include "isoconj/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace isoconj;

namespace {

struct TestRng {
  std::mt19937_64 gen{4242};
  long pick(long lo, long hi) { return lo + long(gen() % (unsigned long)(hi - lo + 1)); }
};

Isometry random_isometry(TestRng& rng, const PointGroup& g, long range) {
  Isometry h = identity_isometry(g.dim());
  for (int i = 0; i < g.dim(); ++i) h.trans[i] = rng.pick(-range, range);
  h.point = int(rng.pick(0, g.size() - 1));
  return h;
}

const PointGroup& group(const char* key) {
  static std::map<std::string, PointGroup> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, validate_and_close(catalog_get(key).spec)).first;
  return it->second;
}

IntVec vec2(long a, long b) { return IntVec{Int(a), Int(b)}; }

} // namespace

TEST_CASE("mod sets in cmm") {
  const PointGroup& pg = group("cmm");
  AffineSublattice m1 = mod_set(pg, parse_element("s1", pg));
  CHECK(m1.offset() == vec2(0, 0));
  CHECK(m1.lattice().basis() == IntMatrix::from_rows({{1}, {-1}}));

  // s1 s2 = -Id, so the mod lattice is 2 Z^2
  AffineSublattice m3 = mod_set(pg, parse_element("g3", pg));
  CHECK(m3.lattice().basis() == IntMatrix::from_rows({{2, 0}, {0, 2}}));

  AffineSublattice mid = mod_set(pg, parse_element("t[3,-5]", pg));
  CHECK(mid.lattice().rank() == 0);
  CHECK(mid.offset() == vec2(3, -5));
}

TEST_CASE("move sets in cmm") {
  const PointGroup& pg = group("cmm");
  MovSet m1 = mov_set(pg, parse_element("s1", pg));
  CHECK(m1.dim == 1);
  CHECK(m1.basis == RatMatrix::from_int(IntMatrix::from_rows({{1}, {-1}})));

  CHECK(mov_set(pg, parse_element("g3", pg)).dim == 2);
  CHECK(mov_set(pg, parse_element("t[0,0]", pg)).dim == 0);

  MovSet shifted = mov_set(pg, parse_element("t[1,2]*s1", pg));
  CHECK(shifted.offset == RatVec{Rat(1), Rat(2)});
}

TEST_CASE("fix sets in cmm") {
  const PointGroup& pg = group("cmm");
  CHECK(fix_lattice(pg, 1).basis() == IntMatrix::from_rows({{1}, {1}}));
  CHECK(fix_lattice(pg, 3).rank() == 0);
  CHECK(fix_lattice(pg, 0) == Sublattice::full(2));
  CHECK(fix_set(pg, 1).cols() == 1);
}

TEST_CASE("filling in cmm matches the reference facts") {
  const PointGroup& pg = group("cmm");
  CHECK(filling_check(pg, parse_element("s1", pg)));
  CHECK(filling_check(pg, parse_element("s2", pg)));
  CHECK_FALSE(filling_check(pg, parse_element("s1*s2", pg)));
  CHECK(filling_check(pg, parse_element("t[0,0]", pg)));
  // shifting the element does not change the answer
  CHECK_FALSE(filling_check(pg, parse_element("t[1,0]*s1*s2", pg)));
  CHECK(filling_check(pg, parse_element("t[1,0]*s1", pg)));
}

TEST_CASE("both filling routes agree on every catalog point element") {
  for (const CatalogEntry& e : catalog_entries()) {
    PointGroup pg = validate_and_close(e.spec);
    for (int p = 0; p < pg.size(); ++p) {
      Isometry h = Isometry{IntVec(pg.dim()), p};
      CHECK(filling_check(pg, h) == filling_check_saturation(pg, h));
    }
  }
}

TEST_CASE("class of a translation in cmm is the finite orbit") {
  const PointGroup& pg = group("cmm");
  ClassDescription cls = conjugacy_class(pg, parse_element("t[1,0]", pg));
  REQUIRE(cls.components.size() == 4);
  std::set<IntVec> offsets;
  for (const Component& c : cls.components) {
    CHECK(c.point == 0);
    CHECK(c.coset.lattice().rank() == 0);
    offsets.insert(c.coset.offset());
  }
  CHECK(offsets == std::set<IntVec>{vec2(-1, 0), vec2(0, -1), vec2(0, 1), vec2(1, 0)});
}

TEST_CASE("class of the spherical reflection s1 in cmm") {
  // H0 is abelian, so every point part stays s1 and all cosets coincide
  const PointGroup& pg = group("cmm");
  ClassDescription cls = conjugacy_class(pg, parse_element("s1", pg));
  REQUIRE(cls.components.size() == 1);
  CHECK(cls.components[0].point == 1);
  CHECK(cls.components[0].coset.lattice().basis() == IntMatrix::from_rows({{1}, {-1}}));
  // cross-check against brute force: all ball conjugates lie on that coset
  for (const Isometry& m : brute_class(pg, parse_element("s1", pg), Ball{3})) {
    CHECK(m.point == 1);
    CHECK(cls.components[0].coset.contains(m.trans));
  }
}

TEST_CASE("class of t[1,0]*s1 in cmm splits into two lines") {
  const PointGroup& pg = group("cmm");
  ClassDescription cls = conjugacy_class(pg, parse_element("t[1,0]*s1", pg));
  REQUIRE(cls.components.size() == 2);
  for (const Component& c : cls.components) CHECK(c.point == 1);
}

TEST_CASE("class of t[1,0]*s1*s2 in cmm has two cosets of 2Z^2") {
  const PointGroup& pg = group("cmm");
  ClassDescription cls = conjugacy_class(pg, parse_element("t[1,0]*g3", pg));
  REQUIRE(cls.components.size() == 2);
  Sublattice two = Sublattice::from_generators(IntMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK(cls.components[0].coset == AffineSublattice(vec2(0, 1), two));
  CHECK(cls.components[1].coset == AffineSublattice(vec2(1, 0), two));
  for (const Component& c : cls.components) CHECK(c.point == 3);
  CHECK(component_count(pg, parse_element("t[1,0]*g3", pg)) == 2);
}

TEST_CASE("identity class is a single singleton") {
  const PointGroup& pg = group("cmm");
  ClassDescription cls = conjugacy_class(pg, identity_isometry(2));
  REQUIRE(cls.components.size() == 1);
  CHECK(cls.components[0].coset.lattice().rank() == 0);
  CHECK(cls.components[0].point == 0);
}

TEST_CASE("component stabilizer on worked examples") {
  const PointGroup& pg = group("cmm");
  CHECK(component_stabilizer(pg, parse_element("s1", pg)) == std::vector<int>{0, 1, 2, 3});
  CHECK(component_stabilizer(pg, parse_element("t[1,0]*g3", pg)) == std::vector<int>{0, 3});
  CHECK(component_stabilizer(pg, identity_isometry(2)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("mod-set equivariance and shift laws hold on samples") {
  TestRng rng;
  for (const char* key : {"cmm", "p4m", "p31m", "coxeter_C2"}) {
    const PointGroup& pg = group(key);
    for (int iter = 0; iter < 40; ++iter) {
      Isometry h = random_isometry(rng, pg, 4);
      int u = int(rng.pick(0, pg.size() - 1));
      // u Mod(h) = Mod(u h u^-1)
      Isometry uhu = conjugate(pg, Isometry{IntVec(pg.dim()), u}, h);
      CHECK(mod_set(pg, h).transformed(pg.matrix(u)) == mod_set(pg, uhu));
      // Mod(t^lambda h0) = lambda + Mod(h0)
      CHECK(mod_set(pg, h) == mod_set(pg, linearize(h)).translated(h.trans));
      // Mod(h0) sits inside Mov(h0) meet L with the same rank
      Sublattice mod = mod_lattice(pg, h.point);
      Sublattice sat = mov_lattice(pg, h.point);
      CHECK(sat.contains_sublattice(mod));
      CHECK(sat.rank() == mod.rank());
    }
  }
}

TEST_CASE("component counts obey the orbit-stabilizer and lifting laws") {
  TestRng rng;
  for (const char* key : {"cmm", "p6m", "p4", "coxeter_A2"}) {
    const PointGroup& pg = group(key);
    for (int iter = 0; iter < 40; ++iter) {
      Isometry h = random_isometry(rng, pg, 3);
      int nh = component_count(pg, h);
      int nh0 = component_count(pg, linearize(h));
      CHECK(nh >= nh0);
      CHECK(int(component_stabilizer(pg, h).size()) * nh == pg.size());
      // spherical count equals the size of the point-group conjugacy class
      std::set<int> cls0;
      for (int u = 0; u < pg.size(); ++u) cls0.insert(pg.conjugate_point(u, h.point));
      CHECK(nh0 == int(cls0.size()));
    }
  }
}

TEST_CASE("component lattices match the mod lattice of their point part") {
  TestRng rng;
  const PointGroup& pg = group("p6m");
  for (int iter = 0; iter < 25; ++iter) {
    Isometry h = random_isometry(rng, pg, 3);
    for (const Component& c : components(pg, h))
      CHECK(c.coset.lattice() == mod_lattice(pg, c.point));
  }
}

TEST_CASE("oracle conjugates lie along the move-set cosets") {
  // every brute conjugate t^xi c satisfies xi in u(lambda + Mov(h0) meet L)
  TestRng rng;
  for (const char* key : {"cmm", "p6", "coxeter_C2"}) {
    const PointGroup& pg = group(key);
    for (int iter = 0; iter < 12; ++iter) {
      Isometry h = random_isometry(rng, pg, 2);
      Sublattice sat = mov_lattice(pg, h.point);
      for (const Isometry& m : brute_class(pg, h, Ball{3})) {
        bool witnessed = false;
        for (int u = 0; u < pg.size() && !witnessed; ++u) {
          if (pg.conjugate_point(u, h.point) != m.point) continue;
          witnessed = sat.transformed(pg.matrix(u))
                          .contains(vec_sub(m.trans, pg.matrix(u) * h.trans));
        }
        CHECK(witnessed);
      }
    }
  }
}

TEST_CASE("filling holds exactly when the class fills its move-set cosets") {
  const PointGroup& pg = group("cmm");
  auto mov_union_in_ball = [&](const Isometry& h, long r) {
    std::set<Isometry> out;
    Sublattice sat = mov_lattice(pg, h.point);
    for (int u = 0; u < pg.size(); ++u) {
      int c = pg.conjugate_point(u, h.point);
      AffineSublattice coset(pg.matrix(u) * h.trans, sat.transformed(pg.matrix(u)));
      for_each_box_point(2, r, [&](const IntVec& xi) {
        if (coset.contains(xi)) out.insert(Isometry{xi, c});
      });
    }
    return out;
  };
  // s1 fills: the class saturates the move-set union
  Isometry s1 = parse_element("s1", pg);
  CHECK(filling_check(pg, s1));
  CHECK(class_members_in_ball(conjugacy_class(pg, s1), Ball{4}) == mov_union_in_ball(s1, 4));
  // s1*s2 does not fill: the class is a strict subset of the union
  Isometry g3 = parse_element("g3", pg);
  CHECK_FALSE(filling_check(pg, g3));
  std::set<Isometry> cls = class_members_in_ball(conjugacy_class(pg, g3), Ball{4});
  std::set<Isometry> uni = mov_union_in_ball(g3, 4);
  CHECK(cls != uni);
  for (const Isometry& m : cls) CHECK(uni.count(m) == 1);
}

TEST_CASE("translations act transitively within each component") {
  // any two same-component class members are conjugate by a small translation
  TestRng rng;
  const PointGroup& pg = group("p4m");
  for (int iter = 0; iter < 10; ++iter) {
    Isometry h = random_isometry(rng, pg, 2);
    ClassDescription cls = conjugacy_class(pg, h);
    for (const Component& comp : cls.components) {
      std::vector<Isometry> members;
      for_each_box_point(2, 2, [&](const IntVec& xi) {
        if (comp.coset.contains(xi)) members.push_back(Isometry{xi, comp.point});
      });
      for (size_t i = 0; i + 1 < members.size() && i < 3; ++i) {
        bool found = false;
        for_each_box_point(2, 6, [&](const IntVec& eta) {
          if (!found && conjugate(pg, Isometry{eta, 0}, members[i]) == members[i + 1])
            found = true;
        });
        CHECK(found);
      }
    }
  }
}

TEST_CASE("linearization maps the components of h onto the components of h0") {
  TestRng rng;
  for (const char* key : {"cmm", "p6m", "coxeter_A2"}) {
    const PointGroup& pg = group(key);
    for (int iter = 0; iter < 20; ++iter) {
      Isometry h = random_isometry(rng, pg, 3);
      std::set<Component> linearized;
      for (const Component& c : components(pg, h))
        linearized.insert(
            Component{c.point, AffineSublattice(IntVec(pg.dim()), c.coset.lattice())});
      std::vector<Component> base = components(pg, linearize(h));
      CHECK(linearized == std::set<Component>(base.begin(), base.end()));
    }
  }
}
