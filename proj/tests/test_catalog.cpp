#include "isoconj/catalog.hpp"
#include "isoconj/conjugacy.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace isoconj;

TEST_CASE("catalog lists the split wallpaper groups and coxeter entries") {
  std::vector<std::string> expected = {"p1",  "p2",   "pm",   "cm",  "pmm", "cmm",
                                       "p4",  "p4m",  "p3",   "p3m1", "p31m", "p6",
                                       "p6m", "coxeter_A2", "coxeter_C2", "coxeter_G2",
                                       "coxeter_A3"};
  CHECK(catalog_keys() == expected);
}

TEST_CASE("every catalog entry validates and closes to its known order") {
  for (const CatalogEntry& e : catalog_entries()) {
    PointGroup pg = validate_and_close(e.spec);
    INFO(e.key);
    CHECK(pg.size() == e.known_order);
    CHECK(pg.dim() == e.spec.dim);
  }
}

TEST_CASE("specific orders") {
  CHECK(validate_and_close(catalog_get("cmm").spec).size() == 4);
  CHECK(validate_and_close(catalog_get("p2").spec).size() == 2);
  CHECK(validate_and_close(catalog_get("p6m").spec).size() == 12);
  CHECK(validate_and_close(catalog_get("coxeter_G2").spec).size() == 12);
  CHECK(validate_and_close(catalog_get("coxeter_A3").spec).size() == 24);
}

TEST_CASE("cmm model matches the reference description") {
  const CatalogEntry& e = catalog_get("cmm");
  CHECK(e.spec.gram.at(0, 0) == 5);
  CHECK(e.spec.gram.at(0, 1) == 3);
  PointGroup pg = validate_and_close(e.spec);
  // Klein four group: every non-identity element squares to the identity
  for (int p = 0; p < 4; ++p) CHECK(pg.multiply(p, p) == 0);
  CHECK(filling_check(pg, parse_element("s1", pg)));
  CHECK(filling_check(pg, parse_element("s2", pg)));
  CHECK_FALSE(filling_check(pg, parse_element("s1*s2", pg)));
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(catalog_get("p17"), std::invalid_argument);
}

TEST_CASE("generator names resolve in every entry") {
  for (const CatalogEntry& e : catalog_entries()) {
    PointGroup pg = validate_and_close(e.spec);
    for (const std::string& nm : e.spec.generator_names) CHECK(pg.name_to_index(nm).has_value());
  }
}
