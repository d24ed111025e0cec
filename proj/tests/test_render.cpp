#include "isoconj/catalog.hpp"
#include "isoconj/render.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace isoconj;

namespace {

const CatalogEntry& cmm_entry() { return catalog_get("cmm"); }

const PointGroup& cmm() {
  static const PointGroup pg = validate_and_close(cmm_entry().spec);
  return pg;
}

} // namespace

TEST_CASE("embedding reproduces the gram form") {
  for (const char* key : {"cmm", "p4", "p6m", "coxeter_G2"}) {
    const CatalogEntry& e = catalog_get(key);
    Embedding emb = embedding_from_gram(e.spec.gram);
    double g00 = e.spec.gram.at(0, 0).get_d();
    double g01 = e.spec.gram.at(0, 1).get_d();
    double g11 = e.spec.gram.at(1, 1).get_d();
    CHECK(emb.e00 * emb.e00 == Catch::Approx(g00).epsilon(1e-12));
    CHECK(emb.e00 * emb.e01 == Catch::Approx(g01).margin(1e-12));
    CHECK(emb.e01 * emb.e01 + emb.e11 * emb.e11 == Catch::Approx(g11).epsilon(1e-12));
  }
}

TEST_CASE("class svg output is deterministic and well-formed") {
  const PointGroup& pg = cmm();
  Isometry h = parse_element("t[1,0]*s1", pg);
  RenderWindow w{-3, -3, 3, 3};
  std::string svg1 = render_class_svg(cmm_entry().spec.gram, pg, h, w);
  std::string svg2 = render_class_svg(cmm_entry().spec.gram, pg, h, w);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") != std::string::npos);
  CHECK(svg1.rfind("</svg>\n") == svg1.size() - 7);
  // one point layer per component plus the lattice layer
  CHECK(svg1.find("id=\"component0\"") != std::string::npos);
  CHECK(svg1.find("id=\"component1\"") != std::string::npos);
  CHECK(svg1.find("id=\"component2\"") == std::string::npos);
  CHECK(svg1.find("id=\"lattice\"") != std::string::npos);
}

TEST_CASE("coconj svg draws one layer per branch") {
  const PointGroup& pg = cmm();
  Isometry h = parse_element("t[1,0]*s1", pg);
  Isometry h2 = parse_element("t[0,1]*s1", pg);
  std::string svg = render_coconj_svg(cmm_entry().spec.gram, pg, h, h2, RenderWindow{-3, -3, 3, 3});
  CHECK(svg.find("id=\"branch0\"") != std::string::npos);
  CHECK(svg.find("id=\"branch1\"") != std::string::npos);
  CHECK(svg.find("id=\"fixlines\"") != std::string::npos);
}

TEST_CASE("empty window keeps the document valid with empty layers") {
  const PointGroup& pg = cmm();
  RenderWindow w{2, 2, -2, -2};
  REQUIRE(w.empty());
  std::string svg = render_class_svg(cmm_entry().spec.gram, pg, parse_element("s1", pg), w);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<circle") == std::string::npos);
}

TEST_CASE("rendering requires dimension 2") {
  const CatalogEntry& a3 = catalog_get("coxeter_A3");
  PointGroup pg = validate_and_close(a3.spec);
  CHECK_THROWS_AS(render_class_svg(a3.spec.gram, pg, identity_isometry(3), RenderWindow{}),
                  std::invalid_argument);
}
