#include "isoconj/group_json.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace isoconj;
using nlohmann::json;

namespace {

const char* cmm_json = R"({
  "name": "cmm-file",
  "dim": 2,
  "gram": [[5, 3], [3, 5]],
  "generators": [[[0, 1], [1, 0]], [[0, -1], [-1, 0]]],
  "generator_names": ["s1", "s2"]
})";

} // namespace

TEST_CASE("group spec loads from JSON") {
  GroupSpec spec = group_spec_from_json(json::parse(cmm_json));
  CHECK(spec.name == "cmm-file");
  CHECK(spec.dim == 2);
  CHECK(spec.gram.at(0, 0) == 5);
  CHECK(spec.generators.size() == 2);
  CHECK(spec.generator_names == std::vector<std::string>{"s1", "s2"});
  PointGroup pg = validate_and_close(spec);
  CHECK(pg.size() == 4);
}

TEST_CASE("gram rationals parse bit-exactly") {
  json j = json::parse(R"({"dim":1,"gram":[["3/2"]],"generators":[]})");
  GroupSpec spec = group_spec_from_json(j);
  CHECK(spec.gram.at(0, 0) == Rat(3, 2));

  json big = json::parse(R"({"dim":1,"gram":[["6/4"]],"generators":[]})");
  CHECK(group_spec_from_json(big).gram.at(0, 0) == Rat(3, 2)); // canonicalized
}

TEST_CASE("group spec rejects malformed input") {
  CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"gram":[],"generators":[]})")),
                  std::invalid_argument); // missing dim
  CHECK_THROWS_AS(
      group_spec_from_json(json::parse(R"({"dim":2,"gram":[[1.5,0],[0,1]],"generators":[]})")),
      std::invalid_argument); // float gram entry
  CHECK_THROWS_AS(
      group_spec_from_json(json::parse(R"({"dim":2,"gram":[["1.5","0"],["0","1"]],"generators":[]})")),
      std::invalid_argument); // float-looking string
  CHECK_THROWS_AS(
      group_spec_from_json(json::parse(R"({"dim":1,"gram":[["1/0"]],"generators":[]})")),
      std::invalid_argument); // zero denominator
  CHECK_THROWS_AS(
      group_spec_from_json(json::parse(R"({"dim":2,"gram":[[1,0]],"generators":[]})")),
      std::invalid_argument); // wrong gram shape
  CHECK_THROWS_AS(
      group_spec_from_json(
          json::parse(R"({"dim":1,"gram":[[1]],"generators":[[[1.0]]]})")),
      std::invalid_argument); // float generator entry
  CHECK_THROWS_AS(
      group_spec_from_json(json::parse(
          R"({"dim":1,"gram":[[1]],"generators":[[[1]]],"generator_names":["g7"]})")),
      std::invalid_argument); // reserved name
}

TEST_CASE("group spec loads from a file") {
  std::string path = "test_group_spec_tmp.json";
  {
    std::ofstream out(path);
    out << cmm_json;
  }
  GroupSpec spec = load_group_spec(path);
  CHECK(spec.name == "cmm-file");
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_group_spec("does_not_exist.json"), std::invalid_argument);
}
