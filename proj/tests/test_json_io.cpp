#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazyhom/builders.hpp"
#include "lazyhom/json_io.hpp"

#include <cstdio>
#include <fstream>

using namespace lazyhom;

TEST_CASE("Hopf algebras round-trip through JSON") {
  for (const auto& spec : builtin_hopf_names()) {
    CAPTURE(spec);
    const FinDimHopf h = builtin_hopf(spec);
    const Json j = hopf_to_json(h);
    const FinDimHopf back = hopf_from_json(Json::parse(j.dump()));
    CHECK(back.labels() == h.labels());
    CHECK(back.mult() == h.mult());
    CHECK(back.comult() == h.comult());
    CHECK(back.antipode() == h.antipode());
    CHECK(hopf_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("the shipped Sweedler file is the builtin") {
  const Json j = read_json_file(std::string(LAZYHOM_DATA_DIR) + "/hopf/sweedler.json");
  CHECK(hopf_to_json(hopf_from_json(j)).dump() == hopf_to_json(sweedler_h4()).dump());
}

TEST_CASE("integers and fractions are accepted as coefficients") {
  Json j = hopf_to_json(group_algebra(group_by_name("C2")));
  j["unit"] = Json::array({1, "0"});
  CHECK(hopf_from_json(j).unit() == QVector{1, 0});
  j["unit"] = Json::array({"2/2", 0});
  CHECK(hopf_from_json(j).unit() == QVector{1, 0});
  j["unit"] = Json::array({0.5, 0});
  CHECK_THROWS_AS(hopf_from_json(j), UsageError);
}

TEST_CASE("shape errors") {
  Json j = hopf_to_json(group_algebra(group_by_name("C2")));
  j["counit"] = Json::array({"1"});
  CHECK_THROWS_AS(hopf_from_json(j), DimensionMismatch);
  j.erase("counit");
  CHECK_THROWS_AS(hopf_from_json(j), UsageError);
}

TEST_CASE("syntax errors carry a line and column") {
  const std::string path = "lazyhom_bad.json";
  {
    std::ofstream out(path);
    out << "{\n  \"basis\": [\"1\",\n  ]\n}\n";
  }
  try {
    read_json_file(path);
    FAIL("expected a parse error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), UsageError);
}

TEST_CASE("fingerprints are stable FNV-1a hashes") {
  CHECK(fingerprint("") == "fnv1a64:cbf29ce484222325");
  CHECK(fingerprint("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(fingerprint("ab") != fingerprint("ba"));
}
