#include "slopegap/errors.hpp"
#include "slopegap/report.hpp"

#include <doctest.h>

using namespace slopegap;

TEST_CASE("decimal formatting keeps 15 significant digits") {
  CHECK(format_decimal(1.0L / 3) == "0.333333333333333");
  CHECK(format_decimal(2) == "2");
  CHECK(decimal(1.0L / 3).dump() == "0.333333333333333");
  CHECK(decimal(-std::numeric_limits<long double>::infinity()) == "-inf");
}

TEST_CASE("analysis report") {
  AnalysisReport r = analyze(Origami::parse(fixtures::ten_tile));
  Json j = to_json(r);
  CHECK(j["index"] == 12);
  CHECK(j["cusps"].size() == 4);
  CHECK(j["breakpoints"].size() == 11);
  CHECK(j["breakpoints"][4] == "16/3");
  CHECK(j["total_area"] == "33/8");
  CHECK(j["components"][0]["intervals"][1]["winner"] == Json::array({"7/2", "4"}));
  CHECK(j["hall_signature"]["closure_ok"] == false);
  CHECK(j["hall_signature"]["witness"] == "16/3");
  // Field order is part of the output contract.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"origami", "index", "genus", "cone_angles", "cusps", "components",
                                         "total_area", "breakpoints", "covolume", "hall_signature"});
  CHECK(to_json(analyze(Origami::parse(fixtures::ten_tile))).dump() == j.dump());

  Json torus = to_json(analyze(Origami()));
  CHECK(torus["index"] == 1);
  CHECK(torus["breakpoints"] == Json::array({"1", "4"}));
}

TEST_CASE("orbit exports") {
  OrbitGraph g = orbit_graph(Origami::parse(fixtures::three_tile));
  std::string dot = orbit_dot(g);
  CHECK(dot.rfind("digraph orbit {", 0) == 0);
  std::size_t s_edges = 0, pos = 0;
  while ((pos = dot.find("label=\"S\"", pos)) != std::string::npos) ++s_edges, ++pos;
  CHECK(s_edges == 3);
  Json j = orbit_json(g);
  CHECK(j["index"] == 3);
  CHECK(j["cusps"].size() == 2);
  CHECK(j["cusps"][0].contains("scaling_d"));
}
