#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <string>

#include "doctest.h"
#include "legknot/io.hpp"

using namespace legknot;
namespace fs = std::filesystem;

namespace {

const std::string corpus = LEGKNOT_CORPUS_DIR;

std::string roundtrip(const fs::path& p) {
  std::string text = io::read_file(p.string());
  std::string name = p.filename().string();
  if (name.rfind("movie", 0) == 0) return io::serialize(io::parse_movie(text));
  if (name.find("grid") != std::string::npos) return io::serialize(io::parse_grid(text));
  if (name.rfind("k", 0) == 0) return io::serialize(io::parse_diagram(text));
  return io::serialize(io::parse_foliation(text));
}

}  // namespace

TEST_CASE("every corpus file round-trips byte-identically") {
  int files = 0;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.path().extension() != ".json") continue;
    files++;
    INFO(entry.path().string());
    CHECK(roundtrip(entry.path()) == io::read_file(entry.path().string()));
  }
  CHECK(files >= 20);
}

TEST_CASE("diagram parsing") {
  auto d = io::parse_diagram(R"({
    "name": "demo",
    "homology": [1, 2],
    "events": [
      {"type": "crossing", "id": "x1", "role": "over", "sign": 1},
      {"type": "crossing", "id": "x1", "role": "under", "sign": 1},
      {"type": "cusp", "sign": -1}
    ]
  })");
  CHECK(d.name == "demo");
  CHECK(d.homology.a == 1);
  CHECK(d.events.size() == 3);
  // Key order in the input does not matter.
  auto e = io::parse_diagram(R"({"events": [], "homology": [0, 1]})");
  CHECK(!e.name);
  CHECK(io::serialize(e) == "{\n  \"homology\": [\n    0,\n    1\n  ],\n  \"events\": []\n}\n");
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(io::parse_diagram("{]"),
                       doctest::Contains("not valid JSON"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_diagram(R"({"events": []})"),
                       doctest::Contains("homology"), io::ParseError);
  CHECK_THROWS_WITH_AS(
      io::parse_diagram(R"({"homology": [0,1], "events": [{"type": "loop"}]})"),
      doctest::Contains("unknown event type 'loop'"), io::ParseError);
  CHECK_THROWS_WITH_AS(
      io::parse_diagram(R"({"homology": [0,1], "events": [{"type": "cusp", "sign": 2}]})"),
      doctest::Contains("sign"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_foliation(R"({"surface": "torus"})"),
                       doctest::Contains("surface"), io::ParseError);
  CHECK_THROWS_WITH_AS(
      io::parse_foliation(
          R"({"surface": "sphere", "singularities": [{"id": "a", "sign": 1, "kind": "saddle"}],
              "separatrices": [], "closed_leaves": []})"),
      doctest::Contains("kind"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_movie(R"({"states": [], "events": [{"kind": "warp"}]})"),
                       doctest::Contains("event kind"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_grid(R"({"cells": [[{"value": 3}]]})"),
                       doctest::Contains("wall"), io::ParseError);
  CHECK_THROWS_AS(io::read_file(corpus + "/no_such_file.json"), io::ParseError);
}

TEST_CASE("foliation and movie fields survive the round trip") {
  auto s = io::parse_foliation(io::read_file(corpus + "/minimal_nonloose_sphere.json"));
  CHECK(s.singularities.size() == 6);
  CHECK(s.separatrices.size() == 8);

  auto m = io::parse_movie(io::read_file(corpus + "/movie_simultaneous.json"));
  CHECK(m.states.size() == 5);
  CHECK(m.events.size() == 4);
  CHECK(io::parse_movie(io::serialize(m)).states.size() == 5);

  auto g = io::parse_grid(io::read_file(corpus + "/forbidden_grid.json"));
  CHECK(g.cells.size() == 5);
  CHECK(g.cells[0].size() == 7);
}
