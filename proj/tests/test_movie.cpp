#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "legknot/io.hpp"
#include "legknot/movie.hpp"

using namespace legknot;
using namespace legknot::movie;
using foliation::FoliationState;
using foliation::SingKind;
using foliation::Slot;
using foliation::SurfaceKind;

namespace {

const std::string corpus = LEGKNOT_CORPUS_DIR;

FoliationState load_state(const std::string& name) {
  return io::parse_foliation(io::read_file(corpus + "/" + name));
}

Movie load_movie(const std::string& name) {
  return io::parse_movie(io::read_file(corpus + "/" + name));
}

BifurcationGrid grid_from(const std::vector<std::vector<int>>& rows) {
  // -1 encodes a wall cell.
  BifurcationGrid g;
  for (const auto& r : rows) {
    std::vector<GridCell> cells;
    for (int v : r) cells.push_back(v < 0 ? GridCell{true, 0} : GridCell{false, v});
    g.cells.push_back(cells);
  }
  return g;
}

}  // namespace

TEST_CASE("retro crossing events rewire both hyperbolics") {
  auto m = load_movie("movie_simultaneous.json");
  REQUIRE(validate_movie(m).ok());
  REQUIRE(m.states.size() == 5);
  for (std::size_t i = 0; i < m.events.size(); i++) {
    auto next = apply_event(m.states[i], m.events[i]);
    CHECK(foliation::same_state(next, m.states[i + 1]));
    auto back = apply_event(next, formal_inverse(m.events[i], m.states[i]));
    CHECK(foliation::same_state(back, m.states[i]));
  }
  CHECK(m.simultaneous_marks() == std::vector<std::size_t>{2});
}

TEST_CASE("pair creation and elimination invert each other") {
  auto s = load_state("two_elliptic_sphere.json");
  PairCreation create{foliation::Sign::positive,
                      "ep2",
                      "hp",
                      {{Slot::stable1, "ep"},
                       {Slot::stable2, "ep2"},
                       {Slot::unstable1, "en"},
                       {Slot::unstable2, "en"}}};
  auto grown = apply_event(s, create);
  CHECK(foliation::validate_state(grown).ok());
  CHECK(foliation::dividing_components(grown) == 1);

  auto inverse = formal_inverse(MovieEvent{create}, s);
  auto back = apply_event(grown, inverse);
  CHECK(foliation::same_state(back, s));
  // And the inverse of the elimination rebuilds the wiring from the state.
  auto redo = formal_inverse(inverse, grown);
  CHECK(foliation::same_state(apply_event(back, redo), grown));

  CHECK_THROWS_AS(apply_event(grown, MovieEvent{create}), MovieError);  // ids in use
}

TEST_CASE("closed orbit births flip a semistable leaf into a pair of orbits") {
  auto s = load_state("two_elliptic_sphere.json");
  s.closed_leaves.push_back({"l0", Holonomy::semistable_repelling_above});
  CHECK(classify_state(s) == StateClass::overtwisted);

  ClosedOrbitBirth birth{"l0", Holonomy::semistable_repelling_above, "l1", "l2"};
  auto born = apply_event(s, birth);
  CHECK(born.closed_leaves.size() == 2);
  CHECK(classify_state(born) == StateClass::unknown);
  auto back = apply_event(born, formal_inverse(MovieEvent{birth}, s));
  CHECK(foliation::same_state(back, s));

  CHECK_THROWS_AS(apply_event(born, MovieEvent{birth}), MovieError);  // leaf gone
}

TEST_CASE("same-sign connections move a single separatrix") {
  auto s = load_state("triple.json");
  // Fully resolved background state of the triple configuration.
  auto triples = enumerate_triple_resolutions(s);
  auto s0 = triples.schedules.front().movie.states.front();
  SameSignConnection shift{{"Hm2", Slot::unstable2}, "N1", "N3"};
  auto moved = apply_event(s0, shift);
  CHECK(foliation::validate_state(moved).ok());
  CHECK(foliation::dividing_components(moved) == 1);
  CHECK(foliation::same_state(apply_event(moved, formal_inverse(shift, s0)), s0));

  Movie m;
  m.states = {s0, moved};
  m.events = {shift};
  CHECK(validate_movie(m).ok());
  CHECK(tight_verdict(m).kind == TightVerdict::Kind::tight);
}

TEST_CASE("movie validation pinpoints broken rewrites") {
  auto m = load_movie("movie_double_ab.json");
  REQUIRE(validate_movie(m).ok());
  std::swap(m.states[1], m.states[2]);
  auto r = validate_movie(m);
  REQUIRE(!r.ok());
  CHECK(r.violations.front().find("event 0") != std::string::npos);

  Movie lengths;
  lengths.states = {m.states[0]};
  lengths.events = m.events;
  CHECK(!validate_movie(lengths).ok());
}

TEST_CASE("state classification") {
  CHECK(classify_state(load_state("two_elliptic_sphere.json")) == StateClass::tight_ok);
  CHECK(classify_state(load_state("resolution_cycle.json")) == StateClass::overtwisted);
  // The connection-carrying sphere is neither certified tight nor overtwisted.
  CHECK(classify_state(load_state("minimal_nonloose_sphere.json")) == StateClass::unknown);
}

TEST_CASE("double resolutions of the minimal sphere") {
  auto s = load_state("minimal_nonloose_sphere.json");
  auto rs = enumerate_double_resolutions(s);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].ordering == "A,B");
  CHECK(rs[1].ordering == "B,A");
  for (const auto& r : rs) {
    CHECK(r.verdict.kind == TightVerdict::Kind::overtwisted);
    CHECK(r.verdict.witness_index == 1);
    REQUIRE(r.movie.states.size() == 3);
    CHECK(foliation::dividing_components(r.movie.states[0]) == 1);
    CHECK(foliation::dividing_components(r.movie.states[2]) == 1);
    // The crossed-over intermediate carries three dividing curves.
    CHECK(foliation::dividing_components(r.movie.states[1]) == 3);
    auto b = movie_T_bounds(r.movie);
    REQUIRE(b.has_value());
    CHECK(b->t_minus == 1);
    CHECK(b->t_plus == 2);
  }
  CHECK_THROWS_AS(enumerate_double_resolutions(load_state("triple.json")), MovieError);
  CHECK_THROWS_AS(enumerate_double_resolutions(load_state("two_elliptic_sphere.json")),
                  MovieError);
}

TEST_CASE("triple resolutions") {
  auto s = load_state("triple.json");
  auto r = enumerate_triple_resolutions(s);
  REQUIRE(r.schedules.size() == 6);
  int in_gen = 0;
  for (const auto& t : r.schedules) {
    REQUIRE(t.movie.states.size() == 4);
    CHECK(validate_movie(t.movie).ok());
    if (t.in_l_gen) in_gen++;
    if (!t.double_first) CHECK(!t.in_l_gen);  // lone-first schedules are excluded
  }
  CHECK(in_gen == 2);
  CHECK(!r.smooth_point);
  CHECK_THROWS_AS(enumerate_triple_resolutions(load_state("minimal_nonloose_sphere.json")),
                  MovieError);
}

TEST_CASE("T bounds") {
  auto sim = load_movie("movie_simultaneous.json");
  CHECK(tight_verdict(sim).kind == TightVerdict::Kind::undetermined);
  auto b = movie_T_bounds(sim);
  REQUIRE(b.has_value());
  CHECK(b->t_minus == 2);
  CHECK(b->t_plus == 3);
  CHECK(detect_nonloose_states(sim) == std::vector<std::size_t>{2});

  // A tight movie has no overtwisted band at all.
  auto tight = load_movie("movie_same_sign.json");
  CHECK(tight_verdict(tight).kind == TightVerdict::Kind::tight);
  CHECK(!movie_T_bounds(tight).has_value());

  Movie bad;
  bad.states = {load_state("minimal_nonloose_sphere.json")};
  CHECK_THROWS_AS(movie_T_bounds(bad), MovieError);
}

TEST_CASE("forbidden grid detection") {
  auto forbidden = io::parse_grid(io::read_file(corpus + "/forbidden_grid.json"));
  CHECK(check_giroux_forbidden(forbidden));
}

TEST_CASE("legal grids are not flagged") {
  std::vector<BifurcationGrid> legal;
  legal.push_back(grid_from({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  legal.push_back(grid_from({{1, -1, 1}, {1, -1, 1}, {1, -1, 1}}));
  legal.push_back(grid_from({{-1, 1, 1, -1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}}));
  // A crossing whose trapped region never builds up extra dividing curves.
  legal.push_back(grid_from({{1, -1, 1, -1, 1}, {1, 1, -1, 1, 1}, {1, -1, 1, -1, 1}}));
  // Extra curves inside but also outside the walls.
  legal.push_back(grid_from({{2, -1, 2, -1, 2}, {2, 1, -1, 1, 2}, {2, -1, 2, -1, 2}}));
  // Walls adjacent: nothing is trapped.
  legal.push_back(grid_from({{1, -1, -1, 1}, {1, 1, -1, 1}, {1, -1, -1, 1}}));
  // Flanking walls on one side of the crossing only.
  legal.push_back(grid_from({{-1, -1, 1, 1, 1}, {1, 1, 1, -1, 1}, {-1, -1, 1, 1, 1}}));
  // Single-wall row at the boundary has no flanking rows.
  legal.push_back(grid_from({{1, 1, -1, 1}, {1, -1, 1, -1}}));
  legal.push_back(grid_from({{1, -1, 1, -1}, {1, 1, -1, 1}}));
  // Two walls in every row.
  legal.push_back(grid_from({{-1, 2, -1}, {-1, 2, -1}, {-1, 2, -1}}));
  // Straight single wall of varying sizes.
  for (int k = 3; k <= 12; k++) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(4, 1));
    for (auto& row : rows) row[2] = -1;
    legal.push_back(grid_from(rows));
  }
  REQUIRE(legal.size() == 20);
  for (const auto& g : legal) CHECK(!check_giroux_forbidden(g));
}

TEST_CASE("malformed grids are rejected") {
  CHECK_THROWS_AS(check_giroux_forbidden(BifurcationGrid{}), MovieError);
  CHECK_THROWS_AS(check_giroux_forbidden(grid_from({{1, 1}, {1}})), MovieError);
  CHECK_THROWS_AS(check_giroux_forbidden(grid_from({{-1, -1, -1, 1}})), MovieError);
}
