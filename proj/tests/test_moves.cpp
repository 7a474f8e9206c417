#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <numeric>

#include "doctest.h"
#include "legknot/moves.hpp"

using namespace legknot;
using namespace legknot::moves;
using front::Sign;
using front::TorusFrontDiagram;

TEST_CASE("stabilization trades tb for rot") {
  for (int n = 1; n <= 6; n++) {
    auto d = front::linear_unknot(1, n);
    for (Sign s : {Sign::positive, Sign::negative}) {
      auto e = stabilize(d, s);
      CHECK(front::is_valid(e));
      CHECK(front::thurston_bennequin(e) == front::thurston_bennequin(d) - 1);
      CHECK(front::rotation_number(e) ==
            front::rotation_number(d) + (s == Sign::positive ? 1 : -1));
    }
  }
}

TEST_CASE("destabilize undoes stabilize") {
  auto d = front::linear_unknot(2, 1);
  auto e = stabilize(d, Sign::negative, 0);
  auto back = destabilize(e, Sign::negative);
  CHECK(front::same_diagram(back, d));
  CHECK_THROWS_AS(destabilize(d, Sign::negative), MoveError);
}

TEST_CASE("destabilize finds wrapped-around pairs") {
  auto d = front::linear_unknot(1, 1);
  auto e = stabilize(d, Sign::positive);
  // Rotate the word so the pair straddles the basepoint.
  std::rotate(e.events.begin(), e.events.begin() + 1, e.events.end());
  auto back = destabilize(e, Sign::positive);
  CHECK(front::same_diagram(back, d));
}

TEST_CASE("hopf pass shifts homology by a unit and keeps tb, rot") {
  for (int m = -4; m <= 4; m++)
    for (int n = -4; n <= 4; n++) {
      if (std::gcd(m, n) != 1 || m * n < 0) continue;
      auto d = front::linear_unknot(m, n);
      for (auto component : {HopfComponent::z0, HopfComponent::z1})
        for (int direction : {1, -1}) {
          auto e = hopf_pass(d, component, direction);
          CHECK(front::is_valid(e));
          CHECK(front::thurston_bennequin(e) == front::thurston_bennequin(d));
          CHECK(front::rotation_number(e) == front::rotation_number(d));
          int da = e.homology.a - d.homology.a;
          int db = e.homology.b - d.homology.b;
          CHECK(std::abs(da) + std::abs(db) == 1);
          CHECK((component == HopfComponent::z0 ? da : db) == direction);
        }
    }
  CHECK_THROWS_AS(hopf_pass(front::linear_unknot(1, 1), HopfComponent::z0, 2), MoveError);
}

TEST_CASE("reidemeister moves preserve the invariants and invert") {
  auto d = front::linear_unknot(1, 2);
  for (auto kind : {ReidemeisterKind::r1, ReidemeisterKind::r2}) {
    auto e = reidemeister(d, kind, {0, true, Sign::positive});
    CHECK(front::is_valid(e));
    CHECK(front::thurston_bennequin(e) == front::thurston_bennequin(d));
    CHECK(front::rotation_number(e) == front::rotation_number(d));
    auto back = reidemeister(e, kind, {0, false, Sign::positive});
    CHECK(front::same_diagram(back, d));
  }
}

TEST_CASE("r2 removal refuses a window that is not the template") {
  auto d = stabilize(front::linear_unknot(1, 1), Sign::positive);
  CHECK_THROWS_AS(reidemeister(d, ReidemeisterKind::r2, {0, false, Sign::positive}), MoveError);
}

TEST_CASE("r3 swaps three distinct crossings") {
  auto d = front::linear_unknot(1, 2);
  auto e = reidemeister(d, ReidemeisterKind::r2, {0, true, Sign::positive});
  auto f = reidemeister(e, ReidemeisterKind::r2, {2, true, Sign::positive});
  // Events 1..3 are crossings of three distinct ids.
  auto g = reidemeister(f, ReidemeisterKind::r3, {1, true, Sign::positive});
  CHECK(front::thurston_bennequin(g) == front::thurston_bennequin(d));
  CHECK(front::rotation_number(g) == front::rotation_number(d));
  CHECK(front::same_diagram(reidemeister(g, ReidemeisterKind::r3, {1, true, Sign::positive}), f));
  // Positions 3..5 hold the same crossing twice.
  CHECK_THROWS_AS(reidemeister(f, ReidemeisterKind::r3, {3, true, Sign::positive}), MoveError);
}

TEST_CASE("fresh crossing ids never collide with the diagram") {
  auto d = front::linear_unknot(1, 2);
  auto e = hopf_pass(d, HopfComponent::z1, 1);
  auto f = hopf_pass(e, HopfComponent::z1, -1);
  CHECK(front::is_valid(f));
}

TEST_CASE("looseness prediction table") {
  auto xi1 = classify::ContactStructure::xi(-1);
  auto xi2 = classify::ContactStructure::xi(2);
  CHECK(predict_looseness(xi1, 1, 1) == Looseness::not_realizable);
  CHECK(predict_looseness(xi1, 3, 2) == Looseness::may_be_nonloose);
  CHECK(predict_looseness(xi1, 3, -2) == Looseness::may_be_nonloose);
  CHECK(predict_looseness(xi1, 3, 0) == Looseness::must_be_loose);
  CHECK(predict_looseness(xi1, -1, 0) == Looseness::must_be_loose);
  CHECK(predict_looseness(xi2, 3, 2) == Looseness::must_be_loose);
  CHECK_THROWS_AS(predict_looseness(classify::ContactStructure::tight(), 1, 0), MoveError);
  CHECK(to_string(Looseness::may_be_nonloose) == "may_be_nonloose");
}

TEST_CASE("non-loose predictions persist along rot-toward-zero stabilizations") {
  auto xi1 = classify::ContactStructure::xi(-1);
  for (int tb = 2; tb <= 8; tb++)
    for (int rot : {tb - 1, -(tb - 1)}) {
      REQUIRE(predict_looseness(xi1, tb, rot) == Looseness::may_be_nonloose);
      int next_rot = rot > 0 ? rot - 1 : rot + 1;
      if (tb - 1 > 0) CHECK(predict_looseness(xi1, tb - 1, next_rot) == Looseness::may_be_nonloose);
    }
}

TEST_CASE("stabilization chain from K(1,n) lands on (1,0)") {
  for (int n = 2; n <= 6; n++) {
    auto d = front::linear_unknot(1, n);
    for (int step = 0; step < n - 1; step++) {
      Sign s = front::rotation_number(d) < 0 ? Sign::positive : Sign::negative;
      d = stabilize(d, s);
    }
    CHECK(front::thurston_bennequin(d) == 1);
    CHECK(front::rotation_number(d) == 0);
  }
}
