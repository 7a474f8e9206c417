#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "legknot/front_diagram.hpp"

using namespace legknot::front;

namespace {

TorusFrontDiagram diagram(std::vector<Event> events, int a, int b) {
  TorusFrontDiagram d;
  d.events = std::move(events);
  d.homology = {a, b};
  return d;
}

Crossing over(const std::string& id, Sign s) { return {id, CrossingRole::over, s}; }
Crossing under(const std::string& id, Sign s) { return {id, CrossingRole::under, s}; }

}  // namespace

TEST_CASE("linear unknots have the line's invariants") {
  for (int m = -5; m <= 5; m++)
    for (int n = -5; n <= 5; n++) {
      if (std::gcd(m, n) != 1 || m * n < 0) continue;
      auto d = linear_unknot(m, n);
      CHECK(d.events.empty());
      CHECK(thurston_bennequin(d) == m * n);
      CHECK(rotation_number(d) == m - n);
      CHECK(self_linking(d) == m * n - (m - n));
    }
  CHECK(linear_unknot(1, 1).name == "K(1,1)");
}

TEST_CASE("linear unknot rejects bad slopes") {
  CHECK_THROWS_AS(linear_unknot(2, 4), DiagramError);
  CHECK_THROWS_AS(linear_unknot(1, -2), DiagramError);
  CHECK_THROWS_AS(linear_unknot(0, 0), DiagramError);
}

TEST_CASE("invariants by hand on small words") {
  // One kink: a positive crossing between an up/down cusp pair.
  auto kink = diagram({over("x", Sign::positive), Cusp{Sign::positive}, Cusp{Sign::negative},
                       under("x", Sign::positive)},
                      1, 1);
  CHECK(thurston_bennequin(kink) == 1 + 1 - 1);  // crossing - half the cusps + ab
  CHECK(rotation_number(kink) == 0);

  // A double stabilization, one cusp pair of each sign.
  auto stab = diagram({Cusp{Sign::positive}, Cusp{Sign::positive}, Cusp{Sign::negative},
                       Cusp{Sign::negative}},
                      1, 1);
  CHECK(thurston_bennequin(stab) == -1);
  CHECK(rotation_number(stab) == 0);

  auto neg = diagram({over("x", Sign::negative), under("x", Sign::negative)}, 0, 1);
  CHECK(thurston_bennequin(neg) == -1);
  CHECK(rotation_number(neg) == -1);
}

TEST_CASE("validation reports name the offence") {
  auto d = diagram({over("x", Sign::positive)}, 1, 0);
  auto r = validate_diagram(d);
  REQUIRE(!r.ok());
  CHECK(r.violations.front() == "unpaired crossing x");

  auto odd = diagram({Cusp{Sign::positive}}, 1, 0);
  CHECK(validate_diagram(odd).violations.front() == "odd cusp count");

  auto mixed =
      diagram({over("x", Sign::positive), under("x", Sign::negative)}, 1, 0);
  CHECK(!validate_diagram(mixed).ok());
  CHECK_THROWS_AS(require_valid(mixed), DiagramError);
  CHECK(is_valid(linear_unknot(2, 1)));
}

TEST_CASE("psi negates and swaps the homology and keeps the invariants") {
  for (int n = 1; n <= 8; n++) {
    auto d = linear_unknot(n, 1);
    auto p = apply_symmetry_psi(d);
    CHECK(p.homology == HomologyClass{-1, -n});
    CHECK(thurston_bennequin(p) == thurston_bennequin(d));
    CHECK(rotation_number(p) == rotation_number(d));
  }
  auto with_crossing = diagram({over("x", Sign::positive), under("x", Sign::positive)}, 1, 2);
  auto p = apply_symmetry_psi(with_crossing);
  CHECK(std::get<Crossing>(p.events[0]).role == CrossingRole::under);
  CHECK(std::get<Crossing>(p.events[0]).sign == Sign::positive);
  CHECK(thurston_bennequin(p) == thurston_bennequin(with_crossing));
  CHECK(rotation_number(p) == rotation_number(with_crossing));
}

TEST_CASE("psi is an involution up to naming") {
  auto d = linear_unknot(3, 1);
  auto dd = apply_symmetry_psi(apply_symmetry_psi(d));
  CHECK(same_diagram(d, dd));
}

TEST_CASE("reversing orientation negates rot and keeps tb") {
  auto d = diagram({Cusp{Sign::positive}, Cusp{Sign::positive}}, 1, 2);
  auto r = reverse_orientation(d);
  CHECK(r.homology == HomologyClass{-1, -2});
  CHECK(thurston_bennequin(r) == thurston_bennequin(d));
  CHECK(rotation_number(r) == -rotation_number(d));
  CHECK(same_diagram(d, reverse_orientation(r)));
}

TEST_CASE("diagram equality is cyclic") {
  auto a = diagram({Cusp{Sign::positive}, Cusp{Sign::negative}}, 1, 1);
  auto b = diagram({Cusp{Sign::negative}, Cusp{Sign::positive}}, 1, 1);
  CHECK(same_diagram(a, b));
  CHECK(canonical_word(a.events) == canonical_word(b.events));

  auto c = diagram({Cusp{Sign::positive}, Cusp{Sign::negative}}, 1, 2);
  CHECK(!same_diagram(a, c));  // homology differs
}

TEST_CASE("crossing and cusp counts") {
  auto d = diagram({over("x", Sign::positive), under("x", Sign::positive),
                    over("y", Sign::negative), under("y", Sign::negative),
                    Cusp{Sign::positive}, Cusp{Sign::negative}},
                   0, 1);
  CHECK(crossing_count(d, Sign::positive) == 1);
  CHECK(crossing_count(d, Sign::negative) == 1);
  CHECK(cusp_count(d) == 2);
  CHECK(cusp_count(d, Sign::positive) == 1);
}
