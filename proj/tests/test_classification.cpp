#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "legknot/classification.hpp"

using namespace legknot::classify;

TEST_CASE("admissibility is the parity condition") {
  CHECK(admissible_pair(1, 0));
  CHECK(admissible_pair(-2, 1));
  CHECK(!admissible_pair(1, 1));
  CHECK(!admissible_pair(0, 0));
}

TEST_CASE("tight classification is the Bennequin region") {
  auto tight = ContactStructure::tight();
  CHECK(classify_unknots(-1, 0, tight).size() == 1);
  CHECK(classify_unknots(-1, 0, tight).front().label == "tight");
  CHECK(!classify_unknots(-1, 0, tight).front().loose);
  CHECK(classify_unknots(-4, 3, tight).size() == 1);
  CHECK(classify_unknots(-4, 4, tight).empty());  // not admissible
  CHECK(classify_unknots(0, 1, tight).empty());
  CHECK(classify_unknots(-3, 4, tight).empty());  // violates Bennequin
}

TEST_CASE("geography of classes in xi_-1") {
  auto xi = ContactStructure::xi(-1);
  for (int tb = -6; tb <= 6; tb++)
    for (int rot = -8; rot <= 8; rot++) {
      auto classes = classify_unknots(tb, rot, xi);
      if (!admissible_pair(tb, rot)) {
        CHECK(classes.empty());
        continue;
      }
      int loose = 0, nonloose = 0;
      for (const auto& c : classes) (c.loose ? loose : nonloose)++;
      CHECK(loose == (tb < 0 ? 1 : 2));
      bool exceptional = tb > 0 && std::abs(rot) == tb - 1;
      CHECK(nonloose == (exceptional ? 2 : 0));
    }
}

TEST_CASE("other overtwisted structures carry only one loose class") {
  for (int h : {0, 1, 2, -2, 5}) {
    auto xi = ContactStructure::xi(h);
    auto classes = classify_unknots(3, 2, xi);
    REQUIRE(classes.size() == 1);
    CHECK(classes.front().loose);
  }
}

TEST_CASE("non-loose labels name the torus representatives") {
  auto xi = ContactStructure::xi(-1);
  auto classes = classify_unknots(3, 2, xi);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].label == "K(3,1)");
  CHECK(classes[1].label == "K(-1,-3)");
  auto rev = classify_unknots(3, -2, xi);
  CHECK(rev[0].label == "K(3,1)-rev");
}

TEST_CASE("non-loose classes satisfy the Swiatkowski bound") {
  for (int tb = 1; tb <= 8; tb++)
    for (int rot : {tb - 1, 1 - tb}) {
      CHECK(swiatkowski_check(tb, rot));
      CHECK(!bennequin_check(tb, rot));
    }
  CHECK(!swiatkowski_check(2, 3));
}

TEST_CASE("transverse classes") {
  auto tight = ContactStructure::tight();
  auto xi = ContactStructure::xi(-1);
  CHECK(transverse_unknot_classes(-1, tight) == 1);
  CHECK(transverse_unknot_classes(-3, tight) == 1);
  CHECK(transverse_unknot_classes(1, tight) == 0);
  CHECK(transverse_unknot_classes(0, tight) == 0);
  CHECK(transverse_unknot_classes(0, xi) == 0);
  CHECK(transverse_unknot_classes(3, xi) == 1);
  CHECK(transverse_unknot_classes(-5, xi) == 1);
}

TEST_CASE("mapping class groups") {
  CHECK(mapping_class_group(ContactStructure::tight()).name == "trivial");
  auto g = mapping_class_group(ContactStructure::xi(-1));
  CHECK(g.name == "Z2+Z2");
  REQUIRE(g.generators.size() == 2);
  CHECK(mapping_class_group(ContactStructure::xi(3)).name == "Z2");
  CHECK(mapping_class_group(ContactStructure::xi(3)).generators ==
        std::vector<std::string>{"d"});
}

TEST_CASE("contactomorphism action laws") {
  auto xi = ContactStructure::xi(-1);
  GroupElement id{}, d{true, false}, kappa{false, true}, both{true, true};
  for (const auto& c : classify_unknots(2, 1, xi)) {
    CHECK(contactomorphism_action(id, c.label, 2, 1, xi) == c.label);
    CHECK(contactomorphism_action(d, c.label, 2, 1, xi) == c.label);
    // kappa is an involution and commutes with d.
    auto once = contactomorphism_action(kappa, c.label, 2, 1, xi);
    CHECK(contactomorphism_action(kappa, once, 2, 1, xi) == c.label);
    CHECK(contactomorphism_action(both, c.label, 2, 1, xi) == once);
  }
  CHECK(contactomorphism_action(kappa, "K(2,1)", 2, 1, xi) == "K(-1,-2)");
  CHECK(contactomorphism_action(kappa, "loose", 2, 1, xi) == "psi(loose)");
  // Below tb = 0 there is a single loose class, fixed by everything.
  CHECK(contactomorphism_action(kappa, "loose", -2, 1, xi) == "loose");
}

TEST_CASE("action errors") {
  auto xi = ContactStructure::xi(-1);
  CHECK_THROWS_AS(contactomorphism_action({}, "loose", 1, 0, ContactStructure::tight()),
                  ClassifyError);
  CHECK_THROWS_AS(contactomorphism_action({false, true}, "loose", 3, 2, ContactStructure::xi(2)),
                  ClassifyError);
  CHECK_THROWS_AS(contactomorphism_action({}, "no-such-class", 1, 0, xi), ClassifyError);
}
