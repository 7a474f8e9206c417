#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace legknot::front {

// Torus front diagrams live on the boundary torus of a neighbourhood of the
// Hopf link complement; the homology class (a, b) records how often the knot
// wraps the two factors.

enum class Sign { positive = 1, negative = -1 };

inline Sign opposite(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

enum class CrossingRole { over, under };

struct Crossing {
  std::string id;
  CrossingRole role = CrossingRole::over;
  Sign sign = Sign::positive;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Cusp {
  Sign sign = Sign::positive;

  friend bool operator==(const Cusp&, const Cusp&) = default;
};

using Event = std::variant<Crossing, Cusp>;

struct HomologyClass {
  int a = 0;
  int b = 0;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

struct TorusFrontDiagram {
  std::vector<Event> events;  // cyclic word, index 0 is an arbitrary basepoint
  HomologyClass homology;
  std::optional<std::string> name;
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural validity: crossing ids are paired (one over, one under, equal
// signs) and the cusp count is even.
ValidationReport validate_diagram(const TorusFrontDiagram& d);
void require_valid(const TorusFrontDiagram& d);
bool is_valid(const TorusFrontDiagram& d);

int crossing_count(const TorusFrontDiagram& d, Sign s);
int cusp_count(const TorusFrontDiagram& d);
int cusp_count(const TorusFrontDiagram& d, Sign s);

// tb = (#positive crossings) - (#negative crossings) - (#cusps)/2 + a*b
int thurston_bennequin(const TorusFrontDiagram& d);

// rot = (#down cusps - #up cusps)/2 + a - b, with the cusp sign convention
// that Sign::positive marks a down cusp.
int rotation_number(const TorusFrontDiagram& d);

// Self-linking number of the positive transverse push-off, sl = tb - rot.
int self_linking(const TorusFrontDiagram& d);

// The crossing-free diagram of the (m, n) curve.  Requires gcd(m, n) = 1 and
// m*n >= 0: lines of negative slope are not Legendrian realizable on the
// torus, and non-primitive classes are not embedded.
TorusFrontDiagram linear_unknot(int m, int n);

// Contactomorphism (x, y, z) -> (-y, -x, 1 - z).  Homology (a, b) -> (-b, -a),
// crossings swap over/under strands; tb and rot are unchanged.
TorusFrontDiagram apply_symmetry_psi(const TorusFrontDiagram& d);

// Reverses the knot orientation: word reversed, cusp signs flip, homology
// negates.  tb is preserved and rot negates.
TorusFrontDiagram reverse_orientation(const TorusFrontDiagram& d);

// Equality as cyclic words (up to rotation of the event sequence) with equal
// homology classes.
bool same_diagram(const TorusFrontDiagram& x, const TorusFrontDiagram& y);

// Lexicographically least rotation of the event word; used to normalize
// before comparing.
std::vector<Event> canonical_word(const std::vector<Event>& events);

}  // namespace legknot::front
