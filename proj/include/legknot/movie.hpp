#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "legknot/foliation_graph.hpp"

namespace legknot::movie {

using foliation::FoliationState;
using foliation::Holonomy;
using foliation::Sign;
using foliation::Slot;
using foliation::SlotRef;

struct MovieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A retrogradient leaf crossing: the negative point's unstable leaf sweeps
// past the positive point's stable leaf.  Targets and sources may name the
// partner hyperbolic itself, which encodes the connection being present in
// the flanking state.
struct RetroCrossing {
  SlotRef neg;  // unstable slot of the negative hyperbolic
  SlotRef pos;  // stable slot of the positive hyperbolic
  std::string pre_target, post_target;
  std::string pre_source, post_source;
};

struct ClosedOrbitBirth {
  std::string semistable;  // leaf present before the event
  Holonomy semistable_holonomy = Holonomy::semistable_repelling_above;
  std::string attracting, repelling;  // the two non-degenerate orbits after
};

struct ClosedOrbitDeath {
  std::string attracting, repelling;
  std::string semistable;
  Holonomy semistable_holonomy = Holonomy::semistable_repelling_above;
};

struct PairCreation {
  Sign sign = Sign::positive;
  std::string elliptic, hyperbolic;
  std::map<Slot, std::string> wiring;  // the four slots of the new hyperbolic
};

struct PairElimination {
  std::string elliptic, hyperbolic;
};

struct SameSignConnection {
  SlotRef slot;
  std::string pre_target, post_target;
};

using MovieEvent = std::variant<RetroCrossing, ClosedOrbitBirth, ClosedOrbitDeath, PairCreation,
                                PairElimination, SameSignConnection>;

struct Movie {
  std::vector<FoliationState> states;
  std::vector<MovieEvent> events;  // events.size() == states.size() - 1

  // State indices carrying two or more retrogradient connections.
  std::vector<std::size_t> simultaneous_marks() const;
};

FoliationState apply_event(const FoliationState& s, const MovieEvent& e);

// Inverse rewrite; pre is the state the original event was applied to (only
// consulted to reconstruct the wiring of an eliminated pair).
MovieEvent formal_inverse(const MovieEvent& e, const FoliationState& pre);

foliation::ValidationReport validate_movie(const Movie& m);
void require_valid(const Movie& m);

struct TightVerdict {
  enum class Kind { tight, overtwisted, undetermined };
  Kind kind = Kind::undetermined;
  std::optional<std::size_t> witness_index;  // first overtwisted state
};

TightVerdict tight_verdict(const Movie& m);

// Per-state ingredient of the verdict, exposed for the enumerators.
enum class StateClass { tight_ok, overtwisted, unknown };
StateClass classify_state(const FoliationState& s);

struct TBounds {
  std::size_t t_minus = 0;
  std::size_t t_plus = 0;
};

std::optional<TBounds> movie_T_bounds(const Movie& m);

std::vector<std::size_t> detect_nonloose_states(const Movie& m);

struct Resolution {
  std::string ordering;  // e.g. "A,B"
  Movie movie;
  TightVerdict verdict;
};

// Resolves the two simultaneous connections in each order; 3-state movies.
std::vector<Resolution> enumerate_double_resolutions(const FoliationState& s);

struct TripleSchedule {
  std::size_t lone = 0;       // index of the connection resolved on its own
  bool double_first = false;  // whether the simultaneous pair crosses first
  Movie movie;
  bool in_l_gen = false;
};

struct TripleResolutions {
  std::vector<TripleSchedule> schedules;  // always 6
  bool smooth_point = false;              // all schedules agree
};

TripleResolutions enumerate_triple_resolutions(const FoliationState& s);

// 2-parameter bifurcation diagrams digitized as grids.  Cells hold the
// number of dividing components away from the walls.
struct GridCell {
  bool wall = false;
  int count = 0;
};

struct BifurcationGrid {
  std::vector<std::vector<GridCell>> cells;
};

bool check_giroux_forbidden(const BifurcationGrid& g);

}  // namespace legknot::movie
