#pragma once

#include <cstddef>
#include <string>

#include "legknot/classification.hpp"
#include "legknot/front_diagram.hpp"

namespace legknot::moves {

using front::Sign;
using front::TorusFrontDiagram;

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inserts a zigzag of two cusps of sign s at the given word position.
// tb drops by one, rot changes by +1 for positive and -1 for negative cusps.
TorusFrontDiagram stabilize(const TorusFrontDiagram& d, Sign s, std::size_t position = 0);

// Removes an adjacent (cyclically) pair of cusps of sign s, undoing a
// stabilization.  Throws if no such pair exists.
TorusFrontDiagram destabilize(const TorusFrontDiagram& d, Sign s);

// The two components of the Hopf link the front may slide across.  z0 shifts
// the homology coordinate a, z1 shifts b.
enum class HopfComponent { z0, z1 };

// Slides the front across the chosen Hopf fiber; direction = +-1.  The
// template inserts two cusps and compensating crossings so that tb and rot
// are unchanged.
TorusFrontDiagram hopf_pass(const TorusFrontDiagram& d, HopfComponent component, int direction);

enum class ReidemeisterKind { r1, r2, r3 };

struct ReidemeisterSite {
  std::size_t position = 0;  // word index of the first affected event
  bool insert = true;        // for r1/r2: insert the tangle or remove it
  Sign sign = Sign::positive;
};

TorusFrontDiagram reidemeister(const TorusFrontDiagram& d, ReidemeisterKind kind,
                               const ReidemeisterSite& site);

enum class Looseness { must_be_loose, may_be_nonloose, not_realizable };

// Coarse classification of a (tb, rot) pair in an overtwisted structure.
// Only the structure with Hopf invariant -1 carries non-loose unknots, and
// there only for tb > 0 with |rot| = tb - 1.  Even tb + rot is not realized
// by unknots at all.
Looseness predict_looseness(const classify::ContactStructure& structure, int tb, int rot);

std::string to_string(Looseness l);

}  // namespace legknot::moves
