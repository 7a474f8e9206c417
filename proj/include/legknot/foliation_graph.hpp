#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legknot/front_diagram.hpp"

namespace legknot::foliation {

using front::Sign;

enum class SingKind { elliptic, hyperbolic, birthdeath };

// Elliptic points have index +1, hyperbolic -1, birthdeath 0.
int index_of(SingKind k);

struct Singularity {
  std::string id;
  Sign sign = Sign::positive;
  SingKind kind = SingKind::elliptic;

  friend bool operator==(const Singularity&, const Singularity&) = default;
};

enum class Slot { stable1, stable2, unstable1, unstable2, bd_leaf };

bool is_stable(Slot s);
bool is_unstable(Slot s);

struct SlotRef {
  std::string sing;
  Slot slot = Slot::stable1;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

// Separatrix records are stored from the hyperbolic point's perspective.
// For unstable slots `to` is where the leaf flows; for stable slots `to` is
// where it comes from.  A hyperbolic `to` on a stable slot of a positive
// point (dually, on an unstable slot of a negative point) encodes a
// retrogradient connection present in the state itself.
struct Separatrix {
  SlotRef from;
  std::string to;

  friend bool operator==(const Separatrix&, const Separatrix&) = default;
  friend auto operator<=>(const Separatrix&, const Separatrix&) = default;
};

// Sentinel target for leaves of disc boundary singularities that run along
// the boundary itself.
inline const std::string kBoundary = "@boundary";

enum class Holonomy {
  attracting,
  repelling,
  semistable_repelling_above,
  semistable_repelling_below
};

bool is_semistable(Holonomy h);

struct ClosedLeaf {
  std::string id;
  Holonomy holonomy = Holonomy::attracting;

  friend bool operator==(const ClosedLeaf&, const ClosedLeaf&) = default;
};

enum class SurfaceKind { sphere, disc };

struct FoliationState {
  SurfaceKind surface = SurfaceKind::sphere;
  std::vector<Singularity> singularities;
  std::vector<Separatrix> separatrices;
  std::vector<ClosedLeaf> closed_leaves;
  std::vector<std::string> boundary;  // cyclic, discs only

  const Singularity* find(const std::string& id) const;
  std::optional<std::string> target(const std::string& sing, Slot slot) const;
};

struct FoliationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_state(const FoliationState& s);
void require_valid(const FoliationState& s);

struct RetroConnection {
  SlotRef negative;  // unstable slot of a negative hyperbolic
  SlotRef positive;  // stable slot of a positive hyperbolic

  friend bool operator==(const RetroConnection&, const RetroConnection&) = default;
};

std::vector<RetroConnection> retrogradient_connections(const FoliationState& s);

bool is_convex(const FoliationState& s);

// The signed singularity graph: vertices of one sign, edges the separatrices
// of that sign's hyperbolic points staying within the sign (retrogradient
// leaves are dropped, so on states with connections this is Gamma^*).
struct SignedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

SignedGraph gamma_graph(const FoliationState& s, Sign sign);

// Connected components of gamma_graph as sorted vertex lists.
std::vector<std::vector<std::string>> gamma_components(const FoliationState& s, Sign sign);

// Number of dividing curves: E - V + 2c on Gamma_+ (equivalently Gamma_-;
// state validation enforces agreement).
int dividing_components(const FoliationState& s);

bool has_tight_neighborhood(const FoliationState& s);

// e_-(component) - h_-(component) for the Gamma_-^* component containing
// member.  By the Euler-characteristic identity this is 1 minus the number
// of retrogradient connections leaving the component, when the component is
// a tree.
int component_defect(const FoliationState& s, const std::string& member);

struct UnknotWitness {
  RetroConnection first;
  RetroConnection second;
  std::vector<std::string> negative_path;  // through Gamma_-^* between the origins
  std::vector<std::string> positive_path;  // through Gamma_+^* between the endpoints
};

// Fires iff the sphere carries exactly two retrogradient connections leaving
// the same tree component of Gamma_-^*, Gamma_-^* has exactly three
// components, all trees, and there is no closed leaf.
std::optional<UnknotWitness> detect_nonloose_unknot(const FoliationState& s);

// Disc in normal form: 2n alternating boundary hyperbolics, n interior
// positive elliptics feeding the boundary negative hyperbolics, one interior
// negative elliptic receiving all boundary positive hyperbolics.
FoliationState normal_form_disc(int n);

// e_+ - e_- - h_+ + h_- over interior singularities of a disc whose boundary
// singularities are all hyperbolic or all elliptic.
int disc_rotation_number(const FoliationState& s);

FoliationState eliminate_pair(const FoliationState& s, const std::string& elliptic,
                              const std::string& hyperbolic);

FoliationState split_boundary_hyperbolic(const FoliationState& s, const std::string& h);

// Counts by sign/kind over interior nondegenerate singularities.
struct SingCounts {
  int e_pos = 0, e_neg = 0, h_pos = 0, h_neg = 0;
};
SingCounts interior_counts(const FoliationState& s);

// Canonical ordering of the component fields, for structural comparison.
FoliationState normalized(const FoliationState& s);
bool same_state(const FoliationState& a, const FoliationState& b);

}  // namespace legknot::foliation
