#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace legknot::classify {

struct ClassifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A contact structure on S^3, identified by its Hopf invariant when
// overtwisted.  The tight structure is the standard one.
struct ContactStructure {
  bool overtwisted = true;
  int hopf_invariant = -1;  // ignored for the tight structure

  static ContactStructure tight() { return {false, 0}; }
  static ContactStructure xi(int h) { return {true, h}; }

  friend bool operator==(const ContactStructure&, const ContactStructure&) = default;
};

// A (tb, rot) pair can only be realized by an unknot when tb + rot is odd.
bool admissible_pair(int tb, int rot);

struct UnknotClass {
  std::string label;
  bool loose = true;
};

// Oriented Legendrian unknots with the given invariants, up to coarse
// equivalence (Legendrian isotopy combined with the contactomorphism group
// action is *not* quotiented out; the labels are the isotopy classes).
std::vector<UnknotClass> classify_unknots(int tb, int rot, const ContactStructure& xi);

// tb + |rot| <= -1 for unknots with convex standard neighbourhood in a tight
// structure (Bennequin, with chi(disc) = 1).
bool bennequin_check(int tb, int rot);

// -|tb| + |rot| <= -1, the bound satisfied by non-loose unknots.
bool swiatkowski_check(int tb, int rot);

// Number of transverse unknot classes with self-linking number sl.
int transverse_unknot_classes(int sl, const ContactStructure& xi);

struct GroupDescriptor {
  std::string name;                     // "Z2+Z2", "Z2" or "trivial"
  std::vector<std::string> generators;  // subset of {"d", "kappa"}
};

// pi_0 of the contactomorphism group of (S^3, xi).
GroupDescriptor mapping_class_group(const ContactStructure& xi);

struct GroupElement {
  bool d = false;      // Dehn-twist-like generator, acts trivially on classes
  bool kappa = false;  // only present for xi_-1, swaps the paired classes
};

// Action of pi_0 Cont(S^3, xi_-1) on the classes with the given invariants.
std::string contactomorphism_action(const GroupElement& g, const std::string& class_label,
                                    int tb, int rot, const ContactStructure& xi);

}  // namespace legknot::classify
