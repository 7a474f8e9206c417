#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace legknot::homotopy {

struct HomotopyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadratic refinement of the mod-2 intersection form on a genus-g surface.
// basis_values holds phi(a_1), phi(b_1), ..., phi(a_g), phi(b_g); the
// relation phi(x+y) = phi(x) + phi(y) + x.y extends phi to all classes.
struct QuadraticFormZ2 {
  int genus = 0;
  std::vector<int> basis_values;  // 2 * genus entries in {0, 1}
};

int evaluate_form(const QuadraticFormZ2& q, const std::vector<int>& v);

// 1 iff strictly more than half of the 2^{2g} values are 1; cross-checked
// against sum phi(a_i) phi(b_i) mod 2.  Brute force is capped at g <= 8, the
// closed formula at g <= 16.
int arf_invariant(const QuadraticFormZ2& q);

// A pi-Lutz twist along a transverse knot with self-linking number sl shifts
// the Hopf invariant by sl.
int hopf_after_pi_lutz(int h, int sl);

// Twisting along k Hopf fibers produces Hopf invariant (k-2)k.
int hopf_fibers(int k);

struct ContactStructureId {
  bool overtwisted = false;
  int hopf = 0;
  bool admits_nonloose_unknots = false;
  std::string describe() const;
};

ContactStructureId structure_from_hopf(int h, bool overtwisted);

}  // namespace legknot::homotopy
