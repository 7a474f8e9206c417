#include "legknot/homotopy.hpp"

#include <cstdint>

namespace legknot::homotopy {

namespace {

void check_form(const QuadraticFormZ2& q) {
  if (q.genus < 0) throw HomotopyError("negative genus");
  if (static_cast<int>(q.basis_values.size()) != 2 * q.genus)
    throw HomotopyError("basis_values must have 2*genus entries");
  for (int v : q.basis_values)
    if (v != 0 && v != 1) throw HomotopyError("basis values must be 0 or 1");
}

int evaluate_bits(const QuadraticFormZ2& q, std::uint64_t bits) {
  // phi(sum e_i) = sum phi(e_i) + sum_{i<j} e_i.e_j; the only nonzero
  // pairings among basis vectors are a_k.b_k.
  int val = 0;
  for (int i = 0; i < 2 * q.genus; i++)
    if (bits >> i & 1) val ^= q.basis_values[i];
  for (int k = 0; k < q.genus; k++)
    if ((bits >> (2 * k) & 1) && (bits >> (2 * k + 1) & 1)) val ^= 1;
  return val;
}

}  // namespace

int evaluate_form(const QuadraticFormZ2& q, const std::vector<int>& v) {
  check_form(q);
  if (v.size() != q.basis_values.size()) throw HomotopyError("dimension mismatch");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < v.size(); i++) {
    if (v[i] != 0 && v[i] != 1) throw HomotopyError("coordinates must be 0 or 1");
    bits |= static_cast<std::uint64_t>(v[i]) << i;
  }
  return evaluate_bits(q, bits);
}

int arf_invariant(const QuadraticFormZ2& q) {
  check_form(q);
  if (q.genus > 16) throw HomotopyError("genus bound exceeded");
  int by_formula = 0;
  for (int k = 0; k < q.genus; k++)
    by_formula ^= q.basis_values[2 * k] & q.basis_values[2 * k + 1];
  if (q.genus <= 8) {
    std::uint64_t ones = 0, total = 1ull << (2 * q.genus);
    for (std::uint64_t bits = 0; bits < total; bits++) ones += evaluate_bits(q, bits);
    int by_majority = 2 * ones > total ? 1 : 0;
    if (by_majority != by_formula)
      throw HomotopyError("Arf majority count disagrees with the symplectic-sum formula");
  }
  return by_formula;
}

int hopf_after_pi_lutz(int h, int sl) {
  if (sl % 2 == 0) throw HomotopyError("self-linking number of a transverse knot is odd");
  return h + sl;
}

int hopf_fibers(int k) {
  if (k < 0) throw HomotopyError("fiber count must be non-negative");
  return (k - 2) * k;
}

std::string ContactStructureId::describe() const {
  if (!overtwisted) return "tight";
  std::string s = "xi_" + std::to_string(hopf);
  if (admits_nonloose_unknots) s += " (admits non-loose unknots)";
  return s;
}

ContactStructureId structure_from_hopf(int h, bool overtwisted) {
  if (!overtwisted && h != 0)
    throw HomotopyError("the tight structure has constant Gauss map, h = 0");
  return {overtwisted, h, overtwisted && h == -1};
}

}  // namespace legknot::homotopy
