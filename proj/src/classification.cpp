#include "legknot/classification.hpp"

#include <algorithm>
#include <cmath>

namespace legknot::classify {

bool admissible_pair(int tb, int rot) { return (tb + rot) % 2 != 0; }

bool bennequin_check(int tb, int rot) { return tb + std::abs(rot) <= -1; }

bool swiatkowski_check(int tb, int rot) { return -std::abs(tb) + std::abs(rot) <= -1; }

std::vector<UnknotClass> classify_unknots(int tb, int rot, const ContactStructure& xi) {
  std::vector<UnknotClass> out;
  if (!admissible_pair(tb, rot)) return out;

  if (!xi.overtwisted) {
    // Eliashberg: Legendrian unknots in the tight S^3 are determined by
    // (tb, rot), which range over tb <= -1, |rot| <= -tb - 1.
    if (bennequin_check(tb, rot)) out.push_back({"tight", false});
    return out;
  }

  if (xi.hopf_invariant == -1) {
    if (tb > 0 && std::abs(rot) == tb - 1) {
      const int n = tb;
      std::string suffix = rot == tb - 1 ? "" : "-rev";
      out.push_back({"K(" + std::to_string(n) + ",1)" + suffix, false});
      out.push_back({"K(-1," + std::to_string(-n) + ")" + suffix, false});
    }
    // Loose unknots in xi_-1 come in psi-related pairs for tb >= 0 and are
    // unique for tb < 0 (Eliashberg-Fraser).
    out.push_back({"loose", true});
    if (tb >= 0) out.push_back({"psi(loose)", true});
    return out;
  }

  out.push_back({"loose", true});
  return out;
}

int transverse_unknot_classes(int sl, const ContactStructure& xi) {
  if (sl % 2 == 0) return 0;  // sl of an unknot is always odd
  if (!xi.overtwisted) return sl <= -1 ? 1 : 0;
  // Every odd sl is realized by a single, necessarily loose, class.
  return 1;
}

GroupDescriptor mapping_class_group(const ContactStructure& xi) {
  if (!xi.overtwisted) return {"trivial", {}};
  if (xi.hopf_invariant == -1) return {"Z2+Z2", {"d", "kappa"}};
  return {"Z2", {"d"}};
}

std::string contactomorphism_action(const GroupElement& g, const std::string& class_label,
                                    int tb, int rot, const ContactStructure& xi) {
  if (!xi.overtwisted) throw ClassifyError("tight S^3 has trivial contact mapping class group");
  if (g.kappa && xi.hopf_invariant != -1)
    throw ClassifyError("kappa only exists for the structure with Hopf invariant -1");

  auto classes = classify_unknots(tb, rot, xi);
  auto it = std::find_if(classes.begin(), classes.end(),
                         [&](const UnknotClass& c) { return c.label == class_label; });
  if (it == classes.end()) throw ClassifyError("unknown class label: " + class_label);

  // d acts trivially on Legendrian classes; kappa exchanges each pair.
  if (!g.kappa || classes.size() == 1) return it->label;
  std::size_t i = static_cast<std::size_t>(it - classes.begin());
  return classes[i ^ 1].label;
}

}  // namespace legknot::classify
