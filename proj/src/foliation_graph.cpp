#include "legknot/foliation_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace legknot::foliation {

int index_of(SingKind k) {
  switch (k) {
    case SingKind::elliptic: return 1;
    case SingKind::hyperbolic: return -1;
    case SingKind::birthdeath: return 0;
  }
  return 0;
}

bool is_stable(Slot s) { return s == Slot::stable1 || s == Slot::stable2; }
bool is_unstable(Slot s) { return s == Slot::unstable1 || s == Slot::unstable2; }

bool is_semistable(Holonomy h) {
  return h == Holonomy::semistable_repelling_above || h == Holonomy::semistable_repelling_below;
}

const Singularity* FoliationState::find(const std::string& id) const {
  for (const auto& s : singularities)
    if (s.id == id) return &s;
  return nullptr;
}

std::optional<std::string> FoliationState::target(const std::string& sing, Slot slot) const {
  for (const auto& sep : separatrices)
    if (sep.from.sing == sing && sep.from.slot == slot) return sep.to;
  return std::nullopt;
}

namespace {

bool on_boundary(const FoliationState& s, const std::string& id) {
  return std::find(s.boundary.begin(), s.boundary.end(), id) != s.boundary.end();
}

struct UnionFind {
  std::map<std::string, std::string> parent;
  void add(const std::string& v) { parent.emplace(v, v); }
  std::string find(const std::string& v) {
    auto& p = parent.at(v);
    if (p != v) p = find(p);
    return p;
  }
  void unite(const std::string& a, const std::string& b) { parent[find(a)] = find(b); }
};

int graph_count(const SignedGraph& g) {
  UnionFind uf;
  for (const auto& v : g.vertices) uf.add(v);
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::set<std::string> roots;
  for (const auto& v : g.vertices) roots.insert(uf.find(v));
  int c = static_cast<int>(roots.size());
  return static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 2 * c;
}

}  // namespace

ValidationReport validate_state(const FoliationState& s) {
  ValidationReport r;
  auto bad = [&](const std::string& msg) { r.violations.push_back(msg); };

  std::set<std::string> ids;
  for (const auto& p : s.singularities)
    if (!ids.insert(p.id).second) bad("duplicate singularity id " + p.id);

  if (s.surface == SurfaceKind::sphere && !s.boundary.empty())
    bad("sphere state carries a boundary");
  if (s.surface == SurfaceKind::disc && s.boundary.empty())
    bad("disc state without boundary");
  for (const auto& b : s.boundary)
    if (!ids.count(b)) bad("boundary references unknown singularity " + b);

  std::set<SlotRef> wired;
  std::map<std::string, int> bd_leaves;
  for (const auto& sep : s.separatrices) {
    const Singularity* from = s.find(sep.from.sing);
    if (!from) {
      bad("separatrix from unknown singularity " + sep.from.sing);
      continue;
    }
    if (!wired.insert(sep.from).second) bad("slot wired twice on " + sep.from.sing);
    if (sep.from.slot == Slot::bd_leaf) {
      if (from->kind != SingKind::birthdeath) bad("bd_leaf slot on non-birthdeath " + from->id);
      bd_leaves[from->id]++;
    } else if (from->kind != SingKind::hyperbolic) {
      bad("stable/unstable slot on non-hyperbolic " + from->id);
    }
    if (sep.to == kBoundary) {
      if (s.surface != SurfaceKind::disc || !on_boundary(s, sep.from.sing))
        bad("on-boundary leaf on a non-boundary singularity " + sep.from.sing);
      continue;
    }
    const Singularity* to = s.find(sep.to);
    if (!to) {
      bad("separatrix targets unknown singularity " + sep.to);
      continue;
    }
    if (from->kind != SingKind::hyperbolic) continue;
    // Flow direction: stable slots name the leaf's source, unstable its sink.
    if (is_stable(sep.from.slot)) {
      bool source_ok = (to->kind == SingKind::elliptic && to->sign == Sign::positive) ||
                       (to->kind == SingKind::hyperbolic && to->sign == Sign::negative &&
                        from->sign == Sign::positive) ||
                       to->kind == SingKind::birthdeath;
      if (!source_ok)
        bad("stable leaf of " + from->id + " has illegal source " + to->id);
    } else {
      bool sink_ok = (to->kind == SingKind::elliptic && to->sign == Sign::negative) ||
                     (to->kind == SingKind::hyperbolic && to->sign == Sign::positive &&
                      from->sign == Sign::negative) ||
                     to->kind == SingKind::birthdeath;
      if (!sink_ok)
        bad("unstable leaf of " + from->id + " has illegal sink " + to->id);
    }
  }

  int bd_points = 0;
  for (const auto& p : s.singularities) {
    if (p.kind == SingKind::hyperbolic) {
      for (Slot slot : {Slot::stable1, Slot::stable2, Slot::unstable1, Slot::unstable2})
        if (!wired.count({p.id, slot}))
          bad("hyperbolic " + p.id + " has an unwired slot");
    }
    if (p.kind == SingKind::birthdeath) {
      bd_points++;
      if (bd_leaves[p.id] != 1) bad("birthdeath " + p.id + " must have exactly one leaf");
    }
  }
  if (bd_points > 1) bad("more than one birthdeath point");

  // Retrogradient wiring must be recorded symmetrically on both hyperbolics.
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> retro;
  for (const auto& sep : s.separatrices) {
    const Singularity* from = s.find(sep.from.sing);
    const Singularity* to = sep.to == kBoundary ? nullptr : s.find(sep.to);
    if (!from || !to || to->kind != SingKind::hyperbolic) continue;
    if (is_unstable(sep.from.slot) && from->sign == Sign::negative && to->sign == Sign::positive)
      retro[{from->id, to->id}].first++;
    if (is_stable(sep.from.slot) && from->sign == Sign::positive && to->sign == Sign::negative)
      retro[{to->id, from->id}].second++;
  }
  for (const auto& [pair, counts] : retro)
    if (counts.first != counts.second)
      bad("retrogradient connection " + pair.first + "->" + pair.second +
          " not recorded on both ends");

  std::set<std::string> leaf_ids;
  for (const auto& l : s.closed_leaves)
    if (!leaf_ids.insert(l.id).second) bad("duplicate closed leaf id " + l.id);

  if (s.surface == SurfaceKind::sphere) {
    int euler = 0;
    for (const auto& p : s.singularities) euler += index_of(p.kind);
    if (euler != 2)
      bad("Euler count " + std::to_string(euler) + " != 2");
  }

  if (r.ok() && s.surface == SurfaceKind::sphere && s.closed_leaves.empty()) {
    int plus = graph_count(gamma_graph(s, Sign::positive));
    int minus = graph_count(gamma_graph(s, Sign::negative));
    if (plus != minus)
      bad("dividing count disagrees between signs: " + std::to_string(plus) + " vs " +
          std::to_string(minus));
  }
  return r;
}

void require_valid(const FoliationState& s) {
  auto r = validate_state(s);
  if (!r.ok()) throw FoliationError("invalid state: " + r.violations.front());
}

std::vector<RetroConnection> retrogradient_connections(const FoliationState& s) {
  require_valid(s);
  std::map<std::pair<std::string, std::string>, std::pair<std::vector<Slot>, std::vector<Slot>>>
      by_pair;
  for (const auto& sep : s.separatrices) {
    if (sep.to == kBoundary) continue;
    const Singularity* from = s.find(sep.from.sing);
    const Singularity* to = s.find(sep.to);
    if (to->kind != SingKind::hyperbolic) continue;
    if (is_unstable(sep.from.slot) && from->sign == Sign::negative)
      by_pair[{from->id, to->id}].first.push_back(sep.from.slot);
    if (is_stable(sep.from.slot) && from->sign == Sign::positive)
      by_pair[{sep.to, from->id}].second.push_back(sep.from.slot);
  }
  std::vector<RetroConnection> out;
  for (auto& [pair, slots] : by_pair) {
    std::sort(slots.first.begin(), slots.first.end());
    std::sort(slots.second.begin(), slots.second.end());
    for (std::size_t i = 0; i < slots.first.size(); i++)
      out.push_back({{pair.first, slots.first[i]}, {pair.second, slots.second[i]}});
  }
  return out;
}

bool is_convex(const FoliationState& s) {
  require_valid(s);
  if (s.surface != SurfaceKind::sphere) throw FoliationError("convexity check expects a sphere");
  if (!retrogradient_connections(s).empty()) return false;
  for (const auto& l : s.closed_leaves)
    if (is_semistable(l.holonomy)) return false;
  for (const auto& p : s.singularities)
    if (p.kind == SingKind::birthdeath) return false;
  return true;
}

SignedGraph gamma_graph(const FoliationState& s, Sign sign) {
  SignedGraph g;
  for (const auto& p : s.singularities)
    if (p.sign == sign) g.vertices.push_back(p.id);
  for (const auto& sep : s.separatrices) {
    if (sep.to == kBoundary) continue;
    const Singularity* from = s.find(sep.from.sing);
    const Singularity* to = s.find(sep.to);
    if (!from || !to || from->sign != sign || to->sign != sign) continue;
    bool own_side = (sign == Sign::positive && is_stable(sep.from.slot)) ||
                    (sign == Sign::negative && is_unstable(sep.from.slot)) ||
                    sep.from.slot == Slot::bd_leaf;
    if (own_side) g.edges.emplace_back(from->id, sep.to);
  }
  return g;
}

std::vector<std::vector<std::string>> gamma_components(const FoliationState& s, Sign sign) {
  SignedGraph g = gamma_graph(s, sign);
  UnionFind uf;
  for (const auto& v : g.vertices) uf.add(v);
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::map<std::string, std::vector<std::string>> comps;
  for (const auto& v : g.vertices) comps[uf.find(v)].push_back(v);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : comps) {
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dividing_components(const FoliationState& s) {
  if (!is_convex(s)) throw FoliationError("dividing set undefined for non-convex state");
  if (!s.closed_leaves.empty())
    throw FoliationError("dividing count with closed leaves is unsupported");
  return graph_count(gamma_graph(s, Sign::positive));
}

bool has_tight_neighborhood(const FoliationState& s) { return dividing_components(s) == 1; }

int component_defect(const FoliationState& s, const std::string& member) {
  require_valid(s);
  for (const auto& comp : gamma_components(s, Sign::negative)) {
    if (std::find(comp.begin(), comp.end(), member) == comp.end()) continue;
    int defect = 0;
    for (const auto& id : comp) {
      const Singularity* p = s.find(id);
      if (p->kind == SingKind::elliptic) defect++;
      if (p->kind == SingKind::hyperbolic) defect--;
    }
    return defect;
  }
  throw FoliationError(member + " is not in any component of Gamma_-*");
}

namespace {

// Shortest vertex path inside a SignedGraph, or nullopt if disconnected.
std::optional<std::vector<std::string>> graph_path(const SignedGraph& g, const std::string& from,
                                                   const std::string& to) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<std::string, std::string> prev;
  std::deque<std::string> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const auto& w : adj[v])
      if (!prev.count(w)) {
        prev[w] = v;
        queue.push_back(w);
      }
  }
  if (!prev.count(to)) return std::nullopt;
  std::vector<std::string> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool component_is_tree(const FoliationState& s, const SignedGraph& g,
                       const std::vector<std::string>& comp) {
  std::set<std::string> members(comp.begin(), comp.end());
  int edges = 0;
  for (const auto& [a, b] : g.edges)
    if (members.count(a)) edges++;
  return edges == static_cast<int>(comp.size()) - 1;
}

}  // namespace

std::optional<UnknotWitness> detect_nonloose_unknot(const FoliationState& s) {
  require_valid(s);
  if (s.surface != SurfaceKind::sphere) throw FoliationError("expects a sphere");
  if (!s.closed_leaves.empty()) return std::nullopt;
  auto retro = retrogradient_connections(s);
  if (retro.size() != 2) return std::nullopt;

  SignedGraph gm = gamma_graph(s, Sign::negative);
  auto comps = gamma_components(s, Sign::negative);
  if (comps.size() != 3) return std::nullopt;
  for (const auto& comp : comps)
    if (!component_is_tree(s, gm, comp)) return std::nullopt;

  auto neg_path = graph_path(gm, retro[0].negative.sing, retro[1].negative.sing);
  if (!neg_path) return std::nullopt;  // the two leaves must leave one component

  SignedGraph gp = gamma_graph(s, Sign::positive);
  auto pos_path = graph_path(gp, retro[0].positive.sing, retro[1].positive.sing);
  if (!pos_path) return std::nullopt;  // circuit does not close through Gamma_+*

  return UnknotWitness{retro[0], retro[1], *neg_path, *pos_path};
}

FoliationState normal_form_disc(int n) {
  if (n <= 0) throw FoliationError("normal form requires tb = n > 0");
  FoliationState s;
  s.surface = SurfaceKind::disc;
  auto num = [](const std::string& stem, int i) { return stem + std::to_string(i); };
  for (int i = 1; i <= n; i++)
    s.singularities.push_back({num("ep", i), Sign::positive, SingKind::elliptic});
  s.singularities.push_back({"en", Sign::negative, SingKind::elliptic});
  for (int i = 1; i <= n; i++) {
    s.singularities.push_back({num("hp", i), Sign::positive, SingKind::hyperbolic});
    s.singularities.push_back({num("hm", i), Sign::negative, SingKind::hyperbolic});
    s.boundary.push_back(num("hp", i));
    s.boundary.push_back(num("hm", i));
  }
  for (int i = 1; i <= n; i++) {
    s.separatrices.push_back({{num("hm", i), Slot::stable1}, num("ep", i)});
    s.separatrices.push_back({{num("hm", i), Slot::stable2}, num("ep", i % n + 1)});
    s.separatrices.push_back({{num("hm", i), Slot::unstable1}, kBoundary});
    s.separatrices.push_back({{num("hm", i), Slot::unstable2}, kBoundary});
    s.separatrices.push_back({{num("hp", i), Slot::stable1}, kBoundary});
    s.separatrices.push_back({{num("hp", i), Slot::stable2}, kBoundary});
    s.separatrices.push_back({{num("hp", i), Slot::unstable1}, "en"});
    s.separatrices.push_back({{num("hp", i), Slot::unstable2}, "en"});
  }
  return s;
}

SingCounts interior_counts(const FoliationState& s) {
  SingCounts c;
  for (const auto& p : s.singularities) {
    if (on_boundary(s, p.id)) continue;
    if (p.kind == SingKind::elliptic)
      (p.sign == Sign::positive ? c.e_pos : c.e_neg)++;
    else if (p.kind == SingKind::hyperbolic)
      (p.sign == Sign::positive ? c.h_pos : c.h_neg)++;
  }
  return c;
}

int disc_rotation_number(const FoliationState& s) {
  require_valid(s);
  if (s.surface != SurfaceKind::disc) throw FoliationError("expects a disc");
  bool any_h = false, any_e = false;
  for (const auto& b : s.boundary) {
    const Singularity* p = s.find(b);
    (p->kind == SingKind::hyperbolic ? any_h : any_e) = true;
  }
  if (any_h && any_e) throw FoliationError("mixed boundary singularities");
  SingCounts c = interior_counts(s);
  return c.e_pos - c.e_neg - c.h_pos + c.h_neg;
}

FoliationState eliminate_pair(const FoliationState& s, const std::string& elliptic,
                              const std::string& hyperbolic) {
  require_valid(s);
  const Singularity* e = s.find(elliptic);
  const Singularity* h = s.find(hyperbolic);
  if (!e || !h || e->kind != SingKind::elliptic || h->kind != SingKind::hyperbolic)
    throw FoliationError("eliminate_pair expects an elliptic and a hyperbolic id");
  if (e->sign != h->sign) throw FoliationError("pair elimination needs matching signs");

  // Same-sign flow means the connecting leaf sits on the stable side for a
  // positive pair and on the unstable side for a negative one.
  Slot side1 = e->sign == Sign::positive ? Slot::stable1 : Slot::unstable1;
  Slot side2 = e->sign == Sign::positive ? Slot::stable2 : Slot::unstable2;
  auto t1 = s.target(hyperbolic, side1);
  auto t2 = s.target(hyperbolic, side2);
  std::string replacement;
  if (t1 == elliptic)
    replacement = *t2;
  else if (t2 == elliptic)
    replacement = *t1;
  else
    throw FoliationError("no connecting leaf between " + elliptic + " and " + hyperbolic);
  if (replacement == elliptic)
    throw FoliationError(elliptic + " is not in elimination position");

  for (const auto& sep : s.separatrices)
    if (sep.to == hyperbolic)
      throw FoliationError(hyperbolic + " participates in a saddle connection");

  FoliationState out = s;
  std::erase_if(out.singularities,
                [&](const Singularity& p) { return p.id == elliptic || p.id == hyperbolic; });
  std::erase_if(out.separatrices,
                [&](const Separatrix& sep) { return sep.from.sing == hyperbolic; });
  for (auto& sep : out.separatrices)
    if (sep.to == elliptic) sep.to = replacement;
  require_valid(out);
  return out;
}

FoliationState split_boundary_hyperbolic(const FoliationState& s, const std::string& h) {
  require_valid(s);
  if (s.surface != SurfaceKind::disc) throw FoliationError("expects a disc");
  const Singularity* p = s.find(h);
  if (!p || p->kind != SingKind::hyperbolic || !on_boundary(s, h))
    throw FoliationError(h + " is not a boundary hyperbolic point");
  Slot a = p->sign == Sign::positive ? Slot::unstable1 : Slot::stable1;
  Slot b = p->sign == Sign::positive ? Slot::unstable2 : Slot::stable2;
  if (s.target(h, a) != kBoundary || s.target(h, b) != kBoundary)
    throw FoliationError("leaves of " + h + " do not lie on the boundary");
  for (const auto& sep : s.separatrices)
    if (sep.to == h) throw FoliationError(h + " participates in a saddle connection");

  FoliationState out = s;
  for (auto& q : out.singularities)
    if (q.id == h) q.kind = SingKind::elliptic;
  // The former interior separatrices lose their hyperbolic endpoint and stop
  // being separatrices altogether.
  std::erase_if(out.separatrices, [&](const Separatrix& sep) { return sep.from.sing == h; });
  return out;
}

FoliationState normalized(const FoliationState& s) {
  FoliationState out = s;
  std::sort(out.singularities.begin(), out.singularities.end(),
            [](const Singularity& a, const Singularity& b) { return a.id < b.id; });
  std::sort(out.separatrices.begin(), out.separatrices.end());
  std::sort(out.closed_leaves.begin(), out.closed_leaves.end(),
            [](const ClosedLeaf& a, const ClosedLeaf& b) { return a.id < b.id; });
  if (!out.boundary.empty()) {
    auto best = out.boundary;
    auto rot = out.boundary;
    for (std::size_t i = 1; i < out.boundary.size(); i++) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    out.boundary = best;
  }
  return out;
}

bool same_state(const FoliationState& a, const FoliationState& b) {
  FoliationState x = normalized(a), y = normalized(b);
  return x.surface == y.surface && x.singularities == y.singularities &&
         x.separatrices == y.separatrices && x.closed_leaves == y.closed_leaves &&
         x.boundary == y.boundary;
}

}  // namespace legknot::foliation
