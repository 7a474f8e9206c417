#include "legknot/movie.hpp"

#include <algorithm>

namespace legknot::movie {

using foliation::ClosedLeaf;
using foliation::FoliationState;
using foliation::is_semistable;
using foliation::Separatrix;
using foliation::SingKind;
using foliation::Singularity;

namespace {

void rewire(FoliationState& s, const SlotRef& at, const std::string& expect,
            const std::string& next) {
  for (auto& sep : s.separatrices) {
    if (sep.from != at) continue;
    if (sep.to != expect)
      throw MovieError("slot of " + at.sing + " is wired to " + sep.to + ", expected " + expect);
    sep.to = next;
    return;
  }
  throw MovieError("slot of " + at.sing + " is not wired");
}

void drop_leaf(FoliationState& s, const std::string& id, Holonomy h) {
  auto it = std::find_if(s.closed_leaves.begin(), s.closed_leaves.end(),
                         [&](const ClosedLeaf& l) { return l.id == id; });
  if (it == s.closed_leaves.end() || it->holonomy != h)
    throw MovieError("closed leaf " + id + " not present with the expected holonomy");
  s.closed_leaves.erase(it);
}

}  // namespace

FoliationState apply_event(const FoliationState& s, const MovieEvent& e) {
  FoliationState out = s;
  if (const auto* c = std::get_if<RetroCrossing>(&e)) {
    rewire(out, c->neg, c->pre_target, c->post_target);
    rewire(out, c->pos, c->pre_source, c->post_source);
  } else if (const auto* b = std::get_if<ClosedOrbitBirth>(&e)) {
    drop_leaf(out, b->semistable, b->semistable_holonomy);
    out.closed_leaves.push_back({b->attracting, Holonomy::attracting});
    out.closed_leaves.push_back({b->repelling, Holonomy::repelling});
  } else if (const auto* d = std::get_if<ClosedOrbitDeath>(&e)) {
    drop_leaf(out, d->attracting, Holonomy::attracting);
    drop_leaf(out, d->repelling, Holonomy::repelling);
    out.closed_leaves.push_back({d->semistable, d->semistable_holonomy});
  } else if (const auto* p = std::get_if<PairCreation>(&e)) {
    if (s.find(p->elliptic) || s.find(p->hyperbolic))
      throw MovieError("pair_creation ids already in use");
    if (p->wiring.size() != 4) throw MovieError("pair_creation needs all four slots wired");
    out.singularities.push_back({p->elliptic, p->sign, SingKind::elliptic});
    out.singularities.push_back({p->hyperbolic, p->sign, SingKind::hyperbolic});
    for (const auto& [slot, to] : p->wiring)
      out.separatrices.push_back({{p->hyperbolic, slot}, to});
  } else if (const auto* q = std::get_if<PairElimination>(&e)) {
    out = foliation::eliminate_pair(out, q->elliptic, q->hyperbolic);
  } else if (const auto* g = std::get_if<SameSignConnection>(&e)) {
    rewire(out, g->slot, g->pre_target, g->post_target);
  }
  return out;
}

MovieEvent formal_inverse(const MovieEvent& e, const FoliationState& pre) {
  if (const auto* c = std::get_if<RetroCrossing>(&e)) {
    RetroCrossing inv = *c;
    std::swap(inv.pre_target, inv.post_target);
    std::swap(inv.pre_source, inv.post_source);
    return inv;
  }
  if (const auto* b = std::get_if<ClosedOrbitBirth>(&e))
    return ClosedOrbitDeath{b->attracting, b->repelling, b->semistable, b->semistable_holonomy};
  if (const auto* d = std::get_if<ClosedOrbitDeath>(&e))
    return ClosedOrbitBirth{d->semistable, d->semistable_holonomy, d->attracting, d->repelling};
  if (const auto* p = std::get_if<PairCreation>(&e))
    return PairElimination{p->elliptic, p->hyperbolic};
  if (const auto* q = std::get_if<PairElimination>(&e)) {
    const Singularity* h = pre.find(q->hyperbolic);
    const Singularity* el = pre.find(q->elliptic);
    if (!h || !el) throw MovieError("pair_elimination ids not found in the pre-state");
    PairCreation inv{h->sign, q->elliptic, q->hyperbolic, {}};
    for (const auto& sep : pre.separatrices)
      if (sep.from.sing == q->hyperbolic) inv.wiring[sep.from.slot] = sep.to;
    return inv;
  }
  const auto& g = std::get<SameSignConnection>(e);
  return SameSignConnection{g.slot, g.post_target, g.pre_target};
}

std::vector<std::size_t> Movie::simultaneous_marks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < states.size(); i++)
    if (foliation::retrogradient_connections(states[i]).size() >= 2) out.push_back(i);
  return out;
}

foliation::ValidationReport validate_movie(const Movie& m) {
  foliation::ValidationReport r;
  if (m.states.empty()) {
    r.violations.push_back("movie has no states");
    return r;
  }
  if (m.events.size() + 1 != m.states.size()) {
    r.violations.push_back("event count must be one less than state count");
    return r;
  }
  for (std::size_t i = 0; i < m.states.size(); i++) {
    auto sr = foliation::validate_state(m.states[i]);
    for (const auto& v : sr.violations)
      r.violations.push_back("state " + std::to_string(i) + ": " + v);
  }
  if (!r.ok()) return r;
  for (std::size_t i = 0; i < m.events.size(); i++) {
    try {
      FoliationState next = apply_event(m.states[i], m.events[i]);
      if (!foliation::same_state(next, m.states[i + 1]))
        r.violations.push_back("event " + std::to_string(i) +
                               " rewrite does not reproduce the next state");
    } catch (const std::runtime_error& err) {
      r.violations.push_back("event " + std::to_string(i) + ": " + err.what());
    }
  }
  return r;
}

void require_valid(const Movie& m) {
  auto r = validate_movie(m);
  if (!r.ok()) throw MovieError("invalid movie: " + r.violations.front());
}

StateClass classify_state(const FoliationState& s) {
  // A semistable closed leaf is a degenerate orbit; it forces closed leaves
  // on the neighboring spheres and with them an overtwisted disc.
  for (const auto& l : s.closed_leaves)
    if (is_semistable(l.holonomy)) return StateClass::overtwisted;
  if (foliation::is_convex(s)) {
    if (!s.closed_leaves.empty()) return StateClass::unknown;
    return foliation::dividing_components(s) == 1 ? StateClass::tight_ok : StateClass::overtwisted;
  }
  if (!s.closed_leaves.empty()) return StateClass::unknown;
  // Removability: with at most one retrogradient connection per negative
  // component the state can be deformed to a convex one when every component
  // keeps enough elliptic points, on both signs.
  for (Sign sign : {Sign::positive, Sign::negative}) {
    for (const auto& comp : foliation::gamma_components(s, sign)) {
      int e = 0, h = 0;
      for (const auto& id : comp) {
        const Singularity* p = s.find(id);
        if (p->kind == SingKind::elliptic) e++;
        if (p->kind == SingKind::hyperbolic) h++;
      }
      if (e < h) return StateClass::unknown;
    }
  }
  return StateClass::tight_ok;
}

TightVerdict tight_verdict(const Movie& m) {
  require_valid(m);
  bool all_tight = true;
  for (std::size_t i = 0; i < m.states.size(); i++) {
    StateClass c = classify_state(m.states[i]);
    if (c == StateClass::overtwisted) return {TightVerdict::Kind::overtwisted, i};
    if (c != StateClass::tight_ok) all_tight = false;
  }
  return {all_tight ? TightVerdict::Kind::tight : TightVerdict::Kind::undetermined, std::nullopt};
}

std::optional<TBounds> movie_T_bounds(const Movie& m) {
  require_valid(m);
  for (std::size_t i : {std::size_t{0}, m.states.size() - 1}) {
    const FoliationState& s = m.states[i];
    if (!foliation::is_convex(s) || !s.closed_leaves.empty() ||
        foliation::dividing_components(s) != 1)
      throw MovieError("boundary state " + std::to_string(i) +
                       " is not convex with connected dividing set");
  }
  if (tight_verdict(m).kind == TightVerdict::Kind::tight) return std::nullopt;
  std::size_t n = m.states.size();
  std::size_t t_minus = 0;
  while (t_minus < n && classify_state(m.states[t_minus]) == StateClass::tight_ok) t_minus++;
  std::size_t tail = n;
  while (tail > 0 && classify_state(m.states[tail - 1]) == StateClass::tight_ok) tail--;
  return TBounds{t_minus, tail};
}

std::vector<std::size_t> detect_nonloose_states(const Movie& m) {
  require_valid(m);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.states.size(); i++) {
    if (!foliation::detect_nonloose_unknot(m.states[i])) continue;
    bool flanks_tight = true;
    for (std::size_t j = 0; j < m.states.size(); j++)
      if (j != i && classify_state(m.states[j]) != StateClass::tight_ok) flanks_tight = false;
    if (flanks_tight) out.push_back(i);
  }
  return out;
}

namespace {

struct ResolutionData {
  SlotRef neg, pos;
  std::string pre_target, post_target;
  std::string pre_source, post_source;
};

// The crossing template: the unstable leaf lands where the shadowing
// unstable leaf of the positive hyperbolic goes, with the slot of the same
// index taken as the near (pre) side; dually for the source.
ResolutionData derive_resolution(const FoliationState& s, const foliation::RetroConnection& c) {
  ResolutionData d;
  d.neg = c.negative;
  d.pos = c.positive;
  Slot near_u = c.positive.slot == Slot::stable1 ? Slot::unstable1 : Slot::unstable2;
  Slot far_u = c.positive.slot == Slot::stable1 ? Slot::unstable2 : Slot::unstable1;
  Slot near_s = c.negative.slot == Slot::unstable1 ? Slot::stable1 : Slot::stable2;
  Slot far_s = c.negative.slot == Slot::unstable1 ? Slot::stable2 : Slot::stable1;
  d.pre_target = *s.target(c.positive.sing, near_u);
  d.post_target = *s.target(c.positive.sing, far_u);
  d.pre_source = *s.target(c.negative.sing, near_s);
  d.post_source = *s.target(c.negative.sing, far_s);
  return d;
}

FoliationState resolve(const FoliationState& s, const ResolutionData& d, bool post) {
  FoliationState out = s;
  rewire(out, d.neg, d.pos.sing, post ? d.post_target : d.pre_target);
  rewire(out, d.pos, d.neg.sing, post ? d.post_source : d.pre_source);
  return out;
}

RetroCrossing crossing_event(const ResolutionData& d) {
  return {d.neg, d.pos, d.pre_target, d.post_target, d.pre_source, d.post_source};
}

}  // namespace

std::vector<Resolution> enumerate_double_resolutions(const FoliationState& s) {
  foliation::require_valid(s);
  auto retro = foliation::retrogradient_connections(s);
  if (retro.size() != 2) throw MovieError("expects exactly 2 retrogradient connections");
  ResolutionData d[2] = {derive_resolution(s, retro[0]), derive_resolution(s, retro[1])};

  std::vector<Resolution> out;
  for (int first : {0, 1}) {
    int second = 1 - first;
    FoliationState before = resolve(resolve(s, d[first], false), d[second], false);
    FoliationState mid = resolve(resolve(s, d[first], true), d[second], false);
    FoliationState after = resolve(resolve(s, d[first], true), d[second], true);
    Movie m;
    m.states = {before, mid, after};
    m.events = {crossing_event(d[first]), crossing_event(d[second])};
    Resolution r;
    r.ordering = first == 0 ? "A,B" : "B,A";
    r.movie = m;
    r.verdict = tight_verdict(m);
    out.push_back(std::move(r));
  }
  return out;
}

TripleResolutions enumerate_triple_resolutions(const FoliationState& s) {
  foliation::require_valid(s);
  auto retro = foliation::retrogradient_connections(s);
  if (retro.size() != 3) throw MovieError("expects exactly 3 retrogradient connections");
  ResolutionData d[3] = {derive_resolution(s, retro[0]), derive_resolution(s, retro[1]),
                         derive_resolution(s, retro[2])};

  auto resolved = [&](bool p0, bool p1, bool p2) {
    return resolve(resolve(resolve(s, d[0], p0), d[1], p1), d[2], p2);
  };

  TripleResolutions out;
  for (std::size_t lone = 0; lone < 3; lone++) {
    std::size_t d1 = lone == 0 ? 1 : 0;
    std::size_t d2 = lone == 2 ? 1 : 2;
    for (bool double_first : {false, true}) {
      auto post = [&](std::size_t who, int stage) {
        // stage runs over the four serialized states
        if (who == lone) return double_first ? stage >= 3 : stage >= 1;
        if (who == d1) return double_first ? stage >= 1 : stage >= 2;
        return double_first ? stage >= 2 : stage >= 3;
      };
      Movie m;
      for (int stage = 0; stage < 4; stage++)
        m.states.push_back(resolved(post(0, stage), post(1, stage), post(2, stage)));
      if (double_first)
        m.events = {crossing_event(d[d1]), crossing_event(d[d2]), crossing_event(d[lone])};
      else
        m.events = {crossing_event(d[lone]), crossing_event(d[d1]), crossing_event(d[d2])};

      // The codimension-2 moment: the pair still connected, the lone
      // connection already on the side the schedule puts it.
      FoliationState double_state = resolve(s, d[lone], !double_first);
      FoliationState between = double_first ? resolved(lone != 0, lone != 1, lone != 2)
                                            : resolved(lone == 0, lone == 1, lone == 2);
      bool flank_ok = classify_state(m.states.front()) != StateClass::overtwisted &&
                      classify_state(between) != StateClass::overtwisted &&
                      classify_state(m.states.back()) != StateClass::overtwisted;
      bool fires = foliation::detect_nonloose_unknot(double_state).has_value();
      out.schedules.push_back({lone, double_first, std::move(m), fires && flank_ok});
    }
  }
  bool first = out.schedules.front().in_l_gen;
  out.smooth_point = std::all_of(out.schedules.begin(), out.schedules.end(),
                                 [&](const TripleSchedule& t) { return t.in_l_gen == first; });
  return out;
}

bool check_giroux_forbidden(const BifurcationGrid& g) {
  const auto& cells = g.cells;
  if (cells.empty() || cells.front().empty()) throw MovieError("malformed grid: empty");
  const std::size_t cols = cells.front().size();
  std::vector<std::vector<std::size_t>> walls(cells.size());
  for (std::size_t r = 0; r < cells.size(); r++) {
    if (cells[r].size() != cols) throw MovieError("malformed grid: ragged rows");
    for (std::size_t c = 0; c < cols; c++)
      if (cells[r][c].wall) walls[r].push_back(c);
    if (walls[r].size() > 2)
      throw MovieError("malformed grid: more than two wall curves in a row");
  }

  auto row_matches = [&](std::size_t r, std::size_t lo, std::size_t hi) {
    if (hi <= lo + 1) return false;  // no trapped region between the walls
    for (std::size_t c = 0; c < cols; c++) {
      if (cells[r][c].wall) continue;
      bool inside = c > lo && c < hi;
      if (inside && cells[r][c].count < 2) return false;
      if (!inside && cells[r][c].count != 1) return false;
    }
    return true;
  };

  for (std::size_t r = 1; r + 1 < cells.size(); r++) {
    if (walls[r].size() != 1) continue;  // transversal crossing point
    std::size_t c = walls[r].front();
    const auto& up = walls[r - 1];
    const auto& dn = walls[r + 1];
    if (up.size() != 2 || dn.size() != 2) continue;
    if (up.front() > c || up.back() < c || dn.front() > c || dn.back() < c) continue;
    if (row_matches(r - 1, up.front(), up.back()) && row_matches(r + 1, dn.front(), dn.back()))
      return true;
  }
  return false;
}

}  // namespace legknot::movie
