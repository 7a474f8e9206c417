#include "legknot/moves.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace legknot::moves {

using front::Crossing;
using front::CrossingRole;
using front::Cusp;
using front::Event;

namespace {

// Hands out crossing ids of the form xN not yet used in the diagram.
struct IdSpring {
  std::set<std::string> used;
  int next = 1;

  explicit IdSpring(const TorusFrontDiagram& d) {
    for (const auto& e : d.events)
      if (const auto* c = std::get_if<Crossing>(&e)) used.insert(c->id);
  }
  std::string fresh() {
    for (;; next++) {
      std::string id = "x" + std::to_string(next);
      if (used.insert(id).second) return id;
    }
  }
};

void insert_at(std::vector<Event>& word, std::size_t pos, const std::vector<Event>& tangle) {
  if (pos > word.size()) throw MoveError("insertion position out of range");
  word.insert(word.begin() + pos, tangle.begin(), tangle.end());
}

}  // namespace

TorusFrontDiagram stabilize(const TorusFrontDiagram& d, Sign s, std::size_t position) {
  front::require_valid(d);
  TorusFrontDiagram out = d;
  insert_at(out.events, position, {Cusp{s}, Cusp{s}});
  out.name.reset();
  return out;
}

TorusFrontDiagram destabilize(const TorusFrontDiagram& d, Sign s) {
  front::require_valid(d);
  const auto& w = d.events;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; i++) {
    const auto* a = std::get_if<Cusp>(&w[i]);
    const auto* b = std::get_if<Cusp>(&w[(i + 1) % n]);
    if (a && b && a->sign == s && b->sign == s) {
      TorusFrontDiagram out = d;
      if ((i + 1) % n == 0) {
        out.events.pop_back();
        out.events.erase(out.events.begin());
      } else {
        out.events.erase(out.events.begin() + i, out.events.begin() + i + 2);
      }
      out.name.reset();
      return out;
    }
  }
  throw MoveError("no adjacent cusp pair of the requested sign");
}

TorusFrontDiagram hopf_pass(const TorusFrontDiagram& d, HopfComponent component, int direction) {
  front::require_valid(d);
  if (direction != 1 && direction != -1) throw MoveError("direction must be +-1");

  TorusFrontDiagram out = d;
  // Two cusps appear where the front slides over the fiber; their sign is
  // chosen so the a - b shift in rot is cancelled.
  Sign cusp_sign;
  int net_crossings;  // signed, balances tb through the a*b term
  if (component == HopfComponent::z1) {
    cusp_sign = direction > 0 ? Sign::positive : Sign::negative;
    net_crossings = 1 - d.homology.a * direction;
    out.homology.b += direction;
  } else {
    cusp_sign = direction > 0 ? Sign::negative : Sign::positive;
    net_crossings = 1 - d.homology.b * direction;
    out.homology.a += direction;
  }

  std::vector<Event> tangle{Cusp{cusp_sign}, Cusp{cusp_sign}};
  Sign cross_sign = net_crossings >= 0 ? Sign::positive : Sign::negative;
  IdSpring ids(d);
  for (int i = 0; i < std::abs(net_crossings); i++) {
    std::string id = ids.fresh();
    tangle.push_back(Crossing{id, CrossingRole::over, cross_sign});
    tangle.push_back(Crossing{id, CrossingRole::under, cross_sign});
  }
  insert_at(out.events, 0, tangle);
  out.name.reset();

  if (front::thurston_bennequin(out) != front::thurston_bennequin(d) ||
      front::rotation_number(out) != front::rotation_number(d))
    throw MoveError("hopf_pass template failed to preserve the invariants");
  return out;
}

TorusFrontDiagram reidemeister(const TorusFrontDiagram& d, ReidemeisterKind kind,
                               const ReidemeisterSite& site) {
  front::require_valid(d);
  TorusFrontDiagram out = d;
  out.name.reset();
  IdSpring ids(d);
  const std::string id = ids.fresh();
  const std::string id2 = ids.fresh();

  auto r1_tangle = [&](const std::string& cid) -> std::vector<Event> {
    // A front kink: one positive crossing flanked by an up/down cusp pair.
    // site.sign picks which cusp comes first along the strand.
    Sign first = site.sign;
    return {Crossing{cid, CrossingRole::over, Sign::positive}, Cusp{first},
            Cusp{opposite(first)}, Crossing{cid, CrossingRole::under, Sign::positive}};
  };
  auto r2_tangle = [&](const std::string& ca, const std::string& cb) -> std::vector<Event> {
    Sign s = site.sign;
    return {Crossing{ca, CrossingRole::over, s}, Crossing{cb, CrossingRole::over, opposite(s)},
            Crossing{cb, CrossingRole::under, opposite(s)}, Crossing{ca, CrossingRole::under, s}};
  };

  switch (kind) {
    case ReidemeisterKind::r1:
    case ReidemeisterKind::r2: {
      std::vector<Event> tangle =
          kind == ReidemeisterKind::r1 ? r1_tangle(id) : r2_tangle(id, id2);
      if (site.insert) {
        insert_at(out.events, site.position, tangle);
      } else {
        if (site.position + tangle.size() > out.events.size())
          throw MoveError("removal window out of range");
        for (std::size_t i = 0; i < tangle.size(); i++) {
          const Event& have = out.events[site.position + i];
          const Event& want = tangle[i];
          // Crossing ids at the site are whatever the diagram uses; compare
          // everything else.
          if (have.index() != want.index()) throw MoveError("site does not match the move template");
          if (const auto* kc = std::get_if<Cusp>(&want)) {
            if (std::get<Cusp>(have) != *kc) throw MoveError("site does not match the move template");
          } else {
            const auto& hc = std::get<Crossing>(have);
            const auto& wc = std::get<Crossing>(want);
            if (hc.role != wc.role || hc.sign != wc.sign)
              throw MoveError("site does not match the move template");
          }
        }
        // The window must be self-contained: its crossings pair up inside it.
        std::map<std::string, int> ids;
        for (std::size_t i = 0; i < tangle.size(); i++)
          if (const auto* c = std::get_if<Crossing>(&out.events[site.position + i])) ids[c->id]++;
        for (const auto& [cid, cnt] : ids)
          if (cnt != 2) throw MoveError("move window splits a crossing pair");
        out.events.erase(out.events.begin() + site.position,
                         out.events.begin() + site.position + tangle.size());
      }
      break;
    }
    case ReidemeisterKind::r3: {
      if (site.position + 3 > out.events.size()) throw MoveError("r3 window out of range");
      std::string seen[3];
      for (int i = 0; i < 3; i++) {
        const auto* c = std::get_if<Crossing>(&out.events[site.position + i]);
        if (!c) throw MoveError("r3 site must be three crossing events");
        seen[i] = c->id;
      }
      if (seen[0] == seen[1] || seen[1] == seen[2] || seen[0] == seen[2])
        throw MoveError("r3 site must involve three distinct crossings");
      std::swap(out.events[site.position], out.events[site.position + 2]);
      break;
    }
  }
  front::require_valid(out);
  if (front::thurston_bennequin(out) != front::thurston_bennequin(d) ||
      front::rotation_number(out) != front::rotation_number(d))
    throw MoveError("move failed to preserve the invariants");
  return out;
}

Looseness predict_looseness(const classify::ContactStructure& structure, int tb, int rot) {
  if (!structure.overtwisted)
    throw MoveError("looseness is only meaningful in overtwisted structures");
  if ((tb + rot) % 2 == 0) return Looseness::not_realizable;
  if (structure.hopf_invariant == -1 && tb > 0 && std::abs(rot) == tb - 1)
    return Looseness::may_be_nonloose;
  return Looseness::must_be_loose;
}

std::string to_string(Looseness l) {
  switch (l) {
    case Looseness::must_be_loose: return "must_be_loose";
    case Looseness::may_be_nonloose: return "may_be_nonloose";
    case Looseness::not_realizable: return "not_realizable";
  }
  return "?";
}

}  // namespace legknot::moves
