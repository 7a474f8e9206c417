#include "legknot/front_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace legknot::front {

namespace {

int sgn(Sign s) { return static_cast<int>(s); }

// Total order on events so cyclic words can be normalized.
std::tuple<int, std::string, int, int> event_key(const Event& e) {
  if (const auto* c = std::get_if<Crossing>(&e))
    return {0, c->id, c->role == CrossingRole::over ? 0 : 1, sgn(c->sign)};
  const auto& k = std::get<Cusp>(e);
  return {1, "", 0, sgn(k.sign)};
}

bool event_less(const Event& x, const Event& y) { return event_key(x) < event_key(y); }

}  // namespace

ValidationReport validate_diagram(const TorusFrontDiagram& d) {
  ValidationReport r;
  struct Seen {
    int over = 0;
    int under = 0;
    Sign sign = Sign::positive;
    bool first = true;
  };
  std::map<std::string, Seen> crossings;
  int cusps = 0;
  for (const auto& e : d.events) {
    if (const auto* c = std::get_if<Crossing>(&e)) {
      auto& s = crossings[c->id];
      if (s.first) {
        s.sign = c->sign;
        s.first = false;
      } else if (s.sign != c->sign) {
        r.violations.push_back("crossing " + c->id + " has inconsistent signs");
      }
      (c->role == CrossingRole::over ? s.over : s.under)++;
    } else {
      cusps++;
    }
  }
  for (const auto& [id, s] : crossings)
    if (s.over != 1 || s.under != 1) r.violations.push_back("unpaired crossing " + id);
  if (cusps % 2 != 0) r.violations.push_back("odd cusp count");
  return r;
}

void require_valid(const TorusFrontDiagram& d) {
  auto r = validate_diagram(d);
  if (!r.ok()) throw DiagramError("invalid diagram: " + r.violations.front());
}

bool is_valid(const TorusFrontDiagram& d) { return validate_diagram(d).ok(); }

int crossing_count(const TorusFrontDiagram& d, Sign s) {
  int n = 0;
  for (const auto& e : d.events)
    if (const auto* c = std::get_if<Crossing>(&e))
      if (c->sign == s && c->role == CrossingRole::over) n++;
  return n;
}

int cusp_count(const TorusFrontDiagram& d) {
  int n = 0;
  for (const auto& e : d.events)
    if (std::holds_alternative<Cusp>(e)) n++;
  return n;
}

int cusp_count(const TorusFrontDiagram& d, Sign s) {
  int n = 0;
  for (const auto& e : d.events)
    if (const auto* k = std::get_if<Cusp>(&e))
      if (k->sign == s) n++;
  return n;
}

int thurston_bennequin(const TorusFrontDiagram& d) {
  require_valid(d);
  return crossing_count(d, Sign::positive) - crossing_count(d, Sign::negative) -
         cusp_count(d) / 2 + d.homology.a * d.homology.b;
}

int rotation_number(const TorusFrontDiagram& d) {
  require_valid(d);
  return (cusp_count(d, Sign::positive) - cusp_count(d, Sign::negative)) / 2 +
         d.homology.a - d.homology.b;
}

int self_linking(const TorusFrontDiagram& d) { return thurston_bennequin(d) - rotation_number(d); }

TorusFrontDiagram linear_unknot(int m, int n) {
  if (std::gcd(m, n) != 1) throw DiagramError("homology class (m, n) is not primitive");
  if (m * n < 0)
    throw DiagramError("lines of negative slope have no Legendrian lift on the torus");
  TorusFrontDiagram d;
  d.homology = {m, n};
  d.name = "K(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return d;
}

TorusFrontDiagram apply_symmetry_psi(const TorusFrontDiagram& d) {
  require_valid(d);
  TorusFrontDiagram out;
  out.events = d.events;
  for (auto& e : out.events) {
    if (auto* c = std::get_if<Crossing>(&e))
      c->role = c->role == CrossingRole::over ? CrossingRole::under : CrossingRole::over;
  }
  out.homology = {-d.homology.b, -d.homology.a};
  if (d.name) out.name = "psi(" + *d.name + ")";
  return out;
}

TorusFrontDiagram reverse_orientation(const TorusFrontDiagram& d) {
  require_valid(d);
  TorusFrontDiagram out;
  out.events.assign(d.events.rbegin(), d.events.rend());
  for (auto& e : out.events) {
    if (auto* k = std::get_if<Cusp>(&e)) k->sign = opposite(k->sign);
  }
  out.homology = {-d.homology.a, -d.homology.b};
  if (d.name) out.name = "rev(" + *d.name + ")";
  return out;
}

std::vector<Event> canonical_word(const std::vector<Event>& events) {
  if (events.empty()) return events;
  std::vector<Event> best = events;
  std::vector<Event> rot = events;
  for (std::size_t i = 1; i < events.size(); i++) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(), event_less))
      best = rot;
  }
  return best;
}

bool same_diagram(const TorusFrontDiagram& x, const TorusFrontDiagram& y) {
  return x.homology == y.homology && canonical_word(x.events) == canonical_word(y.events);
}

}  // namespace legknot::front
