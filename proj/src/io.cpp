#include "legknot/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace legknot::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
}

int parse_sign_number(const json& j, const std::string& field) {
  if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1))
    fail("field '" + field + "' must be 1 or -1");
  return j.get<int>();
}

front::Sign parse_sign(const json& j, const std::string& field) {
  return parse_sign_number(j, field) == 1 ? front::Sign::positive : front::Sign::negative;
}

int sign_number(front::Sign s) { return s == front::Sign::positive ? 1 : -1; }

const json& member(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) fail("missing field '" + field + "'");
  return j.at(field);
}

std::string parse_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail("field '" + field + "' must be a string");
  return j.get<std::string>();
}

// ---- diagrams ----

front::Event parse_event(const json& j) {
  std::string type = parse_string(member(j, "type"), "type");
  if (type == "crossing") {
    front::Crossing c;
    c.id = parse_string(member(j, "id"), "id");
    std::string role = parse_string(member(j, "role"), "role");
    if (role == "over")
      c.role = front::CrossingRole::over;
    else if (role == "under")
      c.role = front::CrossingRole::under;
    else
      fail("field 'role' must be 'over' or 'under'");
    c.sign = parse_sign(member(j, "sign"), "sign");
    return c;
  }
  if (type == "cusp") return front::Cusp{parse_sign(member(j, "sign"), "sign")};
  fail("unknown event type '" + type + "'");
}

json event_json(const front::Event& e) {
  json j;
  if (const auto* c = std::get_if<front::Crossing>(&e)) {
    j["type"] = "crossing";
    j["id"] = c->id;
    j["role"] = c->role == front::CrossingRole::over ? "over" : "under";
    j["sign"] = sign_number(c->sign);
  } else {
    const auto& k = std::get<front::Cusp>(e);
    j["type"] = "cusp";
    j["sign"] = sign_number(k.sign);
  }
  return j;
}

// ---- foliations ----

const char* kind_name(foliation::SingKind k) {
  switch (k) {
    case foliation::SingKind::elliptic: return "elliptic";
    case foliation::SingKind::hyperbolic: return "hyperbolic";
    case foliation::SingKind::birthdeath: return "birthdeath";
  }
  return "?";
}

foliation::SingKind parse_kind(const json& j) {
  std::string k = parse_string(j, "kind");
  if (k == "elliptic") return foliation::SingKind::elliptic;
  if (k == "hyperbolic") return foliation::SingKind::hyperbolic;
  if (k == "birthdeath") return foliation::SingKind::birthdeath;
  fail("unknown singularity kind '" + k + "'");
}

const char* slot_name(foliation::Slot s) {
  switch (s) {
    case foliation::Slot::stable1: return "stable1";
    case foliation::Slot::stable2: return "stable2";
    case foliation::Slot::unstable1: return "unstable1";
    case foliation::Slot::unstable2: return "unstable2";
    case foliation::Slot::bd_leaf: return "bd_leaf";
  }
  return "?";
}

foliation::Slot parse_slot(const json& j) {
  std::string s = parse_string(j, "slot");
  if (s == "stable1") return foliation::Slot::stable1;
  if (s == "stable2") return foliation::Slot::stable2;
  if (s == "unstable1") return foliation::Slot::unstable1;
  if (s == "unstable2") return foliation::Slot::unstable2;
  if (s == "bd_leaf") return foliation::Slot::bd_leaf;
  fail("unknown slot '" + s + "'");
}

const char* holonomy_name(foliation::Holonomy h) {
  switch (h) {
    case foliation::Holonomy::attracting: return "attracting";
    case foliation::Holonomy::repelling: return "repelling";
    case foliation::Holonomy::semistable_repelling_above: return "semistable_repelling_above";
    case foliation::Holonomy::semistable_repelling_below: return "semistable_repelling_below";
  }
  return "?";
}

foliation::Holonomy parse_holonomy(const json& j) {
  std::string h = parse_string(j, "holonomy");
  if (h == "attracting") return foliation::Holonomy::attracting;
  if (h == "repelling") return foliation::Holonomy::repelling;
  if (h == "semistable_repelling_above") return foliation::Holonomy::semistable_repelling_above;
  if (h == "semistable_repelling_below") return foliation::Holonomy::semistable_repelling_below;
  fail("unknown holonomy '" + h + "'");
}

foliation::FoliationState foliation_from_json(const json& j) {
  foliation::FoliationState s;
  std::string surface = parse_string(member(j, "surface"), "surface");
  if (surface == "sphere")
    s.surface = foliation::SurfaceKind::sphere;
  else if (surface == "disc")
    s.surface = foliation::SurfaceKind::disc;
  else
    fail("field 'surface' must be 'sphere' or 'disc'");
  for (const auto& p : member(j, "singularities")) {
    foliation::Singularity sing;
    sing.id = parse_string(member(p, "id"), "id");
    sing.sign = parse_sign(member(p, "sign"), "sign");
    sing.kind = parse_kind(member(p, "kind"));
    s.singularities.push_back(sing);
  }
  for (const auto& p : member(j, "separatrices")) {
    foliation::Separatrix sep;
    const json& from = member(p, "from");
    sep.from.sing = parse_string(member(from, "sing"), "sing");
    sep.from.slot = parse_slot(member(from, "slot"));
    sep.to = parse_string(member(p, "to"), "to");
    s.separatrices.push_back(sep);
  }
  for (const auto& p : member(j, "closed_leaves"))
    s.closed_leaves.push_back(
        {parse_string(member(p, "id"), "id"), parse_holonomy(member(p, "holonomy"))});
  if (j.contains("boundary"))
    for (const auto& b : j.at("boundary")) s.boundary.push_back(parse_string(b, "boundary"));
  return s;
}

json foliation_json(const foliation::FoliationState& s) {
  json j;
  j["surface"] = s.surface == foliation::SurfaceKind::sphere ? "sphere" : "disc";
  j["singularities"] = json::array();
  for (const auto& p : s.singularities)
    j["singularities"].push_back(
        {{"id", p.id}, {"sign", sign_number(p.sign)}, {"kind", kind_name(p.kind)}});
  j["separatrices"] = json::array();
  for (const auto& sep : s.separatrices)
    j["separatrices"].push_back(
        {{"from", {{"sing", sep.from.sing}, {"slot", slot_name(sep.from.slot)}}},
         {"to", sep.to}});
  j["closed_leaves"] = json::array();
  for (const auto& l : s.closed_leaves)
    j["closed_leaves"].push_back({{"id", l.id}, {"holonomy", holonomy_name(l.holonomy)}});
  if (!s.boundary.empty()) j["boundary"] = s.boundary;
  return j;
}

// ---- movies ----

json slotref_json(const foliation::SlotRef& r) {
  return {{"sing", r.sing}, {"slot", slot_name(r.slot)}};
}

foliation::SlotRef parse_slotref(const json& j) {
  return {parse_string(member(j, "sing"), "sing"), parse_slot(member(j, "slot"))};
}

movie::MovieEvent event_from_json(const json& j) {
  std::string kind = parse_string(member(j, "kind"), "kind");
  if (kind == "retro_crossing") {
    movie::RetroCrossing e;
    e.neg = parse_slotref(member(j, "neg"));
    e.pos = parse_slotref(member(j, "pos"));
    e.pre_target = parse_string(member(j, "pre_target"), "pre_target");
    e.post_target = parse_string(member(j, "post_target"), "post_target");
    e.pre_source = parse_string(member(j, "pre_source"), "pre_source");
    e.post_source = parse_string(member(j, "post_source"), "post_source");
    return e;
  }
  if (kind == "closed_orbit_birth") {
    movie::ClosedOrbitBirth e;
    e.semistable = parse_string(member(j, "semistable"), "semistable");
    e.semistable_holonomy = parse_holonomy(member(j, "holonomy"));
    e.attracting = parse_string(member(j, "attracting"), "attracting");
    e.repelling = parse_string(member(j, "repelling"), "repelling");
    return e;
  }
  if (kind == "closed_orbit_death") {
    movie::ClosedOrbitDeath e;
    e.attracting = parse_string(member(j, "attracting"), "attracting");
    e.repelling = parse_string(member(j, "repelling"), "repelling");
    e.semistable = parse_string(member(j, "semistable"), "semistable");
    e.semistable_holonomy = parse_holonomy(member(j, "holonomy"));
    return e;
  }
  if (kind == "pair_creation") {
    movie::PairCreation e;
    e.sign = parse_sign(member(j, "sign"), "sign");
    e.elliptic = parse_string(member(j, "elliptic"), "elliptic");
    e.hyperbolic = parse_string(member(j, "hyperbolic"), "hyperbolic");
    for (const auto& [slot, to] : member(j, "wiring").items())
      e.wiring[parse_slot(json(slot))] = parse_string(to, "wiring");
    return e;
  }
  if (kind == "pair_elimination") {
    return movie::PairElimination{parse_string(member(j, "elliptic"), "elliptic"),
                                  parse_string(member(j, "hyperbolic"), "hyperbolic")};
  }
  if (kind == "same_sign_connection") {
    movie::SameSignConnection e;
    e.slot = parse_slotref(member(j, "slot"));
    e.pre_target = parse_string(member(j, "pre_target"), "pre_target");
    e.post_target = parse_string(member(j, "post_target"), "post_target");
    return e;
  }
  fail("unknown event kind '" + kind + "'");
}

json event_json(const movie::MovieEvent& ev) {
  json j;
  if (const auto* e = std::get_if<movie::RetroCrossing>(&ev)) {
    j["kind"] = "retro_crossing";
    j["neg"] = slotref_json(e->neg);
    j["pos"] = slotref_json(e->pos);
    j["pre_target"] = e->pre_target;
    j["post_target"] = e->post_target;
    j["pre_source"] = e->pre_source;
    j["post_source"] = e->post_source;
  } else if (const auto* b = std::get_if<movie::ClosedOrbitBirth>(&ev)) {
    j["kind"] = "closed_orbit_birth";
    j["semistable"] = b->semistable;
    j["holonomy"] = holonomy_name(b->semistable_holonomy);
    j["attracting"] = b->attracting;
    j["repelling"] = b->repelling;
  } else if (const auto* d = std::get_if<movie::ClosedOrbitDeath>(&ev)) {
    j["kind"] = "closed_orbit_death";
    j["attracting"] = d->attracting;
    j["repelling"] = d->repelling;
    j["semistable"] = d->semistable;
    j["holonomy"] = holonomy_name(d->semistable_holonomy);
  } else if (const auto* p = std::get_if<movie::PairCreation>(&ev)) {
    j["kind"] = "pair_creation";
    j["sign"] = sign_number(p->sign);
    j["elliptic"] = p->elliptic;
    j["hyperbolic"] = p->hyperbolic;
    j["wiring"] = json::object();
    for (const auto& [slot, to] : p->wiring) j["wiring"][slot_name(slot)] = to;
  } else if (const auto* q = std::get_if<movie::PairElimination>(&ev)) {
    j["kind"] = "pair_elimination";
    j["elliptic"] = q->elliptic;
    j["hyperbolic"] = q->hyperbolic;
  } else {
    const auto& g = std::get<movie::SameSignConnection>(ev);
    j["kind"] = "same_sign_connection";
    j["slot"] = slotref_json(g.slot);
    j["pre_target"] = g.pre_target;
    j["post_target"] = g.post_target;
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

front::TorusFrontDiagram parse_diagram(const std::string& text) {
  json j = parse_text(text);
  front::TorusFrontDiagram d;
  if (j.contains("name")) d.name = parse_string(j.at("name"), "name");
  const json& hom = member(j, "homology");
  if (!hom.is_array() || hom.size() != 2 || !hom[0].is_number_integer() ||
      !hom[1].is_number_integer())
    fail("field 'homology' must be a pair of integers");
  d.homology = {hom[0].get<int>(), hom[1].get<int>()};
  for (const auto& e : member(j, "events")) d.events.push_back(parse_event(e));
  return d;
}

std::string serialize(const front::TorusFrontDiagram& d) {
  json j;
  if (d.name) j["name"] = *d.name;
  j["homology"] = {d.homology.a, d.homology.b};
  j["events"] = json::array();
  for (const auto& e : d.events) j["events"].push_back(event_json(e));
  return dump(j);
}

foliation::FoliationState parse_foliation(const std::string& text) {
  return foliation_from_json(parse_text(text));
}

std::string serialize(const foliation::FoliationState& s) { return dump(foliation_json(s)); }

movie::Movie parse_movie(const std::string& text) {
  json j = parse_text(text);
  movie::Movie m;
  for (const auto& s : member(j, "states")) m.states.push_back(foliation_from_json(s));
  for (const auto& e : member(j, "events")) m.events.push_back(event_from_json(e));
  return m;
}

std::string serialize(const movie::Movie& m) {
  json j;
  j["states"] = json::array();
  for (const auto& s : m.states) j["states"].push_back(foliation_json(s));
  j["events"] = json::array();
  for (const auto& e : m.events) j["events"].push_back(event_json(e));
  return dump(j);
}

movie::BifurcationGrid parse_grid(const std::string& text) {
  json j = parse_text(text);
  movie::BifurcationGrid g;
  for (const auto& row : member(j, "cells")) {
    std::vector<movie::GridCell> cells;
    for (const auto& c : row) {
      movie::GridCell cell;
      if (c.contains("wall")) {
        if (!c.at("wall").is_boolean() || !c.at("wall").get<bool>())
          fail("field 'wall' must be true");
        cell.wall = true;
      } else if (c.contains("count")) {
        if (!c.at("count").is_number_integer()) fail("field 'count' must be an integer");
        cell.count = c.at("count").get<int>();
      } else {
        fail("grid cell needs 'wall' or 'count'");
      }
      cells.push_back(cell);
    }
    g.cells.push_back(std::move(cells));
  }
  return g;
}

std::string serialize(const movie::BifurcationGrid& g) {
  json j;
  j["cells"] = json::array();
  for (const auto& row : g.cells) {
    json r = json::array();
    for (const auto& c : row) {
      if (c.wall)
        r.push_back({{"wall", true}});
      else
        r.push_back({{"count", c.count}});
    }
    j["cells"].push_back(r);
  }
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace legknot::io
