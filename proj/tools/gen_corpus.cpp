// Regenerates the corpus/ fixtures from the library's own constructions, so
// that every file is in the canonical serialized form.
#include <iostream>
#include <string>

#include "legknot/foliation_graph.hpp"
#include "legknot/front_diagram.hpp"
#include "legknot/io.hpp"
#include "legknot/movie.hpp"

using namespace legknot;
using foliation::FoliationState;
using foliation::Sign;
using foliation::SingKind;
using foliation::Slot;

namespace {

FoliationState minimal_nonloose_sphere() {
  FoliationState s;
  s.singularities = {
      {"ep_f", Sign::positive, SingKind::elliptic}, {"ep_b", Sign::positive, SingKind::elliptic},
      {"en_f", Sign::negative, SingKind::elliptic}, {"en_b", Sign::negative, SingKind::elliptic},
      {"hp", Sign::positive, SingKind::hyperbolic}, {"hm", Sign::negative, SingKind::hyperbolic}};
  s.separatrices = {{{"hm", Slot::stable1}, "ep_f"}, {{"hm", Slot::stable2}, "ep_b"},
                    {{"hm", Slot::unstable1}, "hp"}, {{"hm", Slot::unstable2}, "hp"},
                    {{"hp", Slot::stable1}, "hm"},   {{"hp", Slot::stable2}, "hm"},
                    {{"hp", Slot::unstable1}, "en_f"}, {{"hp", Slot::unstable2}, "en_b"}};
  return s;
}

FoliationState two_elliptic_sphere() {
  FoliationState s;
  s.singularities = {{"ep", Sign::positive, SingKind::elliptic},
                     {"en", Sign::negative, SingKind::elliptic}};
  return s;
}

FoliationState resolution_cycle() {
  FoliationState s;
  s.singularities = {{"ep1", Sign::positive, SingKind::elliptic},
                     {"ep2", Sign::positive, SingKind::elliptic},
                     {"en", Sign::negative, SingKind::elliptic},
                     {"hm", Sign::negative, SingKind::hyperbolic}};
  s.separatrices = {{{"hm", Slot::stable1}, "ep1"},
                    {{"hm", Slot::stable2}, "ep2"},
                    {{"hm", Slot::unstable1}, "en"},
                    {{"hm", Slot::unstable2}, "en"}};
  return s;
}

// The three-connection configuration: connections Hm1-Hp1, Hm1-Hp2, Hm2-Hp2
// over a spanning-tree background.
FoliationState triple_config() {
  FoliationState s;
  for (int i = 1; i <= 3; i++) {
    s.singularities.push_back({"P" + std::to_string(i), Sign::positive, SingKind::elliptic});
    s.singularities.push_back({"N" + std::to_string(i), Sign::negative, SingKind::elliptic});
  }
  s.singularities.push_back({"Hp1", Sign::positive, SingKind::hyperbolic});
  s.singularities.push_back({"Hp2", Sign::positive, SingKind::hyperbolic});
  s.singularities.push_back({"Hm1", Sign::negative, SingKind::hyperbolic});
  s.singularities.push_back({"Hm2", Sign::negative, SingKind::hyperbolic});
  s.separatrices = {{{"Hm1", Slot::stable1}, "P1"},   {{"Hm1", Slot::stable2}, "P2"},
                    {{"Hm1", Slot::unstable1}, "Hp1"}, {{"Hm1", Slot::unstable2}, "Hp2"},
                    {{"Hm2", Slot::stable1}, "P3"},   {{"Hm2", Slot::stable2}, "P2"},
                    {{"Hm2", Slot::unstable1}, "Hp2"}, {{"Hm2", Slot::unstable2}, "N1"},
                    {{"Hp1", Slot::stable1}, "Hm1"},  {{"Hp1", Slot::stable2}, "P3"},
                    {{"Hp1", Slot::unstable1}, "N1"}, {{"Hp1", Slot::unstable2}, "N3"},
                    {{"Hp2", Slot::stable1}, "Hm2"},  {{"Hp2", Slot::stable2}, "Hm1"},
                    {{"Hp2", Slot::unstable1}, "N2"}, {{"Hp2", Slot::unstable2}, "N3"}};
  return s;
}

// The triple configuration with the Hm1-Hp1 connection already resolved to
// its near side, leaving the other two connections simultaneous.
FoliationState nested_double() {
  FoliationState s = triple_config();
  for (auto& sep : s.separatrices) {
    if (sep.from == foliation::SlotRef{"Hm1", Slot::unstable1}) sep.to = "N1";
    if (sep.from == foliation::SlotRef{"Hp1", Slot::stable1}) sep.to = "P1";
  }
  return s;
}

void rewire(FoliationState& s, const foliation::SlotRef& at, const std::string& to) {
  for (auto& sep : s.separatrices)
    if (sep.from == at) sep.to = to;
}

// Five parallel spheres passing through the minimal non-loose configuration:
// both connections form one after the other, then break to the far sides.
movie::Movie simultaneous_movie() {
  FoliationState s0 = minimal_nonloose_sphere();
  rewire(s0, {"hm", Slot::unstable1}, "en_f");
  rewire(s0, {"hm", Slot::unstable2}, "en_b");
  rewire(s0, {"hp", Slot::stable1}, "ep_f");
  rewire(s0, {"hp", Slot::stable2}, "ep_b");

  movie::Movie m;
  m.states.push_back(s0);
  m.events = {
      movie::RetroCrossing{{"hm", Slot::unstable1}, {"hp", Slot::stable1}, "en_f", "hp", "ep_f",
                           "hm"},
      movie::RetroCrossing{{"hm", Slot::unstable2}, {"hp", Slot::stable2}, "en_b", "hp", "ep_b",
                           "hm"},
      movie::RetroCrossing{{"hm", Slot::unstable1}, {"hp", Slot::stable1}, "hp", "en_b", "hm",
                           "ep_b"},
      movie::RetroCrossing{{"hm", Slot::unstable2}, {"hp", Slot::stable2}, "hp", "en_f", "hm",
                           "ep_f"},
  };
  for (const auto& e : m.events) m.states.push_back(movie::apply_event(m.states.back(), e));
  return m;
}

// A tight two-sphere movie: one same-sign separatrix slide over the fully
// resolved triple background, tree to tree.
movie::Movie same_sign_movie() {
  FoliationState s0 = triple_config();
  rewire(s0, {"Hm1", Slot::unstable1}, "N1");
  rewire(s0, {"Hm1", Slot::unstable2}, "N3");
  rewire(s0, {"Hm2", Slot::unstable1}, "N2");
  rewire(s0, {"Hp1", Slot::stable1}, "P1");
  rewire(s0, {"Hp2", Slot::stable1}, "P3");
  rewire(s0, {"Hp2", Slot::stable2}, "P2");
  movie::Movie m;
  m.states.push_back(s0);
  m.events = {movie::SameSignConnection{{"Hm2", Slot::unstable2}, "N1", "N3"}};
  m.states.push_back(movie::apply_event(s0, m.events[0]));
  return m;
}

movie::BifurcationGrid forbidden_grid() {
  // Two wall curves crossing transversally at row 2, col 3; the region they
  // trap carries two dividing curves, the outside one.
  movie::BifurcationGrid g;
  int wall_a[5] = {1, 2, 3, 4, 5};
  int wall_b[5] = {5, 4, 3, 2, 1};
  for (int r = 0; r < 5; r++) {
    std::vector<movie::GridCell> row(7);
    int lo = std::min(wall_a[r], wall_b[r]);
    int hi = std::max(wall_a[r], wall_b[r]);
    for (int c = 0; c < 7; c++) {
      if (c == wall_a[r] || c == wall_b[r])
        row[c] = {true, 0};
      else
        row[c] = {false, c > lo && c < hi ? 2 : 1};
    }
    g.cells.push_back(row);
  }
  return g;
}

std::string dir;

void put(const std::string& name, const std::string& content) {
  io::write_file(dir + "/" + name, content);
  std::cout << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  dir = argc > 1 ? argv[1] : "corpus";

  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 3}, {5, 1}, {-1, -4}}) {
    std::string name = "k" + std::string(m < 0 ? "m" : "") + std::to_string(std::abs(m)) +
                       (n < 0 ? "m" : "") + std::to_string(std::abs(n)) + ".json";
    put(name, io::serialize(front::linear_unknot(m, n)));
  }

  put("minimal_nonloose_sphere.json", io::serialize(minimal_nonloose_sphere()));
  put("two_elliptic_sphere.json", io::serialize(two_elliptic_sphere()));
  put("resolution_cycle.json", io::serialize(resolution_cycle()));
  put("triple.json", io::serialize(triple_config()));
  put("forbidden_grid.json", io::serialize(forbidden_grid()));

  auto doubles = movie::enumerate_double_resolutions(minimal_nonloose_sphere());
  put("movie_double_ab.json", io::serialize(doubles[0].movie));
  put("movie_double_ba.json", io::serialize(doubles[1].movie));

  auto triples = movie::enumerate_triple_resolutions(triple_config());
  for (const auto& t : triples.schedules) {
    std::string name = "movie_triple_";
    name += static_cast<char>('a' + t.lone);
    name += t.double_first ? "_double_first" : "_single_first";
    put(name + ".json", io::serialize(t.movie));
  }

  put("movie_simultaneous.json", io::serialize(simultaneous_movie()));
  put("movie_same_sign.json", io::serialize(same_sign_movie()));

  auto nested = movie::enumerate_double_resolutions(nested_double());
  put("movie_nested_ab.json", io::serialize(nested[0].movie));
  put("movie_nested_ba.json", io::serialize(nested[1].movie));
  return 0;
}
