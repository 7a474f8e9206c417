#include "legknot/cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "legknot/classification.hpp"
#include "legknot/foliation_graph.hpp"
#include "legknot/front_diagram.hpp"
#include "legknot/homotopy.hpp"
#include "legknot/io.hpp"
#include "legknot/moves.hpp"
#include "legknot/movie.hpp"

namespace legknot::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kDomain = 3;
constexpr int kUndetermined = 4;

struct CliError {
  int code;
  std::string message;
};

classify::ContactStructure parse_structure(const std::string& s) {
  if (s == "tight") return classify::ContactStructure::tight();
  if (s.rfind("ot:", 0) == 0) {
    try {
      return classify::ContactStructure::xi(std::stoi(s.substr(3)));
    } catch (const std::exception&) {
      throw CliError{kParse, "bad Hopf invariant in --structure"};
    }
  }
  throw CliError{kParse, "--structure must be 'tight' or 'ot:<hopf>'"};
}

front::Sign parse_sign(int s) {
  if (s == 1) return front::Sign::positive;
  if (s == -1) return front::Sign::negative;
  throw CliError{kParse, "--sign must be 1 or -1"};
}

std::string connection_label(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(std::ostream& out, const Options& opt, const ordered_json& j, const std::string& text) {
  if (opt.json())
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

int cmd_invariants(const std::string& path, const Options& opt, std::ostream& out) {
  auto d = io::parse_diagram(io::read_file(path));
  front::require_valid(d);
  int tb = front::thurston_bennequin(d);
  int rot = front::rotation_number(d);
  int sl = front::self_linking(d);
  std::ostringstream text;
  text << "tb=" << tb << " rot=" << rot << " sl=" << sl;
  emit(out, opt, {{"tb", tb}, {"rot", rot}, {"sl", sl}}, text.str());
  return kOk;
}

int cmd_move(const std::string& path, const std::string& op, int sign, std::size_t position,
             const std::string& component, int direction, bool remove,
             const std::optional<std::string>& out_path, std::ostream& out) {
  auto d = io::parse_diagram(io::read_file(path));
  front::TorusFrontDiagram result;
  if (op == "stabilize") {
    result = moves::stabilize(d, parse_sign(sign), position);
  } else if (op == "destabilize") {
    result = moves::destabilize(d, parse_sign(sign));
  } else if (op == "hopf_pass") {
    moves::HopfComponent c;
    if (component == "z0")
      c = moves::HopfComponent::z0;
    else if (component == "z1")
      c = moves::HopfComponent::z1;
    else
      throw CliError{kParse, "--component must be z0 or z1"};
    result = moves::hopf_pass(d, c, direction);
  } else if (op == "r1" || op == "r2" || op == "r3") {
    moves::ReidemeisterKind kind = op == "r1"   ? moves::ReidemeisterKind::r1
                                   : op == "r2" ? moves::ReidemeisterKind::r2
                                                : moves::ReidemeisterKind::r3;
    result = moves::reidemeister(d, kind, {position, !remove, parse_sign(sign)});
  } else {
    throw CliError{kParse, "unknown --op " + op};
  }
  std::string text = io::serialize(result);
  if (out_path)
    io::write_file(*out_path, text);
  else
    out << text;
  return kOk;
}

int cmd_classify(const std::string& structure, int tb, int rot, bool transverse, int sl,
                 const Options& opt, std::ostream& out, std::ostream& err) {
  auto xi = parse_structure(structure);
  if (transverse) {
    int n = classify::transverse_unknot_classes(sl, xi);
    if (n == 0) {
      err << "not realizable\n";
      return kDomain;
    }
    emit(out, opt, {{"transverse", n}}, "transverse: " + std::to_string(n));
    return kOk;
  }
  auto classes = classify::classify_unknots(tb, rot, xi);
  if (classes.empty()) {
    err << "not realizable\n";
    return kDomain;
  }
  int loose = 0, nonloose = 0;
  ordered_json jc = ordered_json::array();
  for (const auto& c : classes) {
    (c.loose ? loose : nonloose)++;
    jc.push_back({{"label", c.label}, {"loose", c.loose}});
  }
  std::ostringstream text;
  text << "nonloose: " << nonloose << ", loose: " << loose;
  emit(out, opt, {{"nonloose", nonloose}, {"loose", loose}, {"classes", jc}}, text.str());
  return kOk;
}

int cmd_foliation_check(const std::string& path, const Options& opt, std::ostream& out) {
  auto s = io::parse_foliation(io::read_file(path));
  auto report = foliation::validate_state(s);
  if (opt.json()) {
    out << ordered_json({{"valid", report.ok()}, {"violations", report.violations}}).dump(2)
        << "\n";
  } else if (report.ok()) {
    out << "valid\n";
  } else {
    for (const auto& v : report.violations) out << v << "\n";
  }
  return report.ok() ? kOk : kDomain;
}

int cmd_foliation_nonloose(const std::string& path, const Options& opt, std::ostream& out) {
  auto s = io::parse_foliation(io::read_file(path));
  foliation::require_valid(s);
  auto w = foliation::detect_nonloose_unknot(s);
  if (opt.json()) {
    ordered_json j{{"detected", w.has_value()}};
    if (w) {
      j["negative_path"] = w->negative_path;
      j["positive_path"] = w->positive_path;
    }
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "non-loose unknot detected\n";
  } else {
    out << "none\n";
  }
  return kOk;
}

int cmd_movie_verdict(const std::string& path, const Options& opt, std::ostream& out) {
  auto m = io::parse_movie(io::read_file(path));
  movie::require_valid(m);
  auto v = movie::tight_verdict(m);
  std::string text;
  ordered_json j;
  switch (v.kind) {
    case movie::TightVerdict::Kind::tight:
      text = "tight";
      j = {{"verdict", "tight"}};
      break;
    case movie::TightVerdict::Kind::overtwisted:
      text = "overtwisted at state " + std::to_string(*v.witness_index);
      j = {{"verdict", "overtwisted"}, {"witness", *v.witness_index}};
      break;
    case movie::TightVerdict::Kind::undetermined:
      text = "undetermined";
      j = {{"verdict", "undetermined"}};
      break;
  }
  emit(out, opt, j, text);
  return v.kind == movie::TightVerdict::Kind::undetermined ? kUndetermined : kOk;
}

std::string verdict_word(const movie::TightVerdict& v) {
  switch (v.kind) {
    case movie::TightVerdict::Kind::tight: return "tight";
    case movie::TightVerdict::Kind::overtwisted: return "overtwisted";
    default: return "undetermined";
  }
}

int cmd_movie_resolutions(const std::string& path, bool triple, const Options& opt,
                          std::ostream& out) {
  auto text = io::read_file(path);
  // A bare foliation state or a movie file both work: for a movie, the first
  // marked state is resolved.
  foliation::FoliationState state;
  try {
    state = io::parse_foliation(text);
  } catch (const io::ParseError&) {
    auto m = io::parse_movie(text);
    auto marks = m.simultaneous_marks();
    if (marks.empty()) throw movie::MovieError("movie has no simultaneous state to resolve");
    state = m.states[marks.front()];
  }
  if (triple) {
    auto r = movie::enumerate_triple_resolutions(state);
    int in_gen = 0;
    for (const auto& s : r.schedules) in_gen += s.in_l_gen;
    std::ostringstream head;
    head << in_gen << " of " << r.schedules.size() << " schedules in L_gen";
    if (opt.json()) {
      ordered_json js = ordered_json::array();
      for (const auto& s : r.schedules)
        js.push_back({{"lone", connection_label(s.lone)},
                      {"double_first", s.double_first},
                      {"in_l_gen", s.in_l_gen}});
      out << ordered_json{{"in_l_gen", in_gen},
                          {"schedules", js},
                          {"smooth_point", r.smooth_point}}
                 .dump(2)
          << "\n";
    } else {
      out << head.str() << "\n";
      for (const auto& s : r.schedules)
        out << "lone " << connection_label(s.lone) << " "
            << (s.double_first ? "double-first" : "single-first") << ": "
            << (s.in_l_gen ? "in L_gen" : "excluded") << "\n";
    }
    return kOk;
  }
  auto rs = movie::enumerate_double_resolutions(state);
  if (opt.json()) {
    ordered_json js = ordered_json::array();
    for (const auto& r : rs)
      js.push_back({{"ordering", r.ordering}, {"verdict", verdict_word(r.verdict)}});
    out << ordered_json{{"resolutions", js}}.dump(2) << "\n";
  } else {
    for (const auto& r : rs) out << r.ordering << ": " << verdict_word(r.verdict) << "\n";
  }
  return kOk;
}

int cmd_grid_check(const std::string& path, const Options& opt, std::ostream& out) {
  auto g = io::parse_grid(io::read_file(path));
  bool forbidden = movie::check_giroux_forbidden(g);
  emit(out, opt, {{"forbidden", forbidden}}, forbidden ? "forbidden" : "allowed");
  return kOk;
}

int cmd_arf(int genus, const std::string& values, const Options& opt, std::ostream& out) {
  std::vector<int> vals;
  std::stringstream ss(values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CliError{kParse, "--values must be a comma-separated 0/1 list"};
    }
  }
  int a = homotopy::arf_invariant({genus, vals});
  emit(out, opt, {{"arf", a}}, std::to_string(a));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian unknot toolkit"};
  app.require_subcommand(1);
  Options opt;

  std::string diagram_path, op = "stabilize", component = "z1", structure = "tight";
  std::string values;
  std::optional<std::string> out_path;
  int sign = 1, direction = 1, tb = 0, rot = 0, sl = -1, hopf_h = 0, hopf_sl = -1, fibers_k = 0;
  int genus = 0;
  std::size_t position = 0;
  bool remove = false, transverse = false, triple = false;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  };

  auto* inv = app.add_subcommand("invariants", "tb, rot and sl of a front diagram");
  inv->add_option("diagram", diagram_path)->required();
  add_format(inv);

  auto* mv = app.add_subcommand("move", "apply a move and print the rewritten diagram");
  mv->add_option("diagram", diagram_path)->required();
  mv->add_option("--op", op)->required();
  mv->add_option("--sign", sign);
  mv->add_option("--position", position);
  mv->add_option("--component", component);
  mv->add_option("--direction", direction);
  mv->add_flag("--remove", remove);
  mv->add_option("--out", out_path);

  auto* cl = app.add_subcommand("classify", "coarse classification for (structure, tb, rot)");
  cl->add_option("--structure", structure)->required();
  cl->add_option("--tb", tb);
  cl->add_option("--rot", rot);
  cl->add_flag("--transverse", transverse);
  cl->add_option("--sl", sl);
  add_format(cl);

  auto* fol = app.add_subcommand("foliation", "characteristic foliation graphs");
  fol->require_subcommand(1);
  auto* fol_check = fol->add_subcommand("check", "validate a foliation state");
  fol_check->add_option("file", diagram_path)->required();
  add_format(fol_check);
  auto* fol_nl = fol->add_subcommand("nonloose", "run the non-loose unknot detector");
  fol_nl->add_option("file", diagram_path)->required();
  add_format(fol_nl);

  auto* mov = app.add_subcommand("movie", "sphere movies");
  mov->require_subcommand(1);
  auto* mov_v = mov->add_subcommand("verdict", "tight / overtwisted / undetermined");
  mov_v->add_option("file", diagram_path)->required();
  add_format(mov_v);
  auto* mov_r = mov->add_subcommand("resolutions", "resolve simultaneous connections");
  mov_r->add_option("file", diagram_path)->required();
  mov_r->add_flag("--triple", triple);
  add_format(mov_r);

  auto* grid = app.add_subcommand("grid", "bifurcation grids");
  grid->require_subcommand(1);
  auto* grid_check = grid->add_subcommand("check", "flag the Giroux forbidden configuration");
  grid_check->add_option("file", diagram_path)->required();
  add_format(grid_check);

  auto* hopf = app.add_subcommand("hopf", "Hopf invariant bookkeeping");
  hopf->require_subcommand(1);
  auto* hopf_f = hopf->add_subcommand("fibers", "invariant after twisting along k fibers");
  hopf_f->add_option("--k", fibers_k)->required();
  add_format(hopf_f);
  auto* hopf_l = hopf->add_subcommand("lutz", "invariant after a pi-Lutz twist");
  hopf_l->set_help_flag("--help", "print help");  // frees -h for the Hopf invariant
  hopf_l->add_option("--h", hopf_h)->required();
  hopf_l->add_option("--sl", hopf_sl)->required();
  add_format(hopf_l);

  auto* arf = app.add_subcommand("arf", "Arf invariant of a quadratic form");
  arf->add_option("--genus", genus)->required();
  arf->add_option("--values", values);
  add_format(arf);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  }

  try {
    if (inv->parsed()) return cmd_invariants(diagram_path, opt, out);
    if (mv->parsed())
      return cmd_move(diagram_path, op, sign, position, component, direction, remove, out_path,
                      out);
    if (cl->parsed()) return cmd_classify(structure, tb, rot, transverse, sl, opt, out, err);
    if (fol_check->parsed()) return cmd_foliation_check(diagram_path, opt, out);
    if (fol_nl->parsed()) return cmd_foliation_nonloose(diagram_path, opt, out);
    if (mov_v->parsed()) return cmd_movie_verdict(diagram_path, opt, out);
    if (mov_r->parsed()) return cmd_movie_resolutions(diagram_path, triple, opt, out);
    if (grid_check->parsed()) return cmd_grid_check(diagram_path, opt, out);
    if (hopf_f->parsed()) {
      emit(out, opt, {{"hopf", homotopy::hopf_fibers(fibers_k)}},
           std::to_string(homotopy::hopf_fibers(fibers_k)));
      return kOk;
    }
    if (hopf_l->parsed()) {
      int h = homotopy::hopf_after_pi_lutz(hopf_h, hopf_sl);
      emit(out, opt, {{"hopf", h}}, std::to_string(h));
      return kOk;
    }
    if (arf->parsed()) return cmd_arf(genus, values, opt, out);
  } catch (const CliError& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  } catch (const std::runtime_error& e) {
    // Domain errors from any module: DiagramError, MoveError, ClassifyError,
    // FoliationError, MovieError, HomotopyError.
    err << e.what() << "\n";
    return kDomain;
  }
  err << "no subcommand\n";
  return kParse;
}

}  // namespace legknot::cli
