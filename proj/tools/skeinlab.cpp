// skeinlab: exact computations on SL2 character varieties of punctured
// surfaces. One binary, one subcommand group per subsystem; all file I/O is
// the canonical JSON of the exact kernel.
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "skeinlab/coordmap.hpp"
#include "skeinlab/fiber.hpp"
#include "skeinlab/json_io.hpp"
#include "skeinlab/lamination.hpp"
#include "skeinlab/verify.hpp"

namespace {

using namespace skeinlab;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void emit(const json& j) { std::cout << dump_canonical(j) << "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

CoordMap named_map(const std::string& token) {
  if (token == "R" || token == "T" || token == "U") return mcg_generator(token[0]);
  if (token == "X" || token == "Y" || token == "Z")
    return vieta(static_cast<char>(std::tolower(token[0])));
  throw CLI::ValidationError("--gens", "unknown generator '" + token +
                                           "' (use R,T,U or X,Y,Z)");
}

SignVector parse_eps(const std::string& s) {
  SignVector eps;
  for (const std::string& part : split(s, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos || colon != 1)
      throw CLI::ValidationError("--eps", "expected g:+1 entries");
    int gen = part[0] - 'a' + 1;
    std::string v = part.substr(colon + 1);
    if (v != "+1" && v != "-1" && v != "1")
      throw CLI::ValidationError("--eps", "signs are +1 or -1");
    eps.values[gen] = (v == "-1") ? -1 : 1;
  }
  return eps;
}

std::vector<int> parse_sign_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& part : split(s, ',')) {
    if (part == "+1" || part == "1")
      out.push_back(1);
    else if (part == "-1")
      out.push_back(-1);
    else
      throw CLI::ValidationError("--a", "signs are +1 or -1");
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact SL2 character variety toolkit"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  int scale = 1;
  bool as_json = false;
  app.add_option("--seed", seed, "seed for randomized batteries")
      ->envname("SKEINLAB_SEED");
  app.add_option("--scale", scale, "sample-count multiplier")->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "emit machine-readable JSON reports");

  // ---- skein ----
  auto* skein = app.add_subcommand("skein", "character algebra operations");
  skein->require_subcommand(1);

  std::string surface = "1,1", word_s, poly_path, rep_path, traces_s;

  auto* reduce = skein->add_subcommand("reduce", "trace word -> polynomial normal form");
  reduce->add_option("--surface", surface, "g,n (rank-2 surface)");
  reduce->add_option("--word", word_s, "word, e.g. abAB")->required();
  reduce->callback([&] {
    SurfaceSig sig = parse_surface(surface);
    emit(to_json(trace_reduce(sig, parse_word(word_s, sig.rank()))));
  });

  auto* eval = skein->add_subcommand("eval", "trace of a word under a matrix rep");
  eval->add_option("--rep", rep_path, "representation JSON file")->required();
  eval->add_option("--word", word_s, "word")->required();
  eval->callback([&] {
    AnyRep rep = rep_from_json(load_json(rep_path));
    std::visit(
        [&](const auto& r) {
          emit(to_json(evaluate_trace(r, parse_word(word_s, r.sig.rank()))));
        },
        rep);
  });

  auto* decompose = skein->add_subcommand("decompose", "multicurve-basis expansion");
  decompose->add_option("--poly", poly_path, "polynomial JSON file")->required();
  decompose->callback([&] {
    emit(to_json(multicurve_decompose(multipoly_from_json(load_json(poly_path)))));
  });

  auto* fiber_cmd = skein->add_subcommand("fiber", "fit relative fiber coefficients");
  fiber_cmd->add_option("--traces", traces_s, "p1,p2,p3,p4")->required();
  fiber_cmd->callback([&] {
    auto parts = split(traces_s, ',');
    if (parts.size() != 4)
      throw CLI::ValidationError("--traces", "expected four boundary traces");
    std::array<Rat, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = Rat::parse(parts[i]);
    Rng rng(seed);
    FiberCoefficients fc = fiber_coefficients(p, rng);
    emit(json{{"A", fc.A.str()},
              {"B", fc.B.str()},
              {"C", fc.C.str()},
              {"D", fc.D.str()},
              {"xyz_sign", fc.xyz_sign}});
  });

  // ---- act ----
  auto* act = app.add_subcommand("act", "relative automorphism actions");
  act->require_subcommand(1);
  std::string gens_s, eps_s;
  bool act_all = false;

  auto* apply = act->add_subcommand("apply", "apply generators to a polynomial");
  apply->add_option("--surface", surface, "g,n");
  apply->add_option("--gens", gens_s, "comma list, applied left to right (R,T,U,X,Y,Z)")
      ->required();
  apply->add_option("--poly", poly_path, "polynomial JSON file")->required();
  apply->callback([&] {
    MultiPoly f = multipoly_from_json(load_json(poly_path));
    for (const std::string& tok : split(gens_s, ',')) f = named_map(tok).apply(f);
    emit(to_json(f));
  });

  auto* verify_act = act->add_subcommand("verify", "run the automorphism battery");
  verify_act->add_option("--surface", surface, "1,1 or 0,4");
  verify_act->add_flag("--all", act_all, "run the full battery");
  verify_act->callback([&] {
    SurfaceSig sig = parse_surface(surface);
    CriterionResult r = (sig == SurfaceSig{0, 4}) ? criterion_fibers(seed, scale)
                                                  : criterion_relative_battery(seed, scale);
    RunReport report;
    report.suite = "actions";
    report.seed = seed;
    report.scale = scale;
    report.cases = r.cases;
    report.results.push_back(std::move(r));
    std::cout << (as_json ? report_json(report) + "\n" : report_text(report));
    if (!report.ok()) throw CLI::RuntimeError(1);
  });

  auto* conj = act->add_subcommand("conj-sign", "conjugate a sign action through generators");
  conj->add_option("--gens", gens_s, "comma list of generator names")->required();
  conj->add_option("--eps", eps_s, "sign vector, e.g. a:-1,b:+1")->required();
  conj->callback([&] {
    CoordMap g = identity_map(kTraceVars);
    for (const std::string& tok : split(gens_s, ',')) g = compose(g, named_map(tok));
    SignVector eps = parse_eps(eps_s);
    emit(json{{"eps", conjugate_sign(g, eps, SurfaceSig{1, 1}).str()}});
  });

  // ---- lam ----
  auto* lam = app.add_subcommand("lam", "measured laminations and valuations");
  lam->require_subcommand(1);
  std::string lam_s, slope_s;
  long height = 3, ball = 3;
  int samples = 100;

  auto* valuate_cmd = lam->add_subcommand("valuate", "valuation of a polynomial");
  valuate_cmd->add_option("--lam", lam_s, "lamination, e.g. 0/1:1[,boundary:w]")->required();
  valuate_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();
  valuate_cmd->callback([&] {
    auto v = valuate(parse_lamination(lam_s), multipoly_from_json(load_json(poly_path)));
    emit(json{{"value", v ? json(v->str()) : json("-inf")}});
  });

  auto* dominate_cmd = lam->add_subcommand("dominate", "fit a dominating weighted slope");
  dominate_cmd->add_option("--rep", rep_path, "Laurent representation JSON")->required();
  dominate_cmd->add_option("--height", height, "slope net height");
  dominate_cmd->add_option("--samples", samples, "random inequality samples");
  dominate_cmd->callback([&] {
    LaurentRep rep = laurent_rep_from_json(load_json(rep_path));
    Rng rng(seed);
    DominationReport r = dominate(rep, height, samples, rng);
    emit(json{{"fitted", r.fitted},
              {"height", r.height},
              {"inequality_checked", r.inequality_checked},
              {"kernel_skips", r.kernel_skips},
              {"lamination", r.fitted ? json(r.lamination.str()) : json(nullptr)},
              {"note", r.note},
              {"slopes", r.slope_values}});
  });

  auto* farey = lam->add_subcommand("farey", "Farey neighbours of a slope");
  farey->add_option("--slope", slope_s, "slope p/q")->required();
  farey->add_option("--ball", ball, "height bound for listed neighbours");
  farey->callback([&] {
    Slope s = parse_slope(slope_s);
    json neighbours = json::array();
    for (const Slope& u : slopes_up_to_height(ball))
      if (farey_adjacent(s, u, SurfaceSig{1, 1})) neighbours.push_back(u.str());
    emit(json{{"height", ball}, {"neighbours", neighbours}, {"slope", s.str()}});
  });

  // ---- sphere ----
  auto* sphere = app.add_subcommand("sphere", "points-on-sphere moduli");
  sphere->require_subcommand(1);
  std::string config_path, braid_word, signs_s;
  int n_punct = 1;

  auto* from_rep = sphere->add_subcommand("from-rep", "tuple -> normalized configuration");
  from_rep->add_option("--rep", rep_path, "representation JSON (gauss or rat ring)")->required();
  from_rep->callback([&] {
    AnyRep any = rep_from_json(load_json(rep_path));
    std::vector<SpherePoint> tuple;
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r.images.begin()->second.a)>;
          for (int g = 1; g <= r.sig.rank(); ++g) {
            auto it = r.images.find(g);
            if (it == r.images.end())
              throw std::runtime_error("from-rep: missing generator image");
            if constexpr (std::is_same_v<R, GaussRat>)
              tuple.push_back(it->second);
            else if constexpr (std::is_same_v<R, Rat>)
              tuple.push_back(Mat2<GaussRat>{GaussRat(it->second.a), GaussRat(it->second.b),
                                             GaussRat(it->second.c), GaussRat(it->second.d)});
            else
              throw std::runtime_error("from-rep: need a rat or gauss representation");
          }
        },
        any);
    emit(to_json(rep_to_sphere(tuple)));
  });

  auto* braid = sphere->add_subcommand("braid", "apply braid generators");
  braid->add_option("--config", config_path, "configuration JSON")->required();
  braid->add_option("--word", braid_word, "comma list of generator indices")->required();
  braid->callback([&] {
    SphereConfig c = sphere_config_from_json(load_json(config_path));
    for (const std::string& tok : split(braid_word, ','))
      c = braid_act(c, std::stoi(tok));
    emit(to_json(c));
  });

  auto* coxeter = sphere->add_subcommand("coxeter", "Coxeter invariant (char poly)");
  coxeter->add_option("--config", config_path, "configuration JSON")->required();
  coxeter->callback([&] {
    auto inv = coxeter_invariant(sphere_config_from_json(load_json(config_path)));
    json coeffs = json::array();
    for (const auto& c : inv) coeffs.push_back(c.str());
    emit(json{{"charpoly", coeffs}});
  });

  auto* boundary = sphere->add_subcommand("boundary", "boundary monodromy traces");
  boundary->add_option("--rep", rep_path, "representation JSON")->required();
  boundary->add_option("--n", n_punct, "number of punctures (1 or 2)")->required();
  boundary->callback([&] {
    AnyRep any = rep_from_json(load_json(rep_path));
    json traces = json::array();
    std::visit(
        [&](const auto& r) {
          using M = std::decay_t<decltype(r.images.begin()->second)>;
          std::vector<M> tuple;
          for (int g = 1; g <= r.sig.rank(); ++g) tuple.push_back(r.images.at(g));
          for (const auto& t : boundary_monodromy(tuple, n_punct))
            traces.push_back(to_json(t));
        },
        any);
    emit(json{{"traces", traces}});
  });

  auto* signs_cmd = sphere->add_subcommand("signs", "central sign pattern and preservation");
  signs_cmd->add_option("--a", signs_s, "sign vector a_1,...,a_{r-1}")->required();
  signs_cmd->add_option("--n", n_punct, "number of punctures (1 or 2)")->required();
  signs_cmd->callback([&] {
    std::vector<int> a = parse_sign_list(signs_s);
    emit(json{{"boundary_preserved", boundary_preserved_by_signs(a, n_punct)},
              {"pattern", central_to_sphere(a)}});
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run property/acceptance suites");
  std::string suite;
  verify->add_option("suite", suite, "one of: skein-oracle, valuation-axioms, domination, "
                                     "braid, coxeter, signs, actions, all")
      ->required();
  verify->callback([&] {
    RunReport report;
    try {
      report = run_suite(suite, seed, scale);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      throw CLI::RuntimeError(2);
    }
    std::cout << (as_json ? report_json(report) + "\n" : report_text(report));
    if (!report.ok()) throw CLI::RuntimeError(1);
  });

  // Let --seed/--scale/--json appear after any subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
  };
  for (CLI::App* sub : app.get_subcommands({})) allow_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error contract
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
