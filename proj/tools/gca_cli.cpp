#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gca/classify.hpp"
#include "gca/errors.hpp"
#include "gca/fixture_gen.hpp"
#include "gca/graph.hpp"
#include "gca/json_io.hpp"
#include "gca/primtop.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw gca::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const gca::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive ideal space analysis of graph algebras"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string set_text;
  std::string format = "json";
  int bound = gca::kDefaultBound;
  bool fail_on_false = false;
  app.add_option("--input", input, "graph DSL file path, or - for stdin");
  app.add_option("--max-vertices", bound, "enumeration bound (default 16)");
  app.add_flag("--fail-on-false", fail_on_false, "exit 3 when the main verdict is false");
  app.add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

  auto* cmd_tails = app.add_subcommand("tails", "maximal tails with classification");
  auto* cmd_ideals = app.add_subcommand("ideals", "gauge-invariant ideal lattice");
  auto* cmd_prim = app.add_subcommand("prim", "the full primitive ideal space");
  auto* cmd_closure = app.add_subcommand("closure", "closure of a symbolic subset");
  cmd_closure->add_option("--set", set_text, "prim subset as JSON")->required();
  auto* cmd_t1 = app.add_subcommand("t1", "T1 verdict with witnesses");
  auto* cmd_clopen = app.add_subcommand("clopen", "clopen report per tail");
  auto* cmd_decompose = app.add_subcommand("decompose", "Kirchberg decomposition");
  auto* cmd_af = app.add_subcommand("af-quotient", "AF quotient (row-finite)");
  auto* cmd_piaf = app.add_subcommand("pi-af", "purely infinite ideal + AF quotient");
  auto* cmd_cn = app.add_subcommand("cn", "fiber structure over N with a point at infinity");
  auto* cmd_gen = app.add_subcommand("gen-fixture", "generate a staircase fixture from a JSON spec");
  auto* cmd_dot = app.add_subcommand("export-dot", "DOT rendering");
  bool dot_tails = false;
  cmd_dot->add_flag("--color-tails", dot_tails, "color vertices by tail membership count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gen->parsed()) {
      gca::json spec_json = gca::json::parse(read_input(input));
      gca::Graph g = gca::gen_fixture(gca::ExmClassSpec::from_json(spec_json), bound);
      if (format == "json")
        emit(gca::graph_json(g));
      else
        std::cout << g.render();
      return 0;
    }

    gca::Graph g = gca::Graph::parse(read_input(input));

    if (cmd_tails->parsed()) {
      gca::json j = gca::json::array();
      for (const auto& t : gca::maximal_tails(g, bound)) j.push_back(gca::tail_json(g, t));
      emit(j);
    } else if (cmd_ideals->parsed()) {
      gca::json j = gca::json::array();
      for (const auto& I : gca::enumerate_ideals(g, bound)) j.push_back(gca::ideal_json(g, I));
      emit(j);
    } else if (cmd_prim->parsed()) {
      emit(gca::prim_subset_json(g, gca::prim_space(g, bound)));
    } else if (cmd_closure->parsed()) {
      gca::PrimSubset s = gca::prim_subset_from_json(g, gca::json::parse(set_text));
      emit(gca::prim_subset_json(g, gca::closure(g, s, bound)));
    } else if (cmd_t1->parsed()) {
      gca::T1Verdict v = gca::t1_check(g, bound);
      emit(gca::t1_verdict_json(g, v));
      if (fail_on_false && !v.t1) return 3;
    } else if (cmd_clopen->parsed()) {
      auto rep = gca::clopen_report(g, bound);
      emit(gca::clopen_report_json(g, rep));
      bool all = true;
      for (const auto& e : rep) all = all && e.clopen;
      if (fail_on_false && !all) return 3;
    } else if (cmd_decompose->parsed()) {
      emit(gca::decomposition_json(g, gca::kirchberg_decomposition(g, bound)));
    } else if (cmd_af->parsed()) {
      emit(gca::quotient_json(g, gca::af_quotient(g, bound)));
    } else if (cmd_piaf->parsed()) {
      emit(gca::quotient_json(g, gca::pi_ideal_af_quotient(g, bound)));
    } else if (cmd_cn->parsed()) {
      emit(gca::c_ntilde_json(g, gca::c_ntilde_structure(g, bound)));
    } else if (cmd_dot->parsed()) {
      std::cout << gca::export_dot(g, dot_tails, bound);
    }
    return 0;
  } catch (const gca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
