// Copyright 2026 The diglines Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: structural profiles, line sets, claim checks,
// isomorph-free enumeration, thin-digraph hunts and theorem verification.
//
// Exit codes: 0 success / claim holds, 1 usage or input error, 2 a
// verification or claim check found a counterexample. All stdout output is
// deterministic for fixed arguments; timings go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diglines/canonical.hpp"
#include "diglines/digraph.hpp"
#include "diglines/proofcheck.hpp"
#include "diglines/quasimetric.hpp"
#include "diglines/search.hpp"

namespace {

using namespace diglines;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedDigraph {
  std::string source;
  Digraph g;
};

std::vector<NamedDigraph> gather_inputs(const std::vector<std::string>& args) {
  std::vector<NamedDigraph> out;
  for (const std::string& arg : args) {
    if (arg == "-") {
      for (const Digraph& g : read_catalog(std::cin))
        out.push_back({serialize_digraph(g), g});
    } else if (arg.find(':') != std::string::npos) {
      out.push_back({arg, parse_digraph(arg)});
    } else {
      std::ifstream f(arg);
      if (!f) throw InputError("cannot open input file '" + arg + "'");
      for (const Digraph& g : read_catalog(f)) out.push_back({serialize_digraph(g), g});
    }
  }
  if (out.empty()) throw InputError("no digraphs given");
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int default_jobs() {
  if (const char* env = std::getenv("DIGLINES_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

ClassConstraint class_from_name(const std::string& name) {
  ClassConstraint c;
  if (name == "any") return c;
  if (name == "oriented") c.oriented = Tri::Require;
  else if (name == "graph") c.graph_symmetric = Tri::Require;
  else if (name == "bipartite") c.bipartite = Tri::Require;
  else throw InputError("unknown digraph class '" + name + "'");
  return c;
}

TerminalPredicate predicate_from_name(const std::string& name) {
  if (name == "thin") return TerminalPredicate::Thin;
  if (name == "not-thin") return TerminalPredicate::NotThin;
  if (name == "all") return TerminalPredicate::All;
  throw InputError("unknown predicate '" + name + "'");
}

void write_witness_catalog(const std::string& path, const std::vector<std::string>& witnesses) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot open output file '" + path + "'");
  f << "# canonical\n";
  for (const auto& w : witnesses) f << w << "\n";
}

// ---------------------------------------------------------------- props ---

int run_props(const std::vector<std::string>& inputs, bool tsv) {
  const auto digraphs = gather_inputs(inputs);
  if (tsv)
    std::cout << "digraph\tn\tarcs\tstrongly_connected\tdiameter\tdirected_girth\t"
                 "oriented\tgraph\tbridgeless\tbipartite\n";
  bool first = true;
  for (const auto& [source, g] : digraphs) {
    const StructuralProfile p = structural_profile(g);
    const std::string diam = p.diameter ? std::to_string(*p.diameter) : "-";
    const std::string girth = p.directed_girth ? std::to_string(*p.directed_girth) : "-";
    if (tsv) {
      std::cout << serialize_digraph(g) << '\t' << g.n << '\t' << g.arc_count() << '\t'
                << yesno(p.strongly_connected) << '\t' << diam << '\t' << girth << '\t'
                << yesno(p.oriented) << '\t' << yesno(p.graph_symmetric) << '\t'
                << yesno(p.bridgeless) << '\t' << yesno(p.bipartition.has_value()) << '\n';
      continue;
    }
    if (!first) std::cout << '\n';
    first = false;
    std::cout << "digraph: " << serialize_digraph(g) << '\n'
              << "n: " << g.n << '\n'
              << "arcs: " << g.arc_count() << '\n'
              << "strongly_connected: " << yesno(p.strongly_connected) << '\n'
              << "diameter: " << diam << '\n'
              << "directed_girth: " << girth << '\n'
              << "oriented: " << yesno(p.oriented) << '\n'
              << "graph: " << yesno(p.graph_symmetric) << '\n'
              << "bridgeless: " << yesno(p.bridgeless) << '\n'
              << "bipartite: " << yesno(p.bipartition.has_value()) << '\n';
    if (p.bipartition) {
      std::cout << "bipartition: X=" << set_to_string(p.bipartition->X)
                << " Y=" << set_to_string(p.bipartition->Y) << " p=" << p.bipartition->p
                << " q=" << p.bipartition->q << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- lines ---

int run_lines(const std::vector<std::string>& inputs, bool tsv) {
  const auto digraphs = gather_inputs(inputs);
  if (tsv) std::cout << "digraph\tlines\tuniversal\tthin\tdistinct_lines\n";
  bool first = true;
  for (const auto& [source, g] : digraphs) {
    const LineSet ls = line_set(g);
    const bool thin = ls.count < g.n;
    if (tsv) {
      std::cout << serialize_digraph(g) << '\t' << ls.count << '\t' << ls.universal_count
                << '\t' << yesno(thin) << '\t';
      for (std::size_t i = 0; i < ls.distinct_lines.size(); ++i)
        std::cout << (i ? "|" : "") << set_to_string(ls.distinct_lines[i]);
      std::cout << '\n';
      continue;
    }
    if (!first) std::cout << '\n';
    first = false;
    std::cout << "digraph: " << serialize_digraph(g) << '\n';
    for (VertexSet l : ls.distinct_lines) std::cout << set_to_string(l) << '\n';
    std::cout << "lines: " << ls.count << '\n'
              << "universal: " << ls.universal_count << '\n'
              << "verdict: " << (thin ? "THIN" : "NOT-THIN") << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check ---

int run_check(const std::string& claim, const std::vector<std::string>& inputs, bool list,
              bool tsv) {
  if (list) {
    for (const ClaimInfo& info : claim_registry())
      std::cout << info.id << '\t' << info.description << '\n';
    return kExitOk;
  }
  const ClaimInfo* found = nullptr;
  for (const ClaimInfo& info : claim_registry())
    if (info.id == claim) found = &info;
  if (!found) throw InputError("unknown claim '" + claim + "' (see check --list)");

  const auto digraphs = gather_inputs(inputs);
  if (tsv) std::cout << "digraph\tclaim\tverdict\tviolations\n";
  bool any_violation = false;
  bool first = true;
  for (const auto& [source, g] : digraphs) {
    ClaimVerdict v;
    try {
      v = found->run(g);
    } catch (const std::invalid_argument& e) {
      throw InputError(source + ": not applicable: " + e.what());
    }
    if (!v.holds) any_violation = true;
    if (tsv) {
      std::cout << serialize_digraph(g) << '\t' << found->id << '\t'
                << (v.holds ? "holds" : "violated") << '\t' << v.violations.size() << '\n';
      continue;
    }
    if (!first) std::cout << '\n';
    first = false;
    std::cout << "digraph: " << serialize_digraph(g) << '\n'
              << "claim: " << found->id << '\n'
              << "verdict: " << (v.holds ? "holds" : "VIOLATED") << '\n';
    for (const auto& violation : v.violations) std::cout << "violation: " << violation << '\n';
  }
  return any_violation ? kExitCounterexample : kExitOk;
}

// ------------------------------------------------------------ enumerate ---

int run_enumerate(int n, const std::string& cls_name, int jobs, const std::string& out_path) {
  const ClassConstraint cls = class_from_name(cls_name);
  const auto classes = enumerate(n, cls, jobs);
  std::ostringstream body;
  body << "# canonical\n";
  body << "# n=" << n << " class=" << cls_name << " classes=" << classes.size() << "\n";
  for (const Digraph& g : classes) body << serialize_digraph(g) << "\n";
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot open output file '" + out_path + "'");
    f << body.str();
    std::cout << "classes: " << classes.size() << '\n';
  }
  return kExitOk;
}

// ----------------------------------------------------------------- hunt ---

void print_level_table(const std::vector<LevelReport>& levels) {
  std::cout << "n\tclasses_generated\tpassing_filters\twitnesses\n";
  std::uint64_t tg = 0, tp = 0, tw = 0;
  for (const LevelReport& lr : levels) {
    std::cout << lr.n << '\t' << lr.classes_generated << '\t' << lr.passing_filters << '\t'
              << lr.witnesses.size() << '\n';
    tg += lr.classes_generated;
    tp += lr.passing_filters;
    tw += lr.witnesses.size();
  }
  std::cout << "total\t" << tg << '\t' << tp << '\t' << tw << '\n';
}

int run_hunt(const SearchSpec& spec, int jobs, const std::string& out_path) {
  const SearchReport rep = hunt(spec, jobs);
  print_level_table(rep.levels);
  for (const auto& w : rep.witnesses) std::cout << "witness\t" << w << '\n';
  if (!out_path.empty()) write_witness_catalog(out_path, rep.witnesses);
  std::cerr << "# wall_time_ms=" << rep.wall_time.count() << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- verify ---

int run_verify(const std::string& claim, int n_max, bool deep, int jobs,
               const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationVerdict v = verify_claim(claim, n_max, deep, jobs);
  std::cout << "claim: " << v.claim_id << '\n'
            << "n_max: " << v.n_max << '\n'
            << "deep: " << yesno(v.deep) << '\n';
  if (!v.levels.empty()) print_level_table(v.levels);
  for (const auto& w : v.expected_witnesses) std::cout << "expected_witness\t" << w << '\n';
  for (const auto& w : v.found_witnesses) std::cout << "found_witness\t" << w << '\n';
  for (const auto& n : v.notes) std::cout << "note: " << n << '\n';
  for (const auto& c : v.counterexamples) std::cout << "counterexample\t" << c << '\n';
  std::cout << "verdict: " << (v.holds ? "holds" : "REFUTED") << '\n';
  if (!out_path.empty()) write_witness_catalog(out_path, v.found_witnesses);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cerr << "# wall_time_ms=" << ms.count() << '\n';
  return v.holds ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segments, lines and thin-digraph searches in the quasi-metric "
               "spaces of strongly connected digraphs"};
  app.require_subcommand(1);

  // props
  auto* props = app.add_subcommand("props", "structural profile of digraphs");
  std::vector<std::string> props_inputs;
  bool props_tsv = false;
  props->add_option("inputs", props_inputs, "compact strings, files, or '-' for stdin")
      ->required();
  props->add_flag("--format-tsv,--tsv", props_tsv, "tab-separated output");
  props->add_option_function<std::string>(
      "--format", [&](const std::string& f) { props_tsv = (f == "tsv"); },
      "output format: text or tsv");

  // lines
  auto* lines = app.add_subcommand("lines", "distinct lines, counts and thin verdict");
  std::vector<std::string> lines_inputs;
  bool lines_tsv = false;
  lines->add_option("inputs", lines_inputs, "compact strings, files, or '-' for stdin")
      ->required();
  lines->add_flag("--format-tsv,--tsv", lines_tsv, "tab-separated output");
  lines->add_option_function<std::string>(
      "--format", [&](const std::string& f) { lines_tsv = (f == "tsv"); },
      "output format: text or tsv");

  // check
  auto* check = app.add_subcommand("check", "run a claim checker on digraphs");
  std::string check_claim;
  std::vector<std::string> check_inputs;
  bool check_list = false, check_tsv = false;
  check->add_flag("--list", check_list, "list claim identifiers");
  check->add_option("claim", check_claim, "claim identifier (see --list)");
  check->add_option("inputs", check_inputs, "compact strings, files, or '-' for stdin");
  check->add_flag("--format-tsv,--tsv", check_tsv, "tab-separated output");
  check->add_option_function<std::string>(
      "--format", [&](const std::string& f) { check_tsv = (f == "tsv"); },
      "output format: text or tsv");

  // enumerate
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "isomorph-free digraph classes on n vertices");
  int enum_n = 4;
  std::string enum_class = "any";
  std::string enum_out;
  int enum_jobs = default_jobs();
  enumerate_cmd->add_option("--n", enum_n, "vertex count")->required();
  enumerate_cmd->add_option("--class", enum_class, "any|oriented|graph|bipartite");
  enumerate_cmd->add_option("--jobs", enum_jobs, "worker threads");
  enumerate_cmd->add_option("--out", enum_out, "write the catalog to a file");

  // hunt
  auto* hunt_cmd = app.add_subcommand("hunt", "exhaustive constrained digraph hunt");
  SearchSpec spec;
  std::string hunt_class = "any", hunt_predicate = "all", hunt_out;
  int hunt_diameter = -1, hunt_diameter_max = -1, hunt_girth_min = -1;
  bool hunt_bridgeless = false;
  int hunt_jobs = default_jobs();
  hunt_cmd->add_option("--n-min", spec.n_min, "smallest vertex count");
  hunt_cmd->add_option("--n-max", spec.n_max, "largest vertex count");
  hunt_cmd->add_option("--class", hunt_class, "any|oriented|graph|bipartite");
  hunt_cmd->add_option("--diameter", hunt_diameter, "exact diameter");
  hunt_cmd->add_option("--diameter-max", hunt_diameter_max, "diameter upper bound");
  hunt_cmd->add_flag("--bridgeless", hunt_bridgeless, "require bridgeless digraphs");
  hunt_cmd->add_option("--girth-min", hunt_girth_min, "minimum directed girth");
  hunt_cmd->add_option("--predicate", hunt_predicate, "thin|not-thin|all");
  hunt_cmd->add_option("--jobs", hunt_jobs, "worker threads");
  hunt_cmd->add_option("--out", hunt_out, "write the witness catalog to a file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem verification");
  std::string verify_claim_id;
  int verify_n_max = -1, verify_jobs = default_jobs();
  bool verify_deep = false;
  std::string verify_out;
  verify_cmd
      ->add_option("claim", verify_claim_id,
                   "diam1-complete|oriented-diam2|bipartite-diam3|girth4-diam3-bridgeless")
      ->required();
  verify_cmd->add_option("--n-max", verify_n_max, "largest vertex count");
  verify_cmd->add_flag("--deep", verify_deep, "also run the per-instance claim suite");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
  verify_cmd->add_option("--out", verify_out, "write the witness catalog to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (props->parsed()) return run_props(props_inputs, props_tsv);
    if (lines->parsed()) return run_lines(lines_inputs, lines_tsv);
    if (check->parsed()) {
      if (!check_list && check_claim.empty())
        throw InputError("check needs a claim identifier or --list");
      if (!check_list && check_inputs.empty()) throw InputError("check needs input digraphs");
      return run_check(check_claim, check_inputs, check_list, check_tsv);
    }
    if (enumerate_cmd->parsed()) return run_enumerate(enum_n, enum_class, enum_jobs, enum_out);
    if (hunt_cmd->parsed()) {
      spec.cls = class_from_name(hunt_class);
      if (hunt_diameter >= 0) spec.diameter_exact = hunt_diameter;
      if (hunt_diameter_max >= 0) spec.diameter_max = hunt_diameter_max;
      if (hunt_girth_min >= 0) spec.girth_min = hunt_girth_min;
      if (hunt_bridgeless) spec.bridgeless = Tri::Require;
      spec.predicate = predicate_from_name(hunt_predicate);
      return run_hunt(spec, hunt_jobs, hunt_out);
    }
    if (verify_cmd->parsed()) {
      const int def = default_n_max(verify_claim_id);
      if (verify_n_max < 0) verify_n_max = def;
      if (verify_n_max > def)
        std::cerr << "warning: n_max " << verify_n_max << " exceeds the default " << def
                  << " for this claim; expect a long run\n";
      return run_verify(verify_claim_id, verify_n_max, verify_deep, verify_jobs, verify_out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
