//  Copyright 2026 The ifckit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ifckit/facets.hpp"
#include "ifckit/harness.hpp"
#include "ifckit/parser.hpp"
#include "ifckit/typecheck.hpp"
#include "ifckit/universe.hpp"

namespace {

using namespace ifc;

constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HarnessError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A lattice file, or builtin:<name>.
LatticePtr load_lattice(const std::string& arg) {
  constexpr std::string_view prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) return LatticeSpec::builtin(arg.substr(prefix.size()));
  return LatticeSpec::parse(slurp(arg));
}

// "*" leaves the observer to the checker (drawn per case, or every label).
std::optional<Label> load_observer(const LatticeSpec& spec, const std::string& name) {
  if (name == "*") return std::nullopt;
  return spec.at(name);
}

Mutant load_mutant(const std::string& name) {
  auto m = mutant_from_name(name);
  if (!m) throw HarnessError("unknown mutant '" + name + "'");
  return *m;
}

int finish(const Report& r, bool timing, const std::string& out_path) {
  std::cout << render(r, timing);
  if (r.counterexample && !out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw HarnessError("cannot write " + out_path);
    out << replay_text(*r.counterexample);
  }
  return exit_code(r.verdict);
}

struct RunArgs {
  std::string backend = "sec";
  std::string program;
  std::string lattice;
  std::string project;
  std::string current;
  std::vector<std::string> inputs;
};

int run_program(const RunArgs& a) {
  const LatticePtr lattice = load_lattice(a.lattice);
  const LatticeSpec& spec = *lattice;
  const Program p = parse_program(slurp(a.program), spec);
  const Family family = typecheck_program(p);
  if (a.backend != "sec" && a.backend != "std") {
    throw HarnessError("backend must be sec or std, got '" + a.backend + "'");
  }

  ValueEnv env;
  for (const auto& [name, type] : p.inputs) {
    std::optional<std::string> text;
    for (const std::string& in : a.inputs) {
      const auto eq = in.find('=');
      if (eq == std::string::npos) throw HarnessError("--input expects name=value, got '" + in + "'");
      if (in.substr(0, eq) == name) text = in.substr(eq + 1);
    }
    if (!text) throw HarnessError("missing --input for '" + name + "'");
    Value v = parse_value(*text, type, spec);
    if (!el_check(type, v)) throw HarnessError("input " + name + " does not have type " + type.text());
    env.emplace_back(name, std::move(v));
  }
  for (const std::string& in : a.inputs) {
    const std::string name = in.substr(0, in.find('='));
    bool declared = false;
    for (const auto& decl : p.inputs) declared = declared || decl.first == name;
    if (!declared) throw HarnessError("program has no input named '" + name + "'");
  }

  if (family == Family::Lio) {
    if (a.backend != "sec") throw HarnessError("LIO programs run under the sec semantics only");
    if (!a.project.empty()) throw HarnessError("--project applies to faceted results");
    const Value v = eval_lio(p.body, env);
    if (p.output.kind() == Univ::Kind::Lio) {
      const Label current = a.current.empty() ? spec.bottom() : spec.at(a.current);
      std::cout << to_string(lio::run(v.as_lio(), current)) << '\n';
    } else {
      std::cout << to_string(v) << '\n';
    }
    return 0;
  }

  const MultefBackend& backend =
      a.backend == "std" ? MultefBackend::standard() : MultefBackend::secure();
  const Value v = eval_facets(backend, p.body, env);
  if (a.project.empty()) {
    std::cout << to_string(v) << '\n';
    return 0;
  }
  const Label l = spec.at(a.project);
  if (v.kind() == Value::Kind::Fac) {
    std::cout << to_string(facets::project(l, v.as_fac())) << '\n';
  } else if (v.kind() == Value::Kind::Maybe) {
    // Facet-erased results have no facets left to choose between.
    std::cout << to_string(v) << '\n';
  } else {
    throw HarnessError("--project needs a faceted result, got " + p.output.text());
  }
  return 0;
}

int validate_lattice(const std::string& path) {
  try {
    const LatticePtr l = load_lattice(path);
    const auto top = l->top();
    std::cout << "ok: " << l->size() << " labels, bottom " << l->bottom().name();
    if (top) std::cout << ", top " << top->name();
    std::cout << '\n' << l->to_text();
    return 0;
  } catch (const LatticeError& e) {
    std::cerr << "invalid lattice: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ifckit: noninterference and transparency checking for faceted values and LIO"};
  app.require_subcommand(1);

  std::string lattice_path;
  auto* validate_cmd = app.add_subcommand("validate-lattice", "Check a lattice file");
  validate_cmd->add_option("file", lattice_path, "Lattice file or builtin:<name>")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a program");
  run_cmd->add_option("--backend", run.backend, "sec or std")->capture_default_str();
  run_cmd->add_option("--program", run.program, "Program file")->required();
  run_cmd->add_option("--lattice", run.lattice, "Lattice file or builtin:<name>")->required();
  run_cmd->add_option("--project", run.project, "Print the projection at this label");
  run_cmd->add_option("--current", run.current, "Initial current label for LIO results");
  run_cmd->add_option("--input", run.inputs, "name=value, repeatable");

  auto* check_cmd = app.add_subcommand("check", "Run a checker");
  check_cmd->require_subcommand(1);

  struct CheckArgs {
    std::string system = "facets";
    std::string lattice;
    std::string observer;
    std::uint64_t cases = 10'000;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    std::size_t depth = 3;
    std::size_t budget = 12;
    std::string mutant = "none";
    std::string out;
    double floor = 0.3;
    bool generalized = false;
    bool timing = false;
    bool no_shrink = false;
  } c;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--lattice", c.lattice, "Lattice file or builtin:<name>")->required();
    cmd->add_option("--observer", c.observer, "Observer label, or * to vary it")->required();
    cmd->add_option("--cases", c.cases, "Random cases")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Campaign seed")->capture_default_str();
    cmd->add_option("--budget", c.budget, "Term size budget")->capture_default_str();
    cmd->add_option("--mutant", c.mutant, "Run against a seeded mutant")->capture_default_str();
    cmd->add_option("--out", c.out, "Write the counterexample replay file here");
    cmd->add_flag("--timing", c.timing, "Include elapsed time in the report");
    cmd->add_flag("--no-shrink", c.no_shrink, "Report counterexamples as generated");
  };

  auto* ni_cmd = check_cmd->add_subcommand("ni", "Noninterference");
  ni_cmd->add_option("--system", c.system, "facets or lio")
      ->check(CLI::IsMember({"facets", "lio"}))
      ->capture_default_str();
  common(ni_cmd);
  ni_cmd->add_flag("--exhaustive", c.exhaustive, "Enumerate terms and inputs instead of sampling");
  ni_cmd->add_option("--depth", c.depth, "Exhaustive term depth")->capture_default_str();

  auto* tr_cmd = check_cmd->add_subcommand("transparency", "Transparency of the faceted semantics");
  common(tr_cmd);
  tr_cmd->add_option("--floor", c.floor, "Non-vacuous fraction floor")->capture_default_str();
  tr_cmd->add_flag("--generalized", c.generalized, "Draw faceted types beyond (fac bool)");

  auto* hom_cmd = check_cmd->add_subcommand("projection", "Projection distributes over bind");
  hom_cmd->add_option("--cases", c.cases, "Random cases")->capture_default_str();
  hom_cmd->add_option("--seed", c.seed, "Campaign seed")->capture_default_str();
  hom_cmd->add_option("--out", c.out, "Write the counterexample replay file here");
  hom_cmd->add_flag("--timing", c.timing, "Include elapsed time in the report");

  std::uint64_t suite_seed = 1;
  std::uint64_t suite_cases = 10'000;
  bool suite_timing = false;
  auto* mut_cmd = app.add_subcommand("mutants", "Run every seeded mutant and the controls");
  mut_cmd->add_option("--lattice", lattice_path, "Lattice file or builtin:<name>")->required();
  mut_cmd->add_option("--seed", suite_seed, "Campaign seed")->capture_default_str();
  mut_cmd->add_option("--cases", suite_cases, "Cases per mutant")->capture_default_str();
  mut_cmd->add_flag("--timing", suite_timing, "Include elapsed times");

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-execute a counterexample replay file");
  replay_cmd->add_option("file", replay_path, "Replay file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate_cmd) return validate_lattice(lattice_path);
    if (*run_cmd) return run_program(run);
    if (*replay_cmd) return finish(replay(slurp(replay_path)), false, "");
    if (*mut_cmd) {
      const SuiteReport s = run_mutant_suite(load_lattice(lattice_path), suite_seed, suite_cases);
      std::cout << render(s, suite_timing);
      return s.passed ? 0 : 1;
    }
    if (*hom_cmd) {
      return finish(check_projection_homomorphism(c.seed, c.cases), c.timing, c.out);
    }
    CheckConfig cfg;
    cfg.lattice = load_lattice(c.lattice);
    cfg.observer = load_observer(*cfg.lattice, c.observer);
    cfg.cases = c.cases;
    cfg.seed = c.seed;
    cfg.budget = c.budget;
    cfg.mutant = load_mutant(c.mutant);
    cfg.shrink = !c.no_shrink;
    if (*ni_cmd) {
      cfg.system = c.system == "lio" ? System::Lio : System::Facets;
      cfg.exhaustive = c.exhaustive;
      cfg.depth = c.depth;
    } else {
      cfg.system = System::Transparency;
      cfg.vacuity_floor = c.floor;
      cfg.generalized = c.generalized;
    }
    return finish(check(cfg), c.timing, c.out);
  } catch (const SoundnessViolation& e) {
    std::cerr << "soundness violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
