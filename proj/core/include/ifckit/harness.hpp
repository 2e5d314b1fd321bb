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

#ifndef IFCKIT_HARNESS_HPP_
#define IFCKIT_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifckit/interp.hpp"
#include "ifckit/lattice.hpp"
#include "ifckit/mutants.hpp"
#include "ifckit/termgen.hpp"

namespace ifc {

enum class System : std::uint8_t { Facets, Lio, Transparency, Projection };

const char* system_name(System s);
std::optional<System> system_from_name(std::string_view name);

enum class Verdict : std::uint8_t { Pass, Counterexample, Soundness, Error };

const char* verdict_name(Verdict v);
// CLI exit status: 0 pass, 1 counterexample, 2 error, 3 soundness violation.
int exit_code(Verdict v);

// Where case types come from. Unset fields are drawn per case.
struct TypePolicy {
  std::optional<TypeEnv> inputs;
  std::optional<Univ> output;
  std::size_t max_inputs = 2;
  std::size_t type_depth = 3;
};

struct CheckConfig {
  System system = System::Facets;
  LatticePtr lattice;
  // Unset: drawn per case in random mode, every label in exhaustive mode.
  std::optional<Label> observer;
  bool exhaustive = false;
  std::uint64_t cases = 10'000;
  std::uint64_t seed = 1;
  std::size_t depth = 3;
  std::size_t max_depth = 4;
  std::size_t budget = 12;
  TypePolicy types;
  Mutant mutant = Mutant::None;
  // Transparency campaigns below this non-vacuous fraction are flagged weak.
  double vacuity_floor = 0.3;
  // Transparency over random faceted types instead of fac bool. Experimental.
  bool generalized = false;
  // Greedily shrink random-mode counterexamples before reporting them.
  bool shrink = true;
  GenWeights weights;
};

// Throws HarnessError describing the first problem.
void validate(const CheckConfig& cfg);

// A failing case with everything needed to re-execute it. For transparency
// inputs0 holds b and inputs1 the public filler of the faceted input; for
// projection checks inputs0 holds the faceted value f.
struct Counterexample {
  System system = System::Facets;
  Mutant mutant = Mutant::None;
  // Keeps the labels below valid for as long as the record lives.
  LatticePtr lattice;
  Label observer;
  std::uint64_t seed = 0;
  std::uint64_t case_index = 0;
  Program program;
  ValueEnv inputs0;
  ValueEnv inputs1;
  std::string output0;
  std::string output1;
  std::string detail;
  // Body size before shrinking; 0 when the program was not shrunk.
  std::size_t original_size = 0;
};

struct Report {
  System system = System::Facets;
  Mutant mutant = Mutant::None;
  Verdict verdict = Verdict::Pass;
  std::uint64_t cases_run = 0;
  // Exhaustive mode: terms checked, counting every member of each class.
  std::uint64_t terms_covered = 0;
  // Transparency: cases where the standard run produced a value.
  std::uint64_t nonvacuous = 0;
  bool weak_campaign = false;
  RunStats lio;
  std::optional<Counterexample> counterexample;
  std::string message;
  double elapsed_seconds = 0;

  bool detected() const;
};

Report check_ni_facets(const CheckConfig& cfg);
Report check_ni_lio(const CheckConfig& cfg);
Report check_transparency(const CheckConfig& cfg);
// Dispatches on cfg.system.
Report check(const CheckConfig& cfg);

// project(l, bind(f, k)) == project(l, k(project(l, f))) over random
// lattices, labels, faceted values and continuations given as terms.
Report check_projection_homomorphism(std::uint64_t seed, std::uint64_t cases,
                                     std::size_t budget = 10, unsigned max_labels = 10);

// The faceted input of a transparency case: b to the observer, false below.
FacTree make_fb(bool b, Label observer);

// Text report. Timing is excluded unless asked for, so equal runs render
// byte-identically.
std::string render(const Report& r, bool with_timing = false);

// Self-contained replay file: key=value header, a "---" line, then the
// program.
std::string replay_text(const Counterexample& c);
// Re-executes a replay file. Throws ParseError/HarnessError on bad input.
Report replay(std::string_view text);

struct MutantRun {
  Mutant mutant = Mutant::None;
  System checker = System::Facets;
  Report report;
};

struct SuiteReport {
  std::vector<MutantRun> runs;
  // The correct implementation under each checker's identical configuration.
  std::vector<Report> controls;
  bool passed = false;
};

// The checker each mutant is run under.
System designated_checker(Mutant m);

SuiteReport run_mutant_suite(const LatticePtr& lattice, std::uint64_t seed = 1,
                             std::uint64_t cases = 10'000);
std::string render(const SuiteReport& s, bool with_timing = false);

}  // namespace ifc

#endif  // IFCKIT_HARNESS_HPP_
