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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ifckit/facets.hpp"
#include "ifckit/harness.hpp"
#include "ifckit/lio.hpp"
#include "ifckit/parser.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/typecheck.hpp"
#include "ifckit/universe.hpp"

namespace {

using namespace ifc;

// Wall-clock limits, in seconds.
constexpr double kLatticeLimit = 5;
constexpr double kGoldenLimit = 1;
constexpr double kHomomorphismLimit = 30;
constexpr double kCampaignLimit = 60;
constexpr double kUnitLimit = 1;
constexpr double kMinNonVacuous = 0.30;

constexpr std::uint64_t kSeed = 1;
constexpr std::uint64_t kCases = 10'000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Least upper bound by scanning all labels.
std::optional<Label> brute_join(const LatticeSpec& s, Label a, Label b) {
  for (Label c : s.labels()) {
    if (!s.leq(a, c) || !s.leq(b, c)) continue;
    bool least = true;
    for (Label d : s.labels()) {
      if (s.leq(a, d) && s.leq(b, d)) least = least && s.leq(c, d);
    }
    if (least) return c;
  }
  return std::nullopt;
}

std::uint64_t lattice_laws(const LatticeSpec& s) {
  std::uint64_t bad = 0;
  const auto ls = s.labels();
  for (Label a : ls) {
    bad += !s.leq(a, a) + !s.leq(s.bottom(), a) + !(s.join(a, a) == a);
    for (Label b : ls) {
      const Label j = s.join(a, b);
      bad += (s.leq(a, b) && s.leq(b, a) && !(a == b));
      bad += !(j == s.join(b, a)) + !s.leq(a, j) + !s.leq(b, j);
      bad += !(brute_join(s, a, b) == std::optional<Label>(j));
      for (Label c : ls) {
        bad += (s.leq(a, b) && s.leq(b, c) && !s.leq(a, c));
        bad += (s.leq(a, c) && s.leq(b, c) && !s.leq(j, c));
        bad += !(s.join(j, c) == s.join(a, s.join(b, c)));
      }
    }
  }
  return bad;
}

Outcome criterion1() {
  Outcome o;
  std::uint64_t bad = 0, checked = 0;
  for (const char* name : {"two-point", "diamond", "powerset-3"}) {
    bad += lattice_laws(*LatticeSpec::builtin(name));
    ++checked;
  }
  Rng rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    Rng r = rng.split(i);
    const LatticePtr l = LatticeSpec::random(r, 10);
    o.require(l->size() <= 10, "random lattice larger than 10 labels");
    bad += lattice_laws(*l);
    ++checked;
  }
  o.require(bad == 0, std::to_string(bad) + " law violations");
  if (o.ok) o.detail = std::to_string(checked) + " lattices, 0 violations";
  return o;
}

const char* kIsCold =
    "(program (inputs (fint (fac nat))) (output (fac (plus bool bool)))"
    "  (fac-bind fint x (if (leq-nat 26 x)"
    "    (fac-return (inl (plus bool bool) true))"
    "    (fac-return (inr (plus bool bool) true)))))";

Outcome criterion2() {
  Outcome o;
  const LatticePtr d = LatticeSpec::diamond();
  const Label alice = d->at("Alice"), bob = d->at("Bob");
  auto leaf = [](Value v) { return facets::fac_return(std::move(v)); };
  auto nat = [&](Nat n) { return leaf(Value::nat(n)); };

  const FacTree a = facets::fac_facet(alice, nat(0), nat(1));
  const FacTree b = facets::fac_facet(bob, nat(2), nat(3));
  const FacTree sum = facets::fac_bind(a, [&](const Value& x) {
    return facets::fac_bind(b, [&](const Value& y) { return nat(x.as_nat() + y.as_nat()); });
  });
  const FacTree expect_sum = facets::fac_facet(alice, facets::fac_facet(bob, nat(2), nat(3)),
                                               facets::fac_facet(bob, nat(3), nat(4)));
  o.require(sum == expect_sum, "addition tree " + to_string(sum));

  const Program p = parse_program(kIsCold, *d);
  typecheck_program(p);
  const FacTree f0 = facets::fac_facet(alice, nat(10), nat(0));
  const FacTree f1 = facets::fac_facet(alice, nat(30), nat(0));
  const Value hot = Value::inl(Value::boolean(true));
  const Value cold = Value::inr(Value::boolean(true));
  const FacTree r0 = eval_facets(MultefBackend::secure(), p.body, {{"fint", Value::fac(f0)}}).as_fac();
  const FacTree r1 = eval_facets(MultefBackend::secure(), p.body, {{"fint", Value::fac(f1)}}).as_fac();
  o.require(r0 == facets::fac_facet(alice, leaf(cold), leaf(cold)), "isCold f0 " + to_string(r0));
  o.require(r1 == facets::fac_facet(alice, leaf(hot), leaf(cold)), "isCold f1 " + to_string(r1));

  o.require(facets::project(bob, f0) == facets::project(bob, f1), "inputs differ at Bob");
  o.require(facets::project(bob, r0) == facets::project(bob, r1), "outputs differ at Bob");
  o.require(!(facets::project(alice, r0) == facets::project(alice, r1)), "outputs agree at Alice");
  if (o.ok) o.detail = "addition and isCold trees exact; Bob projections agree";
  return o;
}

Outcome from_report(const Report& r) {
  Outcome o;
  o.require(r.verdict == Verdict::Pass, std::string("verdict ") + verdict_name(r.verdict) +
                                            (r.message.empty() ? "" : ": " + r.message));
  return o;
}

Outcome criterion3() {
  const Report r = check_projection_homomorphism(kSeed, kCases);
  Outcome o = from_report(r);
  o.require(r.cases_run == kCases, "ran " + std::to_string(r.cases_run) + " cases");
  if (o.ok) o.detail = std::to_string(r.cases_run) + " cases, 0 violations";
  return o;
}

CheckConfig exhaustive_config() {
  CheckConfig c;
  c.system = System::Facets;
  c.lattice = LatticeSpec::two_point();
  c.observer = c.lattice->at("L");
  c.exhaustive = true;
  c.depth = 3;
  return c;
}

std::vector<CheckConfig> lio_configs() {
  // 2,500 cases at each of the four observers.
  std::vector<CheckConfig> cs;
  const LatticePtr d = LatticeSpec::diamond();
  for (Label obs : d->labels()) {
    CheckConfig c;
    c.system = System::Lio;
    c.lattice = d;
    c.observer = obs;
    c.cases = kCases / d->size();
    c.seed = kSeed + obs.id();
    cs.push_back(c);
  }
  return cs;
}

CheckConfig transparency_config() {
  CheckConfig c;
  c.system = System::Transparency;
  c.lattice = LatticeSpec::diamond();
  c.cases = kCases;
  c.seed = kSeed;
  return c;
}

Outcome criterion4(std::string& rendered) {
  const Report r = check(exhaustive_config());
  rendered = render(r);
  Outcome o = from_report(r);
  if (o.ok) {
    o.detail = std::to_string(r.terms_covered) + " terms in " + std::to_string(r.cases_run) +
               " behaviour classes, 0 violations";
  }
  return o;
}

Outcome criterion5(std::string& rendered) {
  Outcome o;
  std::uint64_t cases = 0, sentinels = 0;
  for (const CheckConfig& c : lio_configs()) {
    const Report r = check(c);
    rendered += render(r);
    o.require(r.verdict != Verdict::Soundness, "monotonicity sentinel fired");
    o.require(r.verdict == Verdict::Pass, std::string("verdict ") + verdict_name(r.verdict));
    cases += r.cases_run;
    sentinels += r.lio.sentinel_checks;
  }
  o.require(cases == kCases, "ran " + std::to_string(cases) + " cases");
  o.require(sentinels > 0, "no sentinel checks ran");
  if (o.ok) {
    o.detail = std::to_string(cases) + " cases over 4 observers, " + std::to_string(sentinels) +
               " sentinel checks, 0 violations";
  }
  return o;
}

Outcome criterion6(std::string& rendered) {
  const Report r = check(transparency_config());
  rendered = render(r);
  Outcome o = from_report(r);
  const double frac = static_cast<double>(r.nonvacuous) / static_cast<double>(r.cases_run);
  o.require(frac >= kMinNonVacuous, "non-vacuous fraction " + std::to_string(frac));
  o.require(!r.weak_campaign, "weak campaign");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%llu cases, non-vacuous %.4f, 0 violations",
                  static_cast<unsigned long long>(r.cases_run), frac);
    o.detail = buf;
  }
  return o;
}

Outcome criterion7(std::string& rendered) {
  const SuiteReport s = run_mutant_suite(LatticeSpec::diamond(), kSeed, kCases);
  rendered = render(s);
  Outcome o;
  for (const MutantRun& m : s.runs) {
    o.require(m.report.detected(), std::string(mutant_name(m.mutant)) + " missed");
  }
  for (const Report& c : s.controls) {
    o.require(c.verdict == Verdict::Pass, std::string("control ") + system_name(c.system) + " failed");
  }
  o.require(s.passed, "suite did not pass");
  if (o.ok) {
    o.detail = std::to_string(s.runs.size()) + " mutants detected, " +
               std::to_string(s.controls.size()) + " controls clean";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const LatticePtr two = LatticeSpec::two_point();
  const Label L = two->at("L"), H = two->at("H");
  const Value t = Value::boolean(true), f = Value::boolean(false);
  using namespace lio;
  auto eq = [&](const Config& got, const Config& want, const char* what) {
    o.require(got == want, std::string(what) + ": " + to_string(got));
  };
  eq(run(to_labeled(H, unlabel(label(H, t))), L),
     Config::ok(Value::labeled(LabeledValue::ok(t, H)), L), "toLabeled success");
  eq(run(to_labeled(L, unlabel(label(H, t))), L),
     Config::ok(Value::labeled(LabeledValue::delayed(Exception::ifc(L), L)), L),
     "toLabeled IFC failure");
  eq(run(to_labeled(H, lio_throw(Exception::user("x"))), L),
     Config::ok(Value::labeled(LabeledValue::delayed(Exception::user("x"), H)), L),
     "toLabeled delayed user error");
  eq(run(unlabel(LabeledValue::delayed(Exception::ifc(L), L)), L),
     Config::thrown(Exception::ifc(L), L), "unlabel re-throw");
  eq(run(unlabel(label(H, t)), L), Config::ok(t, H), "unlabel raise");
  const LioComp raised =
      lio_bind(unlabel(label(H, t)), [](const Value&) { return lio_throw(Exception::user("e")); });
  eq(run(lio_catch(raised, [&](const Value&) { return lio_return(f); }), L), Config::ok(f, H),
     "catch at raised label");
  eq(run(lio_catch(unlabel(LabeledValue::delayed(Exception::ifc(L), H)),
                   [](const Value& e) { return lio_return(e); }),
         L),
     Config::ok(Value::error(Exception::ifc(L)), H), "catch re-thrown IFC error");
  if (o.ok) o.detail = "7 hand-evaluated cases match";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const LatticePtr two = LatticeSpec::two_point();
  const TypeEnv fenv{{"f", Univ::fac(Univ::nat())}};
  const TypeEnv lenv{{"x", Univ::labeled(Univ::nat())}};
  int rejected = 0;
  // Constructs that do not exist in the language.
  for (const char* src : {"(match-facet f l p q true)", "(facet-guard f)", "(facet-priv f)",
                          "(facet-pub f)", "(project L f)", "(facet L (return 1) (return 2))",
                          "(payload x)", "(labeled-value x)", "(return 1)"}) {
    try {
      parse_term(src, *two);
      o.require(false, std::string("parsed ") + src);
    } catch (const ParseError& e) {
      o.require(std::string(e.what()).find("unknown construct") != std::string::npos,
                std::string("wrong error for ") + src + ": " + e.what());
      ++rejected;
    }
  }
  // Existing constructs applied to faceted or labeled values.
  const std::vector<std::pair<const char*, const TypeEnv*>> typed = {
      {"(fst f)", &fenv},        {"(if f true false)", &fenv},  {"(case f a true b false)", &fenv},
      {"(eq f f)", &fenv},       {"(add f 1)", &fenv},          {"(unlabel f)", &fenv},
      {"(fst x)", &lenv},        {"(add x 1)", &lenv},          {"(case x a true b false)", &lenv},
      {"(eq x x)", &lenv},       {"(fac-bind x v (fac-return v))", &lenv}};
  for (const auto& [src, env] : typed) {
    try {
      typecheck(parse_term(src, *two), *env);
      o.require(false, std::string("typechecked ") + src);
    } catch (const TypeError&) {
      ++rejected;
    }
  }
  if (o.ok) o.detail = std::to_string(rejected) + " crafted inputs rejected";
  return o;
}

Outcome criterion10(const std::string& c4, const std::string& c5, const std::string& c6,
                    const std::string& c7) {
  Outcome o;
  std::string r4, r5, r6, r7;
  criterion4(r4);
  criterion5(r5);
  criterion6(r6);
  criterion7(r7);
  o.require(r4 == c4, "criterion 4 report changed");
  o.require(r5 == c5, "criterion 5 report changed");
  o.require(r6 == c6, "criterion 6 report changed");
  o.require(r7 == c7, "criterion 7 report changed");
  o.require(!c4.empty() && !c5.empty() && !c6.empty() && !c7.empty(), "empty report");
  if (o.ok) {
    o.detail = std::to_string(c4.size() + c5.size() + c6.size() + c7.size()) +
               " report bytes identical";
  }
  return o;
}

int failures = 0;

void report(int n, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    o.ok = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs; ", secs, limit);
    o.detail = buf + o.detail;
  }
  failures += !o.ok;
  std::printf("%s %2d %-34s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", n, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::string r4, r5, r6, r7;
  report(1, "lattice laws", kLatticeLimit, criterion1);
  report(2, "golden examples", kGoldenLimit, criterion2);
  report(3, "projection homomorphism", kHomomorphismLimit, criterion3);
  report(4, "facets noninterference, exhaustive", kCampaignLimit, [&] { return criterion4(r4); });
  report(5, "LIO noninterference, random", kCampaignLimit, [&] { return criterion5(r5); });
  report(6, "transparency, random", kCampaignLimit, [&] { return criterion6(r6); });
  report(7, "mutant detection", 0, [&] { return criterion7(r7); });
  report(8, "LIO primitive semantics", kUnitLimit, criterion8);
  report(9, "interface completeness", kUnitLimit, criterion9);
  report(10, "determinism", 0, [&] { return criterion10(r4, r5, r6, r7); });
  return failures;
}
