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

#include "ifckit/harness.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "ifckit/facets.hpp"
#include "ifckit/parser.hpp"
#include "ifckit/typecheck.hpp"
#include "ifckit/universe.hpp"

namespace ifc {
namespace {

constexpr std::array<std::pair<System, const char*>, 4> kSystems{{
    {System::Facets, "facets"},
    {System::Lio, "lio"},
    {System::Transparency, "transparency"},
    {System::Projection, "projection"},
}};

Label draw_label(Rng& rng, const LatticeSpec& spec) {
  return spec.label(static_cast<std::uint32_t>(rng.below(spec.size())));
}

struct CaseTypes {
  TypeEnv inputs;
  Univ output = Univ::boolean();
};

Univ wrap(Family f, Univ u) { return f == Family::Facets ? Univ::fac(u) : Univ::labeled(u); }

CaseTypes draw_types(Rng& rng, const CheckConfig& cfg, const LatticeSpec& spec, Family family) {
  const std::size_t depth = std::max<std::size_t>(cfg.types.type_depth, 2);
  CaseTypes ty;
  if (cfg.types.inputs) {
    ty.inputs = *cfg.types.inputs;
  } else {
    const std::size_t n = 1 + rng.below(std::max<std::size_t>(cfg.types.max_inputs, 1));
    for (std::size_t k = 0; k < n; ++k) {
      // The first input always carries protected data.
      Univ u = k == 0 || rng.coin() ? wrap(family, gen_input_type(rng, Family::Neutral, depth - 1))
                                    : gen_input_type(rng, family, depth);
      ty.inputs.emplace_back("x" + std::to_string(k), std::move(u));
    }
  }
  if (cfg.types.output) {
    ty.output = *cfg.types.output;
  } else if (family == Family::Facets && rng.coin()) {
    ty.output = Univ::fac(gen_input_type(rng, Family::Neutral, depth - 1));
  } else if (family == Family::Lio && rng.coin()) {
    ty.output = Univ::lio(gen_input_type(rng, Family::Lio, depth - 1));
  } else {
    ty.output = gen_output_type(rng, family, depth);
  }
  if (!cfg.types.output) {
    const std::size_t need = min_term_size(spec, ty.inputs, ty.output);
    if (need == 0 || need > cfg.budget) ty.output = ty.inputs.front().second;
  }
  return ty;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

struct Outcome {
  bool violated = false;
  bool vacuous = false;
  std::string out0;
  std::string out1;
  std::string detail;
};

Outcome run_facets_case(const LatticeSpec& spec, const Program& p, Label obs, const ValueEnv& in0,
                        const ValueEnv& in1, Mutant m) {
  const MultefBackend& backend = multef_backend(m);
  const Value o0 = eval_facets(backend, p.body, in0);
  const Value o1 = eval_facets(backend, p.body, in1);
  Outcome r;
  r.violated = !equiv(spec, obs, p.output, o0, o1);
  if (r.violated) {
    r.out0 = to_string(o0);
    r.out1 = to_string(o1);
    if (p.output.kind() == Univ::Kind::Fac) {
      r.detail = "projections at " + obs.name() + ": " +
                 to_string(facets::project(obs, o0.as_fac())) + " vs " +
                 to_string(facets::project(obs, o1.as_fac()));
    }
  }
  return r;
}

std::string describe_lio(const LatticeSpec& spec, const Univ& u, const Value& v,
                         const LioSemantics& sem) {
  if (u.kind() != Univ::Kind::Lio) return to_string(v);
  std::string s;
  for (const Label l : spec.labels()) {
    if (!s.empty()) s += "; ";
    s += "from " + l.name() + ": " + to_string(lio::run(v.as_lio(), l, sem));
  }
  return s;
}

Outcome run_lio_case(const LatticeSpec& spec, const Program& p, Label obs, const ValueEnv& in0,
                     const ValueEnv& in1, Mutant m, RunStats* stats) {
  const LioSemantics& sem = lio_semantics(m);
  const Value o0 = eval_lio(p.body, in0, sem);
  const Value o1 = eval_lio(p.body, in1, sem);
  Outcome r;
  r.violated = !equiv(spec, obs, p.output, o0, o1, sem, stats);
  if (r.violated) {
    r.out0 = describe_lio(spec, p.output, o0, sem);
    r.out1 = describe_lio(spec, p.output, o1, sem);
  }
  return r;
}

Outcome run_transparency_case(const Program& p, Label obs, const Value& b, const Value& filler,
                              Mutant m) {
  const std::string& x = p.inputs.front().first;
  const Value s = eval_facets(MultefBackend::standard(), p.body,
                              {{x, Value::maybe(facets::std_return(b))}});
  Outcome r;
  if (!s.as_maybe().is_just()) {
    r.vacuous = true;
    return r;
  }
  const FacTree fb = FacTree::node(obs, FacTree::leaf(b), FacTree::leaf(filler));
  const Value t = eval_facets(multef_backend(m), p.body, {{x, Value::fac(fb)}});
  const Value& seen = projection(m)(obs, t.as_fac());
  r.violated = !(s.as_maybe().value() == seen);
  if (r.violated) {
    r.out0 = to_string(s);
    r.out1 = "(just " + to_string(seen) + ")";
    r.detail = "faceted result " + to_string(t);
  }
  return r;
}

Outcome run_projection_case(const Program& p, Label obs, const FacTree& f) {
  const std::string& v = p.inputs.front().first;
  const facets::Continuation k = [&](const Value& a) {
    return eval_facets(MultefBackend::secure(), p.body, {{v, a}}).as_fac();
  };
  const FacTree bound = facets::fac_bind(f, k);
  const Value& lhs = facets::project(obs, bound);
  const FacTree applied = k(facets::project(obs, f));
  const Value& rhs = facets::project(obs, applied);
  Outcome r;
  r.violated = !(lhs == rhs);
  if (r.violated) {
    r.out0 = to_string(lhs);
    r.out1 = to_string(rhs);
  }
  return r;
}

// Single-step reductions of t: a node replaced by one of its kids, or by a
// literal. The typechecker weeds out the ill-typed ones.
void reductions(const Term& t, std::vector<Term>& out) {
  for (std::size_t i = 0; i < t.arity(); ++i) out.push_back(t.kid(i));
  if (t.size() > 1) {
    out.push_back(Term::lit_bool(false));
    out.push_back(Term::lit_nat(0));
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    std::vector<Term> sub;
    reductions(t.kid(i), sub);
    for (Term& k : sub) out.push_back(t.with_kid(i, std::move(k)));
  }
}

// Greedy subterm replacement. Not guaranteed minimal.
template <typename StillFails>
bool shrink_program(Program& p, StillFails&& still_fails) {
  const Family family = typecheck_program(p);
  const std::size_t before = p.body.size();
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<Term> cands;
    reductions(p.body, cands);
    for (Term& t : cands) {
      Program q{p.inputs, p.output, std::move(t)};
      try {
        if (typecheck_program(q) != family || !still_fails(q)) continue;
      } catch (const Error&) {
        continue;
      }
      p = std::move(q);
      progress = true;
      break;
    }
  }
  return p.body.size() < before;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report start_report(const CheckConfig& cfg) {
  Report r;
  r.system = cfg.system;
  r.mutant = cfg.mutant;
  return r;
}

// Records a failure after re-executing it from its replay file; a failure
// that does not reproduce is a checker bug and is reported as an error.
void conclude(Report& r, Counterexample c, Verdict v) {
  r.verdict = v;
  Report again;
  try {
    again = replay(replay_text(c));
  } catch (const Error& e) {
    again.verdict = Verdict::Error;
    again.message = e.what();
  }
  if (again.verdict != v) {
    r.verdict = Verdict::Error;
    r.message = std::string("recorded ") + verdict_name(v) + " replayed as " +
                verdict_name(again.verdict) + (again.message.empty() ? "" : ": " + again.message);
  }
  r.counterexample = std::move(c);
}

void fail_case(Report& r, std::uint64_t i, const std::exception& e) {
  r.verdict = Verdict::Error;
  r.message = "case " + std::to_string(i) + ": " + e.what();
}

Counterexample base_cex(const CheckConfig& cfg, Label obs, std::uint64_t i, Program p) {
  Counterexample c;
  c.system = cfg.system;
  c.mutant = cfg.mutant;
  c.lattice = cfg.lattice;
  c.observer = obs;
  c.seed = cfg.seed;
  c.case_index = i;
  c.program = std::move(p);
  return c;
}

// Input tuples in the order enum_classes lays out results.
std::vector<ValueEnv> input_tuples(const TypeEnv& inputs,
                                   const std::vector<std::vector<Value>>& domains) {
  std::vector<ValueEnv> tuples{{}};
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    std::vector<ValueEnv> next;
    for (const ValueEnv& t : tuples) {
      for (const Value& v : domains[k]) {
        ValueEnv e = t;
        e.emplace_back(inputs[k].first, v);
        next.push_back(std::move(e));
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

Report check_ni_exhaustive(const CheckConfig& cfg) {
  const LatticeSpec& spec = *cfg.lattice;
  Report r = start_report(cfg);
  const bool lio = cfg.system == System::Lio;
  const TypeEnv inputs = cfg.types.inputs.value_or(
      TypeEnv{{"x", lio ? Univ::labeled(Univ::boolean()) : Univ::fac(Univ::boolean())}});
  const Univ out = cfg.types.output.value_or(lio ? Univ::lio(Univ::boolean())
                                                 : Univ::fac(Univ::boolean()));
  std::vector<std::vector<Value>> domains;
  for (const auto& [name, type] : inputs) domains.push_back(enum_values(spec, type));
  const std::vector<ValueEnv> tuples = input_tuples(inputs, domains);

  EnumLimits limits;
  limits.max_depth = cfg.max_depth;
  limits.implicit_nat = false;
  const LioSemantics& sem = lio_semantics(cfg.mutant);
  const MultefBackend& backend = multef_backend(cfg.mutant);
  const TermEvaluator eval = [&](const Term& t, const ValueEnv& env) {
    return lio ? eval_lio(t, env, sem) : eval_facets(backend, t, env);
  };

  std::vector<TermClass> classes;
  if (class_enumerable(spec, inputs, out, limits.implicit_nat)) {
    classes = enum_classes(spec, inputs, domains, out, cfg.depth, eval, limits);
  } else {
    for (Term& t : enum_terms(spec, inputs, out, cfg.depth, limits)) {
      TermClass c{std::move(t), 1, {}};
      for (const ValueEnv& env : tuples) c.results.push_back(eval(c.rep, env));
      classes.push_back(std::move(c));
    }
  }
  for (const TermClass& c : classes) r.terms_covered += c.count;

  const std::vector<Label> observers = cfg.observer ? std::vector<Label>{*cfg.observer}
                                                    : spec.labels();
  for (const Label obs : observers) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      for (std::size_t j = i + 1; j < tuples.size(); ++j) {
        bool same = true;
        for (std::size_t k = 0; k < inputs.size() && same; ++k) {
          same = equiv(spec, obs, inputs[k].second, tuples[i][k].second, tuples[j][k].second);
        }
        if (same) pairs.emplace_back(i, j);
      }
    }
    for (std::size_t n = 0; n < classes.size(); ++n) {
      const TermClass& c = classes[n];
      ++r.cases_run;
      for (const auto& [i, j] : pairs) {
        try {
          const bool ok = equiv(spec, obs, out, c.results[i], c.results[j], sem, &r.lio);
          if (ok) continue;
        } catch (const SoundnessViolation& e) {
          Counterexample x = base_cex(cfg, obs, n, Program{inputs, out, c.rep});
          x.inputs0 = tuples[i];
          x.inputs1 = tuples[j];
          x.detail = e.what();
          conclude(r, std::move(x), Verdict::Soundness);
          return r;
        }
        Counterexample x = base_cex(cfg, obs, n, Program{inputs, out, c.rep});
        x.inputs0 = tuples[i];
        x.inputs1 = tuples[j];
        const Outcome o = lio ? run_lio_case(spec, x.program, obs, x.inputs0, x.inputs1,
                                             cfg.mutant, nullptr)
                              : run_facets_case(spec, x.program, obs, x.inputs0, x.inputs1,
                                                cfg.mutant);
        x.output0 = o.out0;
        x.output1 = o.out1;
        x.detail = o.detail;
        conclude(r, std::move(x), Verdict::Counterexample);
        return r;
      }
    }
  }
  return r;
}

// Shared loop of the random NI campaigns.
Report check_ni_random(const CheckConfig& cfg, Family family) {
  const LatticeSpec& spec = *cfg.lattice;
  Report r = start_report(cfg);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    Rng rng = Rng(cfg.seed).split(i);
    std::optional<Counterexample> cex;
    try {
      const Label obs = cfg.observer ? *cfg.observer : draw_label(rng, spec);
      CaseTypes ty = draw_types(rng, cfg, spec, family);
      Term t = gen_term(rng, spec, ty.inputs, ty.output, cfg.budget, cfg.weights);
      Counterexample x = base_cex(cfg, obs, i, Program{ty.inputs, ty.output, std::move(t)});
      for (const auto& [name, type] : ty.inputs) {
        auto [a, b] = gen_equiv_pair(rng, spec, obs, type);
        x.inputs0.emplace_back(name, std::move(a));
        x.inputs1.emplace_back(name, std::move(b));
      }
      ++r.cases_run;
      try {
        const Outcome o = family == Family::Lio
                              ? run_lio_case(spec, x.program, obs, x.inputs0, x.inputs1,
                                             cfg.mutant, &r.lio)
                              : run_facets_case(spec, x.program, obs, x.inputs0, x.inputs1,
                                                cfg.mutant);
        if (!o.violated) continue;
        const auto rerun = [&](const Program& q) {
          return family == Family::Lio
                     ? run_lio_case(spec, q, obs, x.inputs0, x.inputs1, cfg.mutant, nullptr)
                     : run_facets_case(spec, q, obs, x.inputs0, x.inputs1, cfg.mutant);
        };
        Outcome last = o;
        if (cfg.shrink) {
          const std::size_t before = x.program.body.size();
          const bool shrunk = shrink_program(x.program, [&](const Program& q) {
            try {
              const Outcome a = rerun(q);
              if (a.violated) last = a;
              return a.violated;
            } catch (const SoundnessViolation&) {
              return false;
            }
          });
          if (shrunk) x.original_size = before;
        }
        x.output0 = last.out0;
        x.output1 = last.out1;
        x.detail = last.detail;
        conclude(r, std::move(x), Verdict::Counterexample);
      } catch (const SoundnessViolation& e) {
        if (cfg.shrink) {
          const std::size_t before = x.program.body.size();
          const bool shrunk = shrink_program(x.program, [&](const Program& q) {
            try {
              run_lio_case(spec, q, obs, x.inputs0, x.inputs1, cfg.mutant, nullptr);
            } catch (const SoundnessViolation&) {
              return true;
            }
            return false;
          });
          if (shrunk) x.original_size = before;
          try {
            run_lio_case(spec, x.program, obs, x.inputs0, x.inputs1, cfg.mutant, nullptr);
          } catch (const SoundnessViolation& again) {
            x.detail = again.what();
          }
        }
        if (x.detail.empty()) x.detail = e.what();
        conclude(r, std::move(x), Verdict::Soundness);
      }
      return r;
    } catch (const Error& e) {
      fail_case(r, i, e);
      return r;
    }
  }
  return r;
}

template <typename F>
Report timed(F&& f) {
  Stopwatch w;
  Report r = f();
  r.elapsed_seconds = w.seconds();
  return r;
}

void put(std::ostringstream& out, const std::string& key, const std::string& value) {
  out << key << '=' << one_line(value) << '\n';
}

}  // namespace

const char* system_name(System s) {
  for (const auto& [k, n] : kSystems) {
    if (k == s) return n;
  }
  return "?";
}

std::optional<System> system_from_name(std::string_view name) {
  for (const auto& [k, n] : kSystems) {
    if (name == n) return k;
  }
  return std::nullopt;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Soundness: return "soundness-violation";
    case Verdict::Error: return "error";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Counterexample: return 1;
    case Verdict::Error: return 2;
    case Verdict::Soundness: return 3;
  }
  return 2;
}

bool Report::detected() const {
  return verdict == Verdict::Counterexample ||
         (verdict == Verdict::Soundness && mutant == Mutant::ToLabeledNoRestore);
}

void validate(const CheckConfig& cfg) {
  if (!cfg.lattice) throw HarnessError("no lattice configured");
  if (cfg.observer && !cfg.lattice->owns(*cfg.observer)) {
    throw HarnessError("observer does not belong to the configured lattice");
  }
  if (cfg.exhaustive) {
    if (cfg.system != System::Facets && cfg.system != System::Lio) {
      throw HarnessError("exhaustive mode applies to noninterference checks only");
    }
    if (cfg.depth > cfg.max_depth) {
      throw HarnessError("depth " + std::to_string(cfg.depth) + " exceeds the maximum " +
                         std::to_string(cfg.max_depth));
    }
  } else if (cfg.cases < 1) {
    throw HarnessError("at least one case is required");
  }
  if (cfg.budget < 1) throw HarnessError("term budget must be at least 1");
  if (cfg.types.inputs) {
    if (cfg.types.inputs->empty()) throw HarnessError("at least one input is required");
    for (const auto& [name, type] : *cfg.types.inputs) {
      if (type.mentions(Univ::Kind::Lio)) {
        throw HarnessError("input " + name + " has a computation type; inputs may not mention lio");
      }
    }
  }
  if (cfg.system == System::Transparency && !cfg.generalized) {
    const Univ fb = Univ::fac(Univ::boolean());
    if ((cfg.types.inputs && (cfg.types.inputs->size() != 1 || !(cfg.types.inputs->front().second == fb))) ||
        (cfg.types.output && !(*cfg.types.output == fb))) {
      throw HarnessError("transparency is stated at (fac bool); enable generalized mode for other types");
    }
  }
}

Report check_ni_facets(const CheckConfig& cfg) {
  validate(cfg);
  if (cfg.system != System::Facets) throw HarnessError("check_ni_facets needs system=facets");
  return timed([&] { return cfg.exhaustive ? check_ni_exhaustive(cfg) : check_ni_random(cfg, Family::Facets); });
}

Report check_ni_lio(const CheckConfig& cfg) {
  validate(cfg);
  if (cfg.system != System::Lio) throw HarnessError("check_ni_lio needs system=lio");
  return timed([&] { return cfg.exhaustive ? check_ni_exhaustive(cfg) : check_ni_random(cfg, Family::Lio); });
}

FacTree make_fb(bool b, Label observer) {
  return facets::fac_facet(observer, facets::fac_return(Value::boolean(b)),
                           facets::fac_return(Value::boolean(false)));
}

Report check_transparency(const CheckConfig& cfg) {
  validate(cfg);
  if (cfg.system != System::Transparency) {
    throw HarnessError("check_transparency needs system=transparency");
  }
  return timed([&] {
    const LatticeSpec& spec = *cfg.lattice;
    const std::size_t depth = std::max<std::size_t>(cfg.types.type_depth, 2);
    Report r = start_report(cfg);
    for (std::uint64_t i = 0; i < cfg.cases; ++i) {
      Rng rng = Rng(cfg.seed).split(i);
      try {
        const Label obs = cfg.observer ? *cfg.observer : draw_label(rng, spec);
        Univ in = Univ::fac(Univ::boolean());
        Univ out = in;
        if (cfg.generalized) {
          in = cfg.types.inputs ? cfg.types.inputs->front().second
                                : Univ::fac(gen_input_type(rng, Family::Neutral, depth - 1));
          out = cfg.types.output.value_or(Univ::fac(gen_input_type(rng, Family::Neutral, depth - 1)));
          if (in.kind() != Univ::Kind::Fac || out.kind() != Univ::Kind::Fac) {
            throw HarnessError("generalized transparency needs faceted input and output types");
          }
        }
        const TypeEnv inputs{{"x", in}};
        Term t = gen_term(rng, spec, inputs, out, cfg.budget, cfg.weights);
        Value b = cfg.generalized ? gen_value(rng, spec, in.inner()) : Value::boolean(rng.coin());
        Value filler = cfg.generalized ? gen_value(rng, spec, in.inner()) : Value::boolean(false);
        ++r.cases_run;
        Counterexample x = base_cex(cfg, obs, i, Program{inputs, out, std::move(t)});
        const Outcome o = run_transparency_case(x.program, obs, b, filler, cfg.mutant);
        if (o.vacuous) continue;
        ++r.nonvacuous;
        if (!o.violated) continue;
        Outcome last = o;
        if (cfg.shrink) {
          const std::size_t before = x.program.body.size();
          const bool shrunk = shrink_program(x.program, [&](const Program& q) {
            const Outcome a = run_transparency_case(q, obs, b, filler, cfg.mutant);
            if (a.violated) last = a;
            return !a.vacuous && a.violated;
          });
          if (shrunk) x.original_size = before;
        }
        x.inputs0.emplace_back("x", std::move(b));
        x.inputs1.emplace_back("x", std::move(filler));
        x.output0 = last.out0;
        x.output1 = last.out1;
        x.detail = last.detail;
        conclude(r, std::move(x), Verdict::Counterexample);
        break;
      } catch (const Error& e) {
        fail_case(r, i, e);
        break;
      }
    }
    r.weak_campaign = r.cases_run > 0 && static_cast<double>(r.nonvacuous) <
                                             cfg.vacuity_floor * static_cast<double>(r.cases_run);
    return r;
  });
}

Report check(const CheckConfig& cfg) {
  switch (cfg.system) {
    case System::Facets: return check_ni_facets(cfg);
    case System::Lio: return check_ni_lio(cfg);
    case System::Transparency: return check_transparency(cfg);
    case System::Projection:
      return check_projection_homomorphism(cfg.seed, cfg.cases, cfg.budget);
  }
  throw HarnessError("unknown system");
}

Report check_projection_homomorphism(std::uint64_t seed, std::uint64_t cases, std::size_t budget,
                                     unsigned max_labels) {
  return timed([&] {
    Report r;
    r.system = System::Projection;
    for (std::uint64_t i = 0; i < cases; ++i) {
      Rng rng = Rng(seed).split(i);
      try {
        const LatticePtr lattice = LatticeSpec::random(rng, max_labels);
        const Label obs = draw_label(rng, *lattice);
        const Univ a = gen_input_type(rng, Family::Neutral, 2);
        const Univ b = gen_input_type(rng, Family::Neutral, 2);
        const FacTree f = gen_value(rng, *lattice, Univ::fac(a)).as_fac();
        const TypeEnv inputs{{"v", a}};
        const Univ out = Univ::fac(b);
        Term k = gen_term(rng, *lattice, inputs, out, budget);
        ++r.cases_run;
        Counterexample x;
        x.system = System::Projection;
        x.lattice = lattice;
        x.observer = obs;
        x.seed = seed;
        x.case_index = i;
        x.program = Program{inputs, out, std::move(k)};
        const Outcome o = run_projection_case(x.program, obs, f);
        if (!o.violated) continue;
        x.inputs0.emplace_back("v", Value::fac(f));
        x.output0 = o.out0;
        x.output1 = o.out1;
        x.detail = "bind-then-project vs project-then-apply";
        conclude(r, std::move(x), Verdict::Counterexample);
        break;
      } catch (const Error& e) {
        fail_case(r, i, e);
        break;
      }
    }
    return r;
  });
}

std::string render(const Report& r, bool with_timing) {
  std::ostringstream out;
  out << "system: " << system_name(r.system) << '\n';
  out << "mutant: " << mutant_name(r.mutant) << '\n';
  out << "verdict: " << verdict_name(r.verdict) << '\n';
  out << "cases: " << r.cases_run << '\n';
  if (r.terms_covered) out << "terms-covered: " << r.terms_covered << '\n';
  if (r.system == System::Transparency) {
    char frac[32];
    std::snprintf(frac, sizeof frac, "%.4f",
                  r.cases_run ? static_cast<double>(r.nonvacuous) / static_cast<double>(r.cases_run)
                              : 0.0);
    out << "non-vacuous: " << r.nonvacuous << '/' << r.cases_run << " (" << frac << ")\n";
    out << "weak-campaign: " << (r.weak_campaign ? "yes" : "no") << '\n';
  }
  if (r.system == System::Lio) {
    out << "lio-steps: " << r.lio.steps << '\n';
    out << "sentinel-checks: " << r.lio.sentinel_checks << '\n';
  }
  if (!r.message.empty()) out << "message: " << one_line(r.message) << '\n';
  if (r.counterexample) {
    if (r.counterexample->original_size) {
      out << "shrunk: " << r.counterexample->original_size << " -> "
          << r.counterexample->program.body.size() << " nodes\n";
    }
    out << "counterexample:\n";
    std::istringstream lines(replay_text(*r.counterexample));
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
  if (with_timing) {
    char t[32];
    std::snprintf(t, sizeof t, "%.3f", r.elapsed_seconds);
    out << "elapsed: " << t << "s\n";
  }
  return out.str();
}

std::string replay_text(const Counterexample& c) {
  std::ostringstream out;
  put(out, "system", system_name(c.system));
  put(out, "mutant", mutant_name(c.mutant));
  std::istringstream lattice(c.lattice->to_text());
  for (std::string line; std::getline(lattice, line);) put(out, "lattice", line);
  put(out, "observer", c.observer.name());
  put(out, "seed", std::to_string(c.seed));
  put(out, "case", std::to_string(c.case_index));
  for (const auto& [name, v] : c.inputs0) put(out, "input0." + name, to_string(v));
  for (const auto& [name, v] : c.inputs1) put(out, "input1." + name, to_string(v));
  if (!c.output0.empty()) put(out, "output0", c.output0);
  if (!c.output1.empty()) put(out, "output1", c.output1);
  if (!c.detail.empty()) put(out, "detail", c.detail);
  out << "---\n" << to_string(c.program);
  return out.str();
}

Report replay(std::string_view text) {
  std::map<std::string, std::string> header;
  std::string lattice_text;
  std::size_t pos = 0;
  bool separated = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (line == "---") {
      separated = true;
      break;
    }
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw HarnessError("replay header line without '=': " + line);
    const std::string key = line.substr(0, eq);
    if (key == "lattice") {
      lattice_text += line.substr(eq + 1) + "\n";
    } else {
      header[key] = line.substr(eq + 1);
    }
  }
  if (!separated) throw HarnessError("replay file has no '---' line before the program");
  auto field = [&](const std::string& key) -> const std::string& {
    auto it = header.find(key);
    if (it == header.end()) throw HarnessError("replay header is missing '" + key + "'");
    return it->second;
  };

  Counterexample c;
  const auto system = system_from_name(field("system"));
  if (!system) throw HarnessError("unknown system '" + field("system") + "'");
  c.system = *system;
  const auto mutant = mutant_from_name(header.count("mutant") ? header["mutant"] : "none");
  if (!mutant) throw HarnessError("unknown mutant '" + header["mutant"] + "'");
  c.mutant = *mutant;
  const LatticePtr lattice = LatticeSpec::parse(lattice_text);
  const LatticeSpec& spec = *lattice;
  c.lattice = lattice;
  c.observer = spec.at(field("observer"));
  c.seed = std::stoull(field("seed"));
  c.case_index = std::stoull(field("case"));
  c.program = parse_program(text.substr(std::min(pos, text.size())), spec);
  typecheck_program(c.program);

  auto input_type = [&](const Univ& declared) {
    switch (c.system) {
      case System::Transparency: return declared.inner();
      case System::Projection: return Univ::fac(declared);
      default: return declared;
    }
  };
  const bool two = c.system == System::Facets || c.system == System::Lio ||
                   c.system == System::Transparency;
  for (const auto& [name, type] : c.program.inputs) {
    const Univ u = input_type(type);
    c.inputs0.emplace_back(name, parse_value(field("input0." + name), u, spec));
    if (two) c.inputs1.emplace_back(name, parse_value(field("input1." + name), u, spec));
  }

  Report r;
  r.system = c.system;
  r.mutant = c.mutant;
  r.cases_run = 1;
  Outcome o;
  try {
    switch (c.system) {
      case System::Facets:
        o = run_facets_case(spec, c.program, c.observer, c.inputs0, c.inputs1, c.mutant);
        break;
      case System::Lio:
        o = run_lio_case(spec, c.program, c.observer, c.inputs0, c.inputs1, c.mutant, &r.lio);
        break;
      case System::Transparency:
        o = run_transparency_case(c.program, c.observer, c.inputs0.front().second,
                                  c.inputs1.front().second, c.mutant);
        if (!o.vacuous) r.nonvacuous = 1;
        break;
      case System::Projection:
        o = run_projection_case(c.program, c.observer, c.inputs0.front().second.as_fac());
        break;
    }
  } catch (const SoundnessViolation& e) {
    c.detail = e.what();
    r.verdict = Verdict::Soundness;
    r.counterexample = std::move(c);
    return r;
  }
  if (o.violated) {
    c.output0 = o.out0;
    c.output1 = o.out1;
    c.detail = header.count("detail") ? header["detail"] : o.detail;
    r.verdict = Verdict::Counterexample;
    r.counterexample = std::move(c);
  }
  return r;
}

System designated_checker(Mutant m) {
  switch (m) {
    case Mutant::ProjectIgnoresGuard: return System::Transparency;
    case Mutant::BindSwapsBranches: return System::Facets;
    default: return System::Lio;
  }
}

SuiteReport run_mutant_suite(const LatticePtr& lattice, std::uint64_t seed, std::uint64_t cases) {
  SuiteReport s;
  auto config = [&](System sys, Mutant m) {
    CheckConfig cfg;
    cfg.system = sys;
    cfg.lattice = lattice;
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.mutant = m;
    return cfg;
  };
  s.passed = true;
  for (const Mutant m : all_mutants()) {
    const System sys = designated_checker(m);
    MutantRun run{m, sys, check(config(sys, m))};
    s.passed = s.passed && run.report.detected();
    s.runs.push_back(std::move(run));
  }
  for (const System sys : {System::Facets, System::Lio, System::Transparency}) {
    Report control = check(config(sys, Mutant::None));
    s.passed = s.passed && control.verdict == Verdict::Pass;
    s.controls.push_back(std::move(control));
  }
  return s;
}

std::string render(const SuiteReport& s, bool with_timing) {
  std::ostringstream out;
  for (const MutantRun& run : s.runs) {
    out << "mutant " << mutant_name(run.mutant) << " [" << system_name(run.checker)
        << "]: " << (run.report.detected() ? "detected" : "missed") << " ("
        << verdict_name(run.report.verdict) << " after " << run.report.cases_run << " cases)";
    if (with_timing) {
      char t[32];
      std::snprintf(t, sizeof t, " %.3fs", run.report.elapsed_seconds);
      out << t;
    }
    out << '\n';
  }
  for (const Report& c : s.controls) {
    out << "control " << system_name(c.system) << ": " << verdict_name(c.verdict) << " ("
        << c.cases_run << " cases)";
    if (with_timing) {
      char t[32];
      std::snprintf(t, sizeof t, " %.3fs", c.elapsed_seconds);
      out << t;
    }
    out << '\n';
  }
  out << "suite: " << (s.passed ? "pass" : "fail") << '\n';
  for (const MutantRun& run : s.runs) {
    if (!run.report.counterexample) continue;
    out << "\n# " << mutant_name(run.mutant) << '\n' << replay_text(*run.report.counterexample);
  }
  return out.str();
}

}  // namespace ifc
