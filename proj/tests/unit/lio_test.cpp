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

#include <gtest/gtest.h>

#include "ifckit/interp.hpp"
#include "ifckit/lio.hpp"
#include "ifckit/mutants.hpp"
#include "ifckit/parser.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/universe.hpp"

namespace ifc {
namespace {

using lio::label;
using lio::lio_bind;
using lio::lio_catch;
using lio::lio_return;
using lio::lio_throw;
using lio::run;
using lio::to_labeled;
using lio::unlabel;

const Value kTrue = Value::boolean(true);
const Value kFalse = Value::boolean(false);

class LioTest : public ::testing::Test {
 protected:
  LatticePtr two = LatticeSpec::two_point();
  Label L = two->at("L"), H = two->at("H");
};

TEST_F(LioTest, ReturnKeepsLabel) {
  EXPECT_EQ(run(lio_return(kTrue), L), Config::ok(kTrue, L));
}

TEST_F(LioTest, UnlabelRaisesByTag) {
  EXPECT_EQ(run(unlabel(label(H, kTrue)), L), Config::ok(kTrue, H));
  EXPECT_EQ(run(unlabel(label(L, kTrue)), H), Config::ok(kTrue, H));
  EXPECT_EQ(run(unlabel(label(L, Value::nat(7))), L), Config::ok(Value::nat(7), L));
}

TEST_F(LioTest, UnlabelRethrowsDelayed) {
  const LabeledValue lv = LabeledValue::delayed(Exception::ifc(L), L);
  EXPECT_EQ(run(unlabel(lv), L), Config::thrown(Exception::ifc(L), L));
}

TEST_F(LioTest, LabelOfIsTag) {
  EXPECT_EQ(lio::label_of(label(H, kTrue)), H);
  EXPECT_EQ(lio::label_of(LabeledValue::delayed(Exception::user("x"), H)), H);
}

TEST_F(LioTest, ToLabeledSuccess) {
  const Config c = run(to_labeled(H, unlabel(label(H, kTrue))), L);
  EXPECT_EQ(c, Config::ok(Value::labeled(LabeledValue::ok(kTrue, H)), L));
}

TEST_F(LioTest, ToLabeledIfcFailure) {
  const Config c = run(to_labeled(L, unlabel(label(H, kTrue))), L);
  EXPECT_EQ(c, Config::ok(Value::labeled(LabeledValue::delayed(Exception::ifc(L), L)), L));
}

TEST_F(LioTest, ToLabeledDelaysUserError) {
  const Config c = run(to_labeled(H, lio_throw(Exception::user("x"))), L);
  EXPECT_EQ(c, Config::ok(Value::labeled(LabeledValue::delayed(Exception::user("x"), H)), L));
}

TEST_F(LioTest, ToLabeledFailureWinsOverThrow) {
  const LioComp m = lio_bind(unlabel(label(H, kTrue)),
                             [](const Value&) { return lio_throw(Exception::user("x")); });
  EXPECT_EQ(run(to_labeled(L, m), L),
            Config::ok(Value::labeled(LabeledValue::delayed(Exception::ifc(L), L)), L));
}

TEST_F(LioTest, ThrowAndBindShortCircuit) {
  const Exception e = Exception::user("boom");
  EXPECT_EQ(run(lio_throw(e), L), Config::thrown(e, L));
  int calls = 0;
  const LioCont k = [&](const Value& v) {
    ++calls;
    return lio_return(v);
  };
  EXPECT_EQ(run(lio_bind(lio_throw(e), k), H), Config::thrown(e, H));
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(run(lio_bind(lio_return(kTrue), k), L), Config::ok(kTrue, L));
  EXPECT_EQ(calls, 1);
}

TEST_F(LioTest, CatchPassesOrHandles) {
  const LioCont h = [](const Value& e) {
    return e.as_error().is_user() ? lio_return(kFalse) : lio_return(kTrue);
  };
  EXPECT_EQ(run(lio_catch(lio_return(kTrue), h), L), Config::ok(kTrue, L));
  EXPECT_EQ(run(lio_catch(lio_throw(Exception::user("e")), h), L), Config::ok(kFalse, L));
  const LioCont echo = [](const Value& e) { return lio_return(e); };
  EXPECT_EQ(run(lio_catch(lio_throw(Exception::user("e")), echo), H),
            Config::ok(Value::error(Exception::user("e")), H));
}

TEST_F(LioTest, CatchResumesAtRaisedLabel) {
  const LioComp m = lio_bind(unlabel(label(H, kTrue)),
                             [](const Value&) { return lio_throw(Exception::user("e")); });
  const LioComp c = lio_catch(m, [](const Value&) { return lio_return(kFalse); });
  EXPECT_EQ(run(c, L), Config::ok(kFalse, H));
}

TEST_F(LioTest, CatchRethrownIfcError) {
  const LabeledValue lv = LabeledValue::delayed(Exception::ifc(L), H);
  const LioComp c = lio_catch(unlabel(lv), [](const Value& e) { return lio_return(e); });
  EXPECT_EQ(run(c, L), Config::ok(Value::error(Exception::ifc(L)), H));
}

TEST_F(LioTest, CatchDoesNotMaskSuccessRaise) {
  const LioComp c = lio_catch(unlabel(label(H, kTrue)),
                              [](const Value&) { return lio_return(kFalse); });
  EXPECT_EQ(run(c, L), Config::ok(kTrue, H));
}

TEST_F(LioTest, MonadLaws) {
  const LatticePtr d = LatticeSpec::diamond();
  const Label alice = d->at("Alice");
  const LioCont k = [&](const Value& v) {
    return lio_bind(unlabel(label(alice, v)), [](const Value& w) { return lio_return(w); });
  };
  const LioCont h = [&](const Value& v) {
    return v.as_nat() > 2 ? lio_throw(Exception::user("big")) : lio_return(Value::nat(v.as_nat() + 5));
  };
  const std::vector<LioComp> ms = {
      lio_return(Value::nat(1)), unlabel(label(d->at("Bob"), Value::nat(3))),
      lio_throw(Exception::user("x")),
      to_labeled(alice, unlabel(label(d->at("⊤"), Value::nat(0))))};
  const Value a = Value::nat(2);
  for (Label l : d->labels()) {
    EXPECT_EQ(run(lio_bind(lio_return(a), k), l), run(k(a), l));
    for (const LioComp& m : ms) {
      EXPECT_EQ(run(lio_bind(m, [](const Value& v) { return lio_return(v); }), l), run(m, l));
      if (m.kind() == LioComp::Kind::ToLabeled) continue;  // k, h expect nat
      EXPECT_EQ(run(lio_bind(lio_bind(m, k), h), l),
                run(lio_bind(m, [&](const Value& v) { return lio_bind(k(v), h); }), l));
    }
  }
}

TEST_F(LioTest, ToLabeledRestoresEverywhere) {
  const LatticePtr d = LatticeSpec::diamond();
  for (Label target : d->labels()) {
    for (Label tag : d->labels()) {
      for (Label start : d->labels()) {
        const Config c = run(to_labeled(target, unlabel(label(tag, kTrue))), start);
        EXPECT_EQ(c.out_label(), start);
        ASSERT_TRUE(c.is_ok());
        EXPECT_EQ(c.value().as_labeled().tag(), target);
        EXPECT_EQ(c.value().as_labeled().is_ok(), d->leq(d->join(start, tag), target));
      }
    }
  }
}

TEST_F(LioTest, SentinelCatchesMissingRestore) {
  const LioSemantics& bad = lio_semantics(Mutant::ToLabeledNoRestore);
  EXPECT_THROW(run(to_labeled(H, unlabel(label(H, kTrue))), L, bad), SoundnessViolation);
  RunStats stats;
  run(to_labeled(H, unlabel(label(H, kTrue))), L, LioSemantics::standard(), &stats);
  EXPECT_GT(stats.steps, 0u);
  EXPECT_GT(stats.sentinel_checks, 0u);
}

TEST_F(LioTest, MutantsDifferFromStandard) {
  const LioComp reveal = unlabel(label(H, kTrue));
  EXPECT_EQ(run(reveal, L, lio_semantics(Mutant::UnlabelNoRaise)), Config::ok(kTrue, L));
  EXPECT_EQ(run(reveal, L, lio_semantics(Mutant::LabelOfReturnsBottom)), Config::ok(kTrue, L));
  EXPECT_EQ(run(to_labeled(L, reveal), L, lio_semantics(Mutant::ToLabeledSkipsCheck)),
            Config::ok(Value::labeled(LabeledValue::ok(kTrue, L)), L));
  EXPECT_EQ(&lio_semantics(Mutant::None), &LioSemantics::standard());
  EXPECT_EQ(&lio_semantics(Mutant::BindSwapsBranches), &LioSemantics::standard());
}

TEST_F(LioTest, EvalLioExamples) {
  const ValueEnv x{{"x", Value::labeled(label(H, kTrue))}};
  EXPECT_EQ(eval_lio(parse_term("(label-of x)", *two), x), Value::label(H));
  const Value c = eval_lio(parse_term("(to-labeled H (unlabel x))", *two), x);
  EXPECT_EQ(run(c.as_lio(), L), Config::ok(Value::labeled(LabeledValue::ok(kTrue, H)), L));
  const Value k = eval_lio(parse_term("(catch (throw bool \"e\") h (lio-return false))", *two), {});
  EXPECT_EQ(run(k.as_lio(), L), Config::ok(kFalse, L));
}

// Each primitive maps equivalent inputs to equivalent outputs.
TEST(LioPrimitiveNi, EquivalentInputsStayEquivalent) {
  Rng rng(3);
  const std::vector<Univ> payloads = {Univ::boolean(), Univ::nat(),
                                      Univ::plus(Univ::boolean(), Univ::nat()),
                                      Univ::times(Univ::nat(), Univ::boolean())};
  for (const LatticePtr& s : {LatticeSpec::two_point(), LatticeSpec::diamond()}) {
    const auto labels = s->labels();
    for (int i = 0; i < 400; ++i) {
      Rng r = rng.split(i);
      const Label obs = r.pick(labels);
      const Label target = r.pick(labels);
      const Univ u = r.pick(payloads);
      const Univ lu = Univ::labeled(u);
      const auto [a, b] = gen_equiv_pair(r, *s, obs, lu);
      ASSERT_TRUE(equiv(*s, obs, lu, a, b));
      const LabeledValue& la = a.as_labeled();
      const LabeledValue& lb = b.as_labeled();

      EXPECT_EQ(lio::label_of(la), lio::label_of(lb));
      EXPECT_TRUE(equiv(*s, obs, Univ::lio(u), Value::lio(unlabel(la)), Value::lio(unlabel(lb))));
      EXPECT_TRUE(equiv(*s, obs, Univ::lio(lu), Value::lio(to_labeled(target, unlabel(la))),
                        Value::lio(to_labeled(target, unlabel(lb)))));
      const LioCont h = [](const Value&) { return lio_return(Value::boolean(false)); };
      const LioCont keep = [](const Value&) { return lio_return(Value::boolean(true)); };
      EXPECT_TRUE(equiv(*s, obs, Univ::lio(Univ::boolean()),
                        Value::lio(lio_catch(lio_bind(unlabel(la), keep), h)),
                        Value::lio(lio_catch(lio_bind(unlabel(lb), keep), h))));

      const auto [v0, v1] = gen_equiv_pair(r, *s, obs, u);
      EXPECT_TRUE(equiv(*s, obs, lu, Value::labeled(label(target, v0)),
                        Value::labeled(label(target, v1))));
      EXPECT_TRUE(equiv(*s, obs, Univ::lio(u), Value::lio(lio_return(v0)),
                        Value::lio(lio_return(v1))));
    }
  }
}

}  // namespace
}  // namespace ifc
