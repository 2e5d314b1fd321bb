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

#include "ifckit/facets.hpp"
#include "ifckit/lio.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/universe.hpp"

namespace ifc {
namespace {

const Univ B = Univ::boolean();
const Univ N = Univ::nat();
const Value kTrue = Value::boolean(true);
const Value kFalse = Value::boolean(false);

class UniverseTest : public ::testing::Test {
 protected:
  LatticePtr two = LatticeSpec::two_point();
  Label L = two->at("L"), H = two->at("H");

  Value lv(Label l, Value v) { return Value::labeled(LabeledValue::ok(std::move(v), l)); }
};

TEST_F(UniverseTest, ElCheck) {
  EXPECT_TRUE(el_check(B, kTrue));
  EXPECT_FALSE(el_check(Univ::labeled(B), lv(H, Value::nat(3))));
  EXPECT_TRUE(el_check(Univ::plus(B, N), Value::inr(Value::nat(4))));
  EXPECT_FALSE(el_check(Univ::plus(B, N), Value::inl(Value::nat(4))));
  EXPECT_TRUE(el_check(Univ::labeled(N),
                       Value::labeled(LabeledValue::delayed(Exception::user("x"), H))));
  EXPECT_TRUE(el_check(Univ::times(N, B), Value::pair(Value::nat(1), kFalse)));
  EXPECT_TRUE(el_check(Univ::fac(B), Value::fac(facets::fac_facet(H, facets::fac_return(kTrue),
                                                                  facets::fac_return(kFalse)))));
  EXPECT_FALSE(el_check(Univ::fac(B), Value::fac(facets::fac_facet(
                                          H, facets::fac_return(kTrue),
                                          facets::fac_return(Value::nat(0))))));
  EXPECT_TRUE(el_check(Univ::lio(B), Value::lio(lio::lio_return(kTrue)), two.get()));
  EXPECT_FALSE(el_check(Univ::lio(B), Value::lio(lio::lio_return(Value::nat(1))), two.get()));
}

TEST_F(UniverseTest, TypeText) {
  EXPECT_EQ(Univ::labeled(Univ::plus(B, N)).text(), "(labeled (plus bool nat))");
  EXPECT_EQ(Univ::fac(B).depth(), 2u);
  EXPECT_EQ(family_of(Univ::fac(B)), Family::Facets);
  EXPECT_EQ(family_of(Univ::lio(B)), Family::Lio);
  EXPECT_EQ(family_of(Univ::times(B, N)), Family::Neutral);
  EXPECT_THROW(family_of(Univ::times(Univ::fac(B), Univ::labeled(B))), TypeError);
}

TEST_F(UniverseTest, LabeledEquivalence) {
  const Univ u = Univ::labeled(B);
  EXPECT_TRUE(equiv(*two, L, u, lv(H, kTrue), lv(H, kFalse)));
  EXPECT_FALSE(equiv(*two, L, u, lv(L, kTrue), lv(L, kFalse)));
  EXPECT_FALSE(equiv(*two, L, u, lv(H, kTrue), lv(L, kTrue)));
  EXPECT_FALSE(equiv(*two, H, u, lv(H, kTrue), lv(H, kFalse)));
  const Value delayed = Value::labeled(LabeledValue::delayed(Exception::user("e"), L));
  EXPECT_FALSE(equiv(*two, L, u, lv(L, kTrue), delayed));
  EXPECT_TRUE(equiv(*two, L, u, delayed, delayed));
}

TEST_F(UniverseTest, LioEquivalence) {
  const Univ u = Univ::lio(B);
  const Value ret = Value::lio(lio::lio_return(kTrue));
  EXPECT_TRUE(equiv(*two, L, u, ret, ret));
  // Both runs end at H, so nothing is observable at L.
  const Value r0 = Value::lio(lio::unlabel(LabeledValue::ok(kTrue, H)));
  const Value r1 = Value::lio(lio::unlabel(LabeledValue::ok(kFalse, H)));
  EXPECT_TRUE(equiv(*two, L, u, r0, r1));
  EXPECT_FALSE(equiv(*two, H, u, r0, r1));
  // The same payloads at L are visible.
  const Value p0 = Value::lio(lio::unlabel(LabeledValue::ok(kTrue, L)));
  const Value p1 = Value::lio(lio::unlabel(LabeledValue::ok(kFalse, L)));
  EXPECT_FALSE(equiv(*two, L, u, p0, p1));
  RunStats stats;
  equiv(*two, L, u, ret, ret, LioSemantics::standard(), &stats);
  EXPECT_GT(stats.steps, 0u);
}

TEST_F(UniverseTest, ConfigEquivalence) {
  EXPECT_TRUE(labels_equiv(*two, L, H, H));
  EXPECT_FALSE(labels_equiv(*two, L, L, H));
  EXPECT_TRUE(config_equiv(*two, L, B, Config::ok(kTrue, H), Config::ok(kFalse, H)));
  EXPECT_FALSE(config_equiv(*two, L, B, Config::ok(kTrue, L), Config::ok(kFalse, L)));
  EXPECT_FALSE(config_equiv(*two, L, B, Config::ok(kTrue, L),
                            Config::thrown(Exception::user("e"), L)));
  EXPECT_TRUE(config_equiv(*two, L, B, Config::thrown(Exception::ifc(H), L),
                           Config::thrown(Exception::ifc(H), L)));
}

TEST_F(UniverseTest, FacEquivalence) {
  const Value f0 = Value::fac(facets::fac_facet(H, facets::fac_return(kTrue), facets::fac_return(kFalse)));
  const Value f1 = Value::fac(facets::fac_facet(H, facets::fac_return(kFalse), facets::fac_return(kFalse)));
  EXPECT_TRUE(equiv(*two, L, Univ::fac(B), f0, f1));
  EXPECT_FALSE(equiv(*two, H, Univ::fac(B), f0, f1));
}

TEST_F(UniverseTest, ShapeMismatchIsHarnessError) {
  EXPECT_THROW(equiv(*two, L, B, kTrue, Value::nat(1)), HarnessError);
  EXPECT_THROW(equiv(*two, L, Univ::labeled(B), kTrue, kTrue), HarnessError);
}

TEST_F(UniverseTest, EnumValuesSizes) {
  // bool 2; labeled bool: 2 tags x (2 payloads + 1 delayed error);
  // fac bool: 2 leaves + 2 guards x 2 x 2 one-node trees.
  EXPECT_EQ(enum_values(*two, B).size(), 2u);
  EXPECT_EQ(enum_values(*two, Univ::labeled(B)).size(), 6u);
  EXPECT_EQ(enum_values(*two, Univ::fac(B)).size(), 10u);
  EXPECT_EQ(enum_values(*two, Univ::times(B, Univ::plus(B, N))).size(), 8u);
}

// Reflexive, symmetric and transitive over the finite value spaces.
TEST(UniverseEquiv, IsEquivalenceOnFiniteSpaces) {
  for (const LatticePtr& s : {LatticeSpec::two_point(), LatticeSpec::diamond()}) {
    const std::vector<Univ> types = {B,
                                     N,
                                     Univ::error(),
                                     Univ::labeled(B),
                                     Univ::plus(B, Univ::labeled(N)),
                                     Univ::times(Univ::labeled(B), B),
                                     Univ::fac(B),
                                     Univ::fac(Univ::plus(B, N))};
    for (const Univ& u : types) {
      const auto vs = enum_values(*s, u);
      for (Label obs : s->labels()) {
        for (const Value& a : vs) {
          EXPECT_TRUE(equiv(*s, obs, u, a, a)) << u.text();
          for (const Value& b : vs) {
            const bool ab = equiv(*s, obs, u, a, b);
            EXPECT_EQ(ab, equiv(*s, obs, u, b, a));
            if (!ab) continue;
            for (const Value& c : vs) {
              if (equiv(*s, obs, u, b, c)) EXPECT_TRUE(equiv(*s, obs, u, a, c)) << u.text();
            }
          }
        }
      }
    }
  }
}

TEST(UniverseEquiv, TopObserverSeesEverything) {
  const LatticePtr d = LatticeSpec::diamond();
  const Label top = *d->top();
  for (const Univ& u : {Univ::labeled(B), Univ::labeled(Univ::times(B, N))}) {
    const auto vs = enum_values(*d, u);
    for (const Value& a : vs) {
      for (const Value& b : vs) EXPECT_EQ(equiv(*d, top, u, a, b), a == b);
    }
  }
}

TEST(UniverseGen, ValuesInhabitTheirTypes) {
  Rng rng(1);
  for (const LatticePtr& s : {LatticeSpec::two_point(), LatticeSpec::diamond()}) {
    for (int i = 0; i < 1000; ++i) {
      Rng r = rng.split(i);
      const Univ u = gen_input_type(r, i % 2 ? Family::Lio : Family::Facets, 3);
      EXPECT_FALSE(u.mentions(Univ::Kind::Lio));
      const Value v = gen_value(r, *s, u);
      EXPECT_TRUE(el_check(u, v, s.get())) << u.text() << " " << to_string(v);
    }
  }
}

bool has_ifc_error(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Labeled:
      return v.as_labeled().is_ok() ? has_ifc_error(v.as_labeled().value())
                                    : !v.as_labeled().exception().is_user();
    case Value::Kind::Inl:
    case Value::Kind::Inr:
      return has_ifc_error(v.inner());
    case Value::Kind::Pair:
      return has_ifc_error(v.first()) || has_ifc_error(v.second());
    default:
      return false;
  }
}

TEST(UniverseGen, NoFabricatedIfcErrors) {
  Rng rng(2);
  const LatticePtr d = LatticeSpec::diamond();
  const Univ u = Univ::times(Univ::labeled(N), Univ::plus(Univ::labeled(B), B));
  bool saw_delayed = false;
  for (int i = 0; i < 2000; ++i) {
    const Value v = gen_value(rng, *d, u);
    EXPECT_FALSE(has_ifc_error(v));
    saw_delayed = saw_delayed || !v.first().as_labeled().is_ok();
  }
  EXPECT_TRUE(saw_delayed);
}

TEST(UniverseGen, EquivalentPairsAreEquivalent) {
  Rng rng(4);
  std::size_t distinct = 0;
  for (int i = 0; i < 10000; ++i) {
    Rng r = rng.split(i);
    const LatticePtr s = i % 2 ? LatticeSpec::diamond() : LatticeSpec::two_point();
    const Label obs = r.pick(s->labels());
    const Univ u = gen_input_type(r, i % 3 == 0 ? Family::Facets : Family::Lio, 3);
    const auto [a, b] = gen_equiv_pair(r, *s, obs, u);
    ASSERT_TRUE(el_check(u, a) && el_check(u, b));
    ASSERT_TRUE(equiv(*s, obs, u, a, b)) << u.text() << "\n" << to_string(a) << "\n" << to_string(b);
    distinct += !(a == b);
  }
  // Pairs are not trivially identical.
  EXPECT_GT(distinct, 1000u);
}

TEST(UniverseGen, BoolPairIsIdentical) {
  Rng rng(9);
  const LatticePtr s = LatticeSpec::two_point();
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = gen_equiv_pair(rng, *s, s->bottom(), B);
    EXPECT_EQ(a, b);
  }
}

TEST(UniverseGen, HiddenPayloadsVary) {
  Rng rng(10);
  const LatticePtr s = LatticeSpec::two_point();
  const Label L = s->at("L"), H = s->at("H");
  int differ = 0;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = gen_equiv_pair(rng, *s, L, Univ::labeled(B));
    ASSERT_EQ(a.as_labeled().tag(), b.as_labeled().tag());
    if (a.as_labeled().tag() == L) EXPECT_EQ(a, b);
    if (a.as_labeled().tag() == H && !(a == b)) ++differ;
  }
  EXPECT_GT(differ, 10);
}

}  // namespace
}  // namespace ifc
