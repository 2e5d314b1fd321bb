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

#include <fstream>
#include <sstream>

#include "ifckit/facets.hpp"
#include "ifckit/interp.hpp"
#include "ifckit/parser.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/typecheck.hpp"
#include "ifckit/universe.hpp"

namespace ifc {
namespace {

using facets::fac_bind;
using facets::fac_facet;
using facets::fac_return;
using facets::project;

std::string read_file(const std::string& rel) {
  std::ifstream in(std::string(IFCKIT_TEST_DATA) + "/" + rel);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FacTree nat_leaf(Nat n) { return fac_return(Value::nat(n)); }
const Value kHot = Value::inl(Value::boolean(true));
const Value kCold = Value::inr(Value::boolean(true));

class FacetsTest : public ::testing::Test {
 protected:
  LatticePtr d = LatticeSpec::diamond();
  Label bot = d->at("⊥"), alice = d->at("Alice"), bob = d->at("Bob"), top = d->at("⊤");
  FacTree f0 = fac_facet(alice, nat_leaf(10), nat_leaf(0));
  FacTree f1 = fac_facet(alice, nat_leaf(30), nat_leaf(0));

  Program is_cold() { return parse_program(read_file("programs/is_cold.prog"), *d); }
  Value run_is_cold(const MultefBackend& b, Value in) {
    const Program p = is_cold();
    return eval_facets(b, p.body, {{"fint", std::move(in)}});
  }
};

TEST_F(FacetsTest, ReturnProjectsToItself) {
  for (Label l : d->labels()) EXPECT_EQ(project(l, nat_leaf(10)), Value::nat(10));
}

TEST_F(FacetsTest, BindReturnIsApplication) {
  const facets::Continuation k = [&](const Value& v) {
    return fac_facet(bob, fac_return(v), nat_leaf(v.as_nat() + 1));
  };
  EXPECT_EQ(fac_bind(nat_leaf(4), k), k(Value::nat(4)));
}

TEST_F(FacetsTest, NestedAdditionGolden) {
  const FacTree a = fac_facet(alice, nat_leaf(0), nat_leaf(1));
  const FacTree b = fac_facet(bob, nat_leaf(2), nat_leaf(3));
  const FacTree sum = fac_bind(a, [&](const Value& x) {
    return fac_bind(b, [&](const Value& y) { return nat_leaf(x.as_nat() + y.as_nat()); });
  });
  const FacTree expected =
      fac_facet(alice, fac_facet(bob, nat_leaf(2), nat_leaf(3)),
                fac_facet(bob, nat_leaf(3), nat_leaf(4)));
  EXPECT_EQ(sum, expected);
  EXPECT_EQ(to_string(sum),
            "(facet Alice (facet Bob (return 2) (return 3)) (facet Bob (return 3) (return 4)))");
}

TEST_F(FacetsTest, FacetShapesArePreserved) {
  const FacTree same = fac_facet(alice, nat_leaf(1), nat_leaf(1));
  EXPECT_EQ(same.size(), 3u);
  EXPECT_FALSE(same.is_leaf());
  for (Label l : d->labels()) EXPECT_EQ(project(l, same), Value::nat(1));
}

TEST_F(FacetsTest, ProjectionFollowsGuard) {
  EXPECT_EQ(project(alice, f0), Value::nat(10));
  EXPECT_EQ(project(top, f0), Value::nat(10));
  EXPECT_EQ(project(bob, f0), Value::nat(0));
  EXPECT_EQ(project(bot, f0), Value::nat(0));
  EXPECT_EQ(project(bob, f0), project(bob, f1));
}

TEST_F(FacetsTest, ProjectionUsesGuardToObserver) {
  // In a chain the guard L flows to observer H, so H sees the private side;
  // a guard H is hidden from L.
  const LatticePtr c = LatticeSpec::two_point();
  const Label lo = c->at("L"), hi = c->at("H");
  const FacTree low = fac_facet(lo, nat_leaf(1), nat_leaf(2));
  const FacTree high = fac_facet(hi, nat_leaf(1), nat_leaf(2));
  EXPECT_EQ(project(hi, low), Value::nat(1));
  EXPECT_EQ(project(lo, low), Value::nat(1));
  EXPECT_EQ(project(hi, high), Value::nat(1));
  EXPECT_EQ(project(lo, high), Value::nat(2));
}

TEST_F(FacetsTest, IsColdGolden) {
  const Value r0 = run_is_cold(MultefBackend::secure(), Value::fac(f0));
  const Value r1 = run_is_cold(MultefBackend::secure(), Value::fac(f1));
  EXPECT_EQ(r0.as_fac(), fac_facet(alice, fac_return(kCold), fac_return(kCold)));
  EXPECT_EQ(r1.as_fac(), fac_facet(alice, fac_return(kHot), fac_return(kCold)));
  EXPECT_EQ(project(bob, r0.as_fac()), project(bob, r1.as_fac()));
  EXPECT_EQ(project(bob, r0.as_fac()), kCold);
  EXPECT_EQ(project(alice, r1.as_fac()), kHot);
}

TEST_F(FacetsTest, IsColdTypechecks) {
  const Program p = is_cold();
  EXPECT_EQ(typecheck(p.body, p.inputs).type,
            Univ::fac(Univ::plus(Univ::boolean(), Univ::boolean())));
  EXPECT_EQ(typecheck_program(p), Family::Facets);
}

TEST_F(FacetsTest, IsColdStandard) {
  const Value r = run_is_cold(MultefBackend::standard(), Value::maybe(facets::std_return(Value::nat(10))));
  ASSERT_TRUE(r.as_maybe().is_just());
  EXPECT_EQ(r.as_maybe().value(), kCold);
}

TEST_F(FacetsTest, FacEquiv) {
  const Univ fn = Univ::nat();
  EXPECT_TRUE(facets::fac_equiv(bob, fn, f0, f1));
  EXPECT_FALSE(facets::fac_equiv(alice, fn, f0, f1));
  EXPECT_TRUE(facets::fac_equiv(alice, fn, f0, f0));
  const Univ hc = Univ::plus(Univ::boolean(), Univ::boolean());
  const Program p = is_cold();
  const Value r0 = eval_facets(MultefBackend::secure(), p.body, {{"fint", Value::fac(f0)}});
  const Value r1 = eval_facets(MultefBackend::secure(), p.body, {{"fint", Value::fac(f1)}});
  EXPECT_TRUE(facets::fac_equiv(bob, hc, r0.as_fac(), r1.as_fac()));
}

TEST_F(FacetsTest, StandardSemantics) {
  const StdFac j = facets::std_return(Value::nat(3));
  EXPECT_FALSE(facets::std_facet(alice, j, j).is_just());
  const facets::StdContinuation k = [](const Value& v) {
    return facets::std_return(Value::nat(v.as_nat() * 2));
  };
  EXPECT_EQ(facets::std_bind(j, k), facets::std_return(Value::nat(6)));
  int calls = 0;
  const facets::StdContinuation counted = [&](const Value& v) {
    ++calls;
    return facets::std_return(v);
  };
  EXPECT_FALSE(facets::std_bind(StdFac::nothing(), counted).is_just());
  EXPECT_EQ(calls, 0);
}

TEST_F(FacetsTest, StandardFacetOnPathIsNothing) {
  const Term t = parse_term("(fac-bind x v0 (fac-facet Alice (fac-return v0) (fac-return 0)))", *d);
  const Value r = eval_facets(MultefBackend::standard(), t,
                              {{"x", Value::maybe(facets::std_return(Value::nat(5)))}});
  EXPECT_FALSE(r.as_maybe().is_just());
  // A facet on an untaken branch leaves the standard run intact.
  const Term u = parse_term("(if true (fac-return 1) (fac-facet Alice (fac-return 2) (fac-return 3)))", *d);
  EXPECT_TRUE(eval_facets(MultefBackend::standard(), u, {}).as_maybe().is_just());
}

TEST_F(FacetsTest, BackendsAgreeOffFacets) {
  const Term t = parse_term("(pair (add x 2) (fac-return (leq-nat x 3)))", *d);
  const ValueEnv in{{"x", Value::nat(2)}};
  const Value s = eval_facets(MultefBackend::secure(), t, in);
  const Value n = eval_facets(MultefBackend::standard(), t, in);
  EXPECT_EQ(s.first(), n.first());
  EXPECT_EQ(s.second().as_fac(), fac_return(Value::boolean(true)));
  EXPECT_EQ(n.second().as_maybe(), facets::std_return(Value::boolean(true)));
}

// Random trees over the diamond with nat leaves.
FacTree random_tree(Rng& rng, const LatticeSpec& s, int height) {
  if (height == 0 || rng.chance(1, 3)) return nat_leaf(rng.below(5));
  return fac_facet(rng.pick(s.labels()), random_tree(rng, s, height - 1),
                   random_tree(rng, s, height - 1));
}

TEST_F(FacetsTest, MonadLawsAndHomomorphism) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rng r = rng.split(i);
    const FacTree f = random_tree(r, *d, 4);
    const FacTree g = random_tree(r, *d, 2);
    const Label l = r.pick(d->labels());
    const facets::Continuation k = [&](const Value& v) {
      return fac_facet(l, nat_leaf(v.as_nat() + 1), fac_bind(g, [&](const Value& w) {
                         return nat_leaf(v.as_nat() * w.as_nat());
                       }));
    };
    const facets::Continuation h = [&](const Value& v) {
      return v.as_nat() % 2 ? nat_leaf(0) : fac_facet(bob, nat_leaf(v.as_nat()), nat_leaf(7));
    };
    EXPECT_EQ(fac_bind(f, [](const Value& v) { return fac_return(v); }), f);
    EXPECT_EQ(fac_bind(fac_bind(f, k), h),
              fac_bind(f, [&](const Value& v) { return fac_bind(k(v), h); }));
    for (Label obs : d->labels()) {
      EXPECT_EQ(project(obs, fac_bind(f, k)), project(obs, k(project(obs, f))));
      const Label g2 = r.pick(d->labels());
      const FacTree node = fac_facet(g2, f, g);
      EXPECT_EQ(project(obs, node), d->leq(g2, obs) ? project(obs, f) : project(obs, g));
    }
  }
}

TEST_F(FacetsTest, FacEquivIsEquivalence) {
  Rng rng(5);
  std::vector<FacTree> trees;
  for (int i = 0; i < 40; ++i) trees.push_back(random_tree(rng, *d, 3));
  for (Label obs : d->labels()) {
    for (const FacTree& a : trees) {
      EXPECT_TRUE(facets::fac_equiv(obs, Univ::nat(), a, a));
      for (const FacTree& b : trees) {
        const bool ab = facets::fac_equiv(obs, Univ::nat(), a, b);
        EXPECT_EQ(ab, facets::fac_equiv(obs, Univ::nat(), b, a));
        if (!ab) continue;
        for (const FacTree& c : trees) {
          if (facets::fac_equiv(obs, Univ::nat(), b, c)) {
            EXPECT_TRUE(facets::fac_equiv(obs, Univ::nat(), a, c));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace ifc
