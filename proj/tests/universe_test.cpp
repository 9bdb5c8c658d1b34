/* Copyright 2026 The invgpd Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include "invgpd/universe.hpp"

namespace invgpd {
namespace {

TEST(Universe, EmptyBase) {
  Budget b;
  UniverseBundle u = build_universe(0, b);
  EXPECT_EQ(u.U()->g().num_objects(), 1u);
  EXPECT_EQ(u.U()->g().object_name(0), "({},{},[])");
  EXPECT_EQ(u.Utilde()->g().num_objects(), 0u);
}

TEST(Universe, OneElementBase) {
  Budget b;
  UniverseBundle u = build_universe(1, b);
  EXPECT_EQ(u.U()->g().num_objects(), 2u);
  EXPECT_EQ(u.U()->g().num_morphisms(), 2u);  // rigid
  EXPECT_EQ(u.Utilde()->g().num_objects(), 1u);
}

TEST(Universe, TwoElementBaseHasSwapAutomorphism) {
  Budget b;
  UniverseBundle u = build_universe(2, b);
  const Groupoid& g = u.U()->g();
  EXPECT_EQ(g.num_objects(), 7u);
  auto a = g.find_object("({a,b},{a,b},[a,b])");
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(g.hom(*a, *a).size(), 2u);
  EXPECT_TRUE(u.U()->is_fixed(*a));
}

TEST(Universe, CountsAtThree) {
  Budget b;
  UniverseBundle u = build_universe(3, b);
  EXPECT_EQ(u.U()->g().num_objects(), 34u);
  EXPECT_EQ(u.U()->g().num_morphisms(), 1u + 81u + 648u + 216u);
  EXPECT_THROW(build_universe(4, b), Error);
}

TEST(Universe, BundleLaws) {
  Budget b;
  for (int n = 0; n <= 3; ++n) {
    UniverseBundle u = build_universe(n, b);
    EXPECT_TRUE(validate_groupoid(u.U()->g().to_data()).empty());
    EXPECT_TRUE(validate_groupoid(u.Utilde()->g().to_data()).empty());
    EXPECT_TRUE(check_involution(u.U()->base, u.U()->inv_obj, u.U()->inv_mor).empty());
    EXPECT_TRUE(check_involution(u.Utilde()->base, u.Utilde()->inv_obj, u.Utilde()->inv_mor).empty());
    EXPECT_TRUE(check_equivariant(u.p()).empty());
    EXPECT_TRUE(classify_functor(u.p().map).discrete_fibration);
    EXPECT_TRUE(is_small_fibration(u.p(), n));
  }
}

EquivariantFunctor collapse() { return collapse_si(); }

TEST(SmallFibration, Examples) {
  EXPECT_TRUE(is_small_fibration(terminal_equivariant(shapes::s1()), 2));
  EXPECT_FALSE(is_small_fibration(terminal_equivariant(shapes::s1()), 1));
  EXPECT_FALSE(is_small_fibration(terminal_equivariant(shapes::interval_check()), 3));
  // Fibers of the collapse carry an arrow over an identity.
  EXPECT_FALSE(is_small_fibration(collapse(), 3));
}

TEST(Classify, IdentityOfPoint) {
  Budget b;
  UniverseBundle u = build_universe(1, b);
  Classification c = classify_small_fibration(identity_equivariant(shapes::point()), u);
  EXPECT_EQ(u.U()->g().object_name(c.g.on_obj(0)), "({a},{a},[a])");
  EXPECT_TRUE(is_isomorphism(c.chi.map));
}

TEST(Classify, SwappedPointsOverPoint) {
  Budget b;
  UniverseBundle u = build_universe(2, b);
  Classification c = classify_small_fibration(terminal_equivariant(shapes::s1()), u);
  EXPECT_EQ(u.U()->g().object_name(c.g.on_obj(0)), "({a,b},{a,b},[b,a])");
  EXPECT_TRUE(find_isomorphism_over(terminal_equivariant(shapes::s1()), c.pulled.pr1, b).has_value());
}

TEST(Classify, UniversalMapClassifiesItself) {
  Budget b;
  UniverseBundle u = build_universe(2, b);
  Classification c = classify_small_fibration(u.p(), u);
  EXPECT_TRUE(find_isomorphism_over(u.p(), c.pulled.pr1, b).has_value());
}

TEST(Classify, NotSmallThrows) {
  Budget b;
  UniverseBundle u = build_universe(1, b);
  try {
    classify_small_fibration(terminal_equivariant(shapes::s1()), u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotSmall);
  }
}

TEST(EquivalenceSpace, OneElementBaseIsDiscrete) {
  Budget b;
  UniverseBundle u = build_universe(1, b);
  EquivalenceSpace e = equivalence_space(u);
  EXPECT_EQ(e.E()->g().num_objects(), 2u);
  EXPECT_EQ(e.E()->g().num_morphisms(), 2u);
}

TEST(EquivalenceSpace, FiberOverSwapPair) {
  Budget b;
  UniverseBundle u = build_universe(2, b);
  EquivalenceSpace e = equivalence_space(u);
  ObjId a = *u.U()->g().find_object("({a,b},{a,b},[a,b])");
  ObjId pair = e.path.pairs.raw.pair_object(a, a);
  std::size_t over = 0;
  for (ObjId o = 0; o < e.E()->g().num_objects(); ++o) over += e.q().on_obj(o) == pair;
  EXPECT_EQ(over, 2u);
  EXPECT_THROW(equivalence_space(build_universe(3, b)), Error);
}

TEST(Univalence, ProjectiveFailsAtTwo) {
  Budget b;
  UniverseBundle u = build_universe(2, b);
  UnivalenceReport r = check_univalence(u, Structure::kProjective, b);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness_name, "(({a,b},{a,b},[a,b]),({a,b},{a,b},[a,b]),[b,a]:({a,b},{a,b},[a,b])->({a,b},{a,b},[a,b]))");
}

TEST(Univalence, ProjectiveVacuousOnSmallBases) {
  Budget b;
  for (int n : {0, 1}) {
    UniverseBundle u = build_universe(n, b);
    EXPECT_TRUE(check_univalence(u, Structure::kProjective, b).holds);
    EquivalenceSpace e = equivalence_space(u);
    try {
      projective_univalence_witness(u, e);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::kBaseTooSmall);
    }
  }
}

TEST(Univalence, InjectiveHoldsAtOne) {
  Budget b;
  UniverseBundle u = build_universe(1, b);
  UnivalenceReport r = check_univalence(u, Structure::kInjective, b);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checks.size(), 6u);
}

TEST(Univalence, DichotomyAtTwo) {
  Budget b;
  UniverseBundle u = build_universe(2, b);
  EquivalenceSpace e = equivalence_space(u);
  EXPECT_FALSE(is_homotopy_equivalence_projective(e.delta1()));
  EXPECT_TRUE(injective_classify(e.delta1(), b).trivial_cofibration);
}

TEST(Funext, Counterexample) {
  Budget b;
  FunextReport r = check_funext_counterexample(b);
  EXPECT_TRUE(r.map_is_homotopy_equivalence);
  EXPECT_EQ(r.product_objects, 4u);
  EXPECT_EQ(r.product_fixed, 2u);
  EXPECT_EQ(r.point_fixed, 1u);
  EXPECT_FALSE(r.product_is_homotopy_equivalence);
  EXPECT_TRUE(r.fails);
}

TEST(Closure, NoFailures) {
  Budget b;
  for (int n = 1; n <= 3; ++n) {
    UniverseBundle u = build_universe(n, b);
    bool overflow = false;
    for (const auto& row : universe_closure_checks(u, b)) {
      EXPECT_NE(row.status, ClosureStatus::kFail) << row.check << ": " << row.detail;
      overflow |= row.status == ClosureStatus::kOverflow;
    }
    EXPECT_TRUE(overflow);
  }
}

TEST(Closure, DiagonalIsSmall) {
  EquivariantFunctor f = terminal_equivariant(shapes::s1());
  EXPECT_TRUE(is_small_fibration(diagonal(f), 1));
  EXPECT_FALSE(classify_functor(diagonal(collapse()).map).discrete_fibration);
}

}  // namespace
}  // namespace invgpd
