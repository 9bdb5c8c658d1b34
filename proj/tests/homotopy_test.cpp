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

#include "invgpd/homotopy.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {
namespace {

// S(I) -> S(1), collapsing each arrow.
EquivariantFunctor collapse_si() {
  const InvPtr& si = shapes::si();
  const InvPtr& s1 = shapes::s1();
  std::vector<MorId> mor;
  for (MorId m = 0; m < si->g().num_morphisms(); ++m) mor.push_back(s1->g().identity(si->g().src(m) % 2));
  return make_equivariant(si, s1, {0, 1, 0, 1}, std::move(mor));
}

void expect_path_laws(const PathFactorization& p) {
  Budget b;
  EXPECT_TRUE(check_equivariant(p.delta1).empty());
  EXPECT_TRUE(check_equivariant(p.delta2).empty());
  FunctorReport d1 = classify_functor(p.delta1.map);
  EXPECT_TRUE(d1.injective_on_objects);
  EXPECT_TRUE(d1.equivalence);
  // delta2 o delta1 is the diagonal.
  EquivariantFunctor diag = pair_into(p.pairs, identity_equivariant(p.base.dom), identity_equivariant(p.base.dom));
  EXPECT_TRUE(same_functor(compose(p.delta2, p.delta1), diag));
}

TEST(PathObject, DiscreteOverPointIsItself) {
  Budget b;
  PathFactorization p = path_object(terminal_equivariant(shapes::two_points()));
  EXPECT_TRUE(find_equivariant_isomorphism(p.path, shapes::two_points(), b).has_value());
  expect_path_laws(p);
}

TEST(PathObject, IntervalOverPointIsCodiscreteOnFour) {
  PathFactorization p = path_object(terminal_equivariant(shapes::interval()));
  EXPECT_EQ(p.path->g().num_objects(), 4u);
  EXPECT_EQ(p.path->g().num_morphisms(), 16u);
  expect_path_laws(p);
}

TEST(PathObject, OverIdentityIsTheBase) {
  Budget b;
  PathFactorization p = path_object(identity_equivariant(shapes::nabla()));
  EXPECT_TRUE(find_equivariant_isomorphism(p.path, shapes::nabla(), b).has_value());
  expect_path_laws(p);
}

TEST(PathObject, Delta2IsInjectiveFibration) {
  Budget b;
  for (const auto& x : {shapes::interval_check(), shapes::nabla(), shapes::si()}) {
    PathFactorization p = path_object(terminal_equivariant(x));
    expect_path_laws(p);
    EXPECT_TRUE(has_rlp(p.delta2, generating_trivial_cofibrations(Structure::kInjective), b).holds);
  }
}

TEST(PathObject, PathOfFibrantIsFibrant) {
  Budget b;
  PathFactorization p = path_object(terminal_equivariant(shapes::nabla()));
  EXPECT_TRUE(is_fibrant(p.path, Structure::kInjective, b));
}

TEST(ProjectivePathObject, Delta1IsProjectiveTrivialCofibration) {
  for (const auto& x : {shapes::interval_check(), shapes::nabla(), shapes::interval(), shapes::si()}) {
    PathFactorization p = projective_path_object(terminal_equivariant(x));
    expect_path_laws(p);
    EXPECT_TRUE(is_trivial_cofibration(p.delta1, Structure::kProjective));
    EXPECT_TRUE(classify_functor(p.delta2.map).isofibration);
  }
}

TEST(Homotopy, Reflexive) {
  Budget b;
  EquivariantFunctor f = generators::iprime();
  for (Structure s : {Structure::kProjective, Structure::kInjective}) {
    EXPECT_TRUE(find_right_homotopy(f, f, s, b).has_value());
  }
}

TEST(Homotopy, SwapVersusIdentityOnTwoSwappedPoints) {
  Budget b;
  const InvPtr& s1 = shapes::s1();
  EquivariantFunctor swap = make_equivariant(s1, s1, {1, 0}, {1, 0});
  EquivariantFunctor id = identity_equivariant(s1);
  EXPECT_FALSE(find_right_homotopy(swap, id, Structure::kInjective, b).has_value());
  EXPECT_FALSE(find_right_homotopy(swap, id, Structure::kProjective, b).has_value());
}

TEST(Homotopy, ProjectiveHomotopyIsRigidAtFixedPoints) {
  Budget b;
  const InvPtr& n = shapes::nabla();
  EquivariantFunctor at2 = make_equivariant(shapes::point(), n, {2}, {n->g().identity(2)});
  EXPECT_TRUE(find_right_homotopy(at2, at2, Structure::kProjective, b).has_value());
  // In I (trivial action) the two endpoints are injectively homotopic but
  // not projectively, since both are fixed.
  const InvPtr& i = shapes::interval();
  EquivariantFunctor e0 = make_equivariant(shapes::point(), i, {0}, {i->g().identity(0)});
  EquivariantFunctor e1 = make_equivariant(shapes::point(), i, {1}, {i->g().identity(1)});
  EXPECT_TRUE(find_right_homotopy(e0, e1, Structure::kInjective, b).has_value());
  EXPECT_FALSE(find_right_homotopy(e0, e1, Structure::kProjective, b).has_value());
}

TEST(HomotopyEquivalence, Clauses) {
  EXPECT_TRUE(is_homotopy_equivalence_projective(collapse_si()));
  EXPECT_FALSE(is_homotopy_equivalence_projective(terminal_equivariant(shapes::interval_check())));
  EXPECT_TRUE(is_homotopy_equivalence_projective(identity_equivariant(shapes::nabla())));
  EXPECT_FALSE(is_homotopy_equivalence_projective(generators::iprime()));
}

TEST(HomotopyInverse, AgreesWithClausesOnSmallCases) {
  Budget b;
  EXPECT_TRUE(find_homotopy_inverse(collapse_si(), Structure::kProjective, b).has_value());
  EXPECT_TRUE(find_homotopy_inverse(identity_equivariant(shapes::nabla()), Structure::kProjective, b).has_value());
  EXPECT_FALSE(find_homotopy_inverse(terminal_equivariant(shapes::interval_check()), Structure::kProjective, b)
                   .has_value());
  EXPECT_FALSE(find_homotopy_inverse(generators::iprime(), Structure::kProjective, b).has_value());
  EXPECT_TRUE(find_homotopy_inverse(generators::si(), Structure::kProjective, b).has_value());
}

TEST(HomotopyInverse, InjectiveNeedsFixedPoints) {
  Budget b;
  // iprime is a weak equivalence, but there is no equivariant map back.
  EXPECT_FALSE(find_homotopy_inverse(generators::iprime(), Structure::kInjective, b).has_value());
  auto inv = find_homotopy_inverse(terminal_equivariant(shapes::nabla()), Structure::kInjective, b);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(inv->inverse.on_obj(0), 2u);
}

}  // namespace
}  // namespace invgpd
