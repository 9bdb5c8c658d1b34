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
#include "invgpd/pi.hpp"
#include "invgpd/search.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {
namespace {

EquivariantFunctor collapse_si() {
  const InvPtr& si = shapes::si();
  const InvPtr& s1 = shapes::s1();
  std::vector<MorId> mor;
  for (MorId m = 0; m < si->g().num_morphisms(); ++m) mor.push_back(s1->g().identity(si->g().src(m) % 2));
  return make_equivariant(si, s1, {0, 1, 0, 1}, std::move(mor));
}

void expect_valid(const PiBundle& pi) {
  EXPECT_TRUE(validate_groupoid(pi.object()->g().to_data()).empty());
  EXPECT_TRUE(check_involution(pi.object()->base, pi.object()->inv_obj, pi.object()->inv_mor).empty());
  EXPECT_TRUE(check_equivariant(pi.projection()).empty());
}

// Every composite recomputed with every choice of lifts agrees. Returns
// how many lift choices had an alternative.
std::uint64_t expect_lift_independent(const PiBundle& pi) {
  const Groupoid& p = pi.object()->g();
  const Groupoid& a = pi.fibration().dom->g();
  std::uint64_t alternatives = 0;
  for (MorId k1 = 0; k1 < p.num_morphisms(); ++k1) {
    for (MorId k2 : p.out(p.tgt(k1))) {
      MorId expected = p.compose(k2, k1);
      for (int choice = 0; choice < 3; ++choice) {
        PiBundle::LiftChoice lift = [&](MorId u, ObjId x) {
          std::vector<MorId> lifts;
          for (MorId h : a.out(x)) {
            if (pi.fibration().on_mor(h) == u) lifts.push_back(h);
          }
          alternatives += lifts.size() > 1;
          return lifts[choice % lifts.size()];
        };
        EXPECT_EQ(pi.compose_transports(k2, k1, lift), expected);
      }
    }
  }
  return alternatives;
}

TEST(Pi, FunextCounterexampleShape) {
  Budget b;
  PiBundle pi = pi_of(terminal_equivariant(shapes::s1()), collapse_si(), b);
  expect_valid(pi);
  EXPECT_EQ(pi.object()->g().num_objects(), 4u);
  FixedPoints fp = fixed_points(pi.object());
  ASSERT_EQ(fp.objects.size(), 2u);
  std::vector<std::string> names;
  for (ObjId o : fp.objects) names.push_back(pi.object()->g().object_name(o));
  EXPECT_EQ(names, (std::vector<std::string>{"(*;0,1)", "(*;0',1')"}));
  EXPECT_EQ(fixed_points(shapes::point()).objects.size(), 1u);
  // The product is codiscrete on its four objects.
  EXPECT_EQ(pi.object()->g().num_morphisms(), 16u);
  expect_lift_independent(pi);
}

TEST(Pi, FixedSectionsAreNotHomotopic) {
  Budget b;
  PiBundle pi = pi_of(terminal_equivariant(shapes::s1()), collapse_si(), b);
  FixedPoints fp = fixed_points(pi.object());
  auto at = [&](ObjId o) {
    return make_equivariant(shapes::point(), pi.object(), {o}, {pi.object()->g().identity(o)});
  };
  EXPECT_FALSE(find_right_homotopy(at(fp.objects[0]), at(fp.objects[1]), Structure::kProjective, b).has_value());
  EXPECT_FALSE(find_homotopy_inverse(terminal_equivariant(pi.object()), Structure::kProjective, b).has_value());
}

TEST(Pi, IdentityMapGivesTheBase) {
  Budget b;
  EquivariantFunctor g = terminal_equivariant(shapes::nabla());
  PiBundle pi = pi_of(g, identity_equivariant(shapes::nabla()), b);
  expect_valid(pi);
  EXPECT_TRUE(find_equivariant_isomorphism(pi.object(), shapes::point(), b).has_value());
}

TEST(Pi, AlongIdentityGivesTheDomain) {
  Budget b;
  for (const auto& f : {generators::iprime(), collapse_si(), terminal_equivariant(shapes::interval_check())}) {
    PiBundle pi = pi_of(identity_equivariant(f.cod), f, b);
    expect_valid(pi);
    EXPECT_TRUE(find_isomorphism_over(f, pi.projection(), b).has_value());
    expect_lift_independent(pi);
  }
}

TEST(Pi, NonFibrationIsRejected) {
  Budget b;
  try {
    pi_of(generators::iprime(), identity_equivariant(shapes::interval_check()), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFibration);
  }
}

TEST(Pi, NonTrivialFibrationIsLiftIndependent) {
  Budget b;
  // g: nabla -> 1! has fibers with several lifts per arrow.
  EquivariantFunctor g = terminal_equivariant(shapes::nabla());
  EqPullback sq = equivariant_product(shapes::nabla(), shapes::interval_check());
  PiBundle pi = pi_of(g, sq.pr1, b);
  expect_valid(pi);
  EXPECT_GT(expect_lift_independent(pi), 0u);
  EXPECT_TRUE(classify_functor(pi.projection().map).isofibration);
}

void expect_adjunction(const EquivariantFunctor& g, const EquivariantFunctor& f, const EquivariantFunctor& h) {
  Budget b;
  PiBundle pi = pi_of(g, f, b);
  EqPullback gh = equivariant_pullback(g, h);
  auto left = enumerate_slice_homs(gh.pr1, f, b);
  auto right = enumerate_slice_homs(h, pi.projection(), b);
  EXPECT_EQ(left.size(), right.size());
  for (const auto& v : left) {
    EquivariantFunctor k = adjunction_forward(pi, h, gh, v);
    EXPECT_TRUE(check_equivariant(k).empty());
    EXPECT_TRUE(same_functor(compose(pi.projection(), k), h));
    EXPECT_TRUE(same_functor(adjunction_backward(pi, gh, k), v));
  }
  for (const auto& k : right) {
    EquivariantFunctor v = adjunction_backward(pi, gh, k);
    EXPECT_TRUE(same_functor(adjunction_forward(pi, h, gh, v), k));
  }
}

TEST(Adjunction, FunextInstance) {
  EquivariantFunctor g = terminal_equivariant(shapes::s1());
  expect_adjunction(g, collapse_si(), terminal_equivariant(shapes::point()));
  expect_adjunction(g, collapse_si(), terminal_equivariant(shapes::interval_check()));
  expect_adjunction(g, collapse_si(), terminal_equivariant(shapes::nabla()));
}

TEST(Adjunction, EmptyHomSets) {
  // No sections over the fixed point, so nothing on either side.
  EquivariantFunctor g = terminal_equivariant(shapes::interval_check());
  EquivariantFunctor f = make_equivariant(shapes::empty(), shapes::interval_check(), {}, {});
  expect_adjunction(g, f, terminal_equivariant(shapes::point()));
}

TEST(Adjunction, NonDiscreteFibration) {
  EquivariantFunctor g = terminal_equivariant(shapes::nabla());
  EqPullback sq = equivariant_product(shapes::nabla(), shapes::s1());
  expect_adjunction(g, sq.pr1, terminal_equivariant(shapes::interval_check()));
}

TEST(Adjunction, MalformedSliceMorphismIsRejected) {
  Budget b;
  EquivariantFunctor g = terminal_equivariant(shapes::s1());
  PiBundle pi = pi_of(g, collapse_si(), b);
  EquivariantFunctor h = terminal_equivariant(shapes::point());
  EqPullback gh = equivariant_pullback(g, h);
  EquivariantFunctor wrong = identity_equivariant(shapes::si());
  EXPECT_THROW(adjunction_forward(pi, h, gh, wrong), Error);
}

}  // namespace
}  // namespace invgpd
