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

// Seeded property suites. Each property runs over a fixed seed list so
// failures reproduce exactly.

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "invgpd/document.hpp"
#include "oracles.hpp"

namespace invgpd {
namespace {

using sampling::Rng;

constexpr std::uint64_t kSeeds[] = {1, 2, 3, 5, 8, 13, 21, 34};

InvPtr random_groupoid(Rng& rng, int max_objects) {
  Budget b;
  return sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, max_objects)), {1, 2, 3}, b);
}

TEST(Property, RandomGroupoidsSatisfyTheLaws) {
  for (std::uint64_t seed : kSeeds) {
    Rng rng(seed);
    for (int k = 0; k < 10; ++k) {
      InvPtr x = random_groupoid(rng, 4);
      EXPECT_TRUE(validate_groupoid(x->g().to_data()).empty());
      EXPECT_TRUE(check_involution(x->base, x->inv_obj, x->inv_mor).empty());
    }
  }
}

TEST(Property, DocumentsRoundTrip) {
  Budget b;
  for (std::uint64_t seed : kSeeds) {
    Rng rng(seed);
    InvPtr x = random_groupoid(rng, 4);
    InvPtr y = random_groupoid(rng, 3);
    auto f = sampling::random_equivariant(rng, x, y, b);
    Document doc;
    doc.groupoids = {{"X", x}, {"Y", y}};
    if (f) doc.functors = {{"F", *f}};
    Document back = parse_document_text(document_to_json(doc).dump());
    auto bx = back.groupoid("X");
    auto by = back.groupoid("Y");
    ASSERT_TRUE(bx && by);
    // Names are kept, so the identity on names is an equivariant isomorphism.
    EXPECT_EQ((*bx)->g().object_names(), x->g().object_names());
    EXPECT_EQ((*bx)->inv_obj, x->inv_obj);
    EXPECT_EQ((*bx)->inv_mor, x->inv_mor);
    for (MorId m = 0; m < x->g().num_morphisms(); ++m) {
      EXPECT_EQ((*bx)->g().morphism_name(m), x->g().morphism_name(m));
      for (MorId n : x->g().out(x->g().tgt(m))) EXPECT_EQ((*bx)->g().compose(n, m), x->g().compose(n, m));
    }
    if (f) {
      auto bf = back.functor("F");
      ASSERT_TRUE(bf.has_value());
      EXPECT_EQ(bf->map.obj, f->map.obj);
      EXPECT_EQ(bf->map.mor, f->map.mor);
    }
    // Serializing twice gives the same text.
    EXPECT_EQ(document_to_json(back).dump(), document_to_json(doc).dump());
  }
}

TEST(Property, TrivialCofibrationClausesAgree) {
  Budget b;
  oracles::Tally t;
  const auto& catalog = sampling::small_catalog();
  for (const InvPtr& a : catalog) {
    for (const InvPtr& c : catalog) {
      if (a->g().num_objects() > c->g().num_objects()) continue;
      for (const auto& f : enumerate_equivariant(a, c, b)) oracles::check_clauses(f, t);
    }
  }
  EXPECT_GT(t.cases, 100u);
  EXPECT_GT(t.positive, 0u);
  EXPECT_LT(t.positive, t.cases);
  EXPECT_EQ(t.discrepancies, 0u) << t.first_discrepancy;
}

TEST(Property, HomotopyEquivalenceMatchesInverseSearchOnSmallCatalog) {
  Budget b(1'000'000'000ull);
  oracles::Tally t;
  oracles::PathCache paths;
  const auto& catalog = sampling::small_catalog();
  for (const InvPtr& a : catalog) {
    if (a->g().num_objects() > 2) continue;
    for (const InvPtr& c : catalog) {
      if (c->g().num_objects() > 2) continue;
      for (const auto& f : enumerate_equivariant(a, c, b)) oracles::check_homotopy_equivalence(f, paths, b, t);
    }
  }
  EXPECT_GT(t.positive, 0u);
  EXPECT_EQ(t.discrepancies, 0u) << t.first_discrepancy;
}

TEST(Property, AdjunctionIsABijection) {
  Budget b(1'000'000'000ull);
  for (std::uint64_t seed : kSeeds) {
    oracles::Tally t = oracles::adjunction_triples(seed, 4, b);
    EXPECT_EQ(t.discrepancies, 0u) << "seed " << seed << ": " << t.first_discrepancy;
  }
}

TEST(Property, DecompositionRoundTrips) {
  Budget b(1'000'000'000ull);
  for (Structure s : {Structure::kPlain, Structure::kProjective, Structure::kInjective}) {
    for (std::uint64_t seed : kSeeds) {
      oracles::Tally t = oracles::decomposition_round_trips(s, seed, 3, b);
      EXPECT_EQ(t.discrepancies, 0u) << to_string(s) << " seed " << seed << ": " << t.first_discrepancy;
    }
  }
}

TEST(Property, ClassificationRoundTrips) {
  Budget b(1'000'000'000ull);
  UniverseBundle u = build_universe(2, b);
  for (std::uint64_t seed : kSeeds) {
    oracles::Tally t = oracles::classification_round_trips(u, seed, 3, b);
    EXPECT_EQ(t.discrepancies, 0u) << "seed " << seed << ": " << t.first_discrepancy;
  }
}

TEST(Property, FactorizationIsExact) {
  Budget b(1'000'000'000ull);
  for (Structure s : {Structure::kPlain, Structure::kProjective, Structure::kInjective}) {
    for (std::uint64_t seed : kSeeds) {
      Rng rng(seed);
      InvPtr x = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 2)), {1, 2}, b);
      InvPtr y = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 2)), {1, 2}, b);
      auto f = sampling::random_equivariant(rng, x, y, b);
      if (!f) continue;
      EquivariantFunctor fs = for_structure(*f, s);
      Factorization fz = factorize(fs, s, b);
      EquivariantFunctor qj = compose(fz.q, fz.j);
      EXPECT_EQ(qj.map.obj, fs.map.obj) << to_string(s) << " seed " << seed;
      EXPECT_EQ(qj.map.mor, fs.map.mor) << to_string(s) << " seed " << seed;
      EXPECT_TRUE(is_trivial_cofibration(fz.j, s)) << to_string(s) << " seed " << seed;
      EXPECT_TRUE(has_rlp(fz.q, generating_trivial_cofibrations(s), b).holds) << to_string(s) << " seed " << seed;
    }
  }
}

TEST(Property, TrivialCofibrationsArePullbackStable) {
  Budget b(1'000'000'000ull);
  int checked = 0;
  for (Structure s : {Structure::kPlain, Structure::kProjective, Structure::kInjective}) {
    for (std::uint64_t seed : kSeeds) {
      Rng rng(seed);
      InvPtr y0 = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 3)), {1, 2}, b);
      auto m = sampling::random_trivial_cofibration(rng, y0, s);
      if (!m) continue;
      InvPtr z = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 3)), {1, 2}, b);
      InvPtr z0 = s == Structure::kPlain ? trivial_action(z->base) : z;
      auto g = sampling::random_fibration(rng, z0, m->cod, b);
      if (!g || !has_rlp(*g, generating_trivial_cofibrations(s), b).holds) continue;
      EqPullback pb = equivariant_pullback(*g, *m);
      EXPECT_TRUE(is_trivial_cofibration(pb.pr1, s)) << to_string(s) << " seed " << seed;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Property, PathObjectsFactorTheDiagonal) {
  Budget b(1'000'000'000ull);
  for (Structure s : {Structure::kPlain, Structure::kProjective, Structure::kInjective}) {
    for (std::uint64_t seed : kSeeds) {
      Rng rng(seed);
      InvPtr x = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 3)), {1, 2}, b);
      InvPtr y = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 2)), {1, 2}, b);
      auto f = sampling::random_equivariant(rng, x, y, b);
      if (!f) continue;
      EquivariantFunctor fs = for_structure(*f, s);
      PathFactorization p = path_object_for(fs, s);
      EquivariantFunctor id = identity_equivariant(fs.dom);
      EquivariantFunctor diag = pair_into(p.pairs, id, id);
      EquivariantFunctor d = compose(p.delta2, p.delta1);
      EXPECT_EQ(d.map.obj, diag.map.obj);
      EXPECT_EQ(d.map.mor, diag.map.mor);
      EXPECT_TRUE(is_trivial_cofibration(p.delta1, s)) << to_string(s) << " seed " << seed;
      EXPECT_TRUE(classify_functor(p.delta2.map).isofibration);
    }
  }
}

TEST(Property, DiscreteFibrationsHaveUniqueLifts) {
  Budget b(1'000'000'000ull);
  const EquivariantFunctor i = for_structure(generators::i(), Structure::kPlain);
  for (std::uint64_t seed : kSeeds) {
    Rng rng(seed);
    InvPtr x = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 3)), {1, 2}, b);
    InvPtr y = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 2)), {1, 2}, b);
    auto f = sampling::random_equivariant(rng, x, y, b);
    if (!f) continue;
    EquivariantFunctor p = with_trivial_action(*f);
    if (!classify_functor(p.map).discrete_fibration) continue;
    for_each_square(i, p, b, [&](const EquivariantFunctor& top, const EquivariantFunctor& bottom) {
      EXPECT_EQ(count_fillers(LiftingProblem{i, p, top, bottom}, b), 1u);
      return true;
    });
  }
}

TEST(Property, UniverseInvolutionLaws) {
  Budget b;
  for (int n = 0; n <= 3; ++n) {
    UniverseBundle u = build_universe(n, b);
    for (const InvPtr& x : {u.U(), u.Utilde()}) {
      for (ObjId o = 0; o < x->g().num_objects(); ++o) EXPECT_EQ(x->act(x->act(o)), o);
      for (MorId m = 0; m < x->g().num_morphisms(); ++m) EXPECT_EQ(x->act_mor(x->act_mor(m)), m);
    }
    EXPECT_TRUE(check_equivariant(u.p()).empty());
    EXPECT_TRUE(classify_functor(u.p().map).discrete_fibration);
  }
}

}  // namespace
}  // namespace invgpd
