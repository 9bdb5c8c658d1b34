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

// Brute-force oracles and seeded round-trip drivers shared by the property
// and acceptance suites. Each returns a tally; zero discrepancies is the
// passing outcome.

#ifndef INVGPD_TESTS_ORACLES_HPP_
#define INVGPD_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invgpd/cells.hpp"
#include "invgpd/homotopy.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/pi.hpp"
#include "invgpd/sampling.hpp"
#include "invgpd/search.hpp"
#include "invgpd/universe.hpp"

namespace invgpd::oracles {

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t positive = 0;  // cases where the property under test held
  std::uint64_t discrepancies = 0;
  std::string first_discrepancy;

  void record(bool agree, const std::string& what) {
    ++cases;
    if (!agree) {
      if (discrepancies == 0) first_discrepancy = what;
      ++discrepancies;
    }
  }
  void merge(const Tally& o) {
    if (discrepancies == 0 && o.discrepancies > 0) first_discrepancy = o.first_discrepancy;
    cases += o.cases;
    positive += o.positive;
    discrepancies += o.discrepancies;
  }
};

inline std::string describe_functor(const EquivariantFunctor& f) {
  std::string s = "[";
  for (std::size_t x = 0; x < f.map.obj.size(); ++x) {
    s += (x ? "," : "") + f.dom->g().object_name(static_cast<ObjId>(x)) + "->" + f.cod->g().object_name(f.on_obj(static_cast<ObjId>(x)));
  }
  return s + "]";
}

// Trivial-cofibration clauses: on levelwise trivial cofibrations, bijection
// on fixed objects, isomorphism of strict fixed subgroupoids and
// isomorphism of full fixed subgroupoids coincide.
inline void check_clauses(const EquivariantFunctor& f, Tally& t) {
  FunctorReport u = classify_functor(f.map);
  if (!(u.injective_on_objects && u.equivalence)) return;
  FixedPointClauses c = fixed_point_clauses(f);
  bool agree = c.bijection_on_fixed_objects == c.iso_on_strict_fixed &&
               c.iso_on_strict_fixed == c.iso_on_full_fixed;
  t.positive += c.bijection_on_fixed_objects;
  t.record(agree, describe_functor(f));
}

// Path objects over the point, cached per groupoid.
class PathCache {
 public:
  const PathFactorization& get(const InvPtr& x) {
    auto it = cache_.find(x.get());
    if (it == cache_.end()) {
      it = cache_.emplace(x.get(), projective_path_object(terminal_equivariant(x))).first;
      keep_.push_back(x);
    }
    return it->second;
  }

 private:
  std::map<const InvGroupoid*, PathFactorization> cache_;
  std::vector<InvPtr> keep_;
};

// The fixed-point characterization of projective homotopy equivalences
// agrees with a brute-force search for a homotopy inverse.
inline void check_homotopy_equivalence(const EquivariantFunctor& f, PathCache& paths, Budget& budget, Tally& t) {
  bool clause = is_homotopy_equivalence_projective(f);
  bool found = find_homotopy_inverse(f, paths.get(f.dom), paths.get(f.cod), budget).has_value();
  t.positive += found;
  t.record(clause == found, describe_functor(f));
}

struct CharacterizationTally {
  Tally clauses;
  Tally homotopy;
};

// Every equivariant functor between catalog groupoids, plus samples
// between random groupoids on four objects.
inline CharacterizationTally characterization_oracles(std::uint64_t seed, int samples_at_four, Budget& budget) {
  CharacterizationTally out;
  PathCache paths;
  const auto& catalog = sampling::small_catalog();
  for (const InvPtr& a : catalog) {
    for (const InvPtr& b : catalog) {
      for (const auto& f : enumerate_equivariant(a, b, budget)) {
        check_clauses(f, out.clauses);
        check_homotopy_equivalence(f, paths, budget, out.homotopy);
      }
    }
  }
  sampling::Rng rng(seed);
  int done = 0;
  while (done < samples_at_four) {
    InvPtr a = sampling::random_involutive(rng, 4, {1, 2, 3}, budget);
    // Half the samples are endomorphisms, which are often equivalences.
    InvPtr b = done % 2 ? a : sampling::random_involutive(rng, 4, {1, 2, 3}, budget);
    auto f = sampling::random_equivariant(rng, a, b, budget);
    if (!f) continue;
    ++done;
    check_clauses(*f, out.clauses);
    PathCache local;
    check_homotopy_equivalence(*f, local, budget, out.homotopy);
  }
  return out;
}

struct AdjunctionResult {
  bool ok = true;
  std::size_t left = 0;
  std::size_t right = 0;
};

// Slice maps C x_B D -> A over A against maps D -> dom(Pi) over B: both
// translations are mutually inverse and the hom-sets have equal size.
inline AdjunctionResult check_adjunction(const EquivariantFunctor& g, const EquivariantFunctor& f,
                                         const EquivariantFunctor& h, Budget& budget) {
  AdjunctionResult r;
  PiBundle pi = pi_of(g, f, budget);
  EqPullback gh = equivariant_pullback(g, h);
  auto left = enumerate_slice_homs(gh.pr1, f, budget);
  auto right = enumerate_slice_homs(h, pi.projection(), budget);
  r.left = left.size();
  r.right = right.size();
  r.ok = left.size() == right.size();
  for (const auto& v : left) {
    EquivariantFunctor k = adjunction_forward(pi, h, gh, v);
    r.ok &= check_equivariant(k).empty();
    r.ok &= same_functor(compose(pi.projection(), k), h);
    r.ok &= same_functor(adjunction_backward(pi, gh, k), v);
  }
  for (const auto& k : right) {
    r.ok &= same_functor(adjunction_forward(pi, h, gh, adjunction_backward(pi, gh, k)), k);
  }
  return r;
}

// Seeded triples (g fibration A -> B, f: C -> A, h: D -> B).
inline Tally adjunction_triples(std::uint64_t seed, int count, Budget& budget) {
  Tally t;
  sampling::Rng rng(seed);
  const std::vector<int> orders{1, 2};
  while (t.cases < static_cast<std::uint64_t>(count)) {
    auto size = [&](int max) { return 1 + static_cast<int>(sampling::uniform(rng, static_cast<std::size_t>(max))); };
    InvPtr a = sampling::random_involutive(rng, size(3), orders, budget);
    InvPtr b = sampling::random_involutive(rng, size(2), orders, budget);
    auto g = sampling::random_fibration(rng, a, b, budget);
    if (!g) continue;
    InvPtr c = sampling::random_involutive(rng, size(3), orders, budget);
    auto f = sampling::random_equivariant(rng, c, a, budget);
    if (!f) continue;
    InvPtr d = sampling::random_involutive(rng, size(2), orders, budget);
    auto h = sampling::random_equivariant(rng, d, b, budget);
    if (!h) continue;
    AdjunctionResult r = check_adjunction(*g, *f, *h, budget);
    t.positive += r.left > 0;
    t.record(r.ok, "g " + describe_functor(*g) + " f " + describe_functor(*f) + " h " + describe_functor(*h));
  }
  return t;
}

// Seeded trivial cofibrations in structure s; decompose, recompose and
// find an isomorphism under the domain.
inline Tally decomposition_round_trips(Structure s, std::uint64_t seed, int count, Budget& budget) {
  Tally t;
  sampling::Rng rng(seed);
  while (t.cases < static_cast<std::uint64_t>(count)) {
    InvPtr b = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 4)), {1, 2}, budget);
    auto f = sampling::random_trivial_cofibration(rng, b, s);
    if (!f) continue;
    CellSequence seq = decompose_trivial_cofibration(*f, s, budget);
    Recomposition rec = recompose(seq);
    bool iso = find_isomorphism_under(rec.inclusion, *f, budget).has_value();
    t.positive += !seq.steps.empty();
    t.record(iso, describe_functor(*f));
  }
  return t;
}

// Seeded small fibrations over bases with at most four objects; the
// pullback of p along the classifying map is isomorphic over the base.
inline Tally classification_round_trips(const UniverseBundle& u, std::uint64_t seed, int count, Budget& budget) {
  Tally t;
  sampling::Rng rng(seed);
  while (t.cases < static_cast<std::uint64_t>(count)) {
    InvPtr base = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 4)), {1, 2}, budget);
    auto f = sampling::random_small_fibration(rng, base, u, budget);
    if (!f) continue;
    Classification c = classify_small_fibration(*f, u);
    bool iso = find_isomorphism_over(*f, c.pulled.pr1, budget).has_value();
    t.positive += f->dom->g().num_objects() > 0;
    t.record(iso, describe_functor(*f));
  }
  return t;
}

struct ClosureTally {
  int pass = 0;
  int overflow = 0;
  int fail = 0;
  std::string first_fail;
};

inline ClosureTally closure_tally(const UniverseBundle& u, Budget& budget) {
  ClosureTally t;
  for (const ClosureRow& row : universe_closure_checks(u, budget)) {
    if (row.status == ClosureStatus::kPass) ++t.pass;
    if (row.status == ClosureStatus::kOverflow) ++t.overflow;
    if (row.status == ClosureStatus::kFail) {
      if (t.fail == 0) t.first_fail = row.check;
      ++t.fail;
    }
  }
  return t;
}

}  // namespace invgpd::oracles

#endif  // INVGPD_TESTS_ORACLES_HPP_
