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

// Seeded generators of involutive groupoids, equivariant functors, trivial
// cofibrations and small fibrations for property suites.
//
// Every finite groupoid is a disjoint union of components equivalent to a
// group; the generators use components codiscrete(n) x Z/m, which covers
// the shapes that matter here, with any involution of the union.

#ifndef INVGPD_SAMPLING_HPP_
#define INVGPD_SAMPLING_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "invgpd/constructions.hpp"
#include "invgpd/equivariant.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/search.hpp"
#include "invgpd/universe.hpp"

namespace invgpd::sampling {

using Rng = std::mt19937_64;

struct ComponentSpec {
  int objects = 1;  // codiscrete on this many objects
  int order = 1;    // times the cyclic group of this order
};

// Disjoint union of the given components. Objects are "<c>.<i>" and
// morphisms "<c>.<i>><j>^<k>".
inline GroupoidPtr component_union(const std::vector<ComponentSpec>& comps) {
  GroupoidData d;
  std::vector<ObjId> first;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    first.push_back(static_cast<ObjId>(d.objects.size()));
    for (int i = 0; i < comps[c].objects; ++i) d.objects.push_back(std::to_string(c) + "." + std::to_string(i));
  }
  d.identity.assign(d.objects.size(), kNone);
  struct Key {
    std::size_t c;
    int i, j, k;
  };
  std::vector<Key> keys;
  std::map<std::tuple<std::size_t, int, int, int>, MorId> index;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int n = comps[c].objects, m = comps[c].order;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
          MorId id = static_cast<MorId>(d.morphisms.size());
          index[{c, i, j, k}] = id;
          keys.push_back({c, i, j, k});
          d.morphisms.push_back({std::to_string(c) + "." + std::to_string(i) + ">" + std::to_string(j) + "^" +
                                     std::to_string(k),
                                 first[c] + i, first[c] + j});
          if (i == j && k == 0) d.identity[first[c] + i] = id;
        }
      }
    }
  }
  for (const Key& f : keys) {
    const int m = comps[f.c].order;
    d.inverse.push_back(index.at({f.c, f.j, f.i, (m - f.k) % m}));
    for (int l = 0; l < comps[f.c].objects; ++l) {
      for (int k2 = 0; k2 < m; ++k2) {
        d.compose[{index.at({f.c, f.j, l, k2}), index.at({f.c, f.i, f.j, f.k})}] =
            index.at({f.c, f.i, l, (f.k + k2) % m});
      }
    }
  }
  return share(Groupoid::from_data(d));
}

// All involutions of g, as involutive groupoids.
inline std::vector<InvPtr> all_involutions(const GroupoidPtr& g, Budget& budget) {
  std::vector<InvPtr> out;
  FunctorSearch(plain_query(*g, *g), budget).run([&](const auto& o, const auto& m) {
    if (check_involution(g, o, m).empty()) out.push_back(make_involutive(g, o, m));
    return true;
  });
  return out;
}

// Partitions of n into component specs with parts listed in
// non-increasing order; group orders drawn from orders.
inline void component_partitions(int n, int max_part, const std::vector<int>& orders,
                                 std::vector<ComponentSpec>& cur, std::vector<std::vector<ComponentSpec>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    for (int order : orders) {
      if (!cur.empty() && cur.back().objects == part && cur.back().order < order) continue;
      cur.push_back({part, order});
      component_partitions(n - part, part, orders, cur, out);
      cur.pop_back();
    }
  }
}

// Involutive groupoids with at most max_objects objects and the given
// group orders, one per equivariant isomorphism class, in a fixed order.
inline std::vector<InvPtr> involutive_catalog(int max_objects, const std::vector<int>& orders, Budget& budget) {
  std::vector<InvPtr> out;
  for (int n = 0; n <= max_objects; ++n) {
    std::vector<std::vector<ComponentSpec>> parts;
    std::vector<ComponentSpec> cur;
    component_partitions(n, n, orders, cur, parts);
    for (const auto& p : parts) {
      GroupoidPtr g = component_union(p);
      for (const InvPtr& x : all_involutions(g, budget)) {
        bool seen = false;
        for (const InvPtr& y : out) {
          if (y->g().num_objects() == x->g().num_objects() &&
              y->g().num_morphisms() == x->g().num_morphisms() &&
              find_equivariant_isomorphism(x, y, budget)) {
            seen = true;
            break;
          }
        }
        if (!seen) out.push_back(x);
      }
    }
  }
  return out;
}

// The catalog used by the characterization oracles: at most three objects,
// trivial and order 2 vertex groups.
inline const std::vector<InvPtr>& small_catalog() {
  static const std::vector<InvPtr> c = [] {
    Budget b;
    return involutive_catalog(3, {1, 2}, b);
  }();
  return c;
}

inline std::size_t uniform(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// A random involutive groupoid with the given number of objects.
inline InvPtr random_involutive(Rng& rng, int objects, const std::vector<int>& orders, Budget& budget) {
  std::vector<ComponentSpec> comps;
  int left = objects;
  while (left > 0) {
    int part = 1 + static_cast<int>(uniform(rng, static_cast<std::size_t>(left)));
    comps.push_back({part, orders[uniform(rng, orders.size())]});
    left -= part;
  }
  GroupoidPtr g = component_union(comps);
  auto invs = all_involutions(g, budget);
  return invs[uniform(rng, invs.size())];
}

// A random equivariant functor, or nullopt if there is none. At most cap
// candidates are enumerated.
inline std::optional<EquivariantFunctor> random_equivariant(Rng& rng, const InvPtr& a, const InvPtr& b,
                                                            Budget& budget, std::size_t cap = 256) {
  std::vector<EquivariantFunctor> all;
  FunctorSearch(equivariant_query(*a, *b), budget).run([&](const auto& o, const auto& m) {
    all.push_back(EquivariantFunctor{a, b, Functor{a->base, b->base, o, m}});
    return all.size() < cap;
  });
  if (all.empty()) return std::nullopt;
  return all[uniform(rng, all.size())];
}

// A trivial cofibration in the given structure: the full inclusion of an
// involution-stable set of objects meeting every component, containing
// every fixed object for the projective structure.
inline std::optional<EquivariantFunctor> random_trivial_cofibration(Rng& rng, const InvPtr& b0, Structure s) {
  const InvPtr b = s == Structure::kPlain ? trivial_action(b0->base) : b0;
  const Groupoid& g = b->g();
  auto comp = connected_components(g);
  std::vector<char> keep(g.num_objects(), 0);
  for (ObjId x = 0; x < g.num_objects(); ++x) {
    if (uniform(rng, 2) == 0) keep[x] = keep[b->act(x)] = 1;
    if (s == Structure::kProjective && b->is_fixed(x)) keep[x] = 1;
  }
  // Every component must be met; add the least object and its partner.
  std::uint32_t ncomp = 0;
  for (auto c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<char> met(ncomp, 0);
  for (ObjId x = 0; x < g.num_objects(); ++x) met[comp[x]] |= keep[x];
  for (ObjId x = 0; x < g.num_objects(); ++x) {
    if (!met[comp[x]]) {
      keep[x] = keep[b->act(x)] = 1;
      met[comp[x]] = met[comp[b->act(x)]] = 1;
    }
  }
  std::vector<ObjId> objs;
  for (ObjId x = 0; x < g.num_objects(); ++x) {
    if (keep[x]) objs.push_back(x);
  }
  EqSubgroupoid sub = equivariant_full_subgroupoid(b, objs);
  if (!is_trivial_cofibration(sub.inclusion, s)) return std::nullopt;
  return sub.inclusion;
}

// A small fibration over base: the pullback of p along an equivariant map
// into U with randomly chosen object images.
inline std::optional<EquivariantFunctor> random_small_fibration(Rng& rng, const InvPtr& base, const UniverseBundle& u,
                                                                Budget& budget) {
  const Groupoid& bg = base->g();
  const Groupoid& ug = u.U()->g();
  FunctorQuery q = equivariant_query(*base, *u.U());
  q.pin_obj.assign(bg.num_objects(), kNone);
  std::vector<ObjId> fixed_u = fixed_points(u.U()).objects;
  auto comp = connected_components(bg);
  std::vector<char> pinned(bg.num_objects() + 1, 0);
  // One pin per component, mirrored onto the partner component.
  for (ObjId x = 0; x < bg.num_objects(); ++x) {
    if (pinned[comp[x]] || pinned[comp[base->act(x)]]) continue;
    ObjId y = base->is_fixed(x) ? fixed_u[uniform(rng, fixed_u.size())]
                                : static_cast<ObjId>(uniform(rng, ug.num_objects()));
    q.pin_obj[x] = y;
    q.pin_obj[base->act(x)] = u.U()->act(y);
    pinned[comp[x]] = pinned[comp[base->act(x)]] = 1;
  }
  std::vector<EquivariantFunctor> found;
  FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
    found.push_back(EquivariantFunctor{base, u.U(), Functor{base->base, u.U()->base, o, m}});
    return found.size() < 16;
  });
  if (found.empty()) return std::nullopt;
  EqPullback pb = equivariant_pullback(found[uniform(rng, found.size())], u.p());
  return pb.pr1;
}

// Small fibrations into base found by filtering maps from catalog groupoids.
inline std::vector<EquivariantFunctor> filtered_small_fibrations(const InvPtr& base, const std::vector<InvPtr>& sources,
                                                                 int n, Budget& budget) {
  std::vector<EquivariantFunctor> out;
  for (const InvPtr& c : sources) {
    for (const auto& f : enumerate_equivariant(c, base, budget)) {
      if (is_small_fibration(f, n)) out.push_back(f);
    }
  }
  return out;
}

// A random isofibration A -> B between catalog groupoids, by rejection.
inline std::optional<EquivariantFunctor> random_fibration(Rng& rng, const InvPtr& a, const InvPtr& b,
                                                          Budget& budget) {
  std::vector<EquivariantFunctor> fib;
  FunctorSearch(equivariant_query(*a, *b), budget).run([&](const auto& o, const auto& m) {
    Functor f{a->base, b->base, o, m};
    if (classify_functor(f).isofibration) fib.push_back(EquivariantFunctor{a, b, f});
    return fib.size() < 64;
  });
  if (fib.empty()) return std::nullopt;
  return fib[uniform(rng, fib.size())];
}

}  // namespace invgpd::sampling

#endif  // INVGPD_SAMPLING_HPP_
