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

// Path objects, right homotopies and homotopy equivalences.
//
// The path object of f: A -> C has objects (x, y, p) with p: x -> y over an
// identity of C and morphisms (s, t) with p' = t p s^-1. Its diagonal is an
// injective trivial cofibration but does not in general preserve fixed
// points, so the projective structure uses a variant in which every path
// object is doubled into a swapped pair and only the diagonal is kept
// single. Fixed objects of the variant are then exactly the diagonal ones.

#ifndef INVGPD_HOMOTOPY_HPP_
#define INVGPD_HOMOTOPY_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invgpd/constructions.hpp"
#include "invgpd/equivariant.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/search.hpp"

namespace invgpd {

struct PathFactorization {
  EquivariantFunctor base;    // f: A -> C
  InvPtr path;                // path object over C
  EqPullback pairs;           // A x_C A
  EquivariantFunctor delta1;  // A -> path
  EquivariantFunctor delta2;  // path -> A x_C A
  // Plain path objects only: the morphism of A each object stands for.
  std::vector<MorId> path_of_obj;
};

namespace detail {

struct PathData {
  InvPtr path;
  std::vector<ObjId> obj_of_path;   // A morphism p -> object (src p, tgt p, p)
  std::vector<MorId> path_of_obj;   // inverse of obj_of_path
  std::vector<MorId> first;         // per path morphism: s
  std::vector<MorId> second;        // per path morphism: t
};

inline PathData build_path(const EquivariantFunctor& f) {
  const Groupoid& a = f.dom->g();
  const Groupoid& c = f.cod->g();
  PathData d;
  d.obj_of_path.assign(a.num_morphisms(), kNone);
  std::vector<MorId> phi;
  std::vector<std::string> names;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (MorId p : a.out(x)) {
      if (!c.is_identity(f.on_mor(p))) continue;
      d.obj_of_path[p] = static_cast<ObjId>(phi.size());
      phi.push_back(p);
      names.push_back("(" + a.object_name(x) + "," + a.object_name(a.tgt(p)) + "," + a.morphism_name(p) + ")");
    }
  }
  // Morphisms out of (x, y, p): pairs (s, t) out of x and y with f s == f t.
  std::vector<MorphismSpec> mors;
  std::unordered_map<std::uint64_t, MorId> index;  // (object, s) -> first id
  const std::uint64_t ma = a.num_morphisms();
  auto key = [&](ObjId o, MorId s, MorId t) { return (static_cast<std::uint64_t>(o) * ma + s) * ma + t; };
  std::unordered_map<MorId, std::vector<MorId>> by_image;
  for (ObjId o = 0; o < phi.size(); ++o) {
    const MorId p = phi[o];
    by_image.clear();
    for (MorId t : a.out(a.tgt(p))) by_image[f.on_mor(t)].push_back(t);
    for (MorId s : a.out(a.src(p))) {
      auto it = by_image.find(f.on_mor(s));
      if (it == by_image.end()) continue;
      for (MorId t : it->second) {
        ObjId target = d.obj_of_path[a.compose(t, a.compose(p, a.inverse(s)))];
        index.emplace(key(o, s, t), static_cast<MorId>(mors.size()));
        mors.push_back({"(" + a.morphism_name(s) + "," + a.morphism_name(t) + ")|" + a.morphism_name(p), o, target});
        d.first.push_back(s);
        d.second.push_back(t);
      }
    }
  }
  auto mor_of = [&](ObjId o, MorId s, MorId t) { return index.at(key(o, s, t)); };
  std::vector<MorId> ident, inv;
  for (ObjId o = 0; o < phi.size(); ++o) {
    ident.push_back(mor_of(o, a.identity(a.src(phi[o])), a.identity(a.tgt(phi[o]))));
  }
  for (MorId k = 0; k < mors.size(); ++k) {
    inv.push_back(mor_of(mors[k].tgt, a.inverse(d.first[k]), a.inverse(d.second[k])));
  }
  std::vector<ObjId> srcs;
  for (const auto& m : mors) srcs.push_back(m.src);
  GroupoidPtr g = share(Groupoid::from_rule(
      std::move(names), std::move(mors), std::move(ident), std::move(inv),
      [&](MorId h, MorId k) {
        return mor_of(srcs[k], a.compose(d.first[h], d.first[k]), a.compose(d.second[h], d.second[k]));
      }));
  std::vector<ObjId> inv_obj;
  for (ObjId o = 0; o < phi.size(); ++o) inv_obj.push_back(d.obj_of_path[f.dom->act_mor(phi[o])]);
  std::vector<MorId> inv_mor;
  for (MorId k = 0; k < g->num_morphisms(); ++k) {
    inv_mor.push_back(mor_of(inv_obj[g->src(k)], f.dom->act_mor(d.first[k]), f.dom->act_mor(d.second[k])));
  }
  d.path = make_involutive(g, std::move(inv_obj), std::move(inv_mor));
  d.path_of_obj = std::move(phi);
  return d;
}

// Groupoid whose objects are copies of objects of x and whose hom-sets are
// those of x between the originals. partner gives the involution on copies
// and must satisfy act(original(a)) == original(partner(a)).
struct Reindexed {
  InvPtr object;
  Functor to_original;
};

inline Reindexed reindex(const InvPtr& x, const std::vector<ObjId>& original,
                         const std::vector<ObjId>& partner, std::vector<std::string> names) {
  const Groupoid& g = x->g();
  const ObjId n = static_cast<ObjId>(original.size());
  std::vector<MorphismSpec> mors;
  std::vector<MorId> reduced;
  std::unordered_map<std::uint64_t, MorId> offset;
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      offset[pair_key(a, b)] = static_cast<MorId>(mors.size());
      for (MorId m : g.hom(original[a], original[b])) {
        mors.push_back({"[" + names[a] + ">" + names[b] + "]" + g.morphism_name(m), a, b});
        reduced.push_back(m);
      }
    }
  }
  auto morphism = [&](ObjId a, ObjId b, MorId r) {
    auto h = g.hom(original[a], original[b]);
    return offset.at(pair_key(a, b)) + (g.out_position(r) - g.out_position(h.front()));
  };
  std::vector<MorId> ident, inv;
  for (ObjId a = 0; a < n; ++a) ident.push_back(morphism(a, a, g.identity(original[a])));
  for (MorId k = 0; k < mors.size(); ++k) inv.push_back(morphism(mors[k].tgt, mors[k].src, g.inverse(reduced[k])));
  std::vector<ObjId> srcs, tgts;
  for (const auto& m : mors) {
    srcs.push_back(m.src);
    tgts.push_back(m.tgt);
  }
  GroupoidPtr y = share(Groupoid::from_rule(
      std::move(names), std::move(mors), std::move(ident), std::move(inv),
      [&](MorId h, MorId k) { return morphism(srcs[k], tgts[h], g.compose(reduced[h], reduced[k])); }));
  std::vector<MorId> inv_mor;
  for (MorId k = 0; k < y->num_morphisms(); ++k) {
    inv_mor.push_back(morphism(partner[srcs[k]], partner[tgts[k]], x->act_mor(reduced[k])));
  }
  Reindexed r;
  r.object = make_involutive(y, partner, std::move(inv_mor));
  r.to_original = Functor{y, x->base, original, reduced};
  return r;
}

}  // namespace detail

// Path object of f: A -> C with its factorization of the diagonal.
inline PathFactorization path_object(const EquivariantFunctor& f) {
  const Groupoid& a = f.dom->g();
  detail::PathData d = detail::build_path(f);
  PathFactorization out;
  out.base = f;
  out.path = d.path;
  out.pairs = equivariant_pullback(f, f);
  out.delta1 = EquivariantFunctor{f.dom, d.path, Functor{f.dom->base, d.path->base, {}, {}}};
  for (ObjId x = 0; x < a.num_objects(); ++x) out.delta1.map.obj.push_back(d.obj_of_path[a.identity(x)]);
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    ObjId o = d.obj_of_path[a.identity(a.src(m))];
    MorId found = kNone;
    for (MorId k : d.path->g().out(o)) {
      if (d.first[k] == m && d.second[k] == m) {
        found = k;
        break;
      }
    }
    out.delta1.map.mor.push_back(found);
  }
  const Groupoid& p = d.path->g();
  out.delta2 = EquivariantFunctor{d.path, out.pairs.object, Functor{d.path->base, out.pairs.object->base, {}, {}}};
  for (ObjId o = 0; o < p.num_objects(); ++o) {
    MorId ph = d.path_of_obj[o];
    out.delta2.map.obj.push_back(out.pairs.raw.pair_object(a.src(ph), a.tgt(ph)));
  }
  for (MorId k = 0; k < p.num_morphisms(); ++k) {
    out.delta2.map.mor.push_back(out.pairs.raw.pair_morphism(d.first[k], d.second[k]));
  }
  out.path_of_obj = std::move(d.path_of_obj);
  return out;
}

// Path object for the projective structure: the diagonal objects, plus two
// exchanged copies of every object of the plain path object.
inline PathFactorization projective_path_object(const EquivariantFunctor& f) {
  PathFactorization plain = path_object(f);
  const InvPtr& p = plain.path;
  const Groupoid& pg = p->g();
  const ObjId na = static_cast<ObjId>(f.dom->g().num_objects());
  const ObjId np = static_cast<ObjId>(pg.num_objects());
  std::vector<ObjId> original, partner;
  std::vector<std::string> names;
  for (ObjId x = 0; x < na; ++x) {
    original.push_back(plain.delta1.on_obj(x));
    partner.push_back(f.dom->act(x));
    names.push_back("d" + pg.object_name(original.back()));
  }
  for (int side = 0; side < 2; ++side) {
    for (ObjId o = 0; o < np; ++o) {
      original.push_back(o);
      partner.push_back(na + (1 - side) * np + p->act(o));
      names.push_back((side == 0 ? "l" : "r") + pg.object_name(o));
    }
  }
  detail::Reindexed r = detail::reindex(p, original, partner, std::move(names));
  PathFactorization out;
  out.base = f;
  out.path = r.object;
  out.pairs = plain.pairs;
  out.delta1 = EquivariantFunctor{f.dom, r.object, Functor{f.dom->base, r.object->base, {}, {}}};
  const Groupoid& a = f.dom->g();
  for (ObjId x = 0; x < na; ++x) out.delta1.map.obj.push_back(x);
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    MorId pm = plain.delta1.on_mor(m);
    MorId found = kNone;
    for (MorId k : r.object->g().hom(a.src(m), a.tgt(m))) {
      if (r.to_original.mor[k] == pm) found = k;
    }
    out.delta1.map.mor.push_back(found);
  }
  Functor d2 = compose(plain.delta2.map, r.to_original);
  out.delta2 = EquivariantFunctor{r.object, plain.pairs.object, d2};
  return out;
}

inline PathFactorization path_object_for(const EquivariantFunctor& f, Structure s) {
  return s == Structure::kProjective ? projective_path_object(f) : path_object(f);
}

struct HomotopyWitness {
  EquivariantFunctor homotopy;  // A -> path object
  EquivariantFunctor f;
  EquivariantFunctor g;
};

// Right homotopy f ~ g through the given path object of B over C, i.e. a
// lift of (f, g): A -> B x_C B through delta2.
inline std::optional<HomotopyWitness> find_right_homotopy(const EquivariantFunctor& f,
                                                          const EquivariantFunctor& g,
                                                          const PathFactorization& path,
                                                          Budget& budget) {
  if (f.dom != g.dom || f.cod != path.base.dom || g.cod != path.base.dom) {
    throw Error(ErrorKind::kCodomainMismatch, "homotopy between maps that do not share the path object's base");
  }
  const Groupoid& a = f.dom->g();
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (path.base.on_obj(f.on_obj(x)) != path.base.on_obj(g.on_obj(x))) return std::nullopt;
  }
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    if (path.base.on_mor(f.on_mor(m)) != path.base.on_mor(g.on_mor(m))) return std::nullopt;
  }
  EquivariantFunctor pair = pair_into(path.pairs, f, g);
  FunctorQuery q = equivariant_query(*f.dom, *path.path);
  q.over_cod = &path.delta2.map;
  q.over_dom = &pair.map;
  std::optional<HomotopyWitness> found;
  FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
    found = HomotopyWitness{EquivariantFunctor{f.dom, path.path, Functor{f.dom->base, path.path->base, o, m}}, f, g};
    return false;
  });
  return found;
}

// Right homotopy over the point, using the path object of the structure.
inline std::optional<HomotopyWitness> find_right_homotopy(const EquivariantFunctor& f,
                                                          const EquivariantFunctor& g, Structure s,
                                                          Budget& budget) {
  return find_right_homotopy(f, g, path_object_for(terminal_equivariant(f.cod), s), budget);
}

struct HomotopyEquivalenceClauses {
  bool weak_equivalence = false;
  bool iso_on_full_fixed = false;          // restriction to fixed objects is an isomorphism
  bool bijection_on_fixed_objects = false;
};

inline HomotopyEquivalenceClauses homotopy_equivalence_clauses(const EquivariantFunctor& f) {
  HomotopyEquivalenceClauses c;
  c.weak_equivalence = classify_functor(f.map).equivalence;
  FixedPointClauses fp = fixed_point_clauses(f);
  c.iso_on_full_fixed = fp.iso_on_full_fixed;
  c.bijection_on_fixed_objects = fp.bijection_on_fixed_objects;
  return c;
}

// Levelwise equivalence that restricts to an isomorphism of the full
// subgroupoids on fixed objects.
inline bool is_homotopy_equivalence_projective(const EquivariantFunctor& f) {
  HomotopyEquivalenceClauses c = homotopy_equivalence_clauses(f);
  return c.weak_equivalence && c.iso_on_full_fixed;
}

struct HomotopyInverse {
  EquivariantFunctor inverse;
  HomotopyWitness unit;    // inverse o f ~ id
  HomotopyWitness counit;  // f o inverse ~ id
};

// Brute force: every equivariant g: B -> A is tried in search order. pa and
// pb are path objects of A and B over the point.
inline std::optional<HomotopyInverse> find_homotopy_inverse(const EquivariantFunctor& f,
                                                            const PathFactorization& pa,
                                                            const PathFactorization& pb, Budget& budget) {
  EquivariantFunctor ida = identity_equivariant(f.dom);
  EquivariantFunctor idb = identity_equivariant(f.cod);
  std::optional<HomotopyInverse> found;
  FunctorSearch(equivariant_query(*f.cod, *f.dom), budget).run([&](const auto& o, const auto& m) {
    EquivariantFunctor g{f.cod, f.dom, Functor{f.cod->base, f.dom->base, o, m}};
    auto unit = find_right_homotopy(compose(g, f), ida, pa, budget);
    if (!unit) return true;
    auto counit = find_right_homotopy(compose(f, g), idb, pb, budget);
    if (!counit) return true;
    found = HomotopyInverse{g, *unit, *counit};
    return false;
  });
  return found;
}

inline std::optional<HomotopyInverse> find_homotopy_inverse(const EquivariantFunctor& f, Structure s,
                                                            Budget& budget) {
  return find_homotopy_inverse(f, path_object_for(terminal_equivariant(f.dom), s),
                               path_object_for(terminal_equivariant(f.cod), s), budget);
}

}  // namespace invgpd

#endif  // INVGPD_HOMOTOPY_HPP_
