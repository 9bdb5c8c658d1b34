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

// Groupoids with an involution, equivariant functors, fixed points and the
// equivariant versions of the basic limits.

#ifndef INVGPD_EQUIVARIANT_HPP_
#define INVGPD_EQUIVARIANT_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "invgpd/constructions.hpp"
#include "invgpd/functor.hpp"
#include "invgpd/groupoid.hpp"

namespace invgpd {

struct InvGroupoid {
  GroupoidPtr base;
  std::vector<ObjId> inv_obj;
  std::vector<MorId> inv_mor;

  const Groupoid& g() const { return *base; }
  ObjId act(ObjId x) const { return inv_obj[x]; }
  MorId act_mor(MorId m) const { return inv_mor[m]; }
  bool is_fixed(ObjId x) const { return inv_obj[x] == x; }
  Functor involution() const { return Functor{base, base, inv_obj, inv_mor}; }
};

using InvPtr = std::shared_ptr<const InvGroupoid>;

inline Diagnostics check_involution(const GroupoidPtr& base, const std::vector<ObjId>& obj,
                                    const std::vector<MorId>& mor) {
  Functor eta{base, base, obj, mor};
  Diagnostics out = check_functor(eta);
  if (!out.empty()) return out;
  for (ObjId x = 0; x < base->num_objects(); ++x) {
    if (obj[obj[x]] != x) out.push_back({"not_involutive", "involution applied twice moves object '" + base->object_name(x) + "'"});
  }
  for (MorId m = 0; m < base->num_morphisms(); ++m) {
    if (mor[mor[m]] != m) out.push_back({"not_involutive", "involution applied twice moves morphism '" + base->morphism_name(m) + "'"});
  }
  return out;
}

inline InvPtr make_involutive(GroupoidPtr base, std::vector<ObjId> obj, std::vector<MorId> mor) {
  Diagnostics diags = check_involution(base, obj, mor);
  if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, describe(diags));
  return std::make_shared<const InvGroupoid>(InvGroupoid{std::move(base), std::move(obj), std::move(mor)});
}

inline InvPtr trivial_action(const GroupoidPtr& g) {
  Functor id = identity_functor(g);
  return std::make_shared<const InvGroupoid>(InvGroupoid{g, id.obj, id.mor});
}

struct EquivariantFunctor {
  InvPtr dom;
  InvPtr cod;
  Functor map;

  ObjId on_obj(ObjId x) const { return map.obj[x]; }
  MorId on_mor(MorId m) const { return map.mor[m]; }
};

inline Diagnostics check_equivariant(const EquivariantFunctor& f) {
  Diagnostics out;
  if (!f.dom || !f.cod || f.map.dom != f.dom->base || f.map.cod != f.cod->base) {
    out.push_back({"groupoid_mismatch", "underlying functor does not connect the given groupoids"});
    return out;
  }
  out = check_functor(f.map);
  if (!out.empty()) return out;
  const Groupoid& a = f.dom->g();
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (f.map.obj[f.dom->act(x)] != f.cod->act(f.map.obj[x])) {
      out.push_back({"not_equivariant", "object '" + a.object_name(x) + "' breaks equivariance"});
      return out;
    }
  }
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    if (f.map.mor[f.dom->act_mor(m)] != f.cod->act_mor(f.map.mor[m])) {
      out.push_back({"not_equivariant", "morphism '" + a.morphism_name(m) + "' breaks equivariance"});
      return out;
    }
  }
  return out;
}

inline EquivariantFunctor make_equivariant(InvPtr dom, InvPtr cod, std::vector<ObjId> obj,
                                           std::vector<MorId> mor) {
  EquivariantFunctor f{dom, cod, Functor{dom->base, cod->base, std::move(obj), std::move(mor)}};
  Diagnostics diags = check_equivariant(f);
  if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, describe(diags));
  return f;
}

inline EquivariantFunctor identity_equivariant(const InvPtr& a) {
  return EquivariantFunctor{a, a, identity_functor(a->base)};
}

inline EquivariantFunctor compose(const EquivariantFunctor& g, const EquivariantFunctor& f) {
  if (f.cod != g.dom) {
    throw Error(ErrorKind::kCodomainMismatch, "codomain of the first functor is not the domain of the second");
  }
  return EquivariantFunctor{f.dom, g.cod, compose(g.map, f.map)};
}

inline bool same_functor(const EquivariantFunctor& a, const EquivariantFunctor& b) {
  return a.dom == b.dom && a.cod == b.cod && a.map.obj == b.map.obj && a.map.mor == b.map.mor;
}

inline InvPtr point_inv() {
  static const InvPtr p = trivial_action(point_groupoid());
  return p;
}

inline InvPtr empty_inv() {
  static const InvPtr e = trivial_action(empty_groupoid());
  return e;
}

inline EquivariantFunctor terminal_equivariant(const InvPtr& a) {
  return EquivariantFunctor{a, point_inv(), terminal_functor(a->base, point_inv()->base)};
}

// The same functor between the groupoids with their involutions forgotten.
inline EquivariantFunctor with_trivial_action(const EquivariantFunctor& f) {
  return EquivariantFunctor{trivial_action(f.map.dom), trivial_action(f.map.cod), f.map};
}

struct FixedPoints {
  std::vector<ObjId> objects;
  Subgroupoid full;    // full subgroupoid on fixed objects
  Subgroupoid strict;  // fixed objects and fixed morphisms
};

inline FixedPoints fixed_points(const InvPtr& a) {
  FixedPoints fp;
  for (ObjId x = 0; x < a->g().num_objects(); ++x) {
    if (a->is_fixed(x)) fp.objects.push_back(x);
  }
  fp.full = full_subgroupoid(a->base, fp.objects);
  fp.strict = subgroupoid(a->base, fp.objects, [&](MorId m) { return a->act_mor(m) == m; });
  return fp;
}

// G + G with the involution exchanging the two copies.
inline InvPtr swap_double(const GroupoidPtr& g) {
  Coproduct c = coproduct(g, g);
  const ObjId n = static_cast<ObjId>(g->num_objects());
  const MorId m = static_cast<MorId>(g->num_morphisms());
  std::vector<ObjId> obj(2 * n);
  std::vector<MorId> mor(2 * m);
  for (ObjId x = 0; x < n; ++x) {
    obj[x] = n + x;
    obj[n + x] = x;
  }
  for (MorId f = 0; f < m; ++f) {
    mor[f] = m + f;
    mor[m + f] = f;
  }
  return make_involutive(c.object, std::move(obj), std::move(mor));
}

struct EqPullback {
  InvPtr object;
  EquivariantFunctor pr1;
  EquivariantFunctor pr2;
  Pullback raw;
};

inline EqPullback equivariant_pullback(const EquivariantFunctor& f, const EquivariantFunctor& g) {
  if (f.cod != g.cod) {
    throw Error(ErrorKind::kCodomainMismatch, "pullback of functors with different codomains");
  }
  EqPullback p;
  p.raw = pullback(f.map, g.map);
  const Groupoid& pb = *p.raw.object;
  std::vector<ObjId> obj(pb.num_objects());
  std::vector<MorId> mor(pb.num_morphisms());
  for (ObjId z = 0; z < pb.num_objects(); ++z) {
    obj[z] = p.raw.pair_object(f.dom->act(p.raw.pr1.obj[z]), g.dom->act(p.raw.pr2.obj[z]));
  }
  for (MorId k = 0; k < pb.num_morphisms(); ++k) {
    mor[k] = p.raw.pair_morphism(f.dom->act_mor(p.raw.pr1.mor[k]), g.dom->act_mor(p.raw.pr2.mor[k]));
  }
  p.object = std::make_shared<const InvGroupoid>(InvGroupoid{p.raw.object, std::move(obj), std::move(mor)});
  p.pr1 = EquivariantFunctor{p.object, f.dom, p.raw.pr1};
  p.pr2 = EquivariantFunctor{p.object, g.dom, p.raw.pr2};
  return p;
}

inline EqPullback equivariant_product(const InvPtr& a, const InvPtr& b) {
  return equivariant_pullback(terminal_equivariant(a), terminal_equivariant(b));
}

// The map x -> (f x, g x) into a pullback; throws if it does not land there.
inline EquivariantFunctor pair_into(const EqPullback& p, const EquivariantFunctor& f,
                                    const EquivariantFunctor& g) {
  if (f.dom != g.dom) throw Error(ErrorKind::kCodomainMismatch, "pairing functors with different domains");
  EquivariantFunctor h{f.dom, p.object, Functor{f.dom->base, p.object->base, {}, {}}};
  for (ObjId x = 0; x < f.dom->g().num_objects(); ++x) {
    ObjId z = p.raw.pair_object(f.on_obj(x), g.on_obj(x));
    if (z == kNone) throw Error(ErrorKind::kCodomainMismatch, "pair does not land in the pullback");
    h.map.obj.push_back(z);
  }
  for (MorId m = 0; m < f.dom->g().num_morphisms(); ++m) {
    MorId k = p.raw.pair_morphism(f.on_mor(m), g.on_mor(m));
    if (k == kNone) throw Error(ErrorKind::kCodomainMismatch, "pair does not land in the pullback");
    h.map.mor.push_back(k);
  }
  return h;
}

struct EqCoproduct {
  InvPtr object;
  EquivariantFunctor in1;
  EquivariantFunctor in2;
};

inline EqCoproduct equivariant_coproduct(const InvPtr& a, const InvPtr& b) {
  Coproduct c = coproduct(a->base, b->base);
  const ObjId na = static_cast<ObjId>(a->g().num_objects());
  const MorId ma = static_cast<MorId>(a->g().num_morphisms());
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
  for (ObjId x = 0; x < na; ++x) obj.push_back(a->act(x));
  for (ObjId x = 0; x < b->g().num_objects(); ++x) obj.push_back(na + b->act(x));
  for (MorId m = 0; m < ma; ++m) mor.push_back(a->act_mor(m));
  for (MorId m = 0; m < b->g().num_morphisms(); ++m) mor.push_back(ma + b->act_mor(m));
  EqCoproduct e;
  e.object = std::make_shared<const InvGroupoid>(InvGroupoid{c.object, std::move(obj), std::move(mor)});
  e.in1 = EquivariantFunctor{a, e.object, c.in1};
  e.in2 = EquivariantFunctor{b, e.object, c.in2};
  return e;
}

// Full subgroupoid on an involution-stable set of objects.
struct EqSubgroupoid {
  InvPtr object;
  EquivariantFunctor inclusion;
};

inline EqSubgroupoid equivariant_full_subgroupoid(const InvPtr& a, const std::vector<ObjId>& objects) {
  Subgroupoid s = full_subgroupoid(a->base, objects);
  std::vector<ObjId> local(a->g().num_objects(), kNone);
  for (ObjId i = 0; i < objects.size(); ++i) local[objects[i]] = i;
  std::vector<MorId> local_mor(a->g().num_morphisms(), kNone);
  for (MorId i = 0; i < s.inclusion.mor.size(); ++i) local_mor[s.inclusion.mor[i]] = i;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
  for (ObjId x : objects) obj.push_back(local[a->act(x)]);
  for (MorId m : s.inclusion.mor) mor.push_back(local_mor[a->act_mor(m)]);
  EqSubgroupoid e;
  e.object = make_involutive(s.object, std::move(obj), std::move(mor));
  e.inclusion = EquivariantFunctor{e.object, a, s.inclusion};
  return e;
}

}  // namespace invgpd

#endif  // INVGPD_EQUIVARIANT_HPP_
