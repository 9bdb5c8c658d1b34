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

// Limits, colimits and subgroupoids of finite groupoids.

#ifndef INVGPD_CONSTRUCTIONS_HPP_
#define INVGPD_CONSTRUCTIONS_HPP_

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invgpd/functor.hpp"
#include "invgpd/groupoid.hpp"

namespace invgpd {

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline GroupoidPtr point_groupoid() {
  static const GroupoidPtr point = share(Groupoid::from_rule(
      {"*"}, {{"id_*", 0, 0}}, {0}, {0}, [](MorId, MorId) { return MorId{0}; }));
  return point;
}

inline GroupoidPtr empty_groupoid() {
  static const GroupoidPtr empty = share(Groupoid());
  return empty;
}

struct Pullback {
  GroupoidPtr object;
  Functor pr1;
  Functor pr2;
  std::unordered_map<std::uint64_t, ObjId> obj_index;
  std::unordered_map<std::uint64_t, MorId> mor_index;

  ObjId pair_object(ObjId a, ObjId b) const {
    auto it = obj_index.find(pair_key(a, b));
    return it == obj_index.end() ? kNone : it->second;
  }
  MorId pair_morphism(MorId m, MorId n) const {
    auto it = mor_index.find(pair_key(m, n));
    return it == mor_index.end() ? kNone : it->second;
  }
};

// Objects are pairs (a, b) with f(a) = g(b), in lexicographic order.
inline Pullback pullback(const Functor& f, const Functor& g) {
  if (f.cod != g.cod) {
    throw Error(ErrorKind::kCodomainMismatch, "pullback of functors with different codomains");
  }
  const Groupoid& a = *f.dom;
  const Groupoid& b = *g.dom;
  const Groupoid& c = *f.cod;
  std::vector<std::vector<ObjId>> obj_over(c.num_objects());
  for (ObjId y = 0; y < b.num_objects(); ++y) obj_over[g.obj[y]].push_back(y);
  std::vector<std::vector<MorId>> mor_over(c.num_morphisms());
  for (MorId n = 0; n < b.num_morphisms(); ++n) mor_over[g.mor[n]].push_back(n);

  Pullback p;
  std::vector<std::string> names;
  std::vector<ObjId> o1, o2;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y : obj_over[f.obj[x]]) {
      p.obj_index.emplace(pair_key(x, y), static_cast<ObjId>(o1.size()));
      names.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
      o1.push_back(x);
      o2.push_back(y);
    }
  }
  std::vector<MorphismSpec> mors;
  std::vector<MorId> m1, m2;
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    for (MorId n : mor_over[f.mor[m]]) {
      p.mor_index.emplace(pair_key(m, n), static_cast<MorId>(m1.size()));
      mors.push_back({"(" + a.morphism_name(m) + "," + b.morphism_name(n) + ")",
                      p.obj_index.at(pair_key(a.src(m), b.src(n))),
                      p.obj_index.at(pair_key(a.tgt(m), b.tgt(n)))});
      m1.push_back(m);
      m2.push_back(n);
    }
  }
  std::vector<MorId> ident, inv;
  for (ObjId z = 0; z < o1.size(); ++z) {
    ident.push_back(p.mor_index.at(pair_key(a.identity(o1[z]), b.identity(o2[z]))));
  }
  for (MorId k = 0; k < m1.size(); ++k) {
    inv.push_back(p.mor_index.at(pair_key(a.inverse(m1[k]), b.inverse(m2[k]))));
  }
  p.object = share(Groupoid::from_rule(
      std::move(names), std::move(mors), std::move(ident), std::move(inv),
      [&](MorId h, MorId k) {
        return p.mor_index.at(pair_key(a.compose(m1[h], m1[k]), b.compose(m2[h], m2[k])));
      }));
  p.pr1 = Functor{p.object, f.dom, o1, m1};
  p.pr2 = Functor{p.object, g.dom, o2, m2};
  return p;
}

inline Pullback product(const GroupoidPtr& a, const GroupoidPtr& b) {
  GroupoidPtr point = point_groupoid();
  return pullback(terminal_functor(a, point), terminal_functor(b, point));
}

struct Coproduct {
  GroupoidPtr object;
  Functor in1;
  Functor in2;
};

// Objects of a come first. Names get an "@0"/"@1" suffix when they clash.
inline Coproduct coproduct(const GroupoidPtr& a, const GroupoidPtr& b) {
  bool clash = false;
  for (ObjId x = 0; x < b->num_objects() && !clash; ++x) {
    clash = a->find_object(b->object_name(x)).has_value();
  }
  for (MorId m = 0; m < b->num_morphisms() && !clash; ++m) {
    clash = a->find_morphism(b->morphism_name(m)).has_value();
  }
  auto tag = [clash](const std::string& s, int side) {
    return clash ? s + "@" + std::to_string(side) : s;
  };
  const ObjId na = static_cast<ObjId>(a->num_objects());
  const MorId ma = static_cast<MorId>(a->num_morphisms());
  std::vector<std::string> names;
  std::vector<MorphismSpec> mors;
  std::vector<MorId> ident, inv;
  for (ObjId x = 0; x < na; ++x) {
    names.push_back(tag(a->object_name(x), 0));
    ident.push_back(a->identity(x));
  }
  for (ObjId x = 0; x < b->num_objects(); ++x) {
    names.push_back(tag(b->object_name(x), 1));
    ident.push_back(ma + b->identity(x));
  }
  for (MorId m = 0; m < ma; ++m) {
    mors.push_back({tag(a->morphism_name(m), 0), a->src(m), a->tgt(m)});
    inv.push_back(a->inverse(m));
  }
  for (MorId m = 0; m < b->num_morphisms(); ++m) {
    mors.push_back({tag(b->morphism_name(m), 1), na + b->src(m), na + b->tgt(m)});
    inv.push_back(ma + b->inverse(m));
  }
  Coproduct c;
  c.object = share(Groupoid::from_rule(
      std::move(names), std::move(mors), std::move(ident), std::move(inv),
      [&](MorId g, MorId f) {
        return f < ma ? a->compose(g, f) : ma + b->compose(g - ma, f - ma);
      }));
  c.in1 = Functor{a, c.object, {}, {}};
  for (ObjId x = 0; x < na; ++x) c.in1.obj.push_back(x);
  for (MorId m = 0; m < ma; ++m) c.in1.mor.push_back(m);
  c.in2 = Functor{b, c.object, {}, {}};
  for (ObjId x = 0; x < b->num_objects(); ++x) c.in2.obj.push_back(na + x);
  for (MorId m = 0; m < b->num_morphisms(); ++m) c.in2.mor.push_back(ma + m);
  return c;
}

struct Subgroupoid {
  GroupoidPtr object;
  Functor inclusion;
};

// Subgroupoid on the given objects (in the order given) and the morphisms
// between them accepted by keep. keep must be closed under composition and
// inverses and accept identities.
inline Subgroupoid subgroupoid(const GroupoidPtr& g, const std::vector<ObjId>& objects,
                               const std::function<bool(MorId)>& keep) {
  std::vector<ObjId> local(g->num_objects(), kNone);
  for (ObjId i = 0; i < objects.size(); ++i) local[objects[i]] = i;
  std::vector<MorId> mors;
  std::vector<MorId> local_mor(g->num_morphisms(), kNone);
  for (MorId m = 0; m < g->num_morphisms(); ++m) {
    if (local[g->src(m)] != kNone && local[g->tgt(m)] != kNone && keep(m)) {
      local_mor[m] = static_cast<MorId>(mors.size());
      mors.push_back(m);
    }
  }
  std::vector<std::string> names;
  std::vector<MorphismSpec> specs;
  std::vector<MorId> ident, inv;
  for (ObjId x : objects) {
    names.push_back(g->object_name(x));
    ident.push_back(local_mor[g->identity(x)]);
  }
  for (MorId m : mors) {
    specs.push_back({g->morphism_name(m), local[g->src(m)], local[g->tgt(m)]});
    inv.push_back(local_mor[g->inverse(m)]);
  }
  Subgroupoid s;
  s.object = share(Groupoid::from_rule(
      std::move(names), std::move(specs), std::move(ident), std::move(inv),
      [&](MorId h, MorId k) { return local_mor[g->compose(mors[h], mors[k])]; }));
  s.inclusion = Functor{s.object, g, objects, mors};
  return s;
}

inline Subgroupoid full_subgroupoid(const GroupoidPtr& g, const std::vector<ObjId>& objects) {
  return subgroupoid(g, objects, [](MorId) { return true; });
}

// Restriction of f to full subgroupoids on both sides; requires f to map
// the domain objects into the codomain objects. Returns nullopt otherwise.
inline std::optional<Functor> restrict_functor(const Functor& f, const Subgroupoid& a,
                                               const Subgroupoid& b) {
  std::vector<ObjId> local_obj(b.inclusion.cod->num_objects(), kNone);
  for (ObjId i = 0; i < b.inclusion.obj.size(); ++i) local_obj[b.inclusion.obj[i]] = i;
  std::vector<MorId> local_mor(b.inclusion.cod->num_morphisms(), kNone);
  for (MorId i = 0; i < b.inclusion.mor.size(); ++i) local_mor[b.inclusion.mor[i]] = i;
  Functor r{a.object, b.object, {}, {}};
  for (ObjId x : a.inclusion.obj) {
    ObjId y = local_obj[f.obj[x]];
    if (y == kNone) return std::nullopt;
    r.obj.push_back(y);
  }
  for (MorId m : a.inclusion.mor) {
    MorId n = local_mor[f.mor[m]];
    if (n == kNone) return std::nullopt;
    r.mor.push_back(n);
  }
  return r;
}

inline bool is_isomorphism(const Functor& f) {
  if (f.dom->num_objects() != f.cod->num_objects() ||
      f.dom->num_morphisms() != f.cod->num_morphisms()) {
    return false;
  }
  std::vector<char> hit(f.cod->num_morphisms(), 0);
  for (MorId n : f.mor) {
    if (hit[n]) return false;
    hit[n] = 1;
  }
  return is_injective_on_objects(f);
}

}  // namespace invgpd

#endif  // INVGPD_CONSTRUCTIONS_HPP_
