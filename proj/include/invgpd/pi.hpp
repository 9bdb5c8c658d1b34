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

// Dependent products along an isofibration g: A -> B of a map f: C -> A,
// and the adjunction between pulling back along g and taking products.
//
// An object over y is a section of f over the fiber of g at y. A morphism
// over u: y -> y' is a transport: a functor over A from the pullback of u
// (seen as a map from the interval) along g into C. Its ends restrict to the
// sections at y and y'.

#ifndef INVGPD_PI_HPP_
#define INVGPD_PI_HPP_

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invgpd/constructions.hpp"
#include "invgpd/equivariant.hpp"
#include "invgpd/search.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {

class PiBundle {
 public:
  // Chooses a lift of u at x; used when composing transports.
  using LiftChoice = std::function<MorId(MorId u, ObjId x)>;

  struct Section {
    ObjId base = kNone;
    std::vector<ObjId> obj;  // per fiber object, in fiber order
    std::vector<MorId> mor;  // per fiber morphism, in fiber order
  };
  struct Transport {
    MorId base = kNone;
    std::vector<ObjId> obj;  // over the objects of along(base)
    std::vector<MorId> mor;  // over the morphisms of along(base)
  };

  PiBundle(const EquivariantFunctor& g, const EquivariantFunctor& f, Budget& budget) : g_(g), f_(f) {
    if (f.cod != g.dom) {
      throw Error(ErrorKind::kCodomainMismatch, "the map to take products of must land in the domain of the fibration");
    }
    if (!classify_functor(g.map).isofibration) {
      throw Error(ErrorKind::kNotAFibration, "products are only taken along isofibrations");
    }
    const Groupoid& a = g.dom->g();
    const Groupoid& b = g.cod->g();
    fiber_obj_.resize(b.num_objects());
    fiber_mor_.resize(b.num_objects());
    pos_obj_.assign(a.num_objects(), kNone);
    pos_mor_.assign(a.num_morphisms(), kNone);
    for (ObjId x = 0; x < a.num_objects(); ++x) {
      pos_obj_[x] = static_cast<std::uint32_t>(fiber_obj_[g.on_obj(x)].size());
      fiber_obj_[g.on_obj(x)].push_back(x);
    }
    for (MorId h = 0; h < a.num_morphisms(); ++h) {
      if (!b.is_identity(g.on_mor(h))) continue;
      ObjId y = g.on_obj(a.src(h));
      pos_mor_[h] = static_cast<std::uint32_t>(fiber_mor_[y].size());
      fiber_mor_[y].push_back(h);
    }

    // Sections over each fiber.
    std::vector<std::string> names;
    for (ObjId y = 0; y < b.num_objects(); ++y) {
      Subgroupoid fib = subgroupoid(g.dom->base, fiber_obj_[y],
                                    [&](MorId h) { return b.is_identity(g.on_mor(h)); });
      FunctorQuery q = plain_query(*fib.object, f.dom->g());
      q.over_cod = &f.map;
      q.over_dom = &fib.inclusion;
      FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
        std::string name = "(" + b.object_name(y) + ";";
        for (std::size_t k = 0; k < o.size(); ++k) name += (k ? "," : "") + f.dom->g().object_name(o[k]);
        name += ")";
        section_index_[{y, m}] = static_cast<ObjId>(sections_.size());
        sections_.push_back({y, o, m});
        names.push_back(std::move(name));
        return true;
      });
    }
    disambiguate(names);

    // Pullbacks of every morphism of B and the transports over them.
    const GroupoidPtr& interval = shapes::interval_groupoid();
    const MorId iphi = *interval->find_morphism("phi");
    const MorId iphi_inv = *interval->find_morphism("phi^-1");
    std::vector<MorphismSpec> mors;
    for (MorId u = 0; u < b.num_morphisms(); ++u) {
      std::vector<MorId> imor(interval->num_morphisms());
      imor[interval->identity(0)] = b.identity(b.src(u));
      imor[interval->identity(1)] = b.identity(b.tgt(u));
      imor[iphi] = u;
      imor[iphi_inv] = b.inverse(u);
      Functor path_u{interval, g.cod->base, {b.src(u), b.tgt(u)}, imor};
      along_.push_back(pullback(g.map, path_u));
      const Pullback& pb = along_.back();
      FunctorQuery q = plain_query(*pb.object, f.dom->g());
      q.over_cod = &f.map;
      q.over_dom = &pb.pr1;
      std::uint32_t k = 0;
      FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
        Transport t{u, o, m};
        ObjId s = section_index_.at({b.src(u), restrict_end(t, 0)});
        ObjId e = section_index_.at({b.tgt(u), restrict_end(t, 1)});
        transport_index_[{u, m}] = static_cast<MorId>(transports_.size());
        transports_.push_back(std::move(t));
        mors.push_back({"(" + b.morphism_name(u) + ";" + std::to_string(k++) + ")", s, e});
        return true;
      });
    }
    iphi_ = iphi;
    iphi_inv_ = iphi_inv;

    std::vector<MorId> ident, inv;
    for (ObjId o = 0; o < sections_.size(); ++o) ident.push_back(identity_of(o));
    for (MorId k = 0; k < transports_.size(); ++k) inv.push_back(inverse_of(k));
    GroupoidPtr pi = share(Groupoid::from_rule(
        std::move(names), std::move(mors), std::move(ident), std::move(inv),
        [&](MorId h, MorId k) { return compose_transports(h, k, least_lift()); }));

    std::vector<ObjId> inv_obj;
    std::vector<MorId> inv_mor;
    for (ObjId o = 0; o < sections_.size(); ++o) inv_obj.push_back(act_section(o));
    for (MorId k = 0; k < transports_.size(); ++k) inv_mor.push_back(act_transport(k));
    object_ = make_involutive(pi, std::move(inv_obj), std::move(inv_mor));
    projection_ = EquivariantFunctor{object_, g.cod, Functor{pi, g.cod->base, {}, {}}};
    for (const auto& s : sections_) projection_.map.obj.push_back(s.base);
    for (const auto& t : transports_) projection_.map.mor.push_back(t.base);
  }

  const InvPtr& object() const { return object_; }
  const EquivariantFunctor& projection() const { return projection_; }
  const EquivariantFunctor& fibration() const { return g_; }
  const EquivariantFunctor& map() const { return f_; }
  const Section& section(ObjId o) const { return sections_[o]; }
  const Transport& transport(MorId k) const { return transports_[k]; }
  const Pullback& along(MorId u) const { return along_[u]; }
  const std::vector<ObjId>& fiber_objects(ObjId y) const { return fiber_obj_[y]; }
  const std::vector<MorId>& fiber_morphisms(ObjId y) const { return fiber_mor_[y]; }
  std::uint32_t fiber_position(ObjId x) const { return pos_obj_[x]; }
  std::uint32_t fiber_morphism_position(MorId h) const { return pos_mor_[h]; }

  ObjId find_section(ObjId y, const std::vector<MorId>& mor) const {
    auto it = section_index_.find({y, mor});
    return it == section_index_.end() ? kNone : it->second;
  }
  MorId find_transport(MorId u, const std::vector<MorId>& mor) const {
    auto it = transport_index_.find({u, mor});
    return it == transport_index_.end() ? kNone : it->second;
  }

  LiftChoice least_lift() const {
    return [this](MorId u, ObjId x) {
      for (MorId h : g_.dom->g().out(x)) {
        if (g_.on_mor(h) == u) return h;
      }
      throw std::logic_error("fibration has no lift");
    };
  }

  // Composite of transports k2 o k1 using the given choice of lifts.
  MorId compose_transports(MorId k2, MorId k1, const LiftChoice& lift) const {
    const Groupoid& a = g_.dom->g();
    const Groupoid& b = g_.cod->g();
    const Transport& t1 = transports_[k1];
    const Transport& t2 = transports_[k2];
    const MorId u = t1.base, u2 = t2.base;
    const MorId w = b.compose(u2, u);
    const Pullback& p1 = along_[u];
    const Pullback& p2 = along_[u2];
    const Pullback& pw = along_[w];
    const GroupoidPtr& interval = shapes::interval_groupoid();
    const MorId id0 = interval->identity(0), id1 = interval->identity(1);
    const Groupoid& c = f_.dom->g();
    std::vector<MorId> mor(pw.object->num_morphisms());
    // Forward arrows first so that backward ones can be read off as inverses.
    for (MorId e = 0; e < pw.object->num_morphisms(); ++e) {
      MorId h = pw.pr1.mor[e];
      MorId iota = pw.pr2.mor[e];
      if (iota == id0) {
        mor[e] = t1.mor[p1.pair_morphism(h, id0)];
      } else if (iota == id1) {
        mor[e] = t2.mor[p2.pair_morphism(h, id1)];
      } else if (iota == iphi_) {
        MorId lu = lift(u, a.src(h));
        MorId first = t1.mor[p1.pair_morphism(lu, iphi_)];
        MorId second = t2.mor[p2.pair_morphism(a.compose(h, a.inverse(lu)), iphi_)];
        mor[e] = c.compose(second, first);
      }
    }
    for (MorId e = 0; e < pw.object->num_morphisms(); ++e) {
      if (pw.pr2.mor[e] == iphi_inv_) {
        MorId fwd = pw.pair_morphism(a.inverse(pw.pr1.mor[e]), iphi_);
        mor[e] = c.inverse(mor[fwd]);
      }
    }
    MorId r = find_transport(w, mor);
    if (r == kNone) throw std::logic_error("composite transport is not a functor over A");
    return r;
  }

 private:
  std::vector<MorId> restrict_end(const Transport& t, int end) const {
    const Pullback& pb = along_[t.base];
    const GroupoidPtr& interval = shapes::interval_groupoid();
    const MorId iid = interval->identity(static_cast<ObjId>(end));
    const Groupoid& b = g_.cod->g();
    ObjId y = end == 0 ? b.src(t.base) : b.tgt(t.base);
    std::vector<MorId> mor;
    for (MorId h : fiber_mor_[y]) mor.push_back(t.mor[pb.pair_morphism(h, iid)]);
    return mor;
  }

  MorId identity_of(ObjId o) const {
    const Section& s = sections_[o];
    const Groupoid& b = g_.cod->g();
    const MorId u = b.identity(s.base);
    const Pullback& pb = along_[u];
    std::vector<MorId> mor;
    for (MorId e = 0; e < pb.object->num_morphisms(); ++e) {
      mor.push_back(s.mor[pos_mor_[pb.pr1.mor[e]]]);
    }
    return find_transport(u, mor);
  }

  MorId inverse_of(MorId k) const {
    const Transport& t = transports_[k];
    const Groupoid& b = g_.cod->g();
    const MorId u = t.base, ui = b.inverse(u);
    const Pullback& p = along_[u];
    const Pullback& pi = along_[ui];
    const GroupoidPtr& interval = shapes::interval_groupoid();
    std::vector<MorId> mor;
    for (MorId e = 0; e < pi.object->num_morphisms(); ++e) {
      MorId iota = pi.pr2.mor[e];
      MorId flipped = iota == iphi_ ? iphi_inv_ : iota == iphi_inv_ ? iphi_ : interval->identity(1 - interval->src(iota));
      mor.push_back(t.mor[p.pair_morphism(pi.pr1.mor[e], flipped)]);
    }
    MorId r = find_transport(ui, mor);
    if (r == kNone) throw std::logic_error("inverse transport is not a functor over A");
    return r;
  }

  ObjId act_section(ObjId o) const {
    const Section& s = sections_[o];
    const ObjId y = g_.cod->act(s.base);
    std::vector<MorId> mor;
    for (MorId h : fiber_mor_[y]) {
      mor.push_back(f_.dom->act_mor(s.mor[pos_mor_[g_.dom->act_mor(h)]]));
    }
    return section_index_.at({y, mor});
  }

  MorId act_transport(MorId k) const {
    const Transport& t = transports_[k];
    const MorId u = g_.cod->act_mor(t.base);
    const Pullback& p = along_[t.base];
    const Pullback& q = along_[u];
    std::vector<MorId> mor;
    for (MorId e = 0; e < q.object->num_morphisms(); ++e) {
      MorId src = p.pair_morphism(g_.dom->act_mor(q.pr1.mor[e]), q.pr2.mor[e]);
      mor.push_back(f_.dom->act_mor(t.mor[src]));
    }
    return transport_index_.at({u, mor});
  }

  static void disambiguate(std::vector<std::string>& names) {
    std::map<std::string, int> count;
    for (const auto& n : names) ++count[n];
    std::map<std::string, int> seen;
    for (auto& n : names) {
      if (count[n] > 1) n += "#" + std::to_string(seen[n]++);
    }
  }

  EquivariantFunctor g_;
  EquivariantFunctor f_;
  std::vector<std::vector<ObjId>> fiber_obj_;
  std::vector<std::vector<MorId>> fiber_mor_;
  std::vector<std::uint32_t> pos_obj_;
  std::vector<std::uint32_t> pos_mor_;
  std::vector<Section> sections_;
  std::vector<Transport> transports_;
  std::vector<Pullback> along_;
  std::map<std::pair<ObjId, std::vector<MorId>>, ObjId> section_index_;
  std::map<std::pair<MorId, std::vector<MorId>>, MorId> transport_index_;
  MorId iphi_ = kNone;
  MorId iphi_inv_ = kNone;
  InvPtr object_;
  EquivariantFunctor projection_;
};

inline PiBundle pi_of(const EquivariantFunctor& g, const EquivariantFunctor& f, Budget& budget) {
  return PiBundle(g, f, budget);
}

// The adjunction between pulling back along g and taking products. gh is
// the pullback of g and some h: D -> B, with pr1 to A and pr2 to D.
// Forward sends v: gh -> C over A to the transposed map D -> Pi over B.
inline EquivariantFunctor adjunction_forward(const PiBundle& pi, const EquivariantFunctor& h,
                                             const EqPullback& gh, const EquivariantFunctor& v) {
  if (h.cod != pi.fibration().cod || gh.pr2.cod != h.dom || v.dom != gh.object || v.cod != pi.map().dom || gh.pr1.cod != pi.fibration().dom) {
    throw Error(ErrorKind::kMalformedSliceMorphism, "map is not defined on the pullback of the fibration");
  }
  for (MorId e = 0; e < gh.object->g().num_morphisms(); ++e) {
    if (pi.map().on_mor(v.on_mor(e)) != gh.pr1.on_mor(e)) {
      throw Error(ErrorKind::kMalformedSliceMorphism, "map does not commute with the projections to A");
    }
  }
  const InvPtr& d = h.dom;
  const Groupoid& dg = d->g();
  const GroupoidPtr& interval = shapes::interval_groupoid();
  const MorId iphi = *interval->find_morphism("phi");
  const MorId iphi_inv = *interval->find_morphism("phi^-1");
  const std::vector<ObjId>& hobj = h.map.obj;
  const std::vector<MorId>& hmor = h.map.mor;
  EquivariantFunctor k{d, pi.object(), Functor{d->base, pi.object()->base, {}, {}}};
  for (ObjId z = 0; z < dg.num_objects(); ++z) {
    std::vector<MorId> mor;
    for (MorId m : pi.fiber_morphisms(hobj[z])) mor.push_back(v.on_mor(gh.raw.pair_morphism(m, dg.identity(z))));
    k.map.obj.push_back(pi.find_section(hobj[z], mor));
  }
  for (MorId e = 0; e < dg.num_morphisms(); ++e) {
    const Pullback& along = pi.along(hmor[e]);
    std::vector<MorId> mor;
    for (MorId q = 0; q < along.object->num_morphisms(); ++q) {
      MorId iota = along.pr2.mor[q];
      MorId de = iota == iphi ? e
                 : iota == iphi_inv ? dg.inverse(e)
                 : interval->src(iota) == 0 ? dg.identity(dg.src(e))
                                            : dg.identity(dg.tgt(e));
      mor.push_back(v.on_mor(gh.raw.pair_morphism(along.pr1.mor[q], de)));
    }
    k.map.mor.push_back(pi.find_transport(hmor[e], mor));
  }
  return k;
}

// Backward sends k: D -> Pi over B to the transposed map gh -> C over A.
inline EquivariantFunctor adjunction_backward(const PiBundle& pi, const EqPullback& gh,
                                              const EquivariantFunctor& k) {
  if (k.cod != pi.object() || k.dom != gh.pr2.cod || gh.pr1.cod != pi.fibration().dom) {
    throw Error(ErrorKind::kMalformedSliceMorphism, "map does not land in the dependent product");
  }
  const GroupoidPtr& interval = shapes::interval_groupoid();
  const MorId iphi = *interval->find_morphism("phi");
  const Groupoid& p = gh.object->g();
  EquivariantFunctor v{gh.object, pi.map().dom, Functor{gh.object->base, pi.map().dom->base, {}, {}}};
  for (ObjId z = 0; z < p.num_objects(); ++z) {
    ObjId x = gh.pr1.on_obj(z);
    const auto& s = pi.section(k.on_obj(gh.pr2.on_obj(z)));
    if (s.base != pi.fibration().on_obj(x)) {
      throw Error(ErrorKind::kMalformedSliceMorphism, "map does not commute with the projections to B");
    }
    v.map.obj.push_back(s.obj[pi.fiber_position(x)]);
  }
  for (MorId e = 0; e < p.num_morphisms(); ++e) {
    const auto& t = pi.transport(k.on_mor(gh.pr2.on_mor(e)));
    MorId q = pi.along(t.base).pair_morphism(gh.pr1.on_mor(e), iphi);
    if (q == kNone) {
      throw Error(ErrorKind::kMalformedSliceMorphism, "map does not commute with the projections to B");
    }
    v.map.mor.push_back(t.mor[q]);
  }
  return v;
}

}  // namespace invgpd

#endif  // INVGPD_PI_HPP_
