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

// Pushouts along the generating maps ("attaching a cell") and sequences of
// such pushouts.
//
// Every cell used here adds objects that are either isolated (the point
// cell) or isomorphic to an existing object. The pushout is then the
// groupoid whose morphisms a -> b are the morphisms base(a) -> base(b) of
// the old groupoid, which keeps every old ID and makes the inclusion full.

#ifndef INVGPD_CELLS_HPP_
#define INVGPD_CELLS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invgpd/constructions.hpp"
#include "invgpd/equivariant.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {

enum class CellKind { kPoint, kI, kSi, kIprime };

inline const char* to_string(CellKind k) {
  switch (k) {
    case CellKind::kPoint: return "u";
    case CellKind::kI: return "i";
    case CellKind::kSi: return "Si";
    case CellKind::kIprime: return "iprime";
  }
  return "?";
}

inline std::optional<CellKind> parse_cell_kind(std::string_view s) {
  if (s == "u") return CellKind::kPoint;
  if (s == "i") return CellKind::kI;
  if (s == "Si") return CellKind::kSi;
  if (s == "iprime") return CellKind::kIprime;
  return std::nullopt;
}

inline EquivariantFunctor cell_generator(CellKind k) {
  switch (k) {
    case CellKind::kPoint: return generators::u();
    case CellKind::kI: return generators::i();
    case CellKind::kSi: return generators::si();
    case CellKind::kIprime: return generators::iprime();
  }
  return generators::u();
}

// Adds objects to an involutive groupoid. A fresh object either has a base
// in the old groupoid, to which it becomes isomorphic, or is isolated.
// theta is the old morphism act(base) -> base(partner) that the involution
// inserts; it must satisfy theta(partner) o act(theta) == id.
struct FreshObject {
  std::string name;
  ObjId base = kNone;
  std::uint32_t partner = 0;
  MorId theta = kNone;
};

class Extension {
 public:
  Extension(const InvPtr& x, const std::vector<FreshObject>& fresh, const std::string& prefix)
      : x_(x) {
    const Groupoid& g = x->g();
    const ObjId n_old = static_cast<ObjId>(g.num_objects());
    const ObjId n = n_old + static_cast<ObjId>(fresh.size());
    base_.resize(n);
    theta_.resize(n);
    std::vector<std::string> names(g.object_names());
    std::vector<ObjId> inv_obj(n);
    for (ObjId a = 0; a < n_old; ++a) {
      base_[a] = a;
      theta_[a] = g.identity(x->act(a));
      inv_obj[a] = x->act(a);
    }
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      ObjId a = n_old + static_cast<ObjId>(k);
      base_[a] = fresh[k].base;
      theta_[a] = fresh[k].theta;
      inv_obj[a] = n_old + fresh[k].partner;
      names.push_back(prefix + fresh[k].name);
    }

    std::vector<MorphismSpec> mors;
    for (MorId m = 0; m < g.num_morphisms(); ++m) {
      mors.push_back({g.morphism_name(m), g.src(m), g.tgt(m)});
    }
    std::uint32_t counter = 0;
    for (ObjId a = 0; a < n; ++a) {
      for (ObjId b = 0; b < n; ++b) {
        if (a < n_old && b < n_old) continue;
        offset_[pair_key(a, b)] = static_cast<MorId>(mors.size());
        for (std::size_t j = 0; j < hom_size(a, b); ++j) {
          mors.push_back({prefix + "m" + std::to_string(counter++), a, b});
        }
      }
    }
    reduced_.resize(mors.size());
    for (MorId m = 0; m < g.num_morphisms(); ++m) reduced_[m] = m;
    for (ObjId a = 0; a < n; ++a) {
      for (ObjId b = 0; b < n; ++b) {
        if (a < n_old && b < n_old) continue;
        MorId off = offset_.at(pair_key(a, b));
        if (base_[a] == kNone || base_[b] == kNone) {
          if (a == b) reduced_[off] = kNone;
          continue;
        }
        auto h = g.hom(base_[a], base_[b]);
        for (std::size_t j = 0; j < h.size(); ++j) reduced_[off + j] = h[j];
      }
    }

    std::vector<MorId> ident(n), inv(mors.size());
    for (ObjId a = 0; a < n; ++a) ident[a] = morphism(a, a, base_[a] == kNone ? kNone : g.identity(base_[a]));
    for (MorId k = 0; k < mors.size(); ++k) {
      MorId r = reduced_[k];
      inv[k] = morphism(mors[k].tgt, mors[k].src, r == kNone ? kNone : g.inverse(r));
    }
    std::vector<ObjId> srcs(mors.size()), tgts(mors.size());
    for (MorId k = 0; k < mors.size(); ++k) {
      srcs[k] = mors[k].src;
      tgts[k] = mors[k].tgt;
    }
    GroupoidPtr y = share(Groupoid::from_rule(
        std::move(names), std::move(mors), std::move(ident), std::move(inv),
        [&](MorId h, MorId k) {
          MorId r = (reduced_[h] == kNone) ? kNone : g.compose(reduced_[h], reduced_[k]);
          return morphism(srcs[k], tgts[h], r);
        }));
    std::vector<MorId> inv_mor(y->num_morphisms());
    for (MorId k = 0; k < y->num_morphisms(); ++k) {
      ObjId a = y->src(k), b = y->tgt(k);
      MorId r = reduced_[k];
      MorId image = kNone;
      if (r != kNone) {
        image = g.compose(theta_[b], g.compose(x->act_mor(r), g.inverse(theta_[a])));
      }
      inv_mor[k] = morphism(inv_obj[a], inv_obj[b], image);
    }
    result_ = make_involutive(y, std::move(inv_obj), std::move(inv_mor));
  }

  const InvPtr& result() const { return result_; }
  ObjId base(ObjId a) const { return base_[a]; }

  // The morphism a -> b whose reduction is r: base(a) -> base(b).
  MorId morphism(ObjId a, ObjId b, MorId r) const {
    const Groupoid& g = x_->g();
    const ObjId n_old = static_cast<ObjId>(g.num_objects());
    if (a < n_old && b < n_old) return r;
    MorId off = offset_.at(pair_key(a, b));
    if (r == kNone) return off;
    auto h = g.hom(base_[a], base_[b]);
    return off + (g.out_position(r) - g.out_position(h.front()));
  }

  // Inclusion of the old groupoid.
  EquivariantFunctor inclusion() const {
    Functor id = identity_functor(x_->base);
    return EquivariantFunctor{x_, result_, Functor{x_->base, result_->base, id.obj, id.mor}};
  }

 private:
  std::size_t hom_size(ObjId a, ObjId b) const {
    if (base_[a] == kNone || base_[b] == kNone) return a == b ? 1 : 0;
    return x_->g().hom(base_[a], base_[b]).size();
  }

  InvPtr x_;
  InvPtr result_;
  std::vector<ObjId> base_;
  std::vector<MorId> theta_;
  std::vector<MorId> reduced_;
  std::unordered_map<std::uint64_t, MorId> offset_;
};

struct CellAttachment {
  InvPtr result;
  EquivariantFunctor incl;      // old groupoid -> result, identity on IDs
  EquivariantFunctor cell_map;  // codomain of the generator -> result
};

// Pushout of the generator of the given kind along the attaching map.
// New objects are named "c<cell_index>.<template object>".
inline CellAttachment attach_cell(const InvPtr& x, CellKind kind, const EquivariantFunctor& attaching,
                                  std::size_t cell_index = 0) {
  const EquivariantFunctor gen = cell_generator(kind);
  if (attaching.dom != gen.dom) {
    throw Error(ErrorKind::kShapeMismatch, std::string("attaching map does not start at the domain of ") + to_string(kind));
  }
  if (attaching.cod != x) {
    throw Error(ErrorKind::kCodomainMismatch, "attaching map does not land in the groupoid being extended");
  }
  Diagnostics diags = check_equivariant(attaching);
  if (!diags.empty()) throw Error(ErrorKind::kInvalidAttachment, describe(diags));

  const Groupoid& g = x->g();
  const ObjId n_old = static_cast<ObjId>(g.num_objects());
  const std::string prefix = "c" + std::to_string(cell_index) + ".";
  const InvPtr& cod = gen.cod;
  std::vector<FreshObject> fresh;
  std::vector<ObjId> image(cod->g().num_objects());
  std::vector<MorId> anchor(cod->g().num_objects(), kNone);
  switch (kind) {
    case CellKind::kPoint:
      fresh.push_back({"*", kNone, 0, kNone});
      image = {n_old};
      break;
    case CellKind::kI: {
      ObjId y = attaching.on_obj(0);
      fresh.push_back({"1", y, 0, g.identity(y)});
      image = {y, n_old};
      anchor = {g.identity(y), g.identity(y)};
      break;
    }
    case CellKind::kSi: {
      ObjId y0 = attaching.on_obj(0), y1 = attaching.on_obj(1);
      fresh.push_back({"0'", y0, 1, g.identity(y1)});
      fresh.push_back({"1'", y1, 0, g.identity(y0)});
      image = {y0, y1, n_old, n_old + 1};
      anchor = {g.identity(y0), g.identity(y1), g.identity(y0), g.identity(y1)};
      break;
    }
    case CellKind::kIprime: {
      ObjId y = attaching.on_obj(0);
      MorId m = attaching.on_mor(*gen.dom->g().find_morphism("phi"));
      ObjId ey = x->act(y);
      fresh.push_back({"2", ey, 0, m});
      image = {y, ey, n_old};
      anchor = {m, g.identity(ey), g.identity(ey)};
      break;
    }
  }
  Extension ext(x, fresh, prefix);
  CellAttachment out;
  out.result = ext.result();
  out.incl = ext.inclusion();
  out.cell_map = EquivariantFunctor{cod, out.result, Functor{cod->base, out.result->base, image, {}}};
  for (MorId c = 0; c < cod->g().num_morphisms(); ++c) {
    ObjId s = cod->g().src(c), t = cod->g().tgt(c);
    MorId r = kNone;
    if (anchor[s] != kNone) r = g.compose(g.inverse(anchor[t]), anchor[s]);
    out.cell_map.map.mor.push_back(ext.morphism(image[s], image[t], r));
  }
  return out;
}

// A cell attaching map given by raw IDs into the stage it is attached to.
struct CellStep {
  CellKind kind = CellKind::kPoint;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
};

struct CellSequence {
  InvPtr start;
  std::vector<CellStep> steps;
};

struct Recomposition {
  std::vector<InvPtr> stages;     // stages[0] == start
  EquivariantFunctor inclusion;   // start -> last stage
  std::vector<EquivariantFunctor> cell_maps;
};

inline Recomposition recompose(const CellSequence& seq) {
  Recomposition r;
  r.stages.push_back(seq.start);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const CellStep& s = seq.steps[k];
    const InvPtr& cur = r.stages.back();
    EquivariantFunctor gen = cell_generator(s.kind);
    EquivariantFunctor att{gen.dom, cur, Functor{gen.dom->base, cur->base, s.obj, s.mor}};
    CellAttachment a = attach_cell(cur, s.kind, att, k);
    r.stages.push_back(a.result);
    r.cell_maps.push_back(a.cell_map);
  }
  const InvPtr& last = r.stages.back();
  Functor id = identity_functor(seq.start->base);
  r.inclusion = EquivariantFunctor{seq.start, last, Functor{seq.start->base, last->base, id.obj, id.mor}};
  return r;
}

}  // namespace invgpd

#endif  // INVGPD_CELLS_HPP_
