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

// The standard involutive shapes and the generating maps between them.
//
//   "0!"     empty groupoid
//   "1!"     one object
//   "I"      interval 0 -> 1, trivial involution
//   "Icheck" interval with its ends exchanged
//   "nabla"  codiscrete on 0, 1, 2 with 0 <-> 1 exchanged and 2 fixed
//   "S1"     two objects exchanged
//   "SI"     two intervals 0 -> 0' and 1 -> 1' exchanged
//
// Generating maps: "u" 0! -> 1!, "i" 1! -> I, "v" 1+1 -> I,
// "Si" S1 -> SI, "iprime" Icheck -> nabla.

#ifndef INVGPD_SHAPES_HPP_
#define INVGPD_SHAPES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invgpd/equivariant.hpp"
#include "invgpd/groupoid.hpp"

namespace invgpd {

struct Edge {
  std::string name;
  std::string inverse_name;
  std::string src;
  std::string tgt;
};

// Groupoid in which every hom-set has at most one element, generated by the
// given edges. Composites not among the edges are named "b.a".
inline GroupoidPtr thin_groupoid(const std::vector<std::string>& objects,
                                 const std::vector<Edge>& edges) {
  GroupoidData d;
  d.objects = objects;
  const std::size_t n = objects.size();
  auto obj = [&](const std::string& s) {
    for (ObjId x = 0; x < n; ++x) {
      if (objects[x] == s) return x;
    }
    throw Error(ErrorKind::kMalformedGroupoid, "unknown object " + s);
  };
  std::vector<std::vector<MorId>> hom(n, std::vector<MorId>(n, kNone));
  for (ObjId x = 0; x < n; ++x) {
    hom[x][x] = static_cast<MorId>(d.morphisms.size());
    d.morphisms.push_back({"id" + objects[x], x, x});
  }
  for (const Edge& e : edges) {
    ObjId s = obj(e.src), t = obj(e.tgt);
    hom[s][t] = static_cast<MorId>(d.morphisms.size());
    d.morphisms.push_back({e.name, s, t});
    hom[t][s] = static_cast<MorId>(d.morphisms.size());
    d.morphisms.push_back({e.inverse_name, t, s});
  }
  // Close under composition; new composites get derived names.
  bool grew = true;
  while (grew) {
    grew = false;
    for (ObjId x = 0; x < n; ++x) {
      for (ObjId y = 0; y < n; ++y) {
        for (ObjId z = 0; z < n; ++z) {
          if (hom[x][y] == kNone || hom[y][z] == kNone || hom[x][z] != kNone) continue;
          hom[x][z] = static_cast<MorId>(d.morphisms.size());
          d.morphisms.push_back(
              {d.morphisms[hom[y][z]].name + "." + d.morphisms[hom[x][y]].name, x, z});
          grew = true;
        }
      }
    }
  }
  d.identity.resize(n);
  for (ObjId x = 0; x < n; ++x) d.identity[x] = hom[x][x];
  d.inverse.resize(d.morphisms.size());
  for (MorId m = 0; m < d.morphisms.size(); ++m) {
    d.inverse[m] = hom[d.morphisms[m].tgt][d.morphisms[m].src];
  }
  for (MorId f = 0; f < d.morphisms.size(); ++f) {
    for (MorId g = 0; g < d.morphisms.size(); ++g) {
      if (d.morphisms[g].src != d.morphisms[f].tgt) continue;
      d.compose[{g, f}] = hom[d.morphisms[f].src][d.morphisms[g].tgt];
    }
  }
  return share(Groupoid::from_data(d));
}

// Involution on a thin groupoid given by an object permutation.
inline InvPtr thin_involution(const GroupoidPtr& g, const std::vector<ObjId>& perm) {
  std::vector<MorId> mor(g->num_morphisms());
  for (MorId m = 0; m < g->num_morphisms(); ++m) {
    mor[m] = g->hom(perm[g->src(m)], perm[g->tgt(m)]).front();
  }
  return make_involutive(g, perm, std::move(mor));
}

namespace shapes {

inline InvPtr empty() { return empty_inv(); }
inline InvPtr point() { return point_inv(); }

inline GroupoidPtr interval_groupoid() {
  static const GroupoidPtr g = thin_groupoid({"0", "1"}, {{"phi", "phi^-1", "0", "1"}});
  return g;
}

inline InvPtr interval() {
  static const InvPtr g = trivial_action(interval_groupoid());
  return g;
}

inline InvPtr interval_check() {
  static const InvPtr g = thin_involution(interval_groupoid(), {1, 0});
  return g;
}

inline InvPtr nabla() {
  static const InvPtr g = thin_involution(
      thin_groupoid({"0", "1", "2"}, {{"phi", "phi^-1", "0", "1"}, {"psi", "psi^-1", "1", "2"}}),
      {1, 0, 2});
  return g;
}

inline InvPtr s1() {
  static const InvPtr g = thin_involution(thin_groupoid({"0", "1"}, {}), {1, 0});
  return g;
}

inline InvPtr si() {
  static const InvPtr g = thin_involution(
      thin_groupoid({"0", "1", "0'", "1'"}, {{"phi", "phi^-1", "0", "0'"}, {"psi", "psi^-1", "1", "1'"}}),
      {1, 0, 3, 2});
  return g;
}

inline InvPtr two_points() {
  static const InvPtr g = trivial_action(thin_groupoid({"0", "1"}, {}));
  return g;
}

inline std::optional<InvPtr> by_name(std::string_view name) {
  if (name == "0!") return empty();
  if (name == "1!") return point();
  if (name == "I") return interval();
  if (name == "Icheck") return interval_check();
  if (name == "nabla") return nabla();
  if (name == "S1") return s1();
  if (name == "SI") return si();
  return std::nullopt;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"0!", "1!", "I", "Icheck", "nabla", "S1", "SI"};
  return n;
}

}  // namespace shapes

namespace generators {

// Inclusion that is the identity on IDs of a sub-shape whose objects and
// morphisms come first in the codomain.
inline EquivariantFunctor initial_segment(const InvPtr& a, const InvPtr& b,
                                          std::vector<ObjId> obj) {
  std::vector<MorId> mor;
  for (MorId m = 0; m < a->g().num_morphisms(); ++m) {
    mor.push_back(b->g().hom(obj[a->g().src(m)], obj[a->g().tgt(m)]).front());
  }
  return make_equivariant(a, b, std::move(obj), std::move(mor));
}

inline EquivariantFunctor u() {
  static const EquivariantFunctor f = make_equivariant(shapes::empty(), shapes::point(), {}, {});
  return f;
}

inline EquivariantFunctor i() {
  static const EquivariantFunctor f = initial_segment(shapes::point(), shapes::interval(), {0});
  return f;
}

inline EquivariantFunctor v() {
  static const EquivariantFunctor f = initial_segment(shapes::two_points(), shapes::interval(), {0, 1});
  return f;
}

inline EquivariantFunctor si() {
  static const EquivariantFunctor f = initial_segment(shapes::s1(), shapes::si(), {0, 1});
  return f;
}

inline EquivariantFunctor iprime() {
  static const EquivariantFunctor f = [] {
    const InvPtr& a = shapes::interval_check();
    const InvPtr& b = shapes::nabla();
    std::vector<MorId> mor;
    for (MorId m = 0; m < a->g().num_morphisms(); ++m) {
      mor.push_back(*b->g().find_morphism(a->g().morphism_name(m)));
    }
    return make_equivariant(a, b, {0, 1}, std::move(mor));
  }();
  return f;
}

inline std::optional<EquivariantFunctor> by_name(std::string_view name) {
  if (name == "u") return u();
  if (name == "i") return i();
  if (name == "v") return v();
  if (name == "Si") return si();
  if (name == "iprime") return iprime();
  return std::nullopt;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"u", "i", "v", "Si", "iprime"};
  return n;
}

}  // namespace generators

}  // namespace invgpd

#endif  // INVGPD_SHAPES_HPP_
