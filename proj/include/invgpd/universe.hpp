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

// The universe of discrete groupoids with involution over a finite base V.
//
// An object of U is (A0, A1, phi) with A0, A1 subsets of V and phi a
// bijection A0 -> A1. A morphism to (B0, B1, psi) is a bijection
// rho0: A0 -> B0; its second component rho1 = psi rho0 phi^-1 is forced.
// The pointed version adds a point a of A0, and p forgets it.

#ifndef INVGPD_UNIVERSE_HPP_
#define INVGPD_UNIVERSE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invgpd/equivariant.hpp"
#include "invgpd/homotopy.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/pi.hpp"
#include "invgpd/search.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {

// Largest bases for which the universe and its equivalence space are built.
inline constexpr int kMaxUniverseBase = 3;
inline constexpr int kMaxEquivalenceSpaceBase = 2;

// A bijection between subsets of V: image[v] for v in the domain, -1 elsewhere.
using PartialPerm = std::vector<int>;

struct UniverseElement {
  std::uint32_t a0 = 0;
  std::uint32_t a1 = 0;
  PartialPerm phi;
};

struct UniverseMorphism {
  ObjId src = kNone;
  ObjId tgt = kNone;
  PartialPerm rho0;
  PartialPerm rho1;
};

inline std::string base_element_name(int v) {
  return v < 26 ? std::string(1, static_cast<char>('a' + v)) : "v" + std::to_string(v);
}

inline std::vector<int> subset_elements(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask >> v; ++v) {
    if ((mask >> v) & 1u) out.push_back(v);
  }
  return out;
}

class UniverseBundle {
 public:
  UniverseBundle(int n, Budget& budget) : n_(n) {
    if (n < 0) throw Error(ErrorKind::kBaseTooSmall, "negative base size");
    if (n > kMaxUniverseBase) {
      throw Error(ErrorKind::kBudgetExceeded, "the universe is only built for bases of at most " +
                                                  std::to_string(kMaxUniverseBase) + " elements");
    }
    build_unpointed(budget);
    build_pointed(budget);
  }

  int base_size() const { return n_; }
  const InvPtr& U() const { return u_; }
  const InvPtr& Utilde() const { return ut_; }
  const EquivariantFunctor& p() const { return p_; }
  const UniverseElement& element(ObjId x) const { return elems_[x]; }
  const UniverseMorphism& morphism(MorId m) const { return mors_[m]; }
  // Pointed object and morphism for a point a of the source.
  ObjId pointed_object(ObjId x, int a) const { return pointed_obj_.at({x, a}); }
  MorId pointed_morphism(MorId m, int a) const { return pointed_mor_.at({m, a}); }
  int point_of(ObjId xt) const { return point_[xt]; }

  ObjId find_element(std::uint32_t a0, std::uint32_t a1, const PartialPerm& phi) const {
    auto it = elem_index_.find({a0, a1, phi});
    return it == elem_index_.end() ? kNone : it->second;
  }
  MorId find_morphism(ObjId x, ObjId y, const PartialPerm& rho0) const {
    auto it = mor_index_.find({x, y, rho0});
    return it == mor_index_.end() ? kNone : it->second;
  }

  std::string element_name(std::uint32_t a0, std::uint32_t a1, const PartialPerm& phi, int point = -1) const {
    auto set = [](std::uint32_t m) {
      std::string s = "{";
      bool first = true;
      for (int v : subset_elements(m)) {
        s += (first ? "" : ",") + base_element_name(v);
        first = false;
      }
      return s + "}";
    };
    std::string s = "(" + set(a0) + "," + set(a1) + ",";
    if (point >= 0) s += base_element_name(point) + ",";
    return s + perm_name(a0, phi) + ")";
  }

 private:
  static std::string perm_name(std::uint32_t dom, const PartialPerm& p) {
    std::string s = "[";
    bool first = true;
    for (int v : subset_elements(dom)) {
      s += (first ? "" : ",") + base_element_name(p[v]);
      first = false;
    }
    return s + "]";
  }

  PartialPerm compose_perm(const PartialPerm& g, const PartialPerm& f) const {
    PartialPerm r(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (f[v] >= 0) r[v] = g[f[v]];
    }
    return r;
  }
  PartialPerm invert_perm(const PartialPerm& f) const {
    PartialPerm r(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (f[v] >= 0) r[f[v]] = v;
    }
    return r;
  }
  // All bijections from dom to cod in lexicographic order of images.
  std::vector<PartialPerm> bijections(std::uint32_t dom, std::uint32_t cod) const {
    std::vector<int> d = subset_elements(dom), c = subset_elements(cod);
    std::vector<PartialPerm> out;
    if (d.size() != c.size()) return out;
    do {
      PartialPerm p(n_, -1);
      for (std::size_t k = 0; k < d.size(); ++k) p[d[k]] = c[k];
      out.push_back(std::move(p));
    } while (std::next_permutation(c.begin(), c.end()));
    return out;
  }

  void build_unpointed(Budget& budget) {
    const std::uint32_t full = 1u << n_;
    std::vector<std::string> names;
    for (std::uint32_t a0 = 0; a0 < full; ++a0) {
      for (std::uint32_t a1 = 0; a1 < full; ++a1) {
        if (std::popcount(a0) != std::popcount(a1)) continue;
        for (auto& phi : bijections(a0, a1)) {
          budget.spend();
          elem_index_[{a0, a1, phi}] = static_cast<ObjId>(elems_.size());
          names.push_back(element_name(a0, a1, phi));
          elems_.push_back({a0, a1, std::move(phi)});
        }
      }
    }
    std::vector<MorphismSpec> specs;
    for (ObjId x = 0; x < elems_.size(); ++x) {
      for (ObjId y = 0; y < elems_.size(); ++y) {
        for (auto& rho0 : bijections(elems_[x].a0, elems_[y].a0)) {
          budget.spend();
          PartialPerm rho1 = compose_perm(elems_[y].phi, compose_perm(rho0, invert_perm(elems_[x].phi)));
          specs.push_back({perm_name(elems_[x].a0, rho0) + ":" + names[x] + "->" + names[y], x, y});
          mor_index_[{x, y, rho0}] = static_cast<MorId>(mors_.size());
          mors_.push_back({x, y, std::move(rho0), std::move(rho1)});
        }
      }
    }
    std::vector<MorId> ident, inv;
    for (ObjId x = 0; x < elems_.size(); ++x) {
      PartialPerm id(n_, -1);
      for (int v : subset_elements(elems_[x].a0)) id[v] = v;
      ident.push_back(find_morphism(x, x, id));
    }
    for (const auto& m : mors_) inv.push_back(find_morphism(m.tgt, m.src, invert_perm(m.rho0)));
    GroupoidPtr g = share(Groupoid::from_rule(std::move(names), std::move(specs), std::move(ident), std::move(inv),
                                              [&](MorId h, MorId k) {
                                                return find_morphism(mors_[k].src, mors_[h].tgt,
                                                                     compose_perm(mors_[h].rho0, mors_[k].rho0));
                                              }));
    std::vector<ObjId> inv_obj;
    std::vector<MorId> inv_mor;
    for (const auto& e : elems_) inv_obj.push_back(find_element(e.a1, e.a0, invert_perm(e.phi)));
    for (const auto& m : mors_) inv_mor.push_back(find_morphism(inv_obj[m.src], inv_obj[m.tgt], m.rho1));
    u_ = make_involutive(g, std::move(inv_obj), std::move(inv_mor));
  }

  void build_pointed(Budget& budget) {
    const Groupoid& ug = u_->g();
    std::vector<std::string> names;
    std::vector<ObjId> base_obj;
    for (ObjId x = 0; x < elems_.size(); ++x) {
      for (int a : subset_elements(elems_[x].a0)) {
        budget.spend();
        pointed_obj_[{x, a}] = static_cast<ObjId>(base_obj.size());
        names.push_back(element_name(elems_[x].a0, elems_[x].a1, elems_[x].phi, a));
        base_obj.push_back(x);
        point_.push_back(a);
      }
    }
    std::vector<MorphismSpec> specs;
    std::vector<MorId> base_mor;
    std::vector<int> mor_point;
    for (MorId m = 0; m < mors_.size(); ++m) {
      const auto& um = mors_[m];
      for (int a : subset_elements(elems_[um.src].a0)) {
        budget.spend();
        pointed_mor_[{m, a}] = static_cast<MorId>(base_mor.size());
        specs.push_back({ug.morphism_name(m) + "@" + base_element_name(a), pointed_obj_.at({um.src, a}),
                         pointed_obj_.at({um.tgt, um.rho0[a]})});
        base_mor.push_back(m);
        mor_point.push_back(a);
      }
    }
    std::vector<MorId> ident, inv;
    for (ObjId o = 0; o < base_obj.size(); ++o) ident.push_back(pointed_mor_.at({ug.identity(base_obj[o]), point_[o]}));
    for (MorId k = 0; k < base_mor.size(); ++k) {
      inv.push_back(pointed_mor_.at({ug.inverse(base_mor[k]), mors_[base_mor[k]].rho0[mor_point[k]]}));
    }
    GroupoidPtr g = share(Groupoid::from_rule(std::move(names), std::move(specs), std::move(ident), std::move(inv),
                                              [&](MorId h, MorId k) {
                                                return pointed_mor_.at(
                                                    {ug.compose(base_mor[h], base_mor[k]), mor_point[k]});
                                              }));
    std::vector<ObjId> inv_obj;
    std::vector<MorId> inv_mor;
    for (ObjId o = 0; o < base_obj.size(); ++o) {
      ObjId x = base_obj[o];
      inv_obj.push_back(pointed_obj_.at({u_->act(x), elems_[x].phi[point_[o]]}));
    }
    for (MorId k = 0; k < base_mor.size(); ++k) {
      const auto& um = mors_[base_mor[k]];
      inv_mor.push_back(pointed_mor_.at({u_->act_mor(base_mor[k]), elems_[um.src].phi[mor_point[k]]}));
    }
    ut_ = make_involutive(g, std::move(inv_obj), std::move(inv_mor));
    p_ = make_equivariant(ut_, u_, std::move(base_obj), std::move(base_mor));
  }

  int n_;
  std::vector<UniverseElement> elems_;
  std::vector<UniverseMorphism> mors_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, PartialPerm>, ObjId> elem_index_;
  std::map<std::tuple<ObjId, ObjId, PartialPerm>, MorId> mor_index_;
  std::map<std::pair<ObjId, int>, ObjId> pointed_obj_;
  std::map<std::pair<MorId, int>, MorId> pointed_mor_;
  std::vector<int> point_;
  InvPtr u_;
  InvPtr ut_;
  EquivariantFunctor p_;
};

inline UniverseBundle build_universe(int n, Budget& budget) { return UniverseBundle(n, budget); }

// Objects of the domain lying over each object of the codomain.
inline std::vector<std::vector<ObjId>> fibers(const Functor& f) {
  std::vector<std::vector<ObjId>> out(f.cod->num_objects());
  for (ObjId x = 0; x < f.dom->num_objects(); ++x) out[f.obj[x]].push_back(x);
  return out;
}

inline std::size_t max_fiber_size(const Functor& f) {
  std::size_t m = 0;
  for (const auto& fib : fibers(f)) m = std::max(m, fib.size());
  return m;
}

// Discrete fibration whose fibers fit into a base of n elements.
inline bool is_small_fibration(const EquivariantFunctor& f, int n) {
  return classify_functor(f.map).discrete_fibration && max_fiber_size(f.map) <= static_cast<std::size_t>(n);
}

struct Classification {
  EquivariantFunctor g;    // base of f -> U
  EqPullback pulled;       // pullback of p along g
  EquivariantFunctor chi;  // dom f -> pulled.object, an isomorphism over the base
};

// Classifying map of a small fibration: a base object x goes to its fiber,
// the fiber over its partner and the bijection given by the involution.
// Fibers are embedded into V as initial segments in ID order.
inline Classification classify_small_fibration(const EquivariantFunctor& f, const UniverseBundle& u) {
  if (!is_small_fibration(f, u.base_size())) {
    throw Error(ErrorKind::kNotSmall, "map is not a discrete fibration with fibers of at most " +
                                          std::to_string(u.base_size()) + " objects");
  }
  const int n = u.base_size();
  const Groupoid& c = f.dom->g();
  const Groupoid& b = f.cod->g();
  auto fib = fibers(f.map);
  std::vector<int> index(c.num_objects());
  for (const auto& objs : fib) {
    for (std::size_t k = 0; k < objs.size(); ++k) index[objs[k]] = static_cast<int>(k);
  }
  auto mask = [](std::size_t k) { return static_cast<std::uint32_t>((1u << k) - 1u); };
  auto lift_target = [&](MorId m, ObjId x) {
    for (MorId h : c.out(x)) {
      if (f.on_mor(h) == m) return c.tgt(h);
    }
    return kNone;
  };
  Classification out;
  out.g = EquivariantFunctor{f.cod, u.U(), Functor{f.cod->base, u.U()->base, {}, {}}};
  for (ObjId y = 0; y < b.num_objects(); ++y) {
    const ObjId ey = f.cod->act(y);
    PartialPerm phi(n, -1);
    for (ObjId x : fib[y]) phi[index[x]] = index[f.dom->act(x)];
    out.g.map.obj.push_back(u.find_element(mask(fib[y].size()), mask(fib[ey].size()), phi));
  }
  for (MorId m = 0; m < b.num_morphisms(); ++m) {
    PartialPerm rho0(n, -1);
    for (ObjId x : fib[b.src(m)]) rho0[index[x]] = index[lift_target(m, x)];
    out.g.map.mor.push_back(u.find_morphism(out.g.on_obj(b.src(m)), out.g.on_obj(b.tgt(m)), rho0));
  }
  out.pulled = equivariant_pullback(out.g, u.p());
  out.chi = EquivariantFunctor{f.dom, out.pulled.object, Functor{f.dom->base, out.pulled.object->base, {}, {}}};
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    ObjId y = f.on_obj(x);
    out.chi.map.obj.push_back(out.pulled.raw.pair_object(y, u.pointed_object(out.g.on_obj(y), index[x])));
  }
  for (MorId h = 0; h < c.num_morphisms(); ++h) {
    MorId m = f.on_mor(h);
    out.chi.map.mor.push_back(out.pulled.raw.pair_morphism(m, u.pointed_morphism(out.g.on_mor(m), index[c.src(h)])));
  }
  if (!check_equivariant(out.g).empty() || !check_equivariant(out.chi).empty() || !is_isomorphism(out.chi.map) ||
      !same_functor(compose(out.pulled.pr1, out.chi), f)) {
    throw std::logic_error("classifying map failed verification");
  }
  return out;
}

struct EquivalenceSpace {
  PathFactorization path;  // path.path is E, path.delta2 is q: E -> U x U
  const InvPtr& E() const { return path.path; }
  const EquivariantFunctor& delta1() const { return path.delta1; }
  const EquivariantFunctor& q() const { return path.delta2; }
};

inline EquivalenceSpace equivalence_space(const UniverseBundle& u) {
  if (u.base_size() > kMaxEquivalenceSpaceBase) {
    throw Error(ErrorKind::kBudgetExceeded, "the space of equivalences is only built for bases of at most " +
                                                std::to_string(kMaxEquivalenceSpaceBase) + " elements");
  }
  return EquivalenceSpace{path_object(terminal_equivariant(u.U()))};
}

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct UnivalenceReport {
  Structure structure = Structure::kInjective;
  bool holds = false;
  std::vector<CheckLine> checks;
  std::optional<ObjId> witness;  // object of E
  std::string witness_name;
};

// Least fixed object (A, A, rho) of E with rho not an identity.
inline ObjId projective_univalence_witness(const UniverseBundle& u, const EquivalenceSpace& e) {
  if (u.base_size() < 2) {
    throw Error(ErrorKind::kBaseTooSmall, "a non-trivial fixed equivalence needs a base of at least 2 elements");
  }
  const Groupoid& ug = u.U()->g();
  std::vector<ObjId> obj_of(ug.num_morphisms(), kNone);
  for (ObjId o = 0; o < e.path.path_of_obj.size(); ++o) obj_of[e.path.path_of_obj[o]] = o;
  for (ObjId x = 0; x < ug.num_objects(); ++x) {
    for (MorId rho : ug.hom(x, x)) {
      if (!ug.is_identity(rho) && e.E()->is_fixed(obj_of[rho])) return obj_of[rho];
    }
  }
  throw std::logic_error("no fixed non-identity equivalence found");
}

inline UnivalenceReport check_univalence(const UniverseBundle& u, Structure s, Budget& budget) {
  UnivalenceReport r;
  r.structure = s;
  EquivalenceSpace e = equivalence_space(u);
  FunctorReport d1 = classify_functor(e.delta1().map);
  if (s == Structure::kProjective) {
    HomotopyEquivalenceClauses c = homotopy_equivalence_clauses(e.delta1());
    std::size_t fu = fixed_points(u.U()).objects.size();
    std::size_t fe = fixed_points(e.E()).objects.size();
    r.checks.push_back({"delta1 levelwise equivalence", c.weak_equivalence, ""});
    r.checks.push_back({"delta1 bijective on fixed objects", c.bijection_on_fixed_objects,
                        "fixed objects: U " + std::to_string(fu) + ", E " + std::to_string(fe)});
    r.holds = c.weak_equivalence && c.iso_on_full_fixed && c.bijection_on_fixed_objects;
    if (!r.holds && u.base_size() >= 2) {
      r.witness = projective_univalence_witness(u, e);
      r.witness_name = e.E()->g().object_name(*r.witness);
      std::vector<char> hit(e.E()->g().num_objects(), 0);
      for (ObjId o : e.delta1().map.obj) hit[o] = 1;
      r.checks.push_back({"witness fixed and outside the image of delta1",
                          e.E()->is_fixed(*r.witness) && !hit[*r.witness], r.witness_name});
    }
    return r;
  }
  const auto gens = generating_trivial_cofibrations(Structure::kInjective);
  r.checks.push_back({"delta1 injective on objects", d1.injective_on_objects, ""});
  r.checks.push_back({"delta1 levelwise equivalence", d1.equivalence, ""});
  auto rlp = [&](const std::string& name, const EquivariantFunctor& f) {
    RlpReport rep = has_rlp(f, gens, budget);
    r.checks.push_back({name + " lifts against Si and iprime", rep.holds,
                        std::to_string(rep.squares) + " squares"});
  };
  rlp("delta2", e.q());
  rlp("p", u.p());
  rlp("U -> 1!", terminal_equivariant(u.U()));
  rlp("Utilde -> 1!", terminal_equivariant(u.Utilde()));
  r.holds = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckLine& c) { return c.ok; });
  return r;
}

// S(I) -> S(1), collapsing each arrow to an identity.
inline EquivariantFunctor collapse_si() {
  const InvPtr& si = shapes::si();
  const InvPtr& s1 = shapes::s1();
  std::vector<MorId> mor;
  for (MorId m = 0; m < si->g().num_morphisms(); ++m) mor.push_back(s1->g().identity(si->g().src(m) % 2));
  return make_equivariant(si, s1, {0, 1, 0, 1}, std::move(mor));
}

struct FunextReport {
  bool map_is_homotopy_equivalence = false;
  std::size_t product_objects = 0;
  std::size_t product_fixed = 0;
  std::size_t point_fixed = 0;
  std::vector<std::string> fixed_sections;
  bool product_is_homotopy_equivalence = true;
  bool fails = false;  // function extensionality fails
};

// Products along S(1) -> 1! of S(I) -> S(1) and of the identity of S(1).
inline FunextReport check_funext_counterexample(Budget& budget) {
  FunextReport r;
  EquivariantFunctor f = collapse_si();
  EquivariantFunctor g = terminal_equivariant(shapes::s1());
  r.map_is_homotopy_equivalence = is_homotopy_equivalence_projective(f);
  PiBundle pi = pi_of(g, f, budget);
  PiBundle pid = pi_of(g, identity_equivariant(shapes::s1()), budget);
  FixedPoints fp = fixed_points(pi.object());
  r.product_objects = pi.object()->g().num_objects();
  r.product_fixed = fp.objects.size();
  r.point_fixed = fixed_points(pid.object()).objects.size();
  for (ObjId o : fp.objects) r.fixed_sections.push_back(pi.object()->g().object_name(o));
  // The induced map between the products is the terminal one.
  EquivariantFunctor induced = terminal_equivariant(pi.object());
  auto iso = find_equivariant_isomorphism(pid.object(), shapes::point(), budget);
  r.product_is_homotopy_equivalence = iso.has_value() && homotopy_equivalence_clauses(induced).bijection_on_fixed_objects;
  r.fails = r.map_is_homotopy_equivalence && !r.product_is_homotopy_equivalence;
  return r;
}

enum class ClosureStatus { kPass, kFail, kOverflow };

inline const char* to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::kPass: return "PASS";
    case ClosureStatus::kFail: return "FAIL";
    case ClosureStatus::kOverflow: return "OVERFLOW";
  }
  return "?";
}

struct ClosureRow {
  std::string check;
  ClosureStatus status = ClosureStatus::kPass;
  std::string detail;
};

// PASS when the result is a small fibration, OVERFLOW when it is a discrete
// fibration whose fibers do not fit into V, FAIL otherwise.
inline ClosureRow closure_row(std::string check, const EquivariantFunctor& result, int n) {
  ClosureRow row{std::move(check), ClosureStatus::kPass, ""};
  std::size_t m = max_fiber_size(result.map);
  if (!classify_functor(result.map).discrete_fibration) {
    row.status = ClosureStatus::kFail;
    row.detail = "not a discrete fibration";
  } else if (m > static_cast<std::size_t>(n)) {
    row.status = ClosureStatus::kOverflow;
    row.detail = "fiber size " + std::to_string(m) + " > |V| = " + std::to_string(n);
  } else {
    row.detail = "max fiber size " + std::to_string(m);
  }
  return row;
}

// Diagonal C -> C x_B C of f.
inline EquivariantFunctor diagonal(const EquivariantFunctor& f) {
  EqPullback pb = equivariant_pullback(f, f);
  EquivariantFunctor id = identity_equivariant(f.dom);
  return pair_into(pb, id, id);
}

struct NamedFibration {
  std::string name;
  EquivariantFunctor map;
};

// Fixed small fibrations used by the closure checks.
inline std::vector<NamedFibration> closure_samples() {
  std::vector<NamedFibration> out;
  const InvPtr& s1 = shapes::s1();
  out.push_back({"1! -> 1!", identity_equivariant(shapes::point())});
  out.push_back({"S1 -> 1!", terminal_equivariant(s1)});
  out.push_back({"2 -> 1!", terminal_equivariant(shapes::two_points())});
  EqCoproduct two = equivariant_coproduct(s1, s1);
  EquivariantFunctor fold = make_equivariant(two.object, s1, {0, 1, 0, 1}, {0, 1, 0, 1});
  out.push_back({"S1+S1 -> S1", fold});
  EqCoproduct three = equivariant_coproduct(s1, shapes::point());
  out.push_back({"S1+1! -> 1!", terminal_equivariant(three.object)});
  return out;
}

inline std::vector<ClosureRow> universe_closure_checks(const UniverseBundle& u, Budget& budget) {
  const int n = u.base_size();
  std::vector<ClosureRow> rows;
  auto samples = closure_samples();
  for (const auto& s : samples) {
    if (!classify_functor(s.map.map).discrete_fibration) continue;
    rows.push_back(closure_row("identity on base of " + s.name, identity_equivariant(s.map.cod), n));
  }
  for (const auto& f : samples) {
    for (const auto& g : samples) {
      if (f.map.cod != g.map.dom) continue;
      rows.push_back(closure_row("composite (" + g.name + ") o (" + f.name + ")", compose(g.map, f.map), n));
    }
  }
  for (const auto& f : samples) rows.push_back(closure_row("diagonal of " + f.name, diagonal(f.map), n));
  for (const auto& g : samples) {
    for (const auto& f : samples) {
      if (f.map.cod != g.map.dom) continue;
      PiBundle pi = pi_of(g.map, f.map, budget);
      rows.push_back(closure_row("product along (" + g.name + ") of (" + f.name + ")", pi.projection(), n));
    }
  }
  // Pullbacks of p along classifying maps are small by construction; their
  // composites with p itself overflow only when sizes exceed V.
  rows.push_back(closure_row("universal map p", u.p(), n));
  return rows;
}

}  // namespace invgpd

#endif  // INVGPD_UNIVERSE_HPP_
