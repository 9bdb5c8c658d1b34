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

// Lifting problems, lifting properties against the generating maps, the
// projective and injective classification of equivariant functors, cell
// decompositions of trivial cofibrations and the gluing factorization.

#ifndef INVGPD_LIFTING_HPP_
#define INVGPD_LIFTING_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "invgpd/cells.hpp"
#include "invgpd/equivariant.hpp"
#include "invgpd/functor.hpp"
#include "invgpd/search.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {

enum class Structure { kPlain, kProjective, kInjective };

inline const char* to_string(Structure s) {
  switch (s) {
    case Structure::kPlain: return "gpd";
    case Structure::kProjective: return "projective";
    case Structure::kInjective: return "injective";
  }
  return "?";
}

inline std::optional<Structure> parse_structure(std::string_view s) {
  if (s == "gpd" || s == "plain" || s == "plain-gpd") return Structure::kPlain;
  if (s == "projective") return Structure::kProjective;
  if (s == "injective") return Structure::kInjective;
  return std::nullopt;
}

// Plain groupoids are modelled as groupoids with the trivial involution.
inline EquivariantFunctor for_structure(const EquivariantFunctor& f, Structure s) {
  return s == Structure::kPlain ? with_trivial_action(f) : f;
}

inline std::vector<EquivariantFunctor> generating_trivial_cofibrations(Structure s) {
  switch (s) {
    case Structure::kPlain: return {generators::i()};
    case Structure::kProjective: return {generators::si()};
    case Structure::kInjective: return {generators::si(), generators::iprime()};
  }
  return {};
}

struct LiftingProblem {
  EquivariantFunctor left;    // A -> B
  EquivariantFunctor right;   // X -> Y
  EquivariantFunctor top;     // A -> X
  EquivariantFunctor bottom;  // B -> Y
};

inline void check_square(const LiftingProblem& p) {
  if (p.top.dom != p.left.dom || p.top.cod != p.right.dom || p.bottom.dom != p.left.cod ||
      p.bottom.cod != p.right.cod) {
    throw Error(ErrorKind::kCodomainMismatch, "the four sides of the square do not fit together");
  }
  for (ObjId a = 0; a < p.left.dom->g().num_objects(); ++a) {
    if (p.right.on_obj(p.top.on_obj(a)) != p.bottom.on_obj(p.left.on_obj(a))) {
      throw Error(ErrorKind::kNonCommutingSquare, "square does not commute at object '" + p.left.dom->g().object_name(a) + "'");
    }
  }
  for (MorId m = 0; m < p.left.dom->g().num_morphisms(); ++m) {
    if (p.right.on_mor(p.top.on_mor(m)) != p.bottom.on_mor(p.left.on_mor(m))) {
      throw Error(ErrorKind::kNonCommutingSquare, "square does not commute at morphism '" + p.left.dom->g().morphism_name(m) + "'");
    }
  }
}

// Query for h: B -> X with h o left == top and right o h == bottom.
// Returns nullopt when left identifies cells that top keeps apart.
inline std::optional<FunctorQuery> filler_query(const LiftingProblem& p) {
  FunctorQuery q = equivariant_query(*p.left.cod, *p.right.dom);
  q.pin_obj.assign(p.left.cod->g().num_objects(), kNone);
  q.pin_mor.assign(p.left.cod->g().num_morphisms(), kNone);
  for (ObjId a = 0; a < p.left.dom->g().num_objects(); ++a) {
    ObjId& pin = q.pin_obj[p.left.on_obj(a)];
    if (pin != kNone && pin != p.top.on_obj(a)) return std::nullopt;
    pin = p.top.on_obj(a);
  }
  for (MorId m = 0; m < p.left.dom->g().num_morphisms(); ++m) {
    MorId& pin = q.pin_mor[p.left.on_mor(m)];
    if (pin != kNone && pin != p.top.on_mor(m)) return std::nullopt;
    pin = p.top.on_mor(m);
  }
  q.over_cod = &p.right.map;
  q.over_dom = &p.bottom.map;
  return q;
}

inline std::optional<EquivariantFunctor> solve_lifting(const LiftingProblem& p, Budget& budget) {
  check_square(p);
  auto q = filler_query(p);
  if (!q) return std::nullopt;
  std::optional<EquivariantFunctor> found;
  FunctorSearch(std::move(*q), budget).run([&](const auto& o, const auto& m) {
    found = EquivariantFunctor{p.left.cod, p.right.dom, Functor{p.left.cod->base, p.right.dom->base, o, m}};
    return false;
  });
  return found;
}

inline std::uint64_t count_fillers(const LiftingProblem& p, Budget& budget) {
  check_square(p);
  auto q = filler_query(p);
  if (!q) return 0;
  std::uint64_t n = 0;
  FunctorSearch(std::move(*q), budget).run([&](const auto&, const auto&) {
    ++n;
    return true;
  });
  return n;
}

// Enumerates every commuting square from gen to p, tops first, in ID order.
// visit(top, bottom) returns false to stop.
template <class Visit>
void for_each_square(const EquivariantFunctor& gen, const EquivariantFunctor& p, Budget& budget,
                     Visit&& visit) {
  FunctorSearch(equivariant_query(*gen.dom, *p.dom), budget).run([&](const auto& to, const auto& tm) {
    EquivariantFunctor top{gen.dom, p.dom, Functor{gen.dom->base, p.dom->base, to, tm}};
    FunctorQuery bq = equivariant_query(*gen.cod, *p.cod);
    bq.pin_obj.assign(gen.cod->g().num_objects(), kNone);
    bq.pin_mor.assign(gen.cod->g().num_morphisms(), kNone);
    for (ObjId a = 0; a < gen.dom->g().num_objects(); ++a) {
      ObjId& pin = bq.pin_obj[gen.on_obj(a)];
      ObjId want = p.on_obj(top.on_obj(a));
      if (pin != kNone && pin != want) return true;
      pin = want;
    }
    for (MorId m = 0; m < gen.dom->g().num_morphisms(); ++m) {
      MorId& pin = bq.pin_mor[gen.on_mor(m)];
      MorId want = p.on_mor(top.on_mor(m));
      if (pin != kNone && pin != want) return true;
      pin = want;
    }
    bool go = true;
    FunctorSearch(std::move(bq), budget).run([&](const auto& bo, const auto& bm) {
      EquivariantFunctor bottom{gen.cod, p.cod, Functor{gen.cod->base, p.cod->base, bo, bm}};
      go = visit(top, bottom);
      return go;
    });
    return go;
  });
}

struct RlpReport {
  bool holds = true;
  std::uint64_t squares = 0;
  std::optional<LiftingProblem> witness;  // least square without a filler
};

inline RlpReport has_rlp(const EquivariantFunctor& p, const std::vector<EquivariantFunctor>& gens,
                         Budget& budget) {
  RlpReport r;
  for (const auto& gen : gens) {
    for_each_square(gen, p, budget, [&](const EquivariantFunctor& top, const EquivariantFunctor& bottom) {
      ++r.squares;
      LiftingProblem sq{gen, p, top, bottom};
      if (!solve_lifting(sq, budget)) {
        r.holds = false;
        r.witness = sq;
        return false;
      }
      return true;
    });
    if (!r.holds) break;
  }
  return r;
}

inline RlpReport has_llp(const EquivariantFunctor& i, const std::vector<EquivariantFunctor>& tests,
                         Budget& budget) {
  RlpReport total;
  for (const auto& p : tests) {
    RlpReport r = has_rlp(p, {i}, budget);
    total.squares += r.squares;
    if (!r.holds) {
      total.holds = false;
      total.witness = r.witness;
      break;
    }
  }
  return total;
}

struct FixedPointClauses {
  bool bijection_on_fixed_objects = false;
  bool iso_on_strict_fixed = false;  // fixed objects and fixed morphisms
  bool iso_on_full_fixed = false;    // full subgroupoid on fixed objects
};

inline FixedPointClauses fixed_point_clauses(const EquivariantFunctor& f) {
  FixedPoints a = fixed_points(f.dom);
  FixedPoints b = fixed_points(f.cod);
  FixedPointClauses c;
  std::vector<char> hit(f.cod->g().num_objects(), 0);
  bool injective = true;
  for (ObjId x : a.objects) {
    if (hit[f.on_obj(x)]) injective = false;
    hit[f.on_obj(x)] = 1;
  }
  c.bijection_on_fixed_objects = injective && a.objects.size() == b.objects.size();
  auto strict = restrict_functor(f.map, a.strict, b.strict);
  c.iso_on_strict_fixed = strict && is_isomorphism(*strict);
  auto full = restrict_functor(f.map, a.full, b.full);
  c.iso_on_full_fixed = full && is_isomorphism(*full);
  return c;
}

struct ProjectiveReport {
  bool weak_equivalence = false;
  bool fibration = false;
  bool levelwise_trivial_cofibration = false;
  FixedPointClauses clauses;
  bool trivial_cofibration = false;
  // Left lifting against the sampled trivial fibrations; evidence only.
  bool cofibration_evidence = false;
  std::size_t cofibration_tests = 0;
};

// Levelwise trivial fibrations used as bounded evidence for cofibrations.
inline std::vector<EquivariantFunctor> sample_trivial_fibrations() {
  std::vector<EquivariantFunctor> out;
  out.push_back(terminal_equivariant(shapes::interval_check()));
  out.push_back(terminal_equivariant(shapes::nabla()));
  out.push_back(terminal_equivariant(shapes::interval()));
  out.push_back(terminal_equivariant(shapes::point()));
  const InvPtr& si = shapes::si();
  const InvPtr& s1 = shapes::s1();
  std::vector<MorId> mor;
  for (MorId m = 0; m < si->g().num_morphisms(); ++m) {
    mor.push_back(s1->g().identity(si->g().src(m) % 2));
  }
  out.push_back(make_equivariant(si, s1, {0, 1, 0, 1}, std::move(mor)));
  return out;
}

inline ProjectiveReport projective_classify(const EquivariantFunctor& f, Budget& budget) {
  FunctorReport u = classify_functor(f.map);
  ProjectiveReport r;
  r.weak_equivalence = u.equivalence;
  r.fibration = u.isofibration;
  r.levelwise_trivial_cofibration = u.injective_on_objects && u.equivalence;
  r.clauses = fixed_point_clauses(f);
  r.trivial_cofibration = r.levelwise_trivial_cofibration && r.clauses.bijection_on_fixed_objects;
  auto tests = sample_trivial_fibrations();
  r.cofibration_tests = tests.size();
  r.cofibration_evidence = has_llp(f, tests, budget).holds;
  return r;
}

struct InjectiveReport {
  bool cofibration = false;
  bool weak_equivalence = false;
  bool fibration = false;
  bool trivial_cofibration = false;
  RlpReport fibration_detail;
};

inline InjectiveReport injective_classify(const EquivariantFunctor& f, Budget& budget) {
  FunctorReport u = classify_functor(f.map);
  InjectiveReport r;
  r.cofibration = u.injective_on_objects;
  r.weak_equivalence = u.equivalence;
  r.fibration_detail = has_rlp(f, generating_trivial_cofibrations(Structure::kInjective), budget);
  r.fibration = r.fibration_detail.holds;
  r.trivial_cofibration = r.cofibration && r.weak_equivalence;
  return r;
}

inline bool is_fibrant(const InvPtr& x, Structure s, Budget& budget) {
  if (s != Structure::kInjective) return true;
  return has_rlp(terminal_equivariant(x), generating_trivial_cofibrations(s), budget).holds;
}

inline bool is_trivial_cofibration(const EquivariantFunctor& f, Structure s) {
  FunctorReport u = classify_functor(f.map);
  if (!(u.injective_on_objects && u.equivalence)) return false;
  if (s == Structure::kProjective) return fixed_point_clauses(f).bijection_on_fixed_objects;
  return true;
}

namespace detail {

// The unique mediating map out of a pushout, found by pinning both legs.
inline EquivariantFunctor mediate(const CellAttachment& a, const EquivariantFunctor& old_leg,
                                  const EquivariantFunctor& cell_leg, Budget& budget) {
  FunctorQuery q = equivariant_query(*a.result, *old_leg.cod);
  q.pin_obj.assign(a.result->g().num_objects(), kNone);
  q.pin_mor.assign(a.result->g().num_morphisms(), kNone);
  for (ObjId x = 0; x < old_leg.dom->g().num_objects(); ++x) q.pin_obj[a.incl.on_obj(x)] = old_leg.on_obj(x);
  for (MorId m = 0; m < old_leg.dom->g().num_morphisms(); ++m) q.pin_mor[a.incl.on_mor(m)] = old_leg.on_mor(m);
  for (ObjId x = 0; x < cell_leg.dom->g().num_objects(); ++x) q.pin_obj[a.cell_map.on_obj(x)] = cell_leg.on_obj(x);
  for (MorId m = 0; m < cell_leg.dom->g().num_morphisms(); ++m) q.pin_mor[a.cell_map.on_mor(m)] = cell_leg.on_mor(m);
  std::optional<EquivariantFunctor> found;
  FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
    found = EquivariantFunctor{a.result, old_leg.cod, Functor{a.result->base, old_leg.cod->base, o, m}};
    return false;
  });
  if (!found) throw std::logic_error("pushout cocone has no mediating map");
  return *found;
}

inline MorId preimage(const EquivariantFunctor& e, ObjId a, ObjId b, MorId target) {
  for (MorId m : e.dom->g().hom(a, b)) {
    if (e.on_mor(m) == target) return m;
  }
  throw std::logic_error("embedding is not full");
}

}  // namespace detail

// Writes a trivial cofibration as a sequence of cell attachments: i-cells
// for plain groupoids, Si-cells for the projective structure and Si- or
// iprime-cells for the injective structure. Cells are attached greedily at
// the least object of the codomain not yet reached.
inline CellSequence decompose_trivial_cofibration(const EquivariantFunctor& f0, Structure s,
                                                  Budget& budget) {
  const EquivariantFunctor f = for_structure(f0, s);
  if (!is_trivial_cofibration(f, s)) {
    throw Error(ErrorKind::kNotTrivialCofibration, std::string("not a trivial cofibration in the ") + to_string(s) + " structure");
  }
  const InvPtr& a = f.dom;
  const InvPtr& b = f.cod;
  const Groupoid& bg = b->g();
  CellSequence seq{a, {}};
  InvPtr stage = a;
  EquivariantFunctor e = f;
  std::vector<char> reached(bg.num_objects(), 0);
  for (ObjId y : f.map.obj) reached[y] = 1;
  for (ObjId x = 0; x < bg.num_objects(); ++x) {
    if (reached[x]) continue;
    ObjId y = kNone;
    MorId phi = kNone;
    for (ObjId c = 0; c < a->g().num_objects() && y == kNone; ++c) {
      auto h = bg.hom(f.on_obj(c), x);
      if (!h.empty()) {
        y = c;
        phi = h.front();
      }
    }
    CellStep step;
    EquivariantFunctor gen;
    std::vector<ObjId> cobj;
    std::vector<MorId> cmor_named;  // images of the named generator arrows
    if (s == Structure::kPlain) {
      step = {CellKind::kI, {y}, {a->g().identity(y)}};
      cobj = {f.on_obj(y), x};
    } else if (!b->is_fixed(x)) {
      step = {CellKind::kSi, {y, a->act(y)}, {a->g().identity(y), a->g().identity(a->act(y))}};
      cobj = {f.on_obj(y), b->act(f.on_obj(y)), x, b->act(x)};
    } else {
      MorId eta_phi = b->act_mor(phi);
      MorId loop = bg.compose(bg.inverse(eta_phi), phi);
      MorId m = detail::preimage(f, y, a->act(y), loop);
      const InvPtr& ic = shapes::interval_check();
      step.kind = CellKind::kIprime;
      step.obj = {y, a->act(y)};
      for (MorId k = 0; k < ic->g().num_morphisms(); ++k) {
        const Groupoid& icg = ic->g();
        if (icg.is_identity(k)) {
          step.mor.push_back(a->g().identity(step.obj[icg.src(k)]));
        } else if (icg.src(k) == 0) {
          step.mor.push_back(m);
        } else {
          step.mor.push_back(a->g().inverse(m));
        }
      }
      cobj = {f.on_obj(y), b->act(f.on_obj(y)), x};
    }
    gen = cell_generator(step.kind);
    // Translate the attaching data into the current stage; old IDs persist.
    EquivariantFunctor att{gen.dom, stage, Functor{gen.dom->base, stage->base, step.obj, step.mor}};
    CellAttachment cell = attach_cell(stage, step.kind, att, seq.steps.size());
    // Map of the generator's codomain into b, determined on objects and by
    // sending every arrow to the unique composite through phi.
    EquivariantFunctor cell_leg{gen.cod, b, Functor{gen.cod->base, b->base, cobj, {}}};
    const Groupoid& cg = gen.cod->g();
    std::vector<MorId> anchor(cg.num_objects());
    if (step.kind == CellKind::kI) {
      anchor = {bg.identity(cobj[0]), bg.inverse(phi)};
    } else if (step.kind == CellKind::kSi) {
      MorId ephi = b->act_mor(phi);
      anchor = {bg.identity(cobj[0]), bg.identity(cobj[1]), bg.inverse(phi), bg.inverse(ephi)};
    } else {
      MorId ephi = b->act_mor(phi);
      MorId loop = bg.compose(bg.inverse(ephi), phi);
      // Anchor everything at f(act y): 0 via loop, 1 trivially, 2 via act(phi)^-1.
      anchor = {loop, bg.identity(cobj[1]), bg.inverse(ephi)};
    }
    for (MorId k = 0; k < cg.num_morphisms(); ++k) {
      cell_leg.map.mor.push_back(bg.compose(bg.inverse(anchor[cg.tgt(k)]), anchor[cg.src(k)]));
    }
    e = detail::mediate(cell, e, cell_leg, budget);
    stage = cell.result;
    seq.steps.push_back(step);
    for (ObjId z : e.map.obj) reached[z] = 1;
  }
  return seq;
}

struct Factorization {
  EquivariantFunctor j;  // trivial cofibration built from cells
  EquivariantFunctor q;  // fibration
  int steps = 0;
  CellSequence cells;
};

// Gluing construction: attach one cell for every commuting square from a
// generator to the current map, until the map has the right lifting
// property against the generators.
inline Factorization factorize(const EquivariantFunctor& f0, Structure s, Budget& budget,
                               int max_steps = 8) {
  const EquivariantFunctor f = for_structure(f0, s);
  const auto gens = generating_trivial_cofibrations(s);
  CellSequence seq{f.dom, {}};
  InvPtr stage = f.dom;
  EquivariantFunctor q = f;
  int steps = 0;
  while (!has_rlp(q, gens, budget).holds) {
    if (steps == max_steps) {
      throw Error(ErrorKind::kIterationCapExceeded, "no fibration after " + std::to_string(max_steps) + " gluing steps");
    }
    struct Square {
      CellKind kind;
      std::vector<ObjId> obj;
      std::vector<MorId> mor;
      EquivariantFunctor bottom;
    };
    std::vector<Square> squares;
    for (const auto& gen : gens) {
      CellKind kind = gen.dom == shapes::s1() ? CellKind::kSi
                      : gen.dom == shapes::interval_check() ? CellKind::kIprime
                                                           : CellKind::kI;
      for_each_square(gen, q, budget, [&](const EquivariantFunctor& top, const EquivariantFunctor& bottom) {
        squares.push_back({kind, top.map.obj, top.map.mor, bottom});
        return true;
      });
    }
    for (const Square& sq : squares) {
      EquivariantFunctor gen = cell_generator(sq.kind);
      EquivariantFunctor att{gen.dom, stage, Functor{gen.dom->base, stage->base, sq.obj, sq.mor}};
      CellAttachment cell = attach_cell(stage, sq.kind, att, seq.steps.size());
      q = detail::mediate(cell, q, sq.bottom, budget);
      stage = cell.result;
      seq.steps.push_back({sq.kind, sq.obj, sq.mor});
    }
    ++steps;
  }
  Factorization out;
  Functor id = identity_functor(f.dom->base);
  out.j = EquivariantFunctor{f.dom, stage, Functor{f.dom->base, stage->base, id.obj, id.mor}};
  out.q = q;
  out.steps = steps;
  out.cells = std::move(seq);
  return out;
}

}  // namespace invgpd

#endif  // INVGPD_LIFTING_HPP_
