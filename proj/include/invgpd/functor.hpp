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

// Functors between finite groupoids and the predicates used to classify them.

#ifndef INVGPD_FUNCTOR_HPP_
#define INVGPD_FUNCTOR_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invgpd/error.hpp"
#include "invgpd/groupoid.hpp"

namespace invgpd {

struct Functor {
  GroupoidPtr dom;
  GroupoidPtr cod;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;

  ObjId on_obj(ObjId x) const { return obj[x]; }
  MorId on_mor(MorId f) const { return mor[f]; }
};

inline Diagnostics check_functor(const Functor& f) {
  Diagnostics out;
  auto add = [&out](std::string code, std::string msg) {
    out.push_back({std::move(code), std::move(msg)});
  };
  if (!f.dom || !f.cod) {
    add("missing_groupoid", "functor has no domain or codomain");
    return out;
  }
  const Groupoid& a = *f.dom;
  const Groupoid& b = *f.cod;
  if (f.obj.size() != a.num_objects() || f.mor.size() != a.num_morphisms()) {
    add("not_total", "functor is not defined on every object and morphism");
    return out;
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (f.obj[x] >= b.num_objects()) add("bad_image", "object '" + a.object_name(x) + "' maps outside the codomain");
  }
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    if (f.mor[m] >= b.num_morphisms()) add("bad_image", "morphism '" + a.morphism_name(m) + "' maps outside the codomain");
  }
  if (!out.empty()) return out;
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    MorId fm = f.mor[m];
    if (b.src(fm) != f.obj[a.src(m)] || b.tgt(fm) != f.obj[a.tgt(m)]) {
      add("endpoints", "image of '" + a.morphism_name(m) + "' has the wrong endpoints");
    }
  }
  if (!out.empty()) return out;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (f.mor[a.identity(x)] != b.identity(f.obj[x])) {
      add("identity", "identity of '" + a.object_name(x) + "' is not preserved");
    }
  }
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    for (MorId n : a.out(a.tgt(m))) {
      if (f.mor[a.compose(n, m)] != b.compose(f.mor[n], f.mor[m])) {
        add("composition", "'" + a.morphism_name(n) + " o " + a.morphism_name(m) + "' is not preserved");
        return out;
      }
    }
  }
  return out;
}

inline Functor make_functor(GroupoidPtr dom, GroupoidPtr cod, std::vector<ObjId> obj,
                            std::vector<MorId> mor) {
  Functor f{std::move(dom), std::move(cod), std::move(obj), std::move(mor)};
  Diagnostics diags = check_functor(f);
  if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, describe(diags));
  return f;
}

inline Functor identity_functor(const GroupoidPtr& g) {
  Functor f{g, g, {}, {}};
  for (ObjId x = 0; x < g->num_objects(); ++x) f.obj.push_back(x);
  for (MorId m = 0; m < g->num_morphisms(); ++m) f.mor.push_back(m);
  return f;
}

// The unique functor into a one-object groupoid with one morphism.
inline Functor terminal_functor(const GroupoidPtr& g, const GroupoidPtr& point) {
  return Functor{g, point, std::vector<ObjId>(g->num_objects(), 0),
                 std::vector<MorId>(g->num_morphisms(), 0)};
}

// g o f.
inline Functor compose(const Functor& g, const Functor& f) {
  if (f.cod != g.dom) {
    throw Error(ErrorKind::kCodomainMismatch, "codomain of the first functor is not the domain of the second");
  }
  Functor h{f.dom, g.cod, {}, {}};
  h.obj.reserve(f.obj.size());
  h.mor.reserve(f.mor.size());
  for (ObjId y : f.obj) h.obj.push_back(g.obj[y]);
  for (MorId m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

inline bool same_functor(const Functor& a, const Functor& b) {
  return a.dom == b.dom && a.cod == b.cod && a.obj == b.obj && a.mor == b.mor;
}

struct FunctorReport {
  bool injective_on_objects = false;
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
  bool equivalence = false;
  bool isofibration = false;
  bool discrete_fibration = false;
};

inline bool is_injective_on_objects(const Functor& f) {
  std::vector<char> hit(f.cod->num_objects(), 0);
  for (ObjId y : f.obj) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

// Number of lifts of each morphism out of F(x) to a morphism out of x,
// indexed by position in out(F(x)).
inline std::vector<std::uint32_t> lift_counts(const Functor& f, ObjId x) {
  const Groupoid& b = *f.cod;
  std::vector<std::uint32_t> counts(b.out(f.obj[x]).size(), 0);
  for (MorId m : f.dom->out(x)) ++counts[b.out_position(f.mor[m])];
  return counts;
}

inline FunctorReport classify_functor(const Functor& f) {
  Diagnostics diags = check_functor(f);
  if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, describe(diags));
  const Groupoid& a = *f.dom;
  const Groupoid& b = *f.cod;
  FunctorReport r;
  r.injective_on_objects = is_injective_on_objects(f);

  r.full = true;
  r.faithful = true;
  std::vector<std::uint32_t> stamp(b.num_morphisms(), kNone);
  std::uint32_t tick = 0;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < a.num_objects(); ++y) {
      std::size_t distinct = 0;
      ++tick;
      for (MorId m : a.hom(x, y)) {
        if (stamp[f.mor[m]] != tick) {
          stamp[f.mor[m]] = tick;
          ++distinct;
        } else {
          r.faithful = false;
        }
      }
      if (distinct != b.hom(f.obj[x], f.obj[y]).size()) r.full = false;
    }
  }

  auto comp = connected_components(b);
  std::vector<char> reached(b.num_objects(), 0);
  for (ObjId x = 0; x < a.num_objects(); ++x) reached[comp[f.obj[x]]] = 1;
  r.essentially_surjective = true;
  for (ObjId y = 0; y < b.num_objects(); ++y) {
    if (!reached[comp[y]]) r.essentially_surjective = false;
  }
  r.equivalence = r.full && r.faithful && r.essentially_surjective;

  r.isofibration = true;
  r.discrete_fibration = true;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (std::uint32_t c : lift_counts(f, x)) {
      if (c == 0) r.isofibration = false;
      if (c != 1) r.discrete_fibration = false;
    }
  }
  return r;
}

// A choice of lift for every pair (h, x) with h a morphism of the codomain
// and x an object over its source.
struct Cleavage {
  std::map<std::pair<MorId, ObjId>, MorId> lift;

  MorId operator()(MorId h, ObjId x) const { return lift.at({h, x}); }
};

inline bool is_split_cleavage(const Functor& f, const Cleavage& c) {
  const Groupoid& a = *f.dom;
  const Groupoid& b = *f.cod;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (MorId h : b.out(f.obj[x])) {
      auto it = c.lift.find({h, x});
      if (it == c.lift.end()) return false;
      MorId m = it->second;
      if (a.src(m) != x || f.mor[m] != h) return false;
      if (b.is_identity(h) && m != a.identity(x)) return false;
      for (MorId h2 : b.out(b.tgt(h))) {
        auto it2 = c.lift.find({h2, a.tgt(m)});
        if (it2 == c.lift.end()) return false;
        auto it3 = c.lift.find({b.compose(h2, h), x});
        if (it3 == c.lift.end() || it3->second != a.compose(it2->second, m)) return false;
      }
    }
  }
  return true;
}

// Backtracking search for a split cleavage; choices follow ID order and
// forced values are propagated through composition and inverses.
inline std::optional<Cleavage> find_split_cleavage(const Functor& f, Budget& budget) {
  const Groupoid& a = *f.dom;
  const Groupoid& b = *f.cod;
  std::vector<std::uint32_t> base(a.num_objects() + 1, 0);
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    base[x + 1] = base[x] + static_cast<std::uint32_t>(b.out(f.obj[x]).size());
  }
  const std::uint32_t nvars = base[a.num_objects()];
  auto var = [&](MorId h, ObjId x) { return base[x] + b.out_position(h); };
  std::vector<ObjId> var_obj(nvars);
  std::vector<MorId> var_mor(nvars);
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (MorId h : b.out(f.obj[x])) {
      var_obj[var(h, x)] = x;
      var_mor[var(h, x)] = h;
    }
  }

  using State = std::vector<MorId>;
  // Assigns and closes under composition with all assigned lifts.
  auto assign = [&](State& s, std::uint32_t v, MorId m) -> bool {
    std::vector<std::pair<std::uint32_t, MorId>> work{{v, m}};
    while (!work.empty()) {
      auto [w, lift] = work.back();
      work.pop_back();
      if (s[w] != kNone) {
        if (s[w] != lift) return false;
        continue;
      }
      s[w] = lift;
      const MorId h = var_mor[w];
      const ObjId x = var_obj[w];
      const ObjId xt = a.tgt(lift);
      work.push_back({var(b.inverse(h), xt), a.inverse(lift)});
      for (MorId h2 : b.out(b.tgt(h))) {
        MorId l2 = s[var(h2, xt)];
        if (l2 != kNone) work.push_back({var(b.compose(h2, h), x), a.compose(l2, lift)});
      }
      for (std::uint32_t u = 0; u < nvars; ++u) {
        if (s[u] == kNone || a.tgt(s[u]) != x || b.tgt(var_mor[u]) != b.src(h)) continue;
        work.push_back({var(b.compose(h, var_mor[u]), var_obj[u]), a.compose(lift, s[u])});
      }
    }
    return true;
  };

  State start(nvars, kNone);
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (!assign(start, var(b.identity(f.obj[x]), x), a.identity(x))) return std::nullopt;
  }

  std::optional<State> found;
  auto search = [&](auto&& self, const State& s) -> bool {
    std::uint32_t v = 0;
    while (v < nvars && s[v] != kNone) ++v;
    if (v == nvars) {
      found = s;
      return true;
    }
    for (MorId m : a.out(var_obj[v])) {
      if (f.mor[m] != var_mor[v]) continue;
      budget.spend();
      State next = s;
      if (assign(next, v, m) && self(self, next)) return true;
    }
    return false;
  };
  if (!search(search, start)) return std::nullopt;
  Cleavage c;
  for (std::uint32_t v = 0; v < nvars; ++v) c.lift[{var_mor[v], var_obj[v]}] = (*found)[v];
  return c;
}

}  // namespace invgpd

#endif  // INVGPD_FUNCTOR_HPP_
