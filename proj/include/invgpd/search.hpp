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

// Enumeration of functors under constraints.
//
// A functor out of a connected groupoid is determined by the image of a root
// object, the images of the edges of a spanning tree, and a homomorphism of
// vertex groups at the root. The search branches over exactly those choices,
// in ID order, and checks pins, a commuting condition over a third groupoid,
// injectivity on objects and equivariance as early as possible.

#ifndef INVGPD_SEARCH_HPP_
#define INVGPD_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "invgpd/equivariant.hpp"
#include "invgpd/error.hpp"
#include "invgpd/functor.hpp"
#include "invgpd/groupoid.hpp"

namespace invgpd {

struct FunctorQuery {
  const Groupoid* dom = nullptr;
  const Groupoid* cod = nullptr;
  // Both set: only equivariant functors are produced.
  const InvGroupoid* dom_inv = nullptr;
  const InvGroupoid* cod_inv = nullptr;
  // Prescribed values, kNone where free. Empty means no pins.
  std::vector<ObjId> pin_obj;
  std::vector<MorId> pin_mor;
  // Both set: only functors F with over_cod o F == over_dom are produced.
  const Functor* over_cod = nullptr;
  const Functor* over_dom = nullptr;
  bool injective_on_objects = false;
};

class FunctorSearch {
 public:
  FunctorSearch(FunctorQuery q, Budget& budget) : q_(std::move(q)), budget_(budget) {}

  // Calls visit(obj_map, mor_map) for every solution until it returns false.
  template <class Visit>
  void run(Visit&& visit) {
    if (!prepare()) return;
    auto cont = [&]() -> bool { return visit(fobj_, fmor_); };
    solve_component(0, cont);
  }

 private:
  struct Component {
    ObjId root = kNone;
    std::vector<ObjId> order;    // BFS order, root first
    std::vector<MorId> edge;     // tree edge into order[i]; kNone for root
    std::vector<MorId> morphisms;
    std::vector<MorId> auts;     // vertex group at root
    bool self_dual = true;
    std::vector<ObjId> mirror_objects;
    std::vector<MorId> mirror_morphisms;
  };

  bool equivariant() const { return q_.dom_inv != nullptr && q_.cod_inv != nullptr; }
  bool has_over() const { return q_.over_cod != nullptr && q_.over_dom != nullptr; }
  bool over_ok_obj(ObjId x, ObjId y) const {
    return !has_over() || q_.over_cod->obj[y] == q_.over_dom->obj[x];
  }
  bool over_ok_mor(MorId m, MorId n) const {
    return !has_over() || q_.over_cod->mor[n] == q_.over_dom->mor[m];
  }

  bool prepare() {
    const Groupoid& a = *q_.dom;
    const Groupoid& b = *q_.cod;
    fobj_.assign(a.num_objects(), kNone);
    fmor_.assign(a.num_morphisms(), kNone);
    ft_.assign(a.num_objects(), kNone);
    used_.assign(b.num_objects(), 0);
    if (q_.pin_obj.empty()) q_.pin_obj.assign(a.num_objects(), kNone);
    if (q_.pin_mor.empty()) q_.pin_mor.assign(a.num_morphisms(), kNone);
    if (equivariant()) {
      for (ObjId x = 0; x < a.num_objects(); ++x) {
        if (q_.pin_obj[x] == kNone) continue;
        ObjId want = q_.cod_inv->act(q_.pin_obj[x]);
        ObjId& other = q_.pin_obj[q_.dom_inv->act(x)];
        if (other != kNone && other != want) return false;
        other = want;
      }
      for (MorId m = 0; m < a.num_morphisms(); ++m) {
        if (q_.pin_mor[m] == kNone) continue;
        MorId want = q_.cod_inv->act_mor(q_.pin_mor[m]);
        MorId& other = q_.pin_mor[q_.dom_inv->act_mor(m)];
        if (other != kNone && other != want) return false;
        other = want;
      }
    }

    auto comp = connected_components(a);
    std::uint32_t ncomp = 0;
    for (auto c : comp) ncomp = std::max(ncomp, c + 1);
    std::vector<std::vector<ObjId>> members(ncomp);
    for (ObjId x = 0; x < a.num_objects(); ++x) members[comp[x]].push_back(x);
    std::vector<char> covered(ncomp, 0);
    path_.assign(a.num_objects(), kNone);
    loop_.assign(a.num_morphisms(), kNone);
    aut_pos_.assign(a.num_morphisms(), kNone);
    for (std::uint32_t c = 0; c < ncomp; ++c) {
      if (covered[c]) continue;
      covered[c] = 1;
      Component k;
      if (equivariant()) {
        std::uint32_t mc = comp[q_.dom_inv->act(members[c][0])];
        if (mc != c) {
          covered[mc] = 1;
          k.self_dual = false;
          k.mirror_objects = members[mc];
        }
      }
      k.root = members[c][0];
      for (ObjId x : members[c]) {
        if (q_.pin_obj[x] != kNone) {
          k.root = x;
          break;
        }
      }
      build_tree(k, members[c]);
      comps_.push_back(std::move(k));
    }
    return true;
  }

  void build_tree(Component& k, const std::vector<ObjId>& members) {
    const Groupoid& a = *q_.dom;
    std::vector<char> seen(a.num_objects(), 0);
    seen[k.root] = 1;
    k.order.push_back(k.root);
    k.edge.push_back(kNone);
    path_[k.root] = a.identity(k.root);
    while (k.order.size() < members.size()) {
      MorId chosen = kNone;
      for (int pass = 0; pass < 2 && chosen == kNone; ++pass) {
        for (ObjId p : k.order) {
          for (MorId m : a.out(p)) {
            if (seen[a.tgt(m)]) continue;
            if (pass == 0 && q_.pin_mor[m] == kNone) continue;
            chosen = m;
            break;
          }
          if (chosen != kNone) break;
        }
      }
      ObjId x = a.tgt(chosen);
      seen[x] = 1;
      k.order.push_back(x);
      k.edge.push_back(chosen);
      path_[x] = a.compose(chosen, path_[a.src(chosen)]);
    }
    for (ObjId x : members) {
      for (MorId m : a.out(x)) k.morphisms.push_back(m);
    }
    for (MorId m : a.hom(k.root, k.root)) {
      aut_pos_[m] = static_cast<std::uint32_t>(k.auts.size());
      k.auts.push_back(m);
    }
    for (MorId m : k.morphisms) {
      MorId l = a.compose(a.inverse(path_[a.tgt(m)]), a.compose(m, path_[a.src(m)]));
      loop_[m] = aut_pos_[l];
    }
    for (ObjId x : k.mirror_objects) {
      for (MorId m : a.out(x)) k.mirror_morphisms.push_back(m);
    }
  }

  bool object_allowed(ObjId x, ObjId y) const {
    if (q_.pin_obj[x] != kNone && q_.pin_obj[x] != y) return false;
    if (!over_ok_obj(x, y)) return false;
    if (q_.injective_on_objects && used_[y]) return false;
    if (equivariant()) {
      ObjId ex = q_.dom_inv->act(x);
      if (ex == x && q_.cod_inv->act(y) != y) return false;
      if (ex != x && fobj_[ex] != kNone && fobj_[ex] != q_.cod_inv->act(y)) return false;
      if (q_.injective_on_objects && ex != x && fobj_[ex] == kNone &&
          q_.cod_inv->act(y) == y) {
        return false;
      }
    }
    return true;
  }

  template <class Cont>
  bool solve_component(std::size_t ci, Cont& cont) {
    if (ci == comps_.size()) return cont();
    const Component& k = comps_[ci];
    const Groupoid& b = *q_.cod;
    auto try_root = [&](ObjId y) -> bool {
      budget_.spend();
      if (!object_allowed(k.root, y)) return true;
      fobj_[k.root] = y;
      ++used_[y];
      ft_[k.root] = b.identity(y);
      bool go = solve_edges(ci, 1, cont);
      --used_[y];
      fobj_[k.root] = kNone;
      return go;
    };
    if (q_.pin_obj[k.root] != kNone) return try_root(q_.pin_obj[k.root]);
    for (ObjId y = 0; y < b.num_objects(); ++y) {
      if (!try_root(y)) return false;
    }
    return true;
  }

  template <class Cont>
  bool solve_edges(std::size_t ci, std::size_t i, Cont& cont) {
    const Component& k = comps_[ci];
    if (i == k.order.size()) return solve_group(ci, {}, cont);
    const Groupoid& a = *q_.dom;
    const Groupoid& b = *q_.cod;
    const ObjId x = k.order[i];
    const MorId e = k.edge[i];
    const ObjId p = a.src(e);
    auto try_edge = [&](MorId n) -> bool {
      budget_.spend();
      if (b.src(n) != fobj_[p]) return true;
      if (!over_ok_mor(e, n)) return true;
      ObjId y = b.tgt(n);
      if (!object_allowed(x, y)) return true;
      fobj_[x] = y;
      ++used_[y];
      ft_[x] = b.compose(n, ft_[p]);
      bool go = solve_edges(ci, i + 1, cont);
      --used_[y];
      fobj_[x] = kNone;
      return go;
    };
    if (q_.pin_mor[e] != kNone) return try_edge(q_.pin_mor[e]);
    for (MorId n : b.out(fobj_[p])) {
      if (q_.pin_obj[x] != kNone && b.tgt(n) != q_.pin_obj[x]) continue;
      if (!try_edge(n)) return false;
    }
    return true;
  }

  // Closes the generator assignment under multiplication; fills img.
  bool close_group(const Component& k, const std::vector<std::pair<std::uint32_t, MorId>>& gens,
                   std::vector<MorId>& img) const {
    const Groupoid& a = *q_.dom;
    const Groupoid& b = *q_.cod;
    img.assign(k.auts.size(), kNone);
    const std::uint32_t id = aut_pos_[a.identity(k.root)];
    img[id] = b.identity(fobj_[k.root]);
    std::vector<std::uint32_t> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t u = queue[qi];
      for (auto [s, simg] : gens) {
        std::uint32_t c = aut_pos_[a.compose(k.auts[u], k.auts[s])];
        MorId want = b.compose(img[u], simg);
        if (img[c] == kNone) {
          img[c] = want;
          queue.push_back(c);
        } else if (img[c] != want) {
          return false;
        }
      }
    }
    return true;
  }

  template <class Cont>
  bool solve_group(std::size_t ci, std::vector<std::pair<std::uint32_t, MorId>> gens, Cont& cont) {
    const Component& k = comps_[ci];
    const Groupoid& b = *q_.cod;
    std::vector<MorId> img;
    if (!close_group(k, gens, img)) return true;
    std::uint32_t next = kNone;
    for (std::uint32_t u = 0; u < img.size(); ++u) {
      if (img[u] == kNone) {
        next = u;
        break;
      }
    }
    if (next == kNone) return finish_component(ci, img, cont);
    const MorId g = k.auts[next];
    for (MorId n : b.hom(fobj_[k.root], fobj_[k.root])) {
      budget_.spend();
      if (q_.pin_mor[g] != kNone && q_.pin_mor[g] != n) continue;
      if (!over_ok_mor(g, n)) continue;
      gens.push_back({next, n});
      if (!solve_group(ci, gens, cont)) return false;
      gens.pop_back();
    }
    return true;
  }

  template <class Cont>
  bool finish_component(std::size_t ci, const std::vector<MorId>& img, Cont& cont) {
    const Component& k = comps_[ci];
    const Groupoid& a = *q_.dom;
    const Groupoid& b = *q_.cod;
    bool ok = true;
    for (MorId m : k.morphisms) {
      MorId n = b.compose(ft_[a.tgt(m)], b.compose(img[loop_[m]], b.inverse(ft_[a.src(m)])));
      if ((q_.pin_mor[m] != kNone && q_.pin_mor[m] != n) || !over_ok_mor(m, n)) {
        ok = false;
        break;
      }
      fmor_[m] = n;
    }
    if (ok && equivariant() && k.self_dual) {
      for (MorId m : k.morphisms) {
        if (fmor_[q_.dom_inv->act_mor(m)] != q_.cod_inv->act_mor(fmor_[m])) {
          ok = false;
          break;
        }
      }
    }
    std::vector<ObjId> placed;
    if (ok && !k.self_dual) {
      for (ObjId x : k.mirror_objects) {
        ObjId y = q_.cod_inv->act(fobj_[q_.dom_inv->act(x)]);
        if ((q_.pin_obj[x] != kNone && q_.pin_obj[x] != y) || !over_ok_obj(x, y) ||
            (q_.injective_on_objects && used_[y])) {
          ok = false;
          break;
        }
        fobj_[x] = y;
        ++used_[y];
        placed.push_back(x);
      }
      if (ok) {
        for (MorId m : k.mirror_morphisms) {
          MorId n = q_.cod_inv->act_mor(fmor_[q_.dom_inv->act_mor(m)]);
          if ((q_.pin_mor[m] != kNone && q_.pin_mor[m] != n) || !over_ok_mor(m, n)) {
            ok = false;
            break;
          }
          fmor_[m] = n;
        }
      }
    }
    bool go = true;
    if (ok) go = solve_component(ci + 1, cont);
    for (ObjId x : placed) {
      --used_[fobj_[x]];
      fobj_[x] = kNone;
    }
    return go;
  }

  FunctorQuery q_;
  Budget& budget_;
  std::vector<Component> comps_;
  std::vector<MorId> path_;
  std::vector<std::uint32_t> loop_;
  std::vector<std::uint32_t> aut_pos_;
  std::vector<ObjId> fobj_;
  std::vector<MorId> fmor_;
  std::vector<MorId> ft_;
  std::vector<std::uint32_t> used_;
};

// Query helpers for the common cases.
inline FunctorQuery plain_query(const Groupoid& dom, const Groupoid& cod) {
  FunctorQuery q;
  q.dom = &dom;
  q.cod = &cod;
  return q;
}

inline FunctorQuery equivariant_query(const InvGroupoid& dom, const InvGroupoid& cod) {
  FunctorQuery q;
  q.dom = dom.base.get();
  q.cod = cod.base.get();
  q.dom_inv = &dom;
  q.cod_inv = &cod;
  return q;
}

inline std::vector<EquivariantFunctor> enumerate_equivariant(const InvPtr& dom, const InvPtr& cod,
                                                             Budget& budget) {
  std::vector<EquivariantFunctor> out;
  FunctorSearch(equivariant_query(*dom, *cod), budget).run([&](const auto& o, const auto& m) {
    out.push_back(EquivariantFunctor{dom, cod, Functor{dom->base, cod->base, o, m}});
    return true;
  });
  return out;
}

inline std::vector<Functor> enumerate_functors(const GroupoidPtr& dom, const GroupoidPtr& cod,
                                               Budget& budget) {
  std::vector<Functor> out;
  FunctorSearch(plain_query(*dom, *cod), budget).run([&](const auto& o, const auto& m) {
    out.push_back(Functor{dom, cod, o, m});
    return true;
  });
  return out;
}

// Equivariant functors h: dom(a) -> dom(b) with b o h == a.
inline std::vector<EquivariantFunctor> enumerate_slice_homs(const EquivariantFunctor& a,
                                                            const EquivariantFunctor& b,
                                                            Budget& budget) {
  if (a.cod->base != b.cod->base) {
    throw Error(ErrorKind::kCodomainMismatch, "slice objects live over different groupoids");
  }
  FunctorQuery q = equivariant_query(*a.dom, *b.dom);
  q.over_cod = &b.map;
  q.over_dom = &a.map;
  std::vector<EquivariantFunctor> out;
  FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
    out.push_back(EquivariantFunctor{a.dom, b.dom, Functor{a.dom->base, b.dom->base, o, m}});
    return true;
  });
  return out;
}

// Isomorphism search. Pins and the over condition of the query are
// honoured; the first bijective solution in search order is returned.
inline std::optional<std::pair<std::vector<ObjId>, std::vector<MorId>>> find_isomorphism(
    FunctorQuery q, Budget& budget) {
  if (q.dom->num_objects() != q.cod->num_objects() ||
      q.dom->num_morphisms() != q.cod->num_morphisms()) {
    return std::nullopt;
  }
  q.injective_on_objects = true;
  std::optional<std::pair<std::vector<ObjId>, std::vector<MorId>>> found;
  std::vector<char> hit(q.cod->num_morphisms());
  FunctorSearch(std::move(q), budget).run([&](const auto& o, const auto& m) {
    std::fill(hit.begin(), hit.end(), 0);
    for (MorId n : m) {
      if (hit[n]) return true;
      hit[n] = 1;
    }
    found.emplace(o, m);
    return false;
  });
  return found;
}

inline std::optional<Functor> find_isomorphism(const GroupoidPtr& a, const GroupoidPtr& b,
                                               Budget& budget) {
  auto r = find_isomorphism(plain_query(*a, *b), budget);
  if (!r) return std::nullopt;
  return Functor{a, b, r->first, r->second};
}

inline std::optional<EquivariantFunctor> find_equivariant_isomorphism(const InvPtr& a,
                                                                      const InvPtr& b,
                                                                      Budget& budget) {
  auto r = find_isomorphism(equivariant_query(*a, *b), budget);
  if (!r) return std::nullopt;
  return EquivariantFunctor{a, b, Functor{a->base, b->base, r->first, r->second}};
}

// Isomorphism theta: cod(a) -> cod(b) with theta o a == b.
inline std::optional<EquivariantFunctor> find_isomorphism_under(const EquivariantFunctor& a,
                                                                const EquivariantFunctor& b,
                                                                Budget& budget) {
  FunctorQuery q = equivariant_query(*a.cod, *b.cod);
  q.pin_obj.assign(a.cod->g().num_objects(), kNone);
  q.pin_mor.assign(a.cod->g().num_morphisms(), kNone);
  for (ObjId x = 0; x < a.dom->g().num_objects(); ++x) {
    ObjId& p = q.pin_obj[a.on_obj(x)];
    if (p != kNone && p != b.on_obj(x)) return std::nullopt;
    p = b.on_obj(x);
  }
  for (MorId m = 0; m < a.dom->g().num_morphisms(); ++m) {
    MorId& p = q.pin_mor[a.on_mor(m)];
    if (p != kNone && p != b.on_mor(m)) return std::nullopt;
    p = b.on_mor(m);
  }
  auto r = find_isomorphism(std::move(q), budget);
  if (!r) return std::nullopt;
  return EquivariantFunctor{a.cod, b.cod, Functor{a.cod->base, b.cod->base, r->first, r->second}};
}

// Isomorphism theta: dom(a) -> dom(b) with b o theta == a.
inline std::optional<EquivariantFunctor> find_isomorphism_over(const EquivariantFunctor& a,
                                                               const EquivariantFunctor& b,
                                                               Budget& budget) {
  FunctorQuery q = equivariant_query(*a.dom, *b.dom);
  q.over_cod = &b.map;
  q.over_dom = &a.map;
  auto r = find_isomorphism(std::move(q), budget);
  if (!r) return std::nullopt;
  return EquivariantFunctor{a.dom, b.dom, Functor{a.dom->base, b.dom->base, r->first, r->second}};
}

}  // namespace invgpd

#endif  // INVGPD_SEARCH_HPP_
