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

// JSON documents declaring involutive groupoids, equivariant functors and
// lifting squares.
//
//   {
//     "groupoids": {
//       "G": {
//         "objects": ["0", "1"],
//         "morphisms": {"phi": ["0", "1"]},
//         "identities": {"0": "id0"},             optional, default "id<x>"
//         "inverses": {"phi": "phi^-1"},          optional
//         "compose": [["g", "f", "gf"]],          optional, sparse
//         "involution": {"objects": {"0": "1"}, "morphisms": {"phi": "phi^-1"}}
//       }
//     },
//     "functors": {
//       "F": {"dom": "G", "cod": "H", "objects": {...}, "morphisms": {...}},
//       "T": {"dom": "G", "terminal": true},
//       "I": {"dom": "G", "identity": true}
//     },
//     "squares": {"S": {"left": "F", "right": "T", "top": "...", "bottom": "..."}}
//   }
//
// Missing inverses, composites and morphism images are completed from the
// groupoid laws (units, inverses, associativity, single-element hom-sets);
// anything still undetermined is an error. Names not declared in the file
// resolve to the built-in shapes and generators.

#ifndef INVGPD_DOCUMENT_HPP_
#define INVGPD_DOCUMENT_HPP_

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "invgpd/equivariant.hpp"
#include "invgpd/groupoid.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/shapes.hpp"

namespace invgpd {

using Json = nlohmann::ordered_json;

struct Document {
  std::vector<std::pair<std::string, InvPtr>> groupoids;
  std::vector<std::pair<std::string, EquivariantFunctor>> functors;
  std::vector<std::pair<std::string, LiftingProblem>> squares;

  std::optional<InvPtr> groupoid(std::string_view name) const {
    for (const auto& [n, g] : groupoids) {
      if (n == name) return g;
    }
    return shapes::by_name(name);
  }
  std::optional<EquivariantFunctor> functor(std::string_view name) const {
    for (const auto& [n, f] : functors) {
      if (n == name) return f;
    }
    return generators::by_name(name);
  }
  std::optional<LiftingProblem> square(std::string_view name) const {
    for (const auto& [n, s] : squares) {
      if (n == name) return s;
    }
    return std::nullopt;
  }
};

namespace detail {

[[noreturn]] inline void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParseError, where + ": " + what);
}

inline const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where, "expected a string");
  return j.get<std::string>();
}

// Fills in the composition table from the laws. Returns the pairs left
// undetermined.
inline std::vector<std::pair<MorId, MorId>> complete_composition(GroupoidData& d) {
  const MorId n = static_cast<MorId>(d.morphisms.size());
  auto src = [&](MorId m) { return d.morphisms[m].src; };
  auto tgt = [&](MorId m) { return d.morphisms[m].tgt; };
  std::vector<std::vector<MorId>> hom(d.objects.size() * d.objects.size());
  auto hom_of = [&](ObjId x, ObjId y) -> std::vector<MorId>& { return hom[x * d.objects.size() + y]; };
  for (MorId m = 0; m < n; ++m) hom_of(src(m), tgt(m)).push_back(m);
  auto get = [&](MorId g, MorId f) -> MorId {
    auto it = d.compose.find({g, f});
    return it == d.compose.end() ? kNone : it->second;
  };
  bool changed = true;
  auto set = [&](MorId g, MorId f, MorId c) {
    if (c == kNone || get(g, f) != kNone) return;
    d.compose[{g, f}] = c;
    changed = true;
  };
  while (changed) {
    changed = false;
    for (MorId f = 0; f < n; ++f) {
      set(f, d.identity[src(f)], f);
      set(d.identity[tgt(f)], f, f);
      set(d.inverse[f], f, d.identity[src(f)]);
      set(f, d.inverse[f], d.identity[tgt(f)]);
    }
    for (MorId f = 0; f < n; ++f) {
      for (ObjId z = 0; z < d.objects.size(); ++z) {
        for (MorId g : hom_of(tgt(f), z)) {
          const auto& target = hom_of(src(f), z);
          if (target.size() == 1) set(g, f, target.front());
          MorId gf = get(g, f);
          if (gf == kNone) continue;
          // g = gf o f^-1 and f = g^-1 o gf.
          set(gf, d.inverse[f], g);
          set(d.inverse[g], gf, f);
          // (h o g) o f = h o (g o f).
          for (ObjId w = 0; w < d.objects.size(); ++w) {
            for (MorId h : hom_of(z, w)) {
              MorId hg = get(h, g);
              if (hg == kNone) continue;
              set(h, gf, get(hg, f));
              set(hg, f, get(h, gf));
            }
          }
        }
      }
    }
  }
  std::vector<std::pair<MorId, MorId>> missing;
  for (MorId f = 0; f < n; ++f) {
    for (ObjId z = 0; z < d.objects.size(); ++z) {
      for (MorId g : hom_of(tgt(f), z)) {
        if (get(g, f) == kNone) missing.emplace_back(g, f);
      }
    }
  }
  return missing;
}

inline GroupoidData parse_groupoid_data(const Json& j, const std::string& where) {
  GroupoidData d;
  std::map<std::string, ObjId> obj;
  std::map<std::string, MorId> mor;
  const Json& objects = require(j, "objects", where);
  if (!objects.is_array()) parse_error(where, "'objects' must be a list");
  for (const auto& o : objects) {
    std::string name = as_string(o, where + ".objects");
    if (obj.count(name)) parse_error(where, "duplicate object '" + name + "'");
    obj[name] = static_cast<ObjId>(d.objects.size());
    d.objects.push_back(name);
  }
  auto object_id = [&](const Json& x, const std::string& w) {
    std::string name = as_string(x, w);
    auto it = obj.find(name);
    if (it == obj.end()) parse_error(w, "unknown object '" + name + "'");
    return it->second;
  };
  auto add_morphism = [&](const std::string& name, ObjId s, ObjId t, const std::string& w) {
    if (mor.count(name)) parse_error(w, "duplicate morphism '" + name + "'");
    mor[name] = static_cast<MorId>(d.morphisms.size());
    d.morphisms.push_back({name, s, t});
    return mor[name];
  };
  if (j.contains("morphisms")) {
    const Json& ms = j.at("morphisms");
    if (!ms.is_object()) parse_error(where, "'morphisms' must map names to [source, target]");
    for (const auto& [name, ends] : ms.items()) {
      std::string w = where + ".morphisms." + name;
      if (!ends.is_array() || ends.size() != 2) parse_error(w, "expected [source, target]");
      add_morphism(name, object_id(ends[0], w), object_id(ends[1], w), w);
    }
  }
  d.identity.assign(d.objects.size(), kNone);
  const Json empty = Json::object();
  const Json& ids = j.contains("identities") ? j.at("identities") : empty;
  for (ObjId x = 0; x < d.objects.size(); ++x) {
    std::string name = ids.contains(d.objects[x]) ? as_string(ids.at(d.objects[x]), where + ".identities")
                                                  : "id" + d.objects[x];
    auto it = mor.find(name);
    if (it != mor.end()) {
      if (d.morphisms[it->second].src != x || d.morphisms[it->second].tgt != x) {
        parse_error(where, "identity '" + name + "' is not an endomorphism of '" + d.objects[x] + "'");
      }
      d.identity[x] = it->second;
    } else {
      d.identity[x] = add_morphism(name, x, x, where + ".identities");
    }
  }
  auto morphism_id = [&](const Json& m, const std::string& w) {
    std::string name = as_string(m, w);
    auto it = mor.find(name);
    if (it == mor.end()) parse_error(w, "unknown morphism '" + name + "'");
    return it->second;
  };
  d.inverse.assign(d.morphisms.size(), kNone);
  for (ObjId x = 0; x < d.objects.size(); ++x) d.inverse[d.identity[x]] = d.identity[x];
  if (j.contains("inverses")) {
    for (const auto& [name, inv] : j.at("inverses").items()) {
      std::string w = where + ".inverses." + name;
      MorId m = morphism_id(Json(name), w), i = morphism_id(inv, w);
      d.inverse[m] = i;
      if (d.inverse[i] == kNone) d.inverse[i] = m;
    }
  }
  if (j.contains("compose")) {
    for (const auto& t : j.at("compose")) {
      std::string w = where + ".compose";
      if (!t.is_array() || t.size() != 3) parse_error(w, "expected [g, f, g o f]");
      MorId g = morphism_id(t[0], w), f = morphism_id(t[1], w), c = morphism_id(t[2], w);
      d.compose[{g, f}] = c;
      if (d.morphisms[c].src == d.morphisms[c].tgt && c == d.identity[d.morphisms[c].src]) {
        if (d.inverse[f] == kNone) d.inverse[f] = g;
        if (d.inverse[g] == kNone) d.inverse[g] = f;
      }
    }
  }
  // Inverses of arrows whose reverse hom-set has one element.
  for (MorId m = 0; m < d.morphisms.size(); ++m) {
    if (d.inverse[m] != kNone) continue;
    MorId only = kNone;
    int count = 0;
    for (MorId k = 0; k < d.morphisms.size(); ++k) {
      if (d.morphisms[k].src == d.morphisms[m].tgt && d.morphisms[k].tgt == d.morphisms[m].src) {
        only = k;
        ++count;
      }
    }
    if (count != 1) {
      parse_error(where, "cannot determine the inverse of '" + d.morphisms[m].name + "'; declare it under 'inverses'");
    }
    d.inverse[m] = only;
  }
  auto missing = complete_composition(d);
  if (!missing.empty()) {
    parse_error(where, "composite of '" + d.morphisms[missing[0].first].name + "' after '" +
                           d.morphisms[missing[0].second].name + "' is not determined; declare it under 'compose'");
  }
  Diagnostics diags = validate_groupoid(d);
  if (!diags.empty()) throw Error(ErrorKind::kMalformedGroupoid, where + ": " + describe(diags));
  return d;
}

// Completes a partial morphism map between groupoids from the functor laws.
// Returns false if some image stays undetermined.
inline bool complete_morphism_map(const Groupoid& a, const Groupoid& b, const std::vector<ObjId>& obj,
                                  std::vector<MorId>& mor) {
  bool changed = true;
  auto set = [&](MorId m, MorId v) {
    if (mor[m] == kNone && v != kNone) {
      mor[m] = v;
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (MorId m = 0; m < a.num_morphisms(); ++m) {
      if (a.is_identity(m)) set(m, b.identity(obj[a.src(m)]));
      if (mor[a.inverse(m)] != kNone) set(m, b.inverse(mor[a.inverse(m)]));
      auto h = b.hom(obj[a.src(m)], obj[a.tgt(m)]);
      if (h.size() == 1) set(m, h.front());
    }
    for (MorId f = 0; f < a.num_morphisms(); ++f) {
      for (MorId g : a.out(a.tgt(f))) {
        MorId c = a.compose(g, f);
        MorId ff = mor[f], gg = mor[g], cc = mor[c];
        if (ff != kNone && gg != kNone) set(c, b.compose(gg, ff));
        if (cc != kNone && ff != kNone) set(g, b.compose(cc, b.inverse(ff)));
        if (cc != kNone && gg != kNone) set(f, b.compose(b.inverse(gg), cc));
      }
    }
  }
  for (MorId v : mor) {
    if (v == kNone) return false;
  }
  return true;
}

// Reads {"objects": {...}, "morphisms": {...}} as a map between groupoids.
inline Functor parse_map(const Json& j, const GroupoidPtr& a, const GroupoidPtr& b, const std::string& where) {
  std::vector<ObjId> obj(a->num_objects(), kNone);
  std::vector<MorId> mor(a->num_morphisms(), kNone);
  const Json& objs = require(j, "objects", where);
  for (const auto& [name, image] : objs.items()) {
    auto x = a->find_object(name);
    auto y = b->find_object(as_string(image, where));
    if (!x) parse_error(where, "unknown source object '" + name + "'");
    if (!y) parse_error(where, "unknown target object '" + image.get<std::string>() + "'");
    obj[*x] = *y;
  }
  for (ObjId x = 0; x < obj.size(); ++x) {
    if (obj[x] == kNone) parse_error(where, "no image for object '" + a->object_name(x) + "'");
  }
  if (j.contains("morphisms")) {
    for (const auto& [name, image] : j.at("morphisms").items()) {
      auto m = a->find_morphism(name);
      auto n = b->find_morphism(as_string(image, where));
      if (!m) parse_error(where, "unknown source morphism '" + name + "'");
      if (!n) parse_error(where, "unknown target morphism '" + image.get<std::string>() + "'");
      mor[*m] = *n;
    }
  }
  if (!complete_morphism_map(*a, *b, obj, mor)) {
    for (MorId m = 0; m < mor.size(); ++m) {
      if (mor[m] == kNone) parse_error(where, "image of morphism '" + a->morphism_name(m) + "' is not determined");
    }
  }
  Functor f{a, b, std::move(obj), std::move(mor)};
  Diagnostics diags = check_functor(f);
  if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, where + ": " + describe(diags));
  return f;
}

}  // namespace detail

inline Document parse_document(const Json& root) {
  Document doc;
  if (!root.is_object()) detail::parse_error("document", "top level must be an object");
  if (root.contains("groupoids")) {
    for (const auto& [name, j] : root.at("groupoids").items()) {
      std::string where = "groupoids." + name;
      GroupoidPtr g = share(Groupoid::from_data(detail::parse_groupoid_data(j, where)));
      InvPtr x;
      if (j.contains("involution")) {
        Functor inv = detail::parse_map(j.at("involution"), g, g, where + ".involution");
        Diagnostics diags = check_involution(g, inv.obj, inv.mor);
        if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, where + ".involution: " + describe(diags));
        x = make_involutive(g, inv.obj, inv.mor);
      } else {
        x = trivial_action(g);
      }
      doc.groupoids.emplace_back(name, x);
    }
  }
  auto groupoid_ref = [&](const Json& j, const std::string& where) {
    std::string name = detail::as_string(j, where);
    auto g = doc.groupoid(name);
    if (!g) detail::parse_error(where, "unknown groupoid '" + name + "'");
    return *g;
  };
  if (root.contains("functors")) {
    for (const auto& [name, j] : root.at("functors").items()) {
      std::string where = "functors." + name;
      InvPtr dom = groupoid_ref(detail::require(j, "dom", where), where + ".dom");
      EquivariantFunctor f;
      if (j.value("terminal", false)) {
        f = terminal_equivariant(dom);
      } else if (j.value("identity", false)) {
        f = identity_equivariant(dom);
      } else {
        InvPtr cod = groupoid_ref(detail::require(j, "cod", where), where + ".cod");
        f = EquivariantFunctor{dom, cod, detail::parse_map(j, dom->base, cod->base, where)};
        Diagnostics diags = check_equivariant(f);
        if (!diags.empty()) throw Error(ErrorKind::kMalformedFunctor, where + ": " + describe(diags));
      }
      doc.functors.emplace_back(name, f);
    }
  }
  auto functor_ref = [&](const Json& j, const std::string& where) {
    std::string name = detail::as_string(j, where);
    auto f = doc.functor(name);
    if (!f) detail::parse_error(where, "unknown functor '" + name + "'");
    return *f;
  };
  if (root.contains("squares")) {
    for (const auto& [name, j] : root.at("squares").items()) {
      std::string where = "squares." + name;
      LiftingProblem sq{functor_ref(detail::require(j, "left", where), where + ".left"),
                        functor_ref(detail::require(j, "right", where), where + ".right"),
                        functor_ref(detail::require(j, "top", where), where + ".top"),
                        functor_ref(detail::require(j, "bottom", where), where + ".bottom")};
      check_square(sq);
      doc.squares.emplace_back(name, sq);
    }
  }
  return doc;
}

inline Document parse_document_text(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  return parse_document(root);
}

inline Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

// Serialization writes every morphism in ID order together with inverses
// and composites of non-identities, so loading keeps IDs and needs no
// completion.
inline Json groupoid_to_json(const InvGroupoid& x) {
  const Groupoid& g = x.g();
  Json j;
  j["objects"] = Json::array();
  for (ObjId o = 0; o < g.num_objects(); ++o) j["objects"].push_back(g.object_name(o));
  j["morphisms"] = Json::object();
  j["identities"] = Json::object();
  for (ObjId o = 0; o < g.num_objects(); ++o) j["identities"][g.object_name(o)] = g.morphism_name(g.identity(o));
  for (MorId m = 0; m < g.num_morphisms(); ++m) {
    j["morphisms"][g.morphism_name(m)] = Json::array({g.object_name(g.src(m)), g.object_name(g.tgt(m))});
  }
  j["inverses"] = Json::object();
  for (MorId m = 0; m < g.num_morphisms(); ++m) {
    if (!g.is_identity(m)) j["inverses"][g.morphism_name(m)] = g.morphism_name(g.inverse(m));
  }
  j["compose"] = Json::array();
  for (MorId f = 0; f < g.num_morphisms(); ++f) {
    if (g.is_identity(f)) continue;
    for (MorId h : g.out(g.tgt(f))) {
      if (g.is_identity(h) || h == g.inverse(f)) continue;
      j["compose"].push_back(Json::array({g.morphism_name(h), g.morphism_name(f), g.morphism_name(g.compose(h, f))}));
    }
  }
  bool trivial = true;
  for (ObjId o = 0; o < g.num_objects(); ++o) trivial &= x.act(o) == o;
  for (MorId m = 0; m < g.num_morphisms(); ++m) trivial &= x.act_mor(m) == m;
  if (!trivial) {
    Json inv;
    inv["objects"] = Json::object();
    for (ObjId o = 0; o < g.num_objects(); ++o) inv["objects"][g.object_name(o)] = g.object_name(x.act(o));
    inv["morphisms"] = Json::object();
    for (MorId m = 0; m < g.num_morphisms(); ++m) {
      if (!g.is_identity(m)) inv["morphisms"][g.morphism_name(m)] = g.morphism_name(x.act_mor(m));
    }
    j["involution"] = inv;
  }
  return j;
}

inline Json functor_to_json(const EquivariantFunctor& f, const std::string& dom, const std::string& cod) {
  const Groupoid& a = f.dom->g();
  const Groupoid& b = f.cod->g();
  Json j;
  j["dom"] = dom;
  j["cod"] = cod;
  j["objects"] = Json::object();
  for (ObjId o = 0; o < a.num_objects(); ++o) j["objects"][a.object_name(o)] = b.object_name(f.on_obj(o));
  j["morphisms"] = Json::object();
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    if (!a.is_identity(m)) j["morphisms"][a.morphism_name(m)] = b.morphism_name(f.on_mor(m));
  }
  return j;
}

// Groupoids referenced by functors but not declared are written out under
// generated names.
inline Json document_to_json(const Document& doc) {
  Json root;
  root["groupoids"] = Json::object();
  std::vector<std::pair<InvPtr, std::string>> names;
  for (const auto& [n, g] : doc.groupoids) {
    root["groupoids"][n] = groupoid_to_json(*g);
    names.emplace_back(g, n);
  }
  auto name_of = [&](const InvPtr& g) {
    for (const auto& [p, n] : names) {
      if (p == g) return n;
    }
    std::string n;
    for (const auto& s : shapes::names()) {
      if (*shapes::by_name(s) == g) n = s;
    }
    if (n.empty()) n = "G" + std::to_string(names.size());
    root["groupoids"][n] = groupoid_to_json(*g);
    names.emplace_back(g, n);
    return n;
  };
  root["functors"] = Json::object();
  std::vector<std::pair<std::string, EquivariantFunctor>> fs = doc.functors;
  for (const auto& [n, f] : fs) root["functors"][n] = functor_to_json(f, name_of(f.dom), name_of(f.cod));
  auto functor_name = [&](const EquivariantFunctor& f, const std::string& hint) {
    for (const auto& [n, g] : fs) {
      if (same_functor(f, g)) return n;
    }
    fs.emplace_back(hint, f);
    root["functors"][hint] = functor_to_json(f, name_of(f.dom), name_of(f.cod));
    return hint;
  };
  if (!doc.squares.empty()) {
    root["squares"] = Json::object();
    for (const auto& [n, s] : doc.squares) {
      Json j;
      j["left"] = functor_name(s.left, n + ".left");
      j["right"] = functor_name(s.right, n + ".right");
      j["top"] = functor_name(s.top, n + ".top");
      j["bottom"] = functor_name(s.bottom, n + ".bottom");
      root["squares"][n] = j;
    }
  }
  return root;
}

}  // namespace invgpd

#endif  // INVGPD_DOCUMENT_HPP_
