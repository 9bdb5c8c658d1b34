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

// Finite groupoids with explicit objects, morphisms and composition tables.
//
// GroupoidData is the raw, possibly invalid presentation that documents load
// into. Groupoid is the validated immutable value every algorithm works on.
// Object and morphism IDs are dense indices; ID order is the search order.

#ifndef INVGPD_GROUPOID_HPP_
#define INVGPD_GROUPOID_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invgpd/error.hpp"

namespace invgpd {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr std::uint32_t kNone = 0xffffffffu;

struct MorphismSpec {
  std::string name;
  ObjId src = kNone;
  ObjId tgt = kNone;
};

struct GroupoidData {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<MorId> identity;  // indexed by object
  std::vector<MorId> inverse;   // indexed by morphism
  std::map<std::pair<MorId, MorId>, MorId> compose;  // (g, f) -> g o f
};

struct Diagnostic {
  std::string code;
  std::string message;
};
using Diagnostics = std::vector<Diagnostic>;

inline std::string describe(const Diagnostics& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += "; ";
    out += d.code + ": " + d.message;
  }
  return out;
}

// Checks identities, inverses, totality of composition on composable pairs,
// unit and inverse laws, and associativity on every composable triple.
inline Diagnostics validate_groupoid(const GroupoidData& d) {
  Diagnostics out;
  auto add = [&out](std::string code, std::string msg) {
    out.push_back({std::move(code), std::move(msg)});
  };
  const std::size_t n = d.objects.size();
  const std::size_t m = d.morphisms.size();
  auto mname = [&](MorId f) {
    return f < m ? d.morphisms[f].name : "#" + std::to_string(f);
  };

  std::unordered_map<std::string, int> seen;
  for (const auto& o : d.objects) {
    if (seen[o]++ == 1) add("duplicate_object", "object '" + o + "' declared twice");
  }
  seen.clear();
  for (const auto& f : d.morphisms) {
    if (seen[f.name]++ == 1) add("duplicate_morphism", "morphism '" + f.name + "' declared twice");
  }
  for (MorId f = 0; f < m; ++f) {
    if (d.morphisms[f].src >= n || d.morphisms[f].tgt >= n) {
      add("bad_endpoint", "morphism '" + mname(f) + "' has an unknown endpoint");
    }
  }
  if (!out.empty()) return out;

  auto src = [&](MorId f) { return d.morphisms[f].src; };
  auto tgt = [&](MorId f) { return d.morphisms[f].tgt; };
  if (d.identity.size() != n) {
    add("identity_missing", "identity table does not cover every object");
    return out;
  }
  for (ObjId x = 0; x < n; ++x) {
    MorId e = d.identity[x];
    if (e >= m) {
      add("identity_missing", "object '" + d.objects[x] + "' has no identity");
    } else if (src(e) != x || tgt(e) != x) {
      add("identity_endpoints", "identity of '" + d.objects[x] + "' is '" + mname(e) + "' which is not a loop at it");
    }
  }
  if (d.inverse.size() != m) {
    add("inverse_missing", "inverse table does not cover every morphism");
    return out;
  }
  for (MorId f = 0; f < m; ++f) {
    MorId g = d.inverse[f];
    if (g >= m) {
      add("inverse_missing", "morphism '" + mname(f) + "' has no inverse");
    } else if (src(g) != tgt(f) || tgt(g) != src(f)) {
      add("inverse_endpoints", "inverse of '" + mname(f) + "' is '" + mname(g) + "' with wrong endpoints");
    }
  }
  if (!out.empty()) return out;

  for (const auto& [key, r] : d.compose) {
    auto [g, f] = key;
    if (g >= m || f >= m || r >= m) {
      add("compose_unknown", "composition entry refers to an unknown morphism");
    } else if (src(g) != tgt(f)) {
      add("compose_noncomposable", "'" + mname(g) + " o " + mname(f) + "' is given but not composable");
    } else if (src(r) != src(f) || tgt(r) != tgt(g)) {
      add("compose_endpoints", "'" + mname(g) + " o " + mname(f) + "' = '" + mname(r) + "' has wrong endpoints");
    }
  }
  if (!out.empty()) return out;

  std::vector<std::vector<MorId>> out_of(n);
  for (MorId f = 0; f < m; ++f) out_of[src(f)].push_back(f);
  auto comp = [&](MorId g, MorId f) -> MorId {
    auto it = d.compose.find({g, f});
    return it == d.compose.end() ? kNone : it->second;
  };
  for (MorId f = 0; f < m; ++f) {
    for (MorId g : out_of[tgt(f)]) {
      if (comp(g, f) == kNone) {
        add("compose_missing", "'" + mname(g) + " o " + mname(f) + "' is not defined");
      }
    }
  }
  if (!out.empty()) return out;

  for (MorId f = 0; f < m; ++f) {
    if (comp(f, d.identity[src(f)]) != f || comp(d.identity[tgt(f)], f) != f) {
      add("unit_law", "identities do not act trivially on '" + mname(f) + "'");
    }
    if (comp(d.inverse[f], f) != d.identity[src(f)] ||
        comp(f, d.inverse[f]) != d.identity[tgt(f)]) {
      add("inverse_law", "'" + mname(d.inverse[f]) + "' is not a two-sided inverse of '" + mname(f) + "'");
    }
  }
  constexpr std::size_t kMaxAssociativityReports = 16;
  std::size_t reported = 0;
  for (MorId f = 0; f < m && reported < kMaxAssociativityReports; ++f) {
    for (MorId g : out_of[tgt(f)]) {
      MorId gf = comp(g, f);
      for (MorId h : out_of[tgt(g)]) {
        if (comp(h, gf) != comp(comp(h, g), f)) {
          add("associativity", "(" + mname(h) + " o " + mname(g) + ") o " + mname(f) + " differs from " + mname(h) + " o (" + mname(g) + " o " + mname(f) + ")");
          if (++reported >= kMaxAssociativityReports) break;
        }
      }
      if (reported >= kMaxAssociativityReports) break;
    }
  }
  return out;
}

class Groupoid {
 public:
  Groupoid() : out_begin_{0} {}

  // Builds a groupoid whose composition is given by a rule; the rule is
  // called once per composable pair (g, f) and must return g o f.
  template <class ComposeFn>
  static Groupoid from_rule(std::vector<std::string> objects,
                            std::vector<MorphismSpec> morphisms,
                            std::vector<MorId> identity,
                            std::vector<MorId> inverse, ComposeFn&& compose) {
    Groupoid g;
    g.obj_names_ = std::move(objects);
    const std::size_t m = morphisms.size();
    g.src_.resize(m);
    g.tgt_.resize(m);
    g.mor_names_.resize(m);
    for (MorId f = 0; f < m; ++f) {
      g.src_[f] = morphisms[f].src;
      g.tgt_[f] = morphisms[f].tgt;
      g.mor_names_[f] = std::move(morphisms[f].name);
    }
    g.identity_ = std::move(identity);
    g.inverse_ = std::move(inverse);
    g.index();
    g.comp_offset_.resize(m + 1);
    std::uint64_t total = 0;
    for (MorId f = 0; f < m; ++f) {
      g.comp_offset_[f] = total;
      total += g.out(g.tgt_[f]).size();
    }
    g.comp_offset_[m] = total;
    g.comp_.resize(total);
    for (MorId f = 0; f < m; ++f) {
      for (MorId h : g.out(g.tgt_[f])) {
        g.comp_[g.comp_offset_[f] + g.pos_in_out_[h]] = compose(h, f);
      }
    }
    return g;
  }

  // Validates and converts a raw presentation; throws kMalformedGroupoid.
  static Groupoid from_data(const GroupoidData& data) {
    Diagnostics diags = validate_groupoid(data);
    if (!diags.empty()) throw Error(ErrorKind::kMalformedGroupoid, describe(diags));
    std::vector<MorphismSpec> mors = data.morphisms;
    return from_rule(data.objects, std::move(mors), data.identity, data.inverse,
                     [&](MorId g, MorId f) { return data.compose.at({g, f}); });
  }

  std::size_t num_objects() const noexcept { return obj_names_.size(); }
  std::size_t num_morphisms() const noexcept { return src_.size(); }
  bool empty() const noexcept { return obj_names_.empty(); }

  ObjId src(MorId f) const { return src_[f]; }
  ObjId tgt(MorId f) const { return tgt_[f]; }
  MorId identity(ObjId x) const { return identity_[x]; }
  MorId inverse(MorId f) const { return inverse_[f]; }
  bool is_identity(MorId f) const { return identity_[src_[f]] == f; }
  // Position of f within out(src(f)).
  std::uint32_t out_position(MorId f) const { return pos_in_out_[f]; }

  // g o f; requires src(g) == tgt(f).
  MorId compose(MorId g, MorId f) const {
    return comp_[comp_offset_[f] + pos_in_out_[g]];
  }

  // Morphisms with source x, ordered by (target, ID).
  std::span<const MorId> out(ObjId x) const {
    return {out_list_.data() + out_begin_[x], out_list_.data() + out_begin_[x + 1]};
  }

  std::span<const MorId> hom(ObjId x, ObjId y) const {
    auto all = out(x);
    auto lo = std::lower_bound(all.begin(), all.end(), y,
                               [this](MorId f, ObjId t) { return tgt_[f] < t; });
    auto hi = std::upper_bound(lo, all.end(), y,
                               [this](ObjId t, MorId f) { return t < tgt_[f]; });
    return {lo, hi};
  }

  const std::string& object_name(ObjId x) const { return obj_names_[x]; }
  const std::string& morphism_name(MorId f) const { return mor_names_[f]; }
  const std::vector<std::string>& object_names() const { return obj_names_; }

  std::optional<ObjId> find_object(std::string_view name) const {
    auto it = obj_by_name_.find(std::string(name));
    if (it == obj_by_name_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<MorId> find_morphism(std::string_view name) const {
    auto it = mor_by_name_.find(std::string(name));
    if (it == mor_by_name_.end()) return std::nullopt;
    return it->second;
  }

  GroupoidData to_data() const {
    GroupoidData d;
    d.objects = obj_names_;
    for (MorId f = 0; f < num_morphisms(); ++f) {
      d.morphisms.push_back({mor_names_[f], src_[f], tgt_[f]});
    }
    d.identity = identity_;
    d.inverse = inverse_;
    for (MorId f = 0; f < num_morphisms(); ++f) {
      for (MorId g : out(tgt_[f])) d.compose[{g, f}] = compose(g, f);
    }
    return d;
  }

 private:
  void index() {
    const std::size_t n = obj_names_.size();
    const std::size_t m = src_.size();
    out_begin_.assign(n + 1, 0);
    for (MorId f = 0; f < m; ++f) ++out_begin_[src_[f] + 1];
    for (std::size_t x = 0; x < n; ++x) out_begin_[x + 1] += out_begin_[x];
    out_list_.resize(m);
    std::vector<std::uint32_t> fill(out_begin_.begin(), out_begin_.end() - 1);
    for (MorId f = 0; f < m; ++f) out_list_[fill[src_[f]]++] = f;
    pos_in_out_.resize(m);
    for (ObjId x = 0; x < n; ++x) {
      auto b = out_list_.begin() + out_begin_[x];
      auto e = out_list_.begin() + out_begin_[x + 1];
      std::stable_sort(b, e, [this](MorId a, MorId c) { return tgt_[a] < tgt_[c]; });
      for (auto it = b; it != e; ++it) {
        pos_in_out_[*it] = static_cast<std::uint32_t>(it - b);
      }
    }
    for (ObjId x = 0; x < n; ++x) obj_by_name_.emplace(obj_names_[x], x);
    for (MorId f = 0; f < m; ++f) mor_by_name_.emplace(mor_names_[f], f);
  }

  std::vector<std::string> obj_names_;
  std::vector<std::string> mor_names_;
  std::vector<ObjId> src_;
  std::vector<ObjId> tgt_;
  std::vector<MorId> identity_;
  std::vector<MorId> inverse_;
  std::vector<std::uint32_t> out_begin_;
  std::vector<MorId> out_list_;
  std::vector<std::uint32_t> pos_in_out_;
  std::vector<std::uint64_t> comp_offset_{0};
  std::vector<MorId> comp_;
  std::unordered_map<std::string, ObjId> obj_by_name_;
  std::unordered_map<std::string, MorId> mor_by_name_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

inline GroupoidPtr share(Groupoid g) {
  return std::make_shared<const Groupoid>(std::move(g));
}

// Component index of every object; components are numbered in order of
// their least object.
inline std::vector<std::uint32_t> connected_components(const Groupoid& g) {
  std::vector<std::uint32_t> comp(g.num_objects(), kNone);
  std::uint32_t next = 0;
  std::vector<ObjId> stack;
  for (ObjId r = 0; r < g.num_objects(); ++r) {
    if (comp[r] != kNone) continue;
    comp[r] = next;
    stack.push_back(r);
    while (!stack.empty()) {
      ObjId x = stack.back();
      stack.pop_back();
      for (MorId f : g.out(x)) {
        if (comp[g.tgt(f)] == kNone) {
          comp[g.tgt(f)] = next;
          stack.push_back(g.tgt(f));
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool isomorphic_objects(const Groupoid& g, ObjId x, ObjId y) {
  return !g.hom(x, y).empty();
}

}  // namespace invgpd

#endif  // INVGPD_GROUPOID_HPP_
