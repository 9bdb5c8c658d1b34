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

// Check reports with a human-readable and a JSON rendering. The JSON form is
// {check, verdict, witness?, steps?, budget_used, details?}, one object per
// line.

#ifndef INVGPD_REPORT_HPP_
#define INVGPD_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "invgpd/lifting.hpp"

namespace invgpd {

enum class Verdict { kPass, kFail, kOverflow };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kOverflow: return "OVERFLOW";
  }
  return "?";
}

struct Report {
  std::string check;
  Verdict verdict = Verdict::kPass;
  std::optional<nlohmann::ordered_json> witness;
  std::optional<int> steps;
  std::uint64_t budget_used = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

inline Verdict verdict_of(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  if (r.steps) j["steps"] = *r.steps;
  j["budget_used"] = r.budget_used;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

namespace detail {

inline std::string scalar_text(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void write_fields(std::ostream& out, const nlohmann::ordered_json& j, const std::string& indent) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      write_fields(out, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.size() > 8)) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          write_fields(out, e, indent + "    ");
        } else {
          out << indent << "  - " << scalar_text(e) << "\n";
        }
      }
    } else {
      out << indent << k << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace detail

inline void write_human(std::ostream& out, const Report& r) {
  out << to_string(r.verdict) << "  " << r.check << "\n";
  if (r.steps) out << "    steps: " << *r.steps << "\n";
  detail::write_fields(out, r.details, "    ");
  if (r.witness) {
    out << "    witness:";
    if (r.witness->is_object()) {
      out << "\n";
      detail::write_fields(out, *r.witness, "      ");
    } else {
      out << " " << detail::scalar_text(*r.witness) << "\n";
    }
  }
  out << "    budget used: " << r.budget_used << "\n";
}

inline void write_json(std::ostream& out, const Report& r) { out << to_json(r).dump() << "\n"; }

// Names of the cells of an equivariant functor, for witnesses.
inline nlohmann::ordered_json functor_witness(const EquivariantFunctor& f) {
  const Groupoid& a = f.dom->g();
  const Groupoid& b = f.cod->g();
  nlohmann::ordered_json j;
  j["objects"] = nlohmann::ordered_json::object();
  for (ObjId x = 0; x < a.num_objects(); ++x) j["objects"][a.object_name(x)] = b.object_name(f.on_obj(x));
  j["morphisms"] = nlohmann::ordered_json::object();
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    if (!a.is_identity(m)) j["morphisms"][a.morphism_name(m)] = b.morphism_name(f.on_mor(m));
  }
  return j;
}

inline nlohmann::ordered_json square_witness(const LiftingProblem& p) {
  nlohmann::ordered_json j;
  j["top"] = functor_witness(p.top);
  j["bottom"] = functor_witness(p.bottom);
  return j;
}

}  // namespace invgpd

#endif  // INVGPD_REPORT_HPP_
