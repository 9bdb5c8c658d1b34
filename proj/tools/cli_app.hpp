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

// Command-line front end. run_cli takes the arguments after the program
// name and returns the exit code:
//   0  every check passed
//   1  a check failed (the report carries a witness)
//   2  malformed input
//   3  budget or gluing cap exceeded

#ifndef INVGPD_TOOLS_CLI_APP_HPP_
#define INVGPD_TOOLS_CLI_APP_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invgpd/cells.hpp"
#include "invgpd/document.hpp"
#include "invgpd/homotopy.hpp"
#include "invgpd/lifting.hpp"
#include "invgpd/pi.hpp"
#include "invgpd/report.hpp"
#include "invgpd/sampling.hpp"
#include "invgpd/universe.hpp"

namespace invgpd::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitBudget = 3;

struct Options {
  std::uint64_t budget = Budget::kDefaultLimit;
  int max_gluing_steps = 8;
  std::string format = "human";
  std::uint64_t seed = 1;
  std::string doc_path;
};

// Collects reports and charges each one with the budget spent since the
// previous report.
class Session {
 public:
  explicit Session(const Options& o) : opts_(o), budget_(o.budget) {
    if (!o.doc_path.empty()) doc_ = load_document(o.doc_path);
  }

  Budget& budget() { return budget_; }
  const Options& options() const { return opts_; }
  const Document& doc() const { return doc_; }

  Report& add(std::string check, Verdict v) {
    Report r;
    r.check = std::move(check);
    r.verdict = v;
    r.budget_used = budget_.used() - mark_;
    mark_ = budget_.used();
    reports_.push_back(std::move(r));
    return reports_.back();
  }

  const std::vector<Report>& reports() const { return reports_; }

  EquivariantFunctor functor(const std::string& name) const {
    auto f = doc_.functor(name);
    if (!f) throw Error(ErrorKind::kParseError, "unknown functor '" + name + "'");
    return *f;
  }

  LiftingProblem square(const std::string& name) const {
    auto s = doc_.square(name);
    if (!s) throw Error(ErrorKind::kParseError, "unknown square '" + name + "'");
    return *s;
  }

 private:
  Options opts_;
  Budget budget_;
  Document doc_;
  std::vector<Report> reports_;
  std::uint64_t mark_ = 0;
};

inline Structure require_structure(const std::string& s) {
  auto r = parse_structure(s);
  if (!r) throw Error(ErrorKind::kParseError, "unknown structure '" + s + "'");
  return *r;
}

inline nlohmann::ordered_json names_of(const Groupoid& g, const std::vector<ObjId>& objs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (ObjId o : objs) j.push_back(g.object_name(o));
  return j;
}

inline nlohmann::ordered_json shape_of(const InvPtr& x) {
  nlohmann::ordered_json j;
  j["objects"] = x->g().num_objects();
  j["morphisms"] = x->g().num_morphisms();
  j["fixed_objects"] = fixed_points(x).objects.size();
  return j;
}

// ---------------------------------------------------------------- commands

inline void cmd_validate(Session& s, const std::string& path) {
  Document doc = load_document(path);
  Document back = parse_document(document_to_json(doc));
  for (const auto& [name, g] : doc.groupoids) {
    auto h = back.groupoid(name);
    bool ok = h && find_equivariant_isomorphism(g, *h, s.budget()).has_value();
    Report& r = s.add("groupoid " + name, verdict_of(ok));
    r.details = shape_of(g);
    r.details["round_trip"] = ok;
  }
  for (const auto& [name, f] : doc.functors) {
    auto h = back.functor(name);
    bool ok = h && h->map.obj == f.map.obj && h->map.mor.size() == f.map.mor.size();
    Report& r = s.add("functor " + name, verdict_of(ok));
    r.details["dom_objects"] = f.dom->g().num_objects();
    r.details["cod_objects"] = f.cod->g().num_objects();
    r.details["round_trip"] = ok;
  }
  for (const auto& [name, sq] : doc.squares) {
    bool ok = back.square(name).has_value();
    Report& r = s.add("square " + name, verdict_of(ok));
    r.details["commutes"] = true;
    r.details["round_trip"] = ok;
  }
}

inline void cmd_classify(Session& s, const std::string& name, Structure st) {
  EquivariantFunctor f = for_structure(s.functor(name), st);
  nlohmann::ordered_json d;
  if (st == Structure::kPlain) {
    FunctorReport u = classify_functor(f.map);
    d["injective_on_objects"] = u.injective_on_objects;
    d["full"] = u.full;
    d["faithful"] = u.faithful;
    d["essentially_surjective"] = u.essentially_surjective;
    d["equivalence"] = u.equivalence;
    d["isofibration"] = u.isofibration;
    d["discrete_fibration"] = u.discrete_fibration;
    d["trivial_cofibration"] = u.injective_on_objects && u.equivalence;
  } else if (st == Structure::kProjective) {
    ProjectiveReport p = projective_classify(f, s.budget());
    d["weak_equivalence"] = p.weak_equivalence;
    d["fibration"] = p.fibration;
    d["levelwise_trivial_cofibration"] = p.levelwise_trivial_cofibration;
    d["bijection_on_fixed_objects"] = p.clauses.bijection_on_fixed_objects;
    d["iso_on_strict_fixed"] = p.clauses.iso_on_strict_fixed;
    d["iso_on_full_fixed"] = p.clauses.iso_on_full_fixed;
    d["trivial_cofibration"] = p.trivial_cofibration;
    d["cofibration_evidence"] = p.cofibration_evidence;
    d["cofibration_tests"] = p.cofibration_tests;
    d["homotopy_equivalence"] = is_homotopy_equivalence_projective(f);
  } else {
    InjectiveReport p = injective_classify(f, s.budget());
    d["cofibration"] = p.cofibration;
    d["weak_equivalence"] = p.weak_equivalence;
    d["fibration"] = p.fibration;
    d["trivial_cofibration"] = p.trivial_cofibration;
    d["squares_checked"] = p.fibration_detail.squares;
  }
  Report& r = s.add("classify " + name + " (" + to_string(st) + ")", Verdict::kPass);
  r.details = d;
}

inline void cmd_lift(Session& s, const std::string& name) {
  LiftingProblem sq = s.square(name);
  std::uint64_t n = count_fillers(sq, s.budget());
  Report& r = s.add("lift " + name, verdict_of(n > 0));
  r.details["fillers"] = n;
  if (n == 0) {
    r.details["result"] = "no filler";
    r.witness = square_witness(sq);
  } else {
    Budget b(s.options().budget);
    r.details["least_filler"] = functor_witness(*solve_lifting(sq, b));
  }
}

inline void cmd_pi(Session& s, const std::string& gname, const std::string& fname) {
  PiBundle pi = pi_of(s.functor(gname), s.functor(fname), s.budget());
  FixedPoints fp = fixed_points(pi.object());
  Report& r = s.add("pi along " + gname + " of " + fname, Verdict::kPass);
  r.details = shape_of(pi.object());
  r.details["fixed_sections"] = names_of(pi.object()->g(), fp.objects);
  r.details["projection_is_isofibration"] = classify_functor(pi.projection().map).isofibration;
}

inline void cmd_path(Session& s, const std::string& fname, Structure st) {
  EquivariantFunctor f = for_structure(s.functor(fname), st);
  PathFactorization p = path_object_for(f, st);
  EquivariantFunctor id = identity_equivariant(f.dom);
  EquivariantFunctor diag = pair_into(p.pairs, id, id);
  bool factors = compose(p.delta2, p.delta1).map.obj == diag.map.obj &&
                 compose(p.delta2, p.delta1).map.mor == diag.map.mor;
  bool cof = is_trivial_cofibration(p.delta1, st);
  bool fib = classify_functor(p.delta2.map).isofibration;
  Report& r = s.add("path object of " + fname + " (" + to_string(st) + ")", verdict_of(factors && cof && fib));
  r.details = shape_of(p.path);
  r.details["factors_diagonal"] = factors;
  r.details["delta1_trivial_cofibration"] = cof;
  r.details["delta2_isofibration"] = fib;
}

inline void add_univalence(Session& s, const UniverseBundle& u, Structure st) {
  UnivalenceReport rep = check_univalence(u, st, s.budget());
  std::string name = std::string(to_string(st)) + " univalence at |V| = " + std::to_string(u.base_size());
  Report& r = s.add(name, verdict_of(rep.holds));
  for (const CheckLine& c : rep.checks) {
    nlohmann::ordered_json line;
    line["ok"] = c.ok;
    if (!c.detail.empty()) line["detail"] = c.detail;
    r.details[c.name] = line;
  }
  if (rep.witness) r.witness = rep.witness_name;
}

inline void add_closure(Session& s, const UniverseBundle& u) {
  for (const ClosureRow& row : universe_closure_checks(u, s.budget())) {
    Verdict v = row.status == ClosureStatus::kPass   ? Verdict::kPass
                : row.status == ClosureStatus::kFail ? Verdict::kFail
                                                     : Verdict::kOverflow;
    Report& r = s.add("closure: " + row.check, v);
    if (v == Verdict::kOverflow) {
      r.witness = row.detail;
    } else {
      r.details["detail"] = row.detail;
    }
  }
}

inline void cmd_universe(Session& s, int n, const std::string& univalence, bool closure) {
  UniverseBundle u = build_universe(n, s.budget());
  Report& r = s.add("universe at |V| = " + std::to_string(n), Verdict::kPass);
  r.details["U"] = shape_of(u.U());
  r.details["Utilde"] = shape_of(u.Utilde());
  if (!univalence.empty()) add_univalence(s, u, require_structure(univalence));
  if (closure) add_closure(s, u);
}

inline nlohmann::ordered_json cells_json(const CellSequence& seq) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  Recomposition rec = recompose(seq);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const Groupoid& stage = rec.stages[k]->g();
    nlohmann::ordered_json c;
    c["cell"] = to_string(seq.steps[k].kind);
    c["attached_at"] = names_of(stage, seq.steps[k].obj);
    j.push_back(c);
  }
  return j;
}

inline void cmd_decompose(Session& s, const std::string& fname, Structure st) {
  EquivariantFunctor f = for_structure(s.functor(fname), st);
  std::string check = "decompose " + fname + " (" + to_string(st) + ")";
  if (!is_trivial_cofibration(f, st)) {
    Report& r = s.add(check, Verdict::kFail);
    r.witness = std::string("not a trivial cofibration in the ") + to_string(st) + " structure";
    return;
  }
  CellSequence seq = decompose_trivial_cofibration(f, st, s.budget());
  bool iso = find_isomorphism_under(recompose(seq).inclusion, f, s.budget()).has_value();
  Report& r = s.add(check, verdict_of(iso));
  r.steps = static_cast<int>(seq.steps.size());
  r.details["cells"] = cells_json(seq);
  r.details["recomposes_to_input"] = iso;
}

inline void cmd_factorize(Session& s, const std::string& fname, Structure st) {
  EquivariantFunctor f = for_structure(s.functor(fname), st);
  Factorization fz = factorize(f, st, s.budget(), s.options().max_gluing_steps);
  EquivariantFunctor qj = compose(fz.q, fz.j);
  bool exact = qj.map.obj == f.map.obj && qj.map.mor == f.map.mor;
  bool cof = is_trivial_cofibration(fz.j, st);
  Report& r = s.add("factorize " + fname + " (" + to_string(st) + ")", verdict_of(exact && cof));
  r.steps = fz.steps;
  r.details["cells"] = fz.cells.steps.size();
  r.details["middle"] = shape_of(fz.j.cod);
  r.details["composite_equals_input"] = exact;
  r.details["left_trivial_cofibration"] = cof;
  r.details["right_has_rlp"] = true;
}

inline void cmd_funext(Session& s) {
  FunextReport f = check_funext_counterexample(s.budget());
  bool ok = f.fails && f.product_objects == 4 && f.product_fixed == 2 && f.point_fixed == 1;
  Report& r = s.add("function extensionality fails projectively", verdict_of(ok));
  r.details["map_is_homotopy_equivalence"] = f.map_is_homotopy_equivalence;
  r.details["product_objects"] = f.product_objects;
  r.details["product_fixed_points"] = f.product_fixed;
  r.details["base_fixed_points"] = f.point_fixed;
  r.details["induced_map_is_homotopy_equivalence"] = f.product_is_homotopy_equivalence;
  r.witness = nlohmann::ordered_json(f.fixed_sections);
}

// Classification round trips over seeded small fibrations.
inline void add_classification_samples(Session& s, const UniverseBundle& u, int count) {
  sampling::Rng rng(s.options().seed);
  int done = 0, ok = 0, tries = 0;
  while (done < count && tries < 20 * count) {
    ++tries;
    InvPtr base = sampling::random_involutive(rng, 1 + static_cast<int>(sampling::uniform(rng, 3)), {1, 2},
                                              s.budget());
    auto f = sampling::random_small_fibration(rng, base, u, s.budget());
    if (!f) continue;
    ++done;
    Classification c = classify_small_fibration(*f, u);
    ok += find_isomorphism_over(*f, c.pulled.pr1, s.budget()).has_value();
  }
  Report& r = s.add("classification round trips at |V| = " + std::to_string(u.base_size()),
                    verdict_of(done == count && ok == done));
  r.details["samples"] = done;
  r.details["isomorphic_over_base"] = ok;
  r.details["seed"] = s.options().seed;
}

inline void cmd_reproduce(Session& s, int n) {
  if (n < 1 || n > kMaxEquivalenceSpaceBase) {
    throw Error(ErrorKind::kBudgetExceeded, "reproduction runs for |V| in 1.." + std::to_string(kMaxEquivalenceSpaceBase));
  }
  cmd_funext(s);
  {
    UniverseBundle u2 = build_universe(2, s.budget());
    UnivalenceReport rep = check_univalence(u2, Structure::kProjective, s.budget());
    Report& r = s.add("projective univalence fails at |V| = 2", verdict_of(!rep.holds && rep.witness));
    for (const CheckLine& c : rep.checks) r.details[c.name] = c.ok;
    if (rep.witness) r.witness = rep.witness_name;
  }
  for (int k = 1; k <= n; ++k) {
    UniverseBundle u = build_universe(k, s.budget());
    add_univalence(s, u, Structure::kInjective);
    const auto gens = generating_trivial_cofibrations(Structure::kInjective);
    RlpReport p = has_rlp(u.p(), gens, s.budget());
    RlpReport uu = has_rlp(terminal_equivariant(u.U()), gens, s.budget());
    RlpReport ut = has_rlp(terminal_equivariant(u.Utilde()), gens, s.budget());
    Report& r = s.add("universal map is an injective fibration between fibrant objects at |V| = " + std::to_string(k),
                      verdict_of(p.holds && uu.holds && ut.holds));
    r.details["p"] = p.holds;
    r.details["U fibrant"] = uu.holds;
    r.details["Utilde fibrant"] = ut.holds;
    r.details["squares_checked"] = p.squares + uu.squares + ut.squares;
  }
  {
    LiftingProblem sq{generators::iprime(), terminal_equivariant(shapes::interval_check()),
                      identity_equivariant(shapes::interval_check()), terminal_equivariant(shapes::nabla())};
    std::uint64_t fillers = count_fillers(sq, s.budget());
    RlpReport si = has_rlp(terminal_equivariant(shapes::interval_check()), {generators::si()}, s.budget());
    Report& r = s.add("Icheck -> 1! has RLP against S(i) but the iprime square has no filler",
                      verdict_of(fillers == 0 && si.holds));
    r.details["iprime_square_fillers"] = fillers;
    r.details["rlp_against_Si"] = si.holds;
  }
  {
    ProjectiveReport p = projective_classify(generators::iprime(), s.budget());
    Report& r = s.add("iprime is not a projective trivial cofibration", verdict_of(!p.trivial_cofibration));
    r.details["levelwise_trivial_cofibration"] = p.levelwise_trivial_cofibration;
    r.details["bijection_on_fixed_objects"] = p.clauses.bijection_on_fixed_objects;
  }
  UniverseBundle u3 = build_universe(kMaxUniverseBase, s.budget());
  add_classification_samples(s, u3, 10);
  {
    UniverseBundle u = build_universe(n, s.budget());
    int pass = 0, overflow = 0, fail = 0;
    for (const ClosureRow& row : universe_closure_checks(u, s.budget())) {
      pass += row.status == ClosureStatus::kPass;
      overflow += row.status == ClosureStatus::kOverflow;
      fail += row.status == ClosureStatus::kFail;
    }
    Report& r = s.add("universe closure at |V| = " + std::to_string(n), verdict_of(fail == 0));
    r.details["pass"] = pass;
    r.details["overflow"] = overflow;
    r.details["fail"] = fail;
  }
}

// ---------------------------------------------------------------- driver

inline int exit_code_for(const std::vector<Report>& reports) {
  for (const Report& r : reports) {
    if (r.verdict == Verdict::kFail) return kExitFail;
  }
  return kExitPass;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groupoids with involution: lifting, homotopy, products and universes"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "enumeration budget (candidate assignments)");
  app.add_option("--max-gluing-steps", o.max_gluing_steps, "cap on gluing rounds for factorize");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--doc", o.doc_path, "document declaring groupoids, functors and squares");

  std::string file, name, gname, fname, structure = "injective", univalence;
  int base = 2;
  bool closure = false;
  std::function<void(Session&)> action;
  const auto structures = CLI::IsMember({"projective", "injective", "gpd"});

  auto* validate = app.add_subcommand("validate", "load a document and check it round-trips");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&](Session& s) { cmd_validate(s, file); }; });

  auto* classify = app.add_subcommand("classify", "classify a functor in a structure");
  classify->add_option("functor", name)->required();
  classify->add_option("--structure", structure)->required()->check(structures);
  classify->callback([&] { action = [&](Session& s) { cmd_classify(s, name, require_structure(structure)); }; });

  auto* lift = app.add_subcommand("lift", "solve a lifting square");
  lift->add_option("square", name)->required();
  lift->callback([&] { action = [&](Session& s) { cmd_lift(s, name); }; });

  auto* pi = app.add_subcommand("pi", "dependent product of f along the fibration g");
  pi->add_option("--g", gname)->required();
  pi->add_option("--f", fname)->required();
  pi->callback([&] { action = [&](Session& s) { cmd_pi(s, gname, fname); }; });

  auto* path = app.add_subcommand("path", "path object factorization of f");
  path->add_option("--f", fname)->required();
  path->add_option("--structure", structure)->check(structures);
  path->callback([&] { action = [&](Session& s) { cmd_path(s, fname, require_structure(structure)); }; });

  auto* universe = app.add_subcommand("universe", "build the universe of small discrete fibrations");
  universe->add_option("--base", base, "size of the base set V")->required();
  universe->add_option("--check-univalence", univalence)->check(CLI::IsMember({"projective", "injective"}));
  universe->add_flag("--closure", closure);
  universe->callback([&] { action = [&](Session& s) { cmd_universe(s, base, univalence, closure); }; });

  auto* decompose = app.add_subcommand("decompose", "write a trivial cofibration as cell attachments");
  decompose->add_option("functor", name)->required();
  decompose->add_option("--structure", structure)->required()->check(structures);
  decompose->callback([&] { action = [&](Session& s) { cmd_decompose(s, name, require_structure(structure)); }; });

  auto* factorize_cmd = app.add_subcommand("factorize", "factor a map as trivial cofibration then fibration");
  factorize_cmd->add_option("functor", name)->required();
  factorize_cmd->add_option("--structure", structure)->required()->check(structures);
  factorize_cmd->callback([&] { action = [&](Session& s) { cmd_factorize(s, name, require_structure(structure)); }; });

  auto* funext = app.add_subcommand("funext-check", "products along S(1) -> 1! break function extensionality");
  funext->callback([&] { action = [&](Session& s) { cmd_funext(s); }; });

  auto* reproduce = app.add_subcommand("reproduce-paper", "run every reference counterexample and theorem check");
  reproduce->add_option("--base", base, "largest |V| for the injective checks (1 or 2)");
  reproduce->callback([&] { action = [&](Session& s) { cmd_reproduce(s, base); }; });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  auto emit = [&](const Report& r) {
    if (o.format == "json") {
      write_json(out, r);
    } else {
      write_human(out, r);
    }
  };
  std::optional<Session> session;
  try {
    session.emplace(o);
    action(*session);
  } catch (const Error& e) {
    if (session) {
      for (const Report& r : session->reports()) emit(r);
    }
    bool budget = e.kind() == ErrorKind::kBudgetExceeded || e.kind() == ErrorKind::kIterationCapExceeded;
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["error"] = to_string(e.kind());
      j["message"] = e.what();
      out << j.dump() << "\n";
    }
    err << "error: " << e.what() << "\n";
    return budget ? kExitBudget : kExitMalformed;
  }
  for (const Report& r : session->reports()) emit(r);
  return exit_code_for(session->reports());
}

}  // namespace invgpd::cli

#endif  // INVGPD_TOOLS_CLI_APP_HPP_
