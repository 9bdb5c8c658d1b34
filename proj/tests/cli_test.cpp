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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_app.hpp"

namespace invgpd {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(INVGPD_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::vector<nlohmann::json> json_lines(const std::string& out) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  }
  return lines;
}

TEST(Cli, EveryBundledDocumentValidates) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(INVGPD_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    CliRun r = run({"validate", entry.path().string()});
    EXPECT_EQ(r.code, 0) << entry.path() << "\n" << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << entry.path();
  }
  EXPECT_GE(files, 7);
}

TEST(Cli, BundledShapesMatchTheRegistry) {
  const std::vector<std::pair<std::string, std::string>> files{
      {"empty.json", "0!"}, {"point.json", "1!"}, {"interval.json", "I"}, {"interval_check.json", "Icheck"},
      {"nabla.json", "nabla"}, {"s1.json", "S1"}, {"si.json", "SI"}};
  Budget b;
  for (const auto& [file, name] : files) {
    Document doc = load_document(data(file));
    ASSERT_EQ(doc.groupoids.size(), 1u) << file;
    EXPECT_EQ(doc.groupoids[0].first, name);
    EXPECT_TRUE(find_equivariant_isomorphism(doc.groupoids[0].second, *shapes::by_name(name), b).has_value()) << file;
  }
}

TEST(Cli, BundledGeneratorsMatchTheRegistry) {
  // Shapes are declared with the registry names, so images agree name by name.
  Document doc = load_document(data("generators.json"));
  for (const std::string& name : generators::names()) {
    auto declared = doc.functor(name);
    ASSERT_TRUE(declared.has_value()) << name;
    EquivariantFunctor reg = *generators::by_name(name);
    const Groupoid& a = declared->dom->g();
    const Groupoid& ra = reg.dom->g();
    ASSERT_EQ(a.num_objects(), ra.num_objects()) << name;
    ASSERT_EQ(a.num_morphisms(), ra.num_morphisms()) << name;
    ASSERT_EQ(declared->cod->g().num_morphisms(), reg.cod->g().num_morphisms()) << name;
    for (ObjId x = 0; x < a.num_objects(); ++x) {
      ObjId rx = *ra.find_object(a.object_name(x));
      EXPECT_EQ(declared->cod->g().object_name(declared->on_obj(x)), reg.cod->g().object_name(reg.on_obj(rx))) << name;
    }
    for (MorId m = 0; m < a.num_morphisms(); ++m) {
      if (a.is_identity(m)) continue;
      MorId rm = *ra.find_morphism(a.morphism_name(m));
      EXPECT_EQ(declared->cod->g().morphism_name(declared->on_mor(m)), reg.cod->g().morphism_name(reg.on_mor(rm)))
          << name;
    }
  }
}

TEST(Cli, IprimeSquareHasNoFiller) {
  CliRun r = run({"lift", "iprime_square", "--doc", data("iprime_square.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL  lift iprime_square"), std::string::npos);
  EXPECT_NE(r.out.find("no filler"), std::string::npos);
  EXPECT_NE(r.out.find("witness:"), std::string::npos);
}

TEST(Cli, SquareWithFillerPasses) {
  CliRun r = run({"lift", "i_square", "--doc", data("interval_lift.json"), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["verdict"], "PASS");
  EXPECT_EQ(lines[0]["details"]["fillers"], 1);
}

TEST(Cli, ClassifyIprimeProjectively) {
  CliRun r = run({"classify", "iprime", "--structure", "projective", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["details"]["trivial_cofibration"], false);
  EXPECT_EQ(lines[0]["details"]["levelwise_trivial_cofibration"], true);
  EXPECT_TRUE(lines[0].contains("budget_used"));
}

TEST(Cli, ClassifyIprimeInjectively) {
  CliRun r = run({"classify", "iprime", "--structure", "injective", "--format", "json"});
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["details"]["trivial_cofibration"], true);
}

TEST(Cli, PiOfTheFunextExample) {
  CliRun r = run({"pi", "--g", "g", "--f", "f", "--doc", data("funext.json"), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["details"]["objects"], 4);
  EXPECT_EQ(lines[0]["details"]["fixed_objects"], 2);
}

TEST(Cli, PiAlongANonFibrationIsMalformed) {
  CliRun r = run({"pi", "--g", "i", "--f", "i"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, PathObject) {
  for (const char* s : {"gpd", "projective", "injective"}) {
    CliRun r = run({"path", "--f", "iprime", "--structure", s});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out << r.err;
  }
}

TEST(Cli, FunextCheck) {
  CliRun r = run({"funext-check", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["details"]["product_objects"], 4);
  EXPECT_EQ(lines[0]["details"]["product_fixed_points"], 2);
  EXPECT_EQ(lines[0]["witness"].size(), 2u);
}

TEST(Cli, ProjectiveUnivalenceFailsWithWitness) {
  CliRun r = run({"universe", "--base", "2", "--check-univalence", "projective", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1]["verdict"], "FAIL");
  EXPECT_NE(lines[1]["witness"].get<std::string>().find("[b,a]"), std::string::npos);
}

TEST(Cli, InjectiveUnivalenceHolds) {
  CliRun r = run({"universe", "--base", "2", "--check-univalence", "injective"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, ClosureRowsNeverFail) {
  CliRun r = run({"universe", "--base", "1", "--closure", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  int overflow = 0;
  for (const auto& line : json_lines(r.out)) {
    EXPECT_NE(line["verdict"], "FAIL") << line.dump();
    overflow += line["verdict"] == "OVERFLOW";
  }
  EXPECT_GT(overflow, 0);
}

TEST(Cli, LargeBaseExceedsBudget) {
  EXPECT_EQ(run({"universe", "--base", "4"}).code, 3);
  EXPECT_EQ(run({"universe", "--base", "3", "--check-univalence", "injective"}).code, 3);
}

TEST(Cli, SmallBudgetIsReported) {
  CliRun r = run({"universe", "--base", "2", "--check-univalence", "injective", "--budget", "50"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
}

TEST(Cli, Decompose) {
  CliRun ok = run({"decompose", "iprime", "--structure", "injective", "--format", "json"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  auto lines = json_lines(ok.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["steps"], 1);
  EXPECT_EQ(run({"decompose", "iprime", "--structure", "projective"}).code, 1);
}

TEST(Cli, FactorizeAndGluingCap) {
  CliRun r = run({"factorize", "u", "--structure", "injective", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].contains("steps"));
  EXPECT_EQ(lines[0]["details"]["composite_equals_input"], true);
  EXPECT_EQ(run({"factorize", "i", "--structure", "gpd", "--max-gluing-steps", "0"}).code, 3);
}

TEST(Cli, ReproduceAllPass) {
  CliRun r = run({"reproduce-paper", "--base", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  function extensionality fails projectively"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  projective univalence fails at |V| = 2"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  injective univalence at |V| = 2"), std::string::npos);
}

TEST(Cli, JsonOutputIsStable) {
  std::vector<std::string> args{"reproduce-paper", "--base", "1", "--format", "json", "--seed", "7"};
  CliRun a = run(args);
  CliRun b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  for (const auto& line : json_lines(a.out)) {
    EXPECT_TRUE(line.contains("check"));
    EXPECT_TRUE(line.contains("verdict"));
    EXPECT_TRUE(line.contains("budget_used"));
  }
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run({"validate", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"validate", write_temp("bad_syntax.json", "{ not json")}).code, 2);
  EXPECT_EQ(run({"validate", write_temp("bad_ref.json", R"({"groupoids": {"G": {"objects": ["0"],
      "morphisms": {"f": ["0", "1"]}}}})")}).code, 2);
  EXPECT_EQ(run({"classify", "nope", "--structure", "gpd"}).code, 2);
  EXPECT_EQ(run({"classify", "i", "--structure", "nope"}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, HelpExitsCleanly) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reproduce-paper"), std::string::npos);
}

// Loader completion.

TEST(Document, SparseCyclicGroupIsCompleted) {
  Document doc = load_document(data("cyclic3.json"));
  InvPtr z = *doc.groupoid("Z3");
  const Groupoid& g = z->g();
  ASSERT_EQ(g.num_morphisms(), 3u);
  MorId r = *g.find_morphism("r"), r2 = *g.find_morphism("r2"), e = *g.find_morphism("e");
  EXPECT_EQ(g.compose(r2, r), e);
  EXPECT_EQ(g.compose(r2, r2), r);
  EXPECT_EQ(g.inverse(r2), r);
  auto inv = doc.functor("inversion");
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(inv->on_mor(r2), r);
}

TEST(Document, UndeterminedCompositeIsRejected) {
  // Z/4 and Z/2 x Z/2 share this presentation without a table.
  const char* text = R"({"groupoids": {"G": {"objects": ["*"],
      "morphisms": {"a": ["*", "*"], "b": ["*", "*"], "c": ["*", "*"]},
      "inverses": {"a": "a", "b": "b", "c": "c"}}}})";
  try {
    parse_document_text(text);
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParseError);
    EXPECT_NE(std::string(e.what()).find("compose"), std::string::npos);
  }
}

TEST(Document, UndeterminedInverseIsRejected) {
  const char* text = R"({"groupoids": {"G": {"objects": ["*"],
      "morphisms": {"a": ["*", "*"], "b": ["*", "*"]}}}})";
  EXPECT_THROW(parse_document_text(text), Error);
}

TEST(Document, InconsistentTableIsRejected) {
  const char* text = R"({"groupoids": {"G": {"objects": ["*"],
      "morphisms": {"a": ["*", "*"]}, "inverses": {"a": "a"},
      "compose": [["a", "a", "a"]]}}})";
  EXPECT_THROW(parse_document_text(text), Error);
}

TEST(Document, NonEquivariantFunctorIsRejected) {
  const char* text = R"({"functors": {"F": {"dom": "1!", "cod": "Icheck", "objects": {"*": "0"}}}})";
  try {
    parse_document_text(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMalformedFunctor);
  }
}

TEST(Document, NonCommutingSquareIsRejected) {
  const char* text = R"({"functors": {
      "top": {"dom": "1!", "cod": "I", "objects": {"*": "1"}},
      "id": {"dom": "I", "identity": true}},
    "squares": {"S": {"left": "i", "right": "id", "top": "top", "bottom": "id"}}})";
  try {
    parse_document_text(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonCommutingSquare);
  }
}

}  // namespace
}  // namespace invgpd
