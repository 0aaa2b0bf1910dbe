#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "homconf/io.hpp"

using namespace homconf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "homconf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOMCONF_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("homconf-cli-" + name);
  fs::remove_all(p);
  return p;
}

std::vector<nlohmann::json> records(const std::string& ndjson) {
  std::vector<nlohmann::json> out;
  std::istringstream in(ndjson);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, CheckExampleReportsLeftSymmetry) {
  Outcome r = run({"check", data("line_action.def")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("pass left-symmetry (a, b, b)"), std::string::npos);
}

TEST(Cli, BrokenFileNamesFailingTuple) {
  Outcome r = run({"check", data("broken.def"), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  bool named = false;
  for (const auto& rec : records(r.out)) {
    if (rec.contains("axiom") && rec["axiom"] == "skew" && !rec["passed"].get<bool>()) {
      named = named || rec["tuple"] == nlohmann::json::array({"a", "b"});
    }
  }
  EXPECT_TRUE(named) << r.out;
}

TEST(Cli, JsonRecordsHaveStableKeys) {
  Outcome r = run({"check", data("rank_two_bracket.def"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto recs = records(r.out);
  ASSERT_FALSE(recs.empty());
  std::string first = r.out.substr(0, r.out.find('\n'));
  EXPECT_EQ(first.rfind("{\"subject\":\"brk\",\"axiom\":\"skew\",\"tuple\":[\"L\",\"L\"],\"passed\":true,", 0), 0u)
      << first;
  EXPECT_TRUE(recs.back()["summary"].get<bool>());
}

TEST(Cli, SubAdjacentPipeline) {
  fs::path dir = scratch("pipeline");
  fs::create_directories(dir);
  std::string lie = (dir / "lie.def").string();
  ASSERT_EQ(run({"construct", "sub-adjacent", data("line_action.def"), "--out", lie}).code, 0);
  Outcome r = run({"check", lie, "--axioms", "skew,jacobi"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("jacobi"), std::string::npos);
}

TEST(Cli, ConstructionsCheckClean) {
  fs::path dir = scratch("constructions");
  fs::create_directories(dir);
  std::string sym = (dir / "sym.def").string();
  ASSERT_EQ(run({"construct", "from-symplectic", data("affine.def"), "--out", sym}).code, 0);
  EXPECT_EQ(run({"check", sym}).code, 0);
  std::string co = (dir / "co.def").string();
  ASSERT_EQ(run({"construct", "dual-coalgebra", data("line_action.def"), "--out", co}).code, 0);
  EXPECT_EQ(run({"check", co}).code, 0);
  Outcome back = run({"construct", "dual-algebra", co, "--name", "line"});
  ASSERT_EQ(back.code, 0);
  DefinitionFile orig = parse_definition(slurp(data("line_action.def")));
  DefinitionFile again = parse_definition(back.out);
  EXPECT_TRUE(again.algebras.at(0).product == orig.algebras.at(0).product);
}

TEST(Cli, ConstructRejectsUncertifiedInput) {
  Outcome r = run({"construct", "sub-adjacent", data("broken.def")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ParseErrorsCarryLocation) {
  fs::path dir = scratch("parse");
  fs::create_directories(dir);
  fs::path bad = dir / "bad.def";
  std::ofstream(bad) << "[algebra g]\nkind lie\nbasis e1 e2\n[e1,e2] = e3\n";
  Outcome r = run({"check", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":4:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("e3"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"construct", "nonsense", data("line_action.def")}).code, 2);
  EXPECT_EQ(run({"check", data("missing.def")}).code, 2);
}

TEST(Cli, OracleAgrees) {
  for (const char* f : {"line_action.def", "rank_two_bracket.def", "broken.def", "affine.def"}) {
    Outcome r = run({"oracle", data(f), "--samples", "30", "--seed", "9"});
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
  }
}

TEST(Cli, OracleSeedFromEnvironment) {
  setenv("HOMCONF_SEED", "17", 1);
  Outcome env = run({"oracle", data("broken.def"), "--format", "json"});
  unsetenv("HOMCONF_SEED");
  Outcome flag = run({"oracle", data("broken.def"), "--seed", "17", "--format", "json"});
  EXPECT_EQ(env.out, flag.out);
}

TEST(Cli, ReportsAreByteIdentical) {
  Outcome a = run({"check", data("broken.def"), "--format", "json"});
  Outcome b = run({"check", data("broken.def"), "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CorpusIsDeterministicAndHonoursExitContract) {
  fs::path d1 = scratch("corpus1"), d2 = scratch("corpus2");
  ASSERT_EQ(run({"corpus", "--rank", "3", "--degree", "2", "--count", "12", "--seed", "5", "--out", d1.string()}).code,
            0);
  ASSERT_EQ(run({"corpus", "--rank", "3", "--degree", "2", "--count", "12", "--seed", "5", "--out", d2.string()}).code,
            0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    EXPECT_EQ(slurp(e.path()), slurp(d2 / e.path().filename())) << e.path();
    ++files;
  }
  EXPECT_EQ(files, 13u);
  for (const auto& m : records(slurp(d1 / "manifest.ndjson"))) {
    Outcome r = run({"check", (d1 / m["file"].get<std::string>()).string(), "--format", "json"});
    auto recs = records(r.out);
    bool all = true;
    for (const auto& rec : recs) {
      if (rec.contains("axiom")) all = all && rec["passed"].get<bool>();
    }
    EXPECT_EQ(r.code, all ? 0 : 1) << m;
    EXPECT_EQ(r.code, m["exit"].get<int>()) << m;
    EXPECT_LE(m["rank"].get<int>(), 3);
    EXPECT_LE(m["degree"].get<int>(), 2);
  }
}
