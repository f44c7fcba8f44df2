#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + ADS2_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, const std::string& env = "") {
  CliRun r = run(args, env);
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, SpectrumExample) {
  json j = run_json("spectrum --mass 1.3 --family dirichlet1 --window 0:5");
  std::vector<double> want{1.8, 2.8, 3.8, 4.8};
  const auto& om = j["results"]["omegas"];
  ASSERT_EQ(om.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(om[i].get<double>(), want[i], 1e-10);
  EXPECT_EQ(j["config"]["command"], "spectrum");
}

TEST(Cli, ReportSchema) {
  json j = run_json("spectrum --mass 1.3 --family dirichlet1 --window 0:5");
  for (const char* k : {"config", "results", "checks", "provenance"}) EXPECT_TRUE(j.contains(k)) << k;
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"])
    for (const char* k : {"name", "paper_ref", "value", "tolerance", "pass"}) EXPECT_TRUE(c.contains(k)) << k;
  EXPECT_DOUBLE_EQ(j["config"]["quad_tolerance"].get<double>(), 1e-11);
  EXPECT_EQ(j["provenance"]["tool"], "ads2");
}

TEST(Cli, ClassifyExample) {
  json j = run_json("classify --mass 0 --beta-plus 0.471239 --beta-minus 0.471239");
  EXPECT_EQ(j["results"]["series"], "Principal");
  EXPECT_EQ(j["results"]["s"], 0);
  EXPECT_NEAR(j["results"]["mu"].get<double>(), -0.3, 1e-6);
}

TEST(Cli, ZeroSamplesGiveMetadataOnly) {
  json j = run_json("modes --mass 0.25 --family dirichlet3 --n -2:2 --samples 0");
  const auto& ms = j["results"]["modes"];
  ASSERT_EQ(ms.size(), 5u);
  for (const auto& m : ms) {
    EXPECT_TRUE(m.contains("omega"));
    EXPECT_TRUE(m.contains("printed_norm"));
    EXPECT_FALSE(m.contains("grid"));
  }
  EXPECT_DOUBLE_EQ(ms[0]["omega"].get<double>(), -2.0);
}

TEST(Cli, CsvTable) {
  CliRun r = run("modes --mass 0.25 --family dirichlet1 --n 0:0 --samples 3 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# family=dirichlet1 M=0.25 n=0 omega=0.75", 0), 0u);
  EXPECT_NE(r.out.find("\nrho,re_phi1,im_phi1,re_phi2,im_phi2\n"), std::string::npos);
  std::size_t rows = 0;
  for (char ch : r.out) rows += ch == '\n';
  EXPECT_EQ(rows, 5u);
}

TEST(Cli, OutputIsByteStable) {
  const std::string args = "deficiency --mass 0.25";
  CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["results"]["n_plus"], 2);
}

TEST(Cli, WritesOutFile) {
  auto path = std::filesystem::temp_directory_path() / "ads2_cli_out.json";
  std::filesystem::remove(path);
  CliRun r = run("fock --model massless --mu 0.25 --cutoff 4 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  json j = json::parse(in);
  EXPECT_DOUBLE_EQ(j["results"]["vacuum_weight"].get<double>(), 0.03125);
  EXPECT_EQ(j["results"]["degeneracy"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, ToleranceSources) {
  json env = run_json("deficiency --mass 0.25", "ADS2_QUAD_TOL=1e-9");
  EXPECT_DOUBLE_EQ(env["config"]["quad_tolerance"].get<double>(), 1e-9);
  json flag = run_json("deficiency --mass 0.25 --tol 1e-10", "ADS2_QUAD_TOL=1e-9");
  EXPECT_DOUBLE_EQ(flag["config"]["quad_tolerance"].get<double>(), 1e-10);
  EXPECT_EQ(run("deficiency --mass 0.25", "ADS2_QUAD_TOL=abc").code, 2);
}

TEST(Cli, ValidationErrorsExitWithTwo) {
  EXPECT_EQ(run("modes --mass 0.6 --family dirichlet2").code, 2);
  EXPECT_EQ(run("modes --mass 1.0 --family v").code, 2);
  EXPECT_EQ(run("modes --mass -1 --family dirichlet1").code, 2);
  EXPECT_EQ(run("spectrum --mass 0 --u 1,0,0.1,0,0,0,1,0").code, 2);
  EXPECT_EQ(run("spectrum --mass 0.25 --family dirichlet1 --window 3:1").code, 2);
  EXPECT_EQ(run("fock --model massless --mu 0.25 --cutoff 9").code, 2);
  EXPECT_EQ(run("verify --suite nosuch").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, VerifySuites) {
  CliRun ok = run("verify --suite casimir");
  EXPECT_EQ(ok.code, 0);
  json j = json::parse(ok.out);
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"])
    if (!c.contains("gating") || c["gating"].get<bool>()) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, InvarianceAndAsymptotics) {
  json inv = run_json("invariance --mass 0.25 --family dirichlet3");
  EXPECT_EQ(inv["results"]["invariant"], true);
  json asy = run_json("asymptotics --mass 0.25 --omega 0.9 --c1 1 --c2 0");
  EXPECT_LT(asy["results"]["max_rel_error"].get<double>(), 1e-2);
  EXPECT_EQ(asy["checks"][0]["pass"], true);
}
