#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace trigonal;
using namespace trigonal::cli;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "trigonal_" + name; }

}  // namespace

TEST(Cli, LatticeScopeDoesNotBuildTables) {
  Workbench bench;
  VerifyOptions opts;
  opts.scope = Scope::Lattice;
  const auto report = run_verification(opts, bench);
  EXPECT_FALSE(bench.has_space());
  EXPECT_FALSE(bench.has_classes());
  ASSERT_EQ(report.checks.size(), 3u);
  EXPECT_EQ(report.checks[0].name, "triflection_algebra");
  for (const auto& c : report.checks) EXPECT_EQ(c.status, Status::Pass) << c.name;
}

TEST(Cli, MonodromyScopeReportsClassCountAndNotes) {
  Workbench bench;
  VerifyOptions opts;
  opts.scope = Scope::Monodromy;
  const auto report = run_verification(opts, bench);
  EXPECT_FALSE(bench.has_space());
  const auto* r = report.find("R_count");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->observed, 29524);
  EXPECT_EQ(r->status, Status::Pass);
  ASSERT_EQ(report.notes.size(), 2u);
  EXPECT_EQ(report.notes[0], kIndexNote);
  EXPECT_EQ(report.notes[1], kHExampleNote);
  const auto j = report.to_json();
  EXPECT_EQ(j["notes"][0], kIndexNote);
  EXPECT_EQ(j["notes"][1], kHExampleNote);
}

TEST(Cli, FullReportListsEveryCheckOnceInFixedOrder) {
  Workbench bench;
  VerifyOptions serial;
  VerifyOptions parallel;
  parallel.jobs = 3;
  const auto a = run_verification(serial, bench);
  Workbench bench2;
  const auto b = run_verification(parallel, bench2);
  const std::vector<std::string> expected{"R_count",
                                          "P_count",
                                          "triflection_algebra",
                                          "mod_theta_compatibility",
                                          "hurwitz_action",
                                          "symplectic_transitivity",
                                          "equivariant_bijection",
                                          "confluence_trichotomy",
                                          "realification",
                                          "minus6_certificates",
                                          "sp10_order",
                                          "discrepancy_notes"};
  ASSERT_EQ(a.checks.size(), expected.size());
  ASSERT_EQ(b.checks.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(a.checks[k].name, expected[k]);
    EXPECT_EQ(b.checks[k].name, expected[k]);
    EXPECT_EQ(a.checks[k].status, b.checks[k].status) << expected[k];
    EXPECT_EQ(a.checks[k].observed, b.checks[k].observed) << expected[k];
  }
  EXPECT_EQ(a.find("sp10_order")->status, Status::Skipped);
  EXPECT_EQ(a.header["conventions"]["base_class"], "001111111111");
}

TEST(Cli, ExitCodeTracksFailedChecks) {
  std::ostringstream out, err;
  VerifyOptions opts;
  opts.scope = Scope::Lattice;
  EXPECT_EQ(cmd_verify(opts, "", out, err), kExitOk);
  const auto j = json::parse(out.str());
  EXPECT_TRUE(j["passed"].get<bool>());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("runtime_ms"));
    EXPECT_TRUE(c.contains("observed"));
    EXPECT_TRUE(c.contains("expected"));
  }

  std::ostringstream out2, err2;
  opts.scope = Scope::All;
  const int code = cmd_verify(opts, "", out2, err2);
  const auto all = json::parse(out2.str());
  EXPECT_EQ(code == kExitOk, all["passed"].get<bool>());
  EXPECT_TRUE(code == kExitOk || code == kExitCheckFailed);

  opts.jobs = 0;
  EXPECT_EQ(cmd_verify(opts, "", out2, err2), kExitUsage);
}

TEST(Cli, OptionalGroupOrderCheck) {
  Workbench bench;
  VerifyOptions opts;
  opts.scope = Scope::Symplectic;
  opts.optional = true;
  const auto report = run_verification(opts, bench);
  const auto* c = report.find("sp10_order");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Pass);
}

TEST(Cli, ScopeParsing) {
  EXPECT_EQ(parse_scope("correspondence"), Scope::Correspondence);
  EXPECT_THROW(parse_scope("everything"), UsageError);
}

TEST(Cli, GramExport) {
  Workbench bench;
  const auto text = export_artifact(ExportTarget::Gram, ExportFormat::Json, bench);
  const auto j = json::parse(text);
  ASSERT_EQ(j.size(), 10u);
  EXPECT_EQ(j[0][0], json::parse("[-3,0]"));
  EXPECT_EQ(j[0][1], json::parse("[-1,2]"));
  EXPECT_EQ(j[1][0], json::parse("[1,-2]"));
  EXPECT_FALSE(bench.has_space());
}

TEST(Cli, BijectionExportIsDeterministic) {
  const auto p1 = temp_path("bij1.json");
  const auto p2 = temp_path("bij2.json");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_export("bijection", "json", p1, out, err), kExitOk);
  ASSERT_EQ(cmd_export("bijection", "json", p2, out, err), kExitOk);
  const auto a = read_file(p1);
  EXPECT_EQ(a, read_file(p2));
  const auto j = json::parse(a);
  EXPECT_EQ(j["forward"].size(), kProjCount);
  EXPECT_EQ(j["edges_verified"], 295240);
  EXPECT_EQ(j["base_pair"]["class"], "001111111111");
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST(Cli, OrbitsAndClassesExports) {
  Workbench bench;
  const auto dot = export_artifact(ExportTarget::Orbits, ExportFormat::Dot, bench);
  EXPECT_EQ(dot.rfind("digraph projective {", 0), 0u);
  EXPECT_NE(dot.find("digraph monodromy {"), std::string::npos);
  const auto orbits = json::parse(export_artifact(ExportTarget::Orbits, ExportFormat::Json, bench));
  EXPECT_EQ(orbits["projective"]["size"], kProjCount);
  EXPECT_EQ(orbits["monodromy"]["size"], kClassCount);
  const auto classes = json::parse(export_artifact(ExportTarget::Classes, ExportFormat::Json, bench));
  EXPECT_EQ(classes["count"], kClassCount);
}

TEST(Cli, ExportUsageErrors) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_export("lines", "json", "", out, err), kExitUsage);
  EXPECT_NE(err.str().find("usage:"), std::string::npos);
  EXPECT_EQ(cmd_export("gram", "xml", "", out, err), kExitUsage);
  EXPECT_EQ(cmd_export("gram", "dot", "", out, err), kExitUsage);
  EXPECT_TRUE(out.str().empty());
}

TEST(Cli, ClassifyExamples) {
  Workbench bench;
  EXPECT_EQ(classify("001111111111", 0, false, bench).combinatorial, Confluence::H);
  EXPECT_EQ(classify("001111111111", 1, false, bench).combinatorial, Confluence::RM);
  EXPECT_EQ(classify("221111111111", 0, false, bench).canonical, "001111111111");
  EXPECT_FALSE(bench.has_space());
  const auto x = classify("001111111111", 5, true, bench);
  EXPECT_EQ(x.combinatorial, Confluence::SG);
  ASSERT_TRUE(x.symplectic.has_value());
  EXPECT_FALSE(classify("001111111111", 0, true, bench).symplectic.has_value());
  EXPECT_THROW(classify("001111111111", 12, false, bench), std::out_of_range);
}

TEST(Cli, ClassifyReportsViolations) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_classify("000000000000", 0, false, out, err), kExitInvalidInput);
  EXPECT_NE(err.str().find("monodromy not surjective"), std::string::npos);
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_classify("0011111111a1", 0, false, out2, err2), kExitInvalidInput);
  EXPECT_EQ(cmd_classify("011111111111", 0, false, out2, err2), kExitInvalidInput);
  EXPECT_EQ(cmd_classify("001111111111", 99, false, out2, err2), kExitUsage);
  std::ostringstream out3, err3;
  EXPECT_EQ(cmd_classify("001111111111", 0, false, out3, err3), kExitOk);
  EXPECT_EQ(json::parse(out3.str())["classification"], "H");
}
