#include <gtest/gtest.h>

#include "graphclass/families.hpp"
#include "graphclass/verify.hpp"

using namespace graphclass;

namespace {

NamedGraph named(FamilySpec spec) { return {spec.id(), generate_family(spec)}; }

}  // namespace

TEST(RunVerify, TrianglePasses) {
  VerifyConfig cfg;
  cfg.primes = {3, 5};
  const std::vector<NamedGraph> graphs{named({Family::Cycle, 3})};
  const VerifyOutcome out = run_verify(graphs, cfg);
  EXPECT_TRUE(out.all_pass());
  EXPECT_EQ(out.passed, 1u);
  const Json& g = out.report.at("graphs").at(0);
  EXPECT_EQ(out.report.at("schema"), 1);
  EXPECT_EQ(g.at("status"), "pass");
  EXPECT_EQ(g.at("psi"), "t0 + t1 + t2");
  EXPECT_EQ(g.at("counts").at(0).at("complement_count"), 18);
  EXPECT_EQ(g.at("counts").at(1).at("complement_count"), 100);
  EXPECT_EQ(g.at("class").at("poly"), "L^3 - L^2");
  EXPECT_EQ(g.at("hodge_form").at("constant"), 0);
  EXPECT_EQ(g.at("hodge_form").at("tail"), "L^2 - L");
  EXPECT_EQ(g.at("edge_census").at("regular").size(), 3u);
  EXPECT_EQ(g.at("dc_check").size(), 3u);
}

TEST(RunVerify, SingleLoopExpectsMinusOne) {
  VerifyConfig cfg;
  cfg.primes = {5};
  const std::vector<NamedGraph> graphs{named({Family::Bouquet, 1})};
  const VerifyOutcome out = run_verify(graphs, cfg);
  EXPECT_TRUE(out.all_pass());
  const Json& modl = out.report.at("graphs").at(0).at("modL");
  EXPECT_EQ(modl.at("expectation"), "|Y_G(F_q)| = -1 mod q");
  EXPECT_EQ(modl.at("observations").at(0).at("observed"), 4);
  EXPECT_EQ(modl.at("observations").at(0).at("expected"), 4);
  EXPECT_EQ(out.report.at("graphs").at(0).at("Lrat").at("applicable"), false);
}

TEST(RunVerify, LargeGraphIsSkippedNotFailed) {
  VerifyConfig cfg;
  cfg.primes = {3};
  const std::vector<NamedGraph> graphs{named({Family::Cycle, 20})};
  const VerifyOutcome out = run_verify(graphs, cfg);
  EXPECT_TRUE(out.all_pass());
  EXPECT_EQ(out.skipped, 1u);
  const Json& g = out.report.at("graphs").at(0);
  EXPECT_EQ(g.at("status"), "skipped");
  EXPECT_NE(g.at("skip_reason").get<std::string>().find("budget"), std::string::npos);
}

TEST(RunVerify, ClassSkippedWhenExtraPrimesTooCostly) {
  VerifyConfig cfg;
  cfg.primes = {3, 5};
  cfg.budget = 5000;
  const std::vector<NamedGraph> graphs{named({Family::Cycle, 5})};
  const VerifyOutcome out = run_verify(graphs, cfg);
  const Json& g = out.report.at("graphs").at(0);
  EXPECT_EQ(g.at("status"), "pass");
  EXPECT_EQ(g.at("class").at("status"), "skipped");
}

TEST(RunVerify, DeterministicAcrossThreadCounts) {
  VerifyConfig cfg;
  cfg.primes = {3, 5, 7};
  std::vector<NamedGraph> graphs;
  for (const auto& ng : standard_catalog())
    if (ng.graph.edge_count() <= 5) graphs.push_back(ng);
  const std::string a = run_verify(graphs, cfg).report.dump(2);
  cfg.threads = 4;
  const std::string b = run_verify(graphs, cfg).report.dump(2);
  EXPECT_EQ(a, b);
}

TEST(VerifyConfig, Validation) {
  VerifyConfig cfg;
  cfg.primes = {3, 3};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.primes = {3, 9};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.primes = {};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.primes = {2, 3};
  EXPECT_NO_THROW(cfg.validate());
}

TEST(RenderTable, OneLinePerGraph) {
  VerifyConfig cfg;
  cfg.primes = {3, 5};
  const std::vector<NamedGraph> graphs{named({Family::Cycle, 3}), named({Family::Bouquet, 2})};
  const std::string table = render_table(run_verify(graphs, cfg).report);
  EXPECT_NE(table.find("cycle:3"), std::string::npos);
  EXPECT_NE(table.find("L^2 - 2*L + 1"), std::string::npos);
  EXPECT_NE(table.find("passed 2, failed 0, skipped 0"), std::string::npos);
}
