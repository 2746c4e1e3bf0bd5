#include "flagcurv/campaigns.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

using namespace flagcurv;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("flagcurv_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(FLAGCURV_CLI) + " " + args + " 2>&1";
  Run r{0, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CampaignConfig quick(const std::string& dir) {
  CampaignConfig cfg;
  cfg.samples = 300;
  cfg.output_dir = dir;
  return cfg;
}

}  // namespace

TEST(Config, ParsesKeyValueFile) {
  auto path = scratch("cfg.txt");
  std::ofstream(path) << "# bounds\nmax_rank = 3\nseed=42  # trailing\n\nsamples=17\nmaximal_limit=3\n";
  auto cfg = CampaignConfig::from_file(path.string());
  EXPECT_EQ(cfg.max_rank, 3);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.samples, 17);
  EXPECT_EQ(cfg.maximal_limit, 3);
  std::ofstream(path) << "colour=blue\n";
  EXPECT_THROW(CampaignConfig::from_file(path.string()), std::invalid_argument);
  std::ofstream(path) << "samples=many\n";
  EXPECT_THROW(CampaignConfig::from_file(path.string()), std::invalid_argument);
}

TEST(Campaigns, RefuseBeyondLimits) {
  CampaignConfig cfg;
  cfg.max_rank = 5;
  EXPECT_THROW(run_maximal(cfg), std::length_error);
  cfg.max_rank = 7;
  EXPECT_THROW(run_table1(cfg), std::length_error);
  cfg.max_rank = 3;
  cfg.maximal_limit = 2;
  EXPECT_THROW(run_maximal(cfg), std::length_error);
  EXPECT_THROW(run_campaign("nonsense", cfg), std::invalid_argument);
}

TEST(Campaigns, Table1FamiliesAtRankFour) {
  auto cfg = quick("unused");
  cfg.max_rank = 4;
  auto rep = run_table1(cfg);
  EXPECT_TRUE(rep.passed()) << rep.text();
  // A_n: every node; B_n: 1; C_n: n; D3, D4: 1, n-1, n
  EXPECT_EQ(rep.summary["constant_metric_kahler"], (1 + 2 + 3 + 4) + 3 + 3 + 3 + 3);
  EXPECT_TRUE(table1_family_member(LieType::make('E', 7), 7));
  EXPECT_FALSE(table1_family_member(LieType::make('E', 7), 1));
  EXPECT_FALSE(table1_family_member(LieType::make('G', 2), 2));
}

TEST(Campaigns, SmallCertificateSweeps) {
  auto cfg = quick("unused");
  cfg.max_rank = 3;
  for (const char* name : {"height3", "maximal", "almost-kahler"}) {
    auto rep = run_campaign(name, cfg);
    EXPECT_TRUE(rep.passed()) << rep.text();
  }
  cfg.max_rank = 3;
  auto cpn = run_cpn_theorem(cfg);
  EXPECT_TRUE(cpn.passed()) << cpn.text();
}

TEST(Campaigns, G2PassesAndReportsAreDeterministic) {
  auto dir = scratch("reports");
  auto cfg = quick(dir.string());
  auto a = run_g2(cfg), b = run_g2(cfg);
  EXPECT_TRUE(a.passed()) << a.text();
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  auto out = write_report(a, cfg);
  EXPECT_TRUE(std::filesystem::exists(out / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(out / "report.txt"));
  auto parsed = Json::parse(std::ifstream(out / "report.json"));
  EXPECT_EQ(parsed["campaign"], "g2");
  EXPECT_TRUE(parsed["passed"].get<bool>());
}

TEST(Campaigns, F4FlagsOnlyTheInvalidExhibitedPair) {
  auto rep = run_f4(quick("unused"));
  ASSERT_EQ(rep.failures.size(), 2u) << rep.text();
  for (const auto& f : rep.failures) {
    EXPECT_NE(f.find("(1,2,2,1) is not in R_M^+"), std::string::npos) << f;
    EXPECT_NE(f.find("reproduce: flagcurv check F4 k=1,2,4"), std::string::npos) << f;
  }
}

TEST(Cli, CommandsAndExitCodes) {
  auto r = cli("roots G2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("12 roots"), std::string::npos);
  EXPECT_NE(r.out.find("marks (3,2)"), std::string::npos);
  EXPECT_EQ(cli("roots X9").code, 2);
  EXPECT_NE(cli("roots C3").out.find("(2,2,1)  height 5  (a,a)_B = 1/4"), std::string::npos);
  EXPECT_NE(cli("flag C4 k=2,3,4").out.find("2 isotropy summands"), std::string::npos);
  EXPECT_NE(cli("acs F4 k=1,2,4").out.find("8 structures"), std::string::npos);
  EXPECT_NE(cli("metrics kahler C4 k=2,3,4 --acs ++").out.find("span{(1,2)}"), std::string::npos);
  EXPECT_NE(cli("check C4 k=2,3,4 --acs ++ --metric 1,1").out.find("DUAL_NAKANO_SEMIPOSITIVE"), std::string::npos);
  auto v = cli("check C4 k=2,3,4 --acs +- --metric 1,3 --json");
  EXPECT_EQ(v.code, 0);
  auto j = Json::parse(v.out);
  EXPECT_EQ(j["verdict"], "GRIFFITHS_VIOLATED");
  EXPECT_TRUE(j.contains("certificate"));
  auto w = Json::parse(cli("check C4 k=2,3,4 --acs ++ --metric 1,1/2 --json").out);
  EXPECT_EQ(w["verdict"], "GRIFFITHS_VIOLATED");
  EXPECT_TRUE(w["griffiths_witness"].contains("basis_pair"));
  EXPECT_NE(cli("cpn --n 3 --t 2").out.find("positive definite"), std::string::npos);
  EXPECT_NE(cli("cpn --n 3 --t 1").out.find("semidefinite, singular"), std::string::npos);
  EXPECT_NE(cli("cpn --n 3 --t 0.8").out.find("indefinite"), std::string::npos);
  EXPECT_EQ(cli("check A2 --acs ++ --metric 1,1").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("verify maximal --max-rank 5").code, 2);
  auto dir = scratch("cli_reports");
  EXPECT_EQ(cli("verify g2 --samples 200 --out " + dir.string()).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "g2" / "report.json"));
  EXPECT_EQ(cli("verify f4 --samples 200 --out " + dir.string()).code, 1);
  auto csv = scratch("tensor.csv");
  EXPECT_EQ(cli("check G2 k=1 --acs ++ --metric 1,2 --csv " + csv.string()).code, 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "alpha,beta,gamma,delta,exact,value");
  EXPECT_EQ(cli("constants G2 --csv").out.rfind("alpha,beta,sign,radicand", 0), 0u);
}
