#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "liewedge/json_io.hpp"

using namespace liewedge;

namespace {

struct Proc {
  int rc = -1;
  std::string out;
};

Proc run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + LIEWEDGE_CLI + " " + args + " 2>/dev/null";
  Proc r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, ClassifySingleH) {
  Proc r = run("classify --case su:2,2 --tau cayley --h 1/2,1/2 --format json");
  ASSERT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(iso_label(iso_from_json(j.at("iso"))), "su(2,2)");
  EXPECT_EQ(j.at("g_tau_h_dim"), 15);
  EXPECT_EQ(j.at("h"), Json::parse(R"(["1/2","1/2"])"));
  EXPECT_FALSE(j.at("trace").empty());
}

TEST(Cli, ClassifyEnumerate) {
  Proc r = run("classify --case sp:2 --tau cayley --h enumerate");
  ASSERT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  std::set<std::string> labels;
  for (const auto& e : j.at("results")) labels.insert(e.at("label").get<std::string>());
  EXPECT_EQ(labels, (std::set<std::string>{"0", "sl(2,R)", "sp(4,R)", "sl(2,R)+sl(2,R)"}));
}

TEST(Cli, ClassifyZero) {
  Proc r = run("classify --case su:1,1 --tau cayley --h 0");
  ASSERT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("g_tau_h_dim"), 0);
  EXPECT_TRUE(j.at("iso").empty());
}

TEST(Cli, JsonRoundTrip) {
  Proc r = run("classify --case so2:5 --tau split-q2 --h enumerate");
  ASSERT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
  for (const auto& e : j.at("results")) {
    IsoSum s = iso_from_json(e.at("iso"));
    EXPECT_EQ(iso_json(s), e.at("iso"));
    EXPECT_EQ(iso_label(s), e.at("label").get<std::string>());
    EXPECT_EQ(rationals_json(rationals_from_json(e.at("h"))), e.at("h"));
  }
}

TEST(Cli, Markdown) {
  Proc r = run("classify --case su:2,1 --tau split --format md");
  ASSERT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("| su(2,1) | so(2,1) |"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("classify --case su:9").rc, 2);
  EXPECT_EQ(run("classify --case su:2,2 --h 1/2,x").rc, 2);
  EXPECT_EQ(run("classify --case su:2,2 --h 1/2").rc, 2);
  EXPECT_EQ(run("classify --case su:2,2 --tau nope").rc, 2);
  EXPECT_EQ(run("classify --case su:2,1 --tau cayley").rc, 2);
  EXPECT_EQ(run("classify --case sp:2 --format xml").rc, 2);
  EXPECT_EQ(run("verify table9").rc, 2);
  EXPECT_EQ(run("props --suite nope --count 1").rc, 2);
  EXPECT_EQ(run("").rc, 2);
  EXPECT_EQ(run("--help").rc, 0);
}

TEST(Cli, NotTauFixed) {
  // the nonsplit involution of su(2,2) only fixes multiples of H_1 + H_2
  Proc r = run("classify --case su:2,2 --tau nonsplit --h 1/2,0");
  EXPECT_EQ(r.rc, 2);
}

TEST(Cli, VerifyTable4) {
  Proc r = run("verify table4");
  EXPECT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("summary").at("pass"), 6);
}

TEST(Cli, VerifyTable1RankTwo) {
  Proc r = run("verify table1 --max-rank 2");
  EXPECT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("summary").at("fail"), 0);
  EXPECT_GT(j.at("summary").at("skip"), 0);
}

TEST(Cli, VerifyWritesFileAndIsThreadIndependent) {
  const std::string a = testing::TempDir() + "/t3_1.json", b = testing::TempDir() + "/t3_8.json";
  EXPECT_EQ(run("verify table3 --max-rank 2 --out " + a, "LIEWEDGE_THREADS=1").rc, 0);
  EXPECT_EQ(run("verify table3 --max-rank 2 --out " + b, "LIEWEDGE_THREADS=8").rc, 0);
  std::ifstream fa(a), fb(b);
  std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
}

TEST(Cli, PropsDeterministic) {
  Proc a = run("props --count 20 --seed 7 --suite cone --suite flips");
  Proc b = run("props --count 20 --seed 7 --suite cone --suite flips");
  EXPECT_EQ(a.rc, 0);
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j.at("suites").size(), 2u);
}
