#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(SKEIN_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Cli, DimsSurfaceBigon) {
  const Result r = run("dims surface --genus 0 --punctures 0 --boundary 2 --N 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"r\":1,\"K\":27,\"lambda_lower\":27,\"lambda_upper\":40}\n");
}

TEST(Cli, DimsSurfaceClosed) {
  const Result r = run("dims surface --genus 2 --punctures 1 --boundary 0 --N 3");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lambda_lower"], 19683);
  EXPECT_EQ(j["lambda_upper"], 14348907);
}

TEST(Cli, BigResultsBecomeStrings) {
  const Result r = run("dims surface --genus 0 --punctures 0 --boundary 40 --N 9");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["K"].is_string());
  EXPECT_EQ(j["K"].get<std::string>().substr(0, 3), "442");  // 9^117
}

TEST(Cli, DimsManifold) {
  const Result r = run("dims manifold --genus 2 --markings 0 --N 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"bound\":27}\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("dims surface --genus 0 --punctures 0 --boundary 2 --N 4").status, 2);
  EXPECT_EQ(run("dims surface --genus 1 --punctures 0 --boundary 0 --N 3").status, 2);
  EXPECT_EQ(run("dims manifold --genus 30 --markings 0 --N 3").status, 2);
  EXPECT_EQ(run("verify nosuch").status, 2);
  EXPECT_EQ(run("verify bigon --N 6").status, 2);
  EXPECT_EQ(run("verify qtorus --triangulation /nonexistent.json").status, 2);
}

TEST(Cli, VerifyIsDeterministic) {
  for (const char* suite : {"bigon", "qtorus", "torus-skein", "chebyshev", "counts"}) {
    const std::string args = std::string("verify ") + suite + " --N 3 --seed 5 --trials 10 --no-timing";
    const Result a = run(args), b = run(args), c = run(args + " --serial");
    ASSERT_EQ(a.status, 0) << suite << "\n" << a.out;
    EXPECT_EQ(a.out, b.out) << suite;
    EXPECT_EQ(a.out, c.out) << suite;
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["suite"], suite);
    EXPECT_EQ(j["seed"], 5);
    EXPECT_EQ(j["summary"]["fail"], 0);
  }
}

TEST(Cli, VerifyWithTriangulationFile) {
  const Result r = run(std::string("verify qtorus --N 5 --trials 5 --triangulation ") + SKEIN_FIXTURE_DIR +
                       "/once_punctured_torus.json");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("qtorus.once_punctured_torus."), std::string::npos);
}
