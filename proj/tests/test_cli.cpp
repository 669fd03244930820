#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + HOMLP_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, SValue) {
  auto r = cli("s --M 'K(2)' --N 'C(5)' --no-cache");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["s"], "4/5");
  r = cli("s --M 'K(2)' --N 'K(11/4)' --no-cache");
  EXPECT_EQ(parse(r)["s"], "17/22");
  EXPECT_EQ(parse(r)["omega"], (nlohmann::json{"3/44", "1/44"}));
  r = cli("s --M 'K(2)' --N 'K(8/3)' --method generic --no-cache");
  EXPECT_EQ(parse(r)["s"], parse(cli("s --M 'K(2)' --N 'K(8/3)' --no-cache"))["s"]);
}

TEST(Cli, Chi) {
  auto r = cli("chi --H 'K(2)' --G 'C(5)' --method s,cover,hyper --no-cache");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["chi"], "5/4");
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(parse(cli("chi --H 'K(2)' --G 'Q(3/2)' --no-cache"))["chi"], "3/2");
}

TEST(Cli, CacheIsByteIdentical) {
  auto dir = std::filesystem::temp_directory_path() / "homlp-cli-cache";
  std::filesystem::remove_all(dir);
  std::string args = "s --M 'K(2)' --N 'K(7/3)' --cache-dir " + dir.string();
  auto first = cli(args);
  auto second = cli("s --M ' K(2) ' --N 'K( 7/3 )' --audit --cache-dir " + dir.string());
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST(Cli, Intervals) {
  auto r = cli("intervals --k-max 3");
  ASSERT_EQ(r.code, 0);
  auto rows = parse(r)["intervals"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["r_low"], "7/3");
  EXPECT_EQ(rows[0]["r_high"], "12/5");
  EXPECT_EQ(rows[0]["s"], "6/7");
  EXPECT_TRUE(rows[0]["verified"].get<bool>());
  EXPECT_EQ(rows[1]["s"], "4/5");
  r = cli("intervals --k-max 2 --csv-stdout --no-check");
  EXPECT_EQ(r.out, "r_low,r_high,s_num,s_den\n5/2,8/3,4,5\n");
}

TEST(Cli, OrbitsAndRefute) {
  auto j = parse(cli("orbits --N 'K(11/4)'"));
  EXPECT_EQ(j["sizes"], (nlohmann::json{11, 11}));
  auto d = parse(cli("refute --G 'K(11/4)'"));
  EXPECT_EQ(d["conclusion"], "refuted");
  EXPECT_EQ(d["max_cut"], 18);
}

TEST(Cli, ExitCodes) {
  auto r = cli("s --M 'K(2' --N 'C(5)' --no-cache");
  EXPECT_EQ(r.code, 2);
  auto j = parse(r);
  EXPECT_EQ(j["error"], "parse");
  EXPECT_EQ(j["position"], 3);
  EXPECT_EQ(cli("s --M 'K(2)' --N 'K(8/2)' --no-cache").code, 2);
  EXPECT_EQ(cli("s --M 'K(2)'").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
  r = cli("s --M 'K(3)' --N 'K(20/7)' --method exhaustive --budget 10 --no-cache");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(parse(r)["error"], "budget");
  EXPECT_EQ(cli("s --M 'K(3)' --N 'K(20/7)' --method exhaustive --no-cache", "HOMLP_BUDGET=10").code, 3);
}

TEST(Cli, VerifyCore) {
  auto r = cli("verify --suite core");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["suite"], "core");
  for (const auto& [c, ok] : j["criteria"].items()) EXPECT_TRUE(ok.get<bool>()) << c;
  // no timings, so the report is reproducible byte for byte
  EXPECT_EQ(r.out, cli("verify --suite core").out);
}
