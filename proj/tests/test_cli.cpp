#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "g2schur/cli.hpp"

using namespace g2schur;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "g2schur");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("g2schur_cli_" + name)).string();
}

json strip_timing(json j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST(Cli, TableCountAndSave) {
  const auto path = tmp("t12.json");
  const auto r = run({"table", "--max-level", "12", "--out", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t n = 0;
  for (int l = 0; l <= 12; l += 2) n += enumerate_level(l).size();
  EXPECT_EQ(json::parse(r.out).at("entries"), n);
  EXPECT_EQ(load_table(path).entries().size(), n);
}

TEST(Cli, VerifyEigenFromTable) {
  const auto path = tmp("t10.json");
  ASSERT_EQ(run({"table", "--max-level", "10", "--out", path}).code, 0);
  const auto r = run({"verify", "eigen", "--max-level", "8", "--table", path, "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("suite"), "eigen");
  EXPECT_EQ(j.at("summary").at("fail"), 0);
  EXPECT_EQ(j.at("table_checksum"), table_checksum(load_table(path)));
}

TEST(Cli, ConjectureIsReportOnly) {
  const auto r = run({"conjecture", "--copies", "1", "--order", "4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("summary").at("info"), 35);
  const auto& c = j.at("checks");
  const auto it = std::find_if(c.begin(), c.end(), [](const json& x) { return x.at("id") == "conj(2,0,0)"; });
  ASSERT_NE(it, c.end());
  EXPECT_EQ(it->at("literal"), "1/3");
  EXPECT_EQ(it->at("residue"), "1/2");
  EXPECT_EQ(it->at("match_literal"), false);
  EXPECT_EQ(it->at("match_doubled"), true);
  const auto d = std::find_if(c.begin(), c.end(), [](const json& x) { return x.at("id") == "conj(1,0,0)"; });
  EXPECT_EQ(d->at("doubled"), "0");
}

TEST(Cli, OmegaJson) {
  const auto r = run({"omega", "--order", "2", "--sign", "minus", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.at("series").size(), 1u);
  EXPECT_EQ(j.at("series")[0].at("sign"), sign_name(Sign::Minus));
  const auto sums = json::parse(run({"omega", "--order", "2", "--sign", "minus", "--source", "sums", "--json"}).out);
  EXPECT_EQ(sums.at("series"), j.at("series"));
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({"table", "--max-level", "3"}).code, 2);
  EXPECT_EQ(run({"conjecture", "--copies", "3"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "eigen", "--table", tmp("does_not_exist.json")}).code, 2);
  EXPECT_EQ(run({"verify", "series", "--max-level", "6"}).code, 2);  // too low for order 4
}

TEST(Cli, CacheRoundtrip) {
  const auto path = tmp("rt.json");
  ASSERT_EQ(run({"table", "--max-level", "8", "--out", path}).code, 0);
  const auto ok = run({"cache-roundtrip", "--table", path, "--json"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(json::parse(ok.out).at("checksum_match"), true);

  const std::string text = read_file(path);
  write_file(tmp("trunc.json"), text.substr(0, text.size() / 2));
  const auto bad = run({"cache-roundtrip", "--table", tmp("trunc.json")});
  EXPECT_EQ(bad.code, 2);

  auto j = json::parse(text);
  j["entries"][4]["poly"][0]["coeff"] = "5/7";
  write_file(tmp("edit.json"), canonical_dump(j));
  const auto ed = run({"cache-roundtrip", "--table", tmp("edit.json")});
  EXPECT_EQ(ed.code, 2);
  EXPECT_NE(ed.out.find("checksum mismatch"), std::string::npos);
  // the edited table also falsifies the recursion
  EXPECT_EQ(run({"verify", "pieri", "--table", tmp("edit.json"), "--max-level", "8"}).code, 1);
}

TEST(Cli, DeterministicModuloTiming) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "pieri", "--max-level", "8", "--json"},
        std::vector<std::string>{"verify", "cauchy", "--lambda-order", "4", "--order", "2", "--pde-order", "4", "--json"},
        std::vector<std::string>{"verify", "kernel", "--max-degree", "4", "--detail-degree", "3", "--json"}}) {
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(strip_timing(json::parse(a.out)).dump(), strip_timing(json::parse(b.out)).dump());
  }
  const auto a = run({"verify", "eigen", "--max-level", "4", "--json", "--no-timing"});
  EXPECT_FALSE(json::parse(a.out).contains("timing"));
  EXPECT_EQ(a.out, run({"verify", "eigen", "--max-level", "4", "--json", "--no-timing"}).out);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = G2SCHUR_CLI_PATH;
  EXPECT_EQ(std::system((bin + " verify kernel --max-degree 3 --detail-degree 2 > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " table --max-level 5 > /dev/null 2>&1").c_str()), 0);
  EXPECT_EQ(std::system((bin + " --help > /dev/null").c_str()), 0);
}
