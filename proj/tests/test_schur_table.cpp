#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "g2schur/schur_table.hpp"

using namespace g2schur;

namespace {

LaurentPoly3 sym(int v) { return LaurentPoly3::symmetric_generator(v); }

const SchurTable& table8() {
  static const SchurTable t = solve_table(8);
  return t;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("g2schur_" + name)).string();
}

}  // namespace

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(0, 0, 0));
  EXPECT_FALSE(is_admissible(1, 1, 1));
  EXPECT_TRUE(is_admissible(2, 1, 1));
  EXPECT_FALSE(is_admissible(3, 1, 1));
  EXPECT_FALSE(is_admissible(-1, 1, 0));
}

TEST(EnumerateLevel, Examples) {
  EXPECT_EQ(enumerate_level(0), (std::vector<Triple>{{0, 0, 0}}));
  EXPECT_EQ(enumerate_level(2), (std::vector<Triple>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(enumerate_level(4),
            (std::vector<Triple>{{0, 2, 2}, {1, 1, 2}, {1, 2, 1}, {2, 0, 2}, {2, 1, 1}, {2, 2, 0}}));
  EXPECT_TRUE(enumerate_level(3).empty());
}

TEST(EnumerateLevel, MatchesExhaustiveScan) {
  for (int n = 0; n <= 20; n += 2) {
    std::vector<Triple> scan;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= n; ++c)
          if (a + b + c == n && std::abs(a - b) <= c && c <= a + b) scan.push_back({a, b, c});
    std::sort(scan.begin(), scan.end());
    EXPECT_EQ(enumerate_level(n), scan) << n;
  }
}

TEST(PieriCoeff, Examples) {
  EXPECT_EQ(pieri_coeff(1, 1, 0, 0, 0), Rat(2));
  EXPECT_EQ(pieri_coeff(1, -1, 1, 0, 1), Rat(0));
  EXPECT_EQ(pieri_coeff(-1, -1, 1, 1, 0), Rat(1, 2));
  EXPECT_EQ(pieri_coeff(1, 1, 1, 0, 1), Rat(3, 2));
  EXPECT_EQ(pieri_coeff(-1, 1, 1, 0, 1), Rat(1, 2));
}

TEST(PieriCoeff, VanishesIffTargetNonAdmissible) {
  for (int n = 0; n <= 20; n += 2)
    for (const auto& j : enumerate_level(n))
      for (int a : {-1, 1})
        for (int b : {-1, 1})
          EXPECT_EQ(pieri_coeff(a, b, j[0], j[1], j[2]).is_zero(), !is_admissible(j[0] + a, j[1] + b, j[2]))
              << triple_str(j) << " a=" << a << " b=" << b;
}

TEST(SolveTable, LevelTwo) {
  const auto t = solve_table(2);
  EXPECT_EQ(t.entries().size(), 4u);
  EXPECT_EQ(t.phi({0, 0, 0}), LaurentPoly3(Rat(1)));
  EXPECT_EQ(t.phi({1, 1, 0}), sym(0) * Rat(1, 2));
  EXPECT_EQ(t.phi({1, 0, 1}), sym(1) * Rat(1, 2));
  EXPECT_EQ(t.phi({0, 1, 1}), sym(2) * Rat(1, 2));
}

TEST(SolveTable, Phi121) {
  const auto t = solve_table(4);
  EXPECT_EQ(t.phi({1, 2, 1}), sym(0) * sym(2) * Rat(1, 3) - sym(1) * Rat(1, 6));
  EXPECT_EQ(SchurTable::provenance({1, 2, 1}), 0);
  EXPECT_EQ(SchurTable::provenance({0, 1, 1}), 2);
  EXPECT_FALSE(SchurTable::provenance({0, 0, 0}).has_value());
}

TEST(SolveTable, RejectsOddLevel) { EXPECT_THROW(solve_table(3), Error); }

TEST(SolveTable, EntryCountMatchesEnumeration) {
  std::size_t n = 0;
  for (int l = 0; l <= 8; l += 2) n += enumerate_level(l).size();
  EXPECT_EQ(table8().entries().size(), n);
}

TEST(SolveTable, PieriIdentitiesHold) {
  const auto rep = verify_pieri(table8(), 6);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_GT(rep.records().size(), 0u);
}

TEST(SolveTable, StructureHolds) {
  const auto rep = verify_structure(table8());
  EXPECT_TRUE(rep.all_pass());
}

TEST(LeadingTerm, Examples) {
  const auto& t = table8();
  auto lt = leading_term(t.phi({1, 1, 0}), {1, 1, 0});
  EXPECT_EQ(lt.coeff, Rat(1, 2));
  EXPECT_EQ(lt.exps, (Exp3{1, 0, 0}));
  lt = leading_term(t.phi({0, 0, 0}), {0, 0, 0});
  EXPECT_EQ(lt.coeff, Rat(1));
  lt = leading_term(t.phi({1, 2, 1}), {1, 2, 1});
  EXPECT_EQ(lt.coeff, Rat(1, 3));
  EXPECT_EQ(lt.exps, (Exp3{1, 0, 1}));
  EXPECT_THROW(leading_term(sym(0) + sym(1), {1, 1, 0}), FalsificationError);
}

TEST(S3, AllPermutations) {
  std::array<int, 3> s{0, 1, 2};
  do {
    EXPECT_TRUE(s3_check(table8(), s).ok);
  } while (std::next_permutation(s.begin(), s.end()));
}

TEST(S3, DetectsAsymmetry) {
  auto entries = table8().entries();
  entries[{2, 1, 1}] = entries[{2, 1, 1}] + sym(0) * Rat(1, 100);
  SchurTable bad(8, entries);
  EXPECT_FALSE(s3_check(bad, {1, 0, 2}).ok);
}

TEST(Persistence, RoundTrip) {
  const auto t = solve_table(4);
  const auto path = tmp_path("rt.json");
  save_table(t, path);
  const auto back = load_table(path);
  EXPECT_EQ(back, t);
  EXPECT_EQ(read_file(path), table_canonical_text(back));
  EXPECT_EQ(table_checksum(back), table_checksum(t));
  std::remove(path.c_str());
}

TEST(Persistence, Errors) {
  auto j = table_to_json(solve_table(2));
  auto bad = j;
  bad["entries"].push_back({{"triple", {1, 1, 1}}, {"poly", json::array()}});
  EXPECT_THROW(table_from_json(bad), FormatError);
  bad = j;
  bad["entries"].erase(0);
  EXPECT_THROW(table_from_json(bad), FormatError);
  bad = j;
  bad["format_version"] = 2;
  EXPECT_THROW(table_from_json(bad), FormatError);
  bad = j;
  bad["entries"][1]["poly"][0]["coeff"] = "1/x";
  EXPECT_THROW(table_from_json(bad), FormatError);
  EXPECT_THROW(parse_json("{\"format_version\": 1, \"entr", "t"), FormatError);
}
