#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "g2schur/series_expansion.hpp"

using namespace g2schur;

namespace {

const SchurTable& table10() {
  static const SchurTable t = solve_table(10);
  return t;
}

const ExpansionCache& ex4() {
  static const ExpansionCache e(table10(), 6);
  return e;
}

PolyJ scaled(std::initializer_list<std::pair<Exp3, int>> terms, int den) {
  PolyJ p;
  for (const auto& [e, c] : terms) p.add_term(e, Rat(c, den));
  return p;
}

// derived separately with a symbolic expansion and exact fit
PolyJ oracle_c400() {
  return scaled({{{4, 0, 0}, 3},    {{3, 0, 0}, 12},   {{2, 2, 0}, 2},    {{2, 1, 0}, 4},   {{2, 0, 2}, -6},
                 {{2, 0, 1}, -12},  {{2, 0, 0}, 80},   {{1, 2, 0}, 4},    {{1, 1, 0}, 8},   {{1, 0, 2}, -12},
                 {{1, 0, 1}, -24},  {{1, 0, 0}, 136},  {{0, 4, 0}, 3},    {{0, 3, 0}, 12},  {{0, 2, 2}, -6},
                 {{0, 2, 1}, -12},  {{0, 2, 0}, 80},   {{0, 1, 2}, -12},  {{0, 1, 1}, -24}, {{0, 1, 0}, 136},
                 {{0, 0, 4}, 3},    {{0, 0, 3}, 12},   {{0, 0, 2}, -56},  {{0, 0, 1}, -136}},
                960);
}

PolyJ oracle_c220() {
  return scaled({{{4, 0, 0}, 1},   {{3, 0, 0}, 4},   {{2, 2, 0}, 2},   {{2, 1, 0}, 4},  {{2, 0, 2}, 2},
                 {{2, 0, 1}, 4},   {{2, 0, 0}, 4},   {{1, 2, 0}, 4},   {{1, 1, 0}, 8},  {{1, 0, 2}, 4},
                 {{1, 0, 1}, 8},   {{0, 4, 0}, -3},  {{0, 3, 0}, -12}, {{0, 2, 2}, 6},  {{0, 2, 1}, 12},
                 {{0, 2, 0}, -12}, {{0, 1, 2}, 12},  {{0, 1, 1}, 24},  {{0, 0, 4}, -3}, {{0, 0, 3}, -12},
                 {{0, 0, 2}, -12}},
                480);
}

}  // namespace

TEST(ExpandPhi, Examples) {
  EXPECT_EQ(expand_phi(LaurentPoly3(Rat(1)), {0, 0, 0}, 4).series, TruncSeries3<Rat>(4, Rat(1)));
  const auto e = expand_phi(table10().phi({1, 1, 0}), {1, 1, 0}, 3).series;
  TruncSeries3<Rat> want(3, Rat(1));
  want.add_term({2, 0, 0}, Rat(1, 2));
  want.add_term({3, 0, 0}, Rat(-1, 2));
  EXPECT_EQ(e, want);
}

TEST(ExpandPhi, UnitConstantNoLinearTerm) {
  for (const auto& [j, s] : ex4().all()) {
    EXPECT_EQ(s.part(0), LaurentPoly3(Rat(1))) << triple_str(j);
    EXPECT_TRUE(s.part(1).is_zero()) << triple_str(j);
  }
}

TEST(InterpolationPlan, LowLevelsAreUnisolvent) {
  for (int d = 0; d <= 6; ++d) {
    const auto& plan = interpolation_plan(d);
    EXPECT_EQ(plan.triples.size(), plan.monomials.size());
    EXPECT_EQ(plan.top_level, 2 * d);
    EXPECT_EQ(required_level(d), std::max(2 * d + 2, 6));
  }
}

TEST(FitCoeffFamily, Examples) {
  const auto f100 = fit_coeff_family({1, 0, 0}, ex4());
  EXPECT_TRUE(f100.poly.is_zero());
  const auto refs = reference_families();
  const auto f200 = fit_coeff_family({2, 0, 0}, ex4());
  EXPECT_EQ(f200.poly, refs.at({2, 0, 0}));
  EXPECT_TRUE(f200.validated);
  const auto f300 = fit_coeff_family({3, 0, 0}, ex4());
  EXPECT_EQ(f300.poly, -f200.poly);
  EXPECT_EQ(f300.poly, refs.at({3, 0, 0}));
  EXPECT_EQ(f200.poly.eval(1, 1, 0), Rat(1, 2));
}

TEST(FitCoeffFamily, QuarticFamiliesMatchIndependentOracle) {
  EXPECT_EQ(fit_coeff_family({4, 0, 0}, ex4()).poly, oracle_c400());
  EXPECT_EQ(fit_coeff_family({2, 2, 0}, ex4()).poly, oracle_c220());
}

TEST(FitCoeffFamily, DegreeBoundOutOfSample) {
  const auto fams = fit_all_families(ex4(), 4);
  EXPECT_EQ(fams.size(), 35u);
  for (const auto& [m, f] : fams) {
    EXPECT_LE(f.poly.total_degree(), f.order()) << triple_str(m);
    EXPECT_TRUE(f.validated) << triple_str(m);
    EXPECT_GE(f.validation_count, 10);
  }
}

TEST(FitCoeffFamily, UnvalidatedFlagAndFalsification) {
  const auto t = solve_table(8);
  const ExpansionCache e(t, 4);
  const auto f = fit_coeff_family({4, 0, 0}, e);
  EXPECT_FALSE(f.validated);
  EXPECT_EQ(f.validation_count, 0);
  // perturb one out-of-sample entry at second order
  auto entries = table10().entries();
  entries[{5, 3, 2}] = entries[{5, 3, 2}] + (LaurentPoly3::variable(0, 2) + LaurentPoly3::variable(0, -2) -
                                             LaurentPoly3(Rat(2))) * Rat(1, 7);
  const SchurTable bad(10, entries);
  const ExpansionCache eb(bad, 4);
  EXPECT_THROW(fit_coeff_family({2, 0, 0}, eb), FalsificationError);
}

TEST(FitCoeffFamily, JsonRoundTrip) {
  const auto f = fit_coeff_family({2, 2, 0}, ex4());
  const auto back = family_from_json(family_to_json(f));
  EXPECT_EQ(back.poly, f.poly);
  EXPECT_EQ(back.mvec, f.mvec);
  EXPECT_EQ(back.fit_witnesses, f.fit_witnesses);
}

TEST(RecursionByComponents, Table8) {
  const auto t = solve_table(8);
  const ExpansionCache e(t, 6);
  const auto rep = verify_recursion_by_components(e, 4);
  EXPECT_TRUE(rep.all_pass());
}

TEST(RecursionByComponents, Entry110) {
  const auto t = solve_table(2);
  const ExpansionCache e(t, 2);
  const auto& s = e.at({1, 1, 0});
  LaurentPoly3 lhs;
  for (int m = -2; m <= 0; ++m) lhs += apply_homogeneous(homogeneous_component(1, m), s.part(-m));
  EXPECT_EQ(lhs, LaurentPoly3(Rat(4)));
}

TEST(ExpansionCache, DiskRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "g2schur_cache_test";
  std::filesystem::remove_all(dir);
  setenv("G2SCHUR_CACHE_DIR", dir.c_str(), 1);
  const auto t = solve_table(6);
  const ExpansionCache a(t, 4);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  const ExpansionCache b(t, 4);
  unsetenv("G2SCHUR_CACHE_DIR");
  EXPECT_EQ(a.all(), b.all());
  std::filesystem::remove_all(dir);
}
