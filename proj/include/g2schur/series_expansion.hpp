#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "g2schur/diffops.hpp"
#include "g2schur/linalg.hpp"
#include "g2schur/polyj.hpp"
#include "g2schur/schur_table.hpp"
#include "g2schur/trunc_series.hpp"

namespace g2schur {

using MVec = std::array<int, 3>;

struct PhiExpansion {
  Triple triple{};
  TruncSeries3<Rat> series;
  int order = 0;
};

inline PhiExpansion expand_phi(const LaurentPoly3& phi, const Triple& j, int order) {
  return {j, shift_expand(phi, order), order};
}

// Expansions of every table entry at one order. Optionally persisted under $G2SCHUR_CACHE_DIR,
// keyed by the table checksum.
class ExpansionCache {
 public:
  ExpansionCache(const SchurTable& t, int order) : table_(&t), order_(order), checksum_(table_checksum(t)) {
    if (!load_from_disk()) {
      std::vector<Triple> triples;
      for (const auto& [j, phi] : t.entries()) triples.push_back(j);
      auto ex = parallel_map(triples, [&](const Triple& j) { return shift_expand(t.phi(j), order_); });
      for (std::size_t i = 0; i < triples.size(); ++i) series_.emplace(triples[i], std::move(ex[i]));
      save_to_disk();
    }
  }

  int order() const { return order_; }
  const SchurTable& table() const { return *table_; }
  const std::string& checksum() const { return checksum_; }
  const TruncSeries3<Rat>& at(const Triple& j) const {
    auto it = series_.find(j);
    if (it == series_.end()) throw Error("no expansion for " + triple_str(j));
    return it->second;
  }
  const std::map<Triple, TruncSeries3<Rat>>& all() const { return series_; }

  Rat coeff(const Triple& j, const MVec& m) const { return at(j).coeff(m); }

 private:
  std::string disk_path() const {
    const char* dir = std::getenv("G2SCHUR_CACHE_DIR");
    if (!dir || !*dir) return {};
    return (std::filesystem::path(dir) / ("expansion_" + checksum_ + "_order" + std::to_string(order_) + ".json")).string();
  }

  bool load_from_disk() {
    const std::string path = disk_path();
    if (path.empty() || !std::filesystem::exists(path)) return false;
    try {
      const json j = parse_json(read_file(path), "expansion cache");
      if (j.at("table_checksum") != checksum_ || j.at("order") != order_) return false;
      std::map<Triple, TruncSeries3<Rat>> s;
      for (const auto& e : j.at("entries")) {
        const Triple t = exp_from_json(e.at("triple"));
        if (!table_->contains(t)) return false;
        s.emplace(t, TruncSeries3<Rat>::from_poly(laurent_from_json(e.at("series")), order_));
      }
      if (s.size() != table_->entries().size()) return false;
      series_ = std::move(s);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  void save_to_disk() const {
    const std::string path = disk_path();
    if (path.empty()) return;
    json entries = json::array();
    for (const auto& [t, s] : series_) entries.push_back({{"triple", t}, {"series", laurent_to_json(s.to_poly())}});
    try {
      std::filesystem::create_directories(std::filesystem::path(path).parent_path());
      write_file(path, canonical_dump({{"table_checksum", checksum_}, {"order", order_}, {"entries", entries}}));
    } catch (const std::exception&) {
      // a cache that cannot be written is only a missed speedup
    }
  }

  const SchurTable* table_;
  int order_;
  std::string checksum_;
  std::map<Triple, TruncSeries3<Rat>> series_;
};

// Monomials j^a of total degree <= d, graded then lexicographic.
inline std::vector<Exp3> jmonomials(int d) {
  std::vector<Exp3> out;
  for (int t = 0; t <= d; ++t)
    for (int a = t; a >= 0; --a)
      for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  return out;
}

inline RatVector jmonomial_row(const std::vector<Exp3>& mons, const Triple& j) {
  RatVector r;
  r.reserve(mons.size());
  for (const auto& e : mons)
    r.push_back(pow(Rat(j[0]), static_cast<unsigned>(e[0])) * pow(Rat(j[1]), static_cast<unsigned>(e[1])) *
                pow(Rat(j[2]), static_cast<unsigned>(e[2])));
  return r;
}

// Interpolation plan for polynomials of degree <= d: greedy choice of triples in enumeration
// order until full rank, plus the inverse of the resulting square system.
struct InterpolationPlan {
  int degree = 0;
  std::vector<Exp3> monomials;
  std::vector<Triple> triples;
  RatMatrix inverse;
  int top_level = 0;  // highest level used by the fitting triples
};

inline const InterpolationPlan& interpolation_plan(int d) {
  static std::mutex mu;
  static std::map<int, InterpolationPlan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  InterpolationPlan plan;
  plan.degree = d;
  plan.monomials = jmonomials(d);
  RowEchelon ech(plan.monomials.size());
  RatMatrix a;
  for (int n = 0; plan.triples.size() < plan.monomials.size(); n += 2) {
    if (n > 4 * d + 8) throw Error("interpolation plan: triples do not reach full rank");
    for (const auto& j : enumerate_level(n)) {
      if (plan.triples.size() == plan.monomials.size()) break;
      RatVector row = jmonomial_row(plan.monomials, j);
      if (ech.insert(row)) {
        plan.triples.push_back(j);
        a.push_back(std::move(row));
        plan.top_level = n;
      }
    }
  }
  auto inv = inverse(a);
  if (!inv) throw Error("interpolation plan: singular system");
  plan.inverse = std::move(*inv);
  return cache.emplace(d, std::move(plan)).first->second;
}

// Smallest table level that supports a validated fit at degree d.
inline int required_level(int d) {
  const auto& plan = interpolation_plan(d);
  int n = plan.top_level, extra = 0;
  for (const auto& j : enumerate_level(n))
    if (std::find(plan.triples.begin(), plan.triples.end(), j) == plan.triples.end()) ++extra;
  while (extra < 10) {
    n += 2;
    extra += static_cast<int>(enumerate_level(n).size());
  }
  return n;
}

struct CoeffFamily {
  MVec mvec{};
  PolyJ poly;
  std::vector<Triple> fit_witnesses;
  int validation_count = 0;
  bool validated = false;

  int order() const { return mvec[0] + mvec[1] + mvec[2]; }
};

inline CoeffFamily fit_coeff_family(const MVec& m, const ExpansionCache& ex) {
  const int d = m[0] + m[1] + m[2];
  if (d > ex.order()) throw Error("fit_coeff_family: expansion order too small");
  const auto& plan = interpolation_plan(d);
  for (const auto& j : plan.triples)
    if (!ex.table().contains(j)) throw Error("fit_coeff_family: table level too small for degree " + std::to_string(d));
  RatVector values;
  for (const auto& j : plan.triples) values.push_back(ex.coeff(j, m));
  const RatVector sol = mat_vec(plan.inverse, values);
  CoeffFamily fam;
  fam.mvec = m;
  fam.fit_witnesses = plan.triples;
  for (std::size_t i = 0; i < sol.size(); ++i) fam.poly.add_term(plan.monomials[i], sol[i]);
  std::set<Triple> used(plan.triples.begin(), plan.triples.end());
  for (const auto& [j, s] : ex.all()) {
    if (used.count(j)) continue;
    const Rat want = s.coeff(m);
    const Rat got = fam.poly.eval(j[0], j[1], j[2]);
    if (want != got)
      throw FalsificationError("coefficient family " + triple_str(m) + " is not a polynomial of degree <= " +
                                   std::to_string(d),
                               "triple " + triple_str(j) + ": series coefficient " + want.str() + ", fit " + got.str());
    ++fam.validation_count;
  }
  fam.validated = fam.validation_count >= 10;
  return fam;
}

inline std::vector<MVec> mvecs_of_order(int d) {
  std::vector<MVec> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

// All families with |mvec| <= max_order, ordered by degree then lexicographically descending.
inline std::map<MVec, CoeffFamily> fit_all_families(const ExpansionCache& ex, int max_order) {
  std::vector<MVec> ms;
  for (int d = 0; d <= max_order; ++d)
    for (const auto& m : mvecs_of_order(d)) ms.push_back(m);
  for (int d = 0; d <= max_order; ++d) interpolation_plan(d);
  auto fams = parallel_map(ms, [&](const MVec& m) { return fit_coeff_family(m, ex); });
  std::map<MVec, CoeffFamily> out;
  for (auto& f : fams) out.emplace(f.mvec, std::move(f));
  return out;
}

inline json family_to_json(const CoeffFamily& f) {
  json w = json::array();
  for (const auto& t : f.fit_witnesses) w.push_back(t);
  return {{"mvec", f.mvec},
          {"poly", polyj_to_json(f.poly)},
          {"fit_witnesses", w},
          {"validation_triples", f.validation_count},
          {"validated", f.validated}};
}

inline CoeffFamily family_from_json(const json& j) {
  CoeffFamily f;
  f.mvec = exp_from_json(j.at("mvec"));
  f.poly = polyj_from_json(j.at("poly"));
  if (j.contains("fit_witnesses"))
    for (const auto& t : j.at("fit_witnesses")) f.fit_witnesses.push_back(exp_from_json(t));
  f.validation_count = j.value("validation_triples", 0);
  f.validated = j.value("validated", false);
  return f;
}

// sum_m H_k^(m) phi^(l-m) - (j_k+1)^2 phi^(l), for l = -2..L; expansions needed to order L+2.
inline Report verify_recursion_by_components(const ExpansionCache& ex, int L) {
  if (ex.order() < L + 2) throw Error("verify_recursion_by_components: expansion order must be >= L+2");
  Report rep("recursion_components");
  std::vector<Triple> triples;
  for (const auto& [j, s] : ex.all()) triples.push_back(j);
  auto results = parallel_map(triples, [&](const Triple& j) {
    std::vector<CheckRecord> recs;
    const auto& s = ex.at(j);
    for (int k = 1; k <= 3; ++k) {
      const Rat mu = Rat(j[k - 1] + 1) * Rat(j[k - 1] + 1);
      for (int l = -2; l <= L; ++l) {
        Stopwatch sw;
        LaurentPoly3 lhs;
        for (int m = -2; m <= l; ++m) lhs += apply_homogeneous(homogeneous_component(k, m), s.part(l - m));
        if (l >= 0) lhs -= s.part(l) * mu;
        CheckRecord rec{"rec" + std::to_string(k) + "_" + std::to_string(l) + triple_str(j), "recursion_component",
                        lhs.is_zero() ? Status::Pass : Status::Fail,
                        {{"triple", j}, {"k", k}, {"l", l}},
                        lhs.is_zero() ? std::nullopt : std::optional<std::string>(lhs.to_string(kShiftVars)), 0};
        rec.millis = sw.millis();
        recs.push_back(std::move(rec));
      }
    }
    return recs;
  });
  for (auto& v : results)
    for (auto& r : v) rep.add(std::move(r));
  return rep;
}

// Reference polynomials for four families in closed form.
inline std::map<MVec, PolyJ> reference_families() {
  auto poly = [](std::initializer_list<std::pair<Exp3, int>> terms, const Rat& scale) {
    PolyJ p;
    for (const auto& [e, c] : terms) p.add_term(e, Rat(c) * scale);
    return p;
  };
  const PolyJ c200 = poly({{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}}, Rat(1, 12)) +
                     poly({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, -1}}, Rat(1, 6));
  const PolyJ c400 =
      poly({{{4, 0, 0}, 3}, {{2, 2, 0}, 2}, {{2, 0, 2}, -6}, {{0, 4, 0}, 3}, {{0, 2, 2}, -6}, {{0, 0, 4}, 3}}, Rat(1, 960)) +
      poly({{{3, 0, 0}, 1}, {{2, 1, 0}, 2}, {{2, 0, 1}, -3}, {{1, 2, 0}, 1}, {{1, 0, 2}, -3}, {{0, 2, 0}, 3}}, Rat(1, 240)) +
      poly({{{0, 2, 1}, -1}, {{0, 1, 2}, -1}, {{0, 0, 3}, 1}}, Rat(1, 80)) +
      poly({{{2, 0, 0}, 10}, {{1, 1, 0}, 1}, {{1, 0, 1}, -3}, {{0, 2, 0}, 10}, {{0, 1, 1}, -3}, {{0, 0, 2}, -7}},
           Rat(1, 120)) +
      poly({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, -1}}, Rat(17, 120));
  const PolyJ c220 =
      poly({{{4, 0, 0}, 1}, {{2, 2, 0}, 2}, {{2, 0, 2}, 2}, {{0, 4, 0}, -3}, {{0, 2, 2}, 6}, {{0, 0, 4}, -3}}, Rat(1, 480)) +
      poly({{{3, 0, 0}, 1},
            {{2, 1, 0}, 1},
            {{2, 0, 1}, 1},
            {{1, 2, 0}, 1},
            {{1, 0, 2}, 1},
            {{0, 3, 0}, -3},
            {{0, 2, 1}, 3},
            {{0, 1, 2}, 1},
            {{0, 0, 3}, -3}},
           Rat(1, 120)) +
      poly({{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{1, 0, 1}, 2}, {{0, 2, 0}, -3}, {{0, 1, 1}, 6}, {{0, 0, 2}, -3}}, Rat(1, 120));
  return {{{2, 0, 0}, c200}, {{3, 0, 0}, -c200}, {{4, 0, 0}, c400}, {{2, 2, 0}, c220}};
}

// Per-monomial difference description, empty when equal.
inline std::string polyj_diff(const PolyJ& got, const PolyJ& want) {
  std::string out;
  std::set<Exp3> keys;
  for (const auto& [e, c] : got.terms()) keys.insert(e);
  for (const auto& [e, c] : want.terms()) keys.insert(e);
  for (const auto& e : keys) {
    const Rat g = got.coeff(e), w = want.coeff(e);
    if (g == w) continue;
    if (!out.empty()) out += "; ";
    out += "j^" + triple_str(e) + ": computed " + g.str() + ", reference " + w.str();
  }
  return out;
}

}  // namespace g2schur
