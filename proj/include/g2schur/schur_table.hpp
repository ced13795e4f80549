#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2schur/json_io.hpp"
#include "g2schur/laurent.hpp"
#include "g2schur/parallel.hpp"
#include "g2schur/report.hpp"

namespace g2schur {

using Triple = std::array<int, 3>;

inline std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

inline int level(const Triple& t) { return t[0] + t[1] + t[2]; }

inline bool is_admissible(int j1, int j2, int j3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) return false;
  if ((j1 + j2 + j3) % 2 != 0) return false;
  const int lo = j1 > j2 ? j1 - j2 : j2 - j1;
  return lo <= j3 && j3 <= j1 + j2;
}
inline bool is_admissible(const Triple& t) { return is_admissible(t[0], t[1], t[2]); }

inline std::vector<Triple> enumerate_level(int n) {
  std::vector<Triple> out;
  if (n < 0 || n % 2 != 0) return out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      if (is_admissible(a, b, n - a - b)) out.push_back({a, b, n - a - b});
  return out;
}

inline Rat pieri_coeff(int a, int b, int j1, int j2, int j3) {
  const long f1 = static_cast<long>(a) * j1 + static_cast<long>(b) * j2 + j3 + a + b + 2;
  const long f2 = static_cast<long>(a) * j1 + static_cast<long>(b) * j2 - j3 + a + b;
  return Rat(a * b * f1 * f2, 4L * (j1 + 1) * (j2 + 1));
}

// The three Pieri equations: variable x_v, index pair (p, q), coefficient argument order.
struct PieriEquation {
  const char* name;
  int var;
  int p, q;
  int other;  // the unshifted index
};
inline constexpr std::array<PieriEquation, 3> kPieri{{
    {"pieri12", 0, 0, 1, 2},
    {"pieri13", 1, 0, 2, 1},
    {"pieri23", 2, 1, 2, 0},
}};

// K coefficient of equation eq at triple J for shift (a on index p, b on index q).
inline Rat pieri_coeff_eq(const PieriEquation& eq, int a, int b, const Triple& j) {
  return pieri_coeff(a, b, j[eq.p], j[eq.q], j[eq.other]);
}

inline Triple shifted(const Triple& j, const PieriEquation& eq, int a, int b) {
  Triple t = j;
  t[eq.p] += a;
  t[eq.q] += b;
  return t;
}

// Genus-two Schur table: every admissible triple up to max_level.
class SchurTable {
 public:
  SchurTable() = default;
  SchurTable(int max_level, std::map<Triple, LaurentPoly3> entries) : max_level_(max_level), entries_(std::move(entries)) {}

  int max_level() const { return max_level_; }
  const std::map<Triple, LaurentPoly3>& entries() const { return entries_; }
  bool contains(const Triple& t) const { return entries_.count(t) > 0; }

  // phi_J, or zero for non-admissible J.
  const LaurentPoly3& phi(const Triple& t) const {
    static const LaurentPoly3 zero;
    if (!is_admissible(t)) return zero;
    auto it = entries_.find(t);
    if (it == entries_.end()) throw Error("triple " + triple_str(t) + " beyond table level " + std::to_string(max_level_));
    return it->second;
  }

  // Index into kPieri of the equation used to construct t (nullopt for (0,0,0)).
  static std::optional<int> provenance(const Triple& t) {
    for (int e = 0; e < 3; ++e)
      if (is_admissible(shifted(t, kPieri[e], -1, -1))) return e;
    return std::nullopt;
  }

  friend bool operator==(const SchurTable& a, const SchurTable& b) {
    return a.max_level_ == b.max_level_ && a.entries_ == b.entries_;
  }

 private:
  int max_level_ = 0;
  std::map<Triple, LaurentPoly3> entries_;
};

// Right-hand side minus left-hand side of equation eq at J (zero when it holds).
inline LaurentPoly3 pieri_residual(const SchurTable& t, const PieriEquation& eq, const Triple& j) {
  LaurentPoly3 r = -(LaurentPoly3::symmetric_generator(eq.var) * t.phi(j));
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      const Rat k = pieri_coeff_eq(eq, a, b, j);
      if (!k.is_zero()) r += t.phi(shifted(j, eq, a, b)) * k;
    }
  return r;
}

namespace detail {

// Solve equation eq at predecessor P for phi_{P + e_p + e_q}, using entries already present.
inline LaurentPoly3 solve_from(const SchurTable& t, const PieriEquation& eq, const Triple& pred) {
  LaurentPoly3 rhs = LaurentPoly3::symmetric_generator(eq.var) * t.phi(pred);
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      if (a == 1 && b == 1) continue;
      const Rat k = pieri_coeff_eq(eq, a, b, pred);
      if (!k.is_zero()) rhs -= t.phi(shifted(pred, eq, a, b)) * k;
    }
  return rhs * pieri_coeff_eq(eq, 1, 1, pred).inverse();
}

}  // namespace detail

inline SchurTable solve_table(int max_level) {
  if (max_level < 0 || max_level % 2 != 0) throw Error("solve_table: max level must be a nonnegative even integer");
  std::map<Triple, LaurentPoly3> entries;
  entries.emplace(Triple{0, 0, 0}, LaurentPoly3(Rat(1)));
  for (int n = 2; n <= max_level; n += 2) {
    const SchurTable lower(n - 2, entries);
    const auto triples = enumerate_level(n);
    auto solved = parallel_map(triples, [&](const Triple& target) {
      std::optional<LaurentPoly3> phi;
      for (const auto& eq : kPieri) {
        const Triple pred = shifted(target, eq, -1, -1);
        if (!is_admissible(pred)) continue;
        LaurentPoly3 cand = detail::solve_from(lower, eq, pred);
        if (!phi) {
          phi = std::move(cand);
        } else if (!(cand == *phi)) {
          throw FalsificationError("inconsistent Pieri system at " + triple_str(target),
                                   std::string(eq.name) + " from predecessor " + triple_str(pred) +
                                       " gives a different polynomial");
        }
      }
      if (!phi) throw Error("no admissible predecessor for " + triple_str(target));
      return *phi;
    });
    for (std::size_t i = 0; i < triples.size(); ++i) entries.emplace(triples[i], std::move(solved[i]));
  }
  return SchurTable(max_level, std::move(entries));
}

struct LeadingTerm {
  Rat coeff;
  Exp3 exps;  // (d3, d2, d1): exponents of x12, x13, x23
};

inline Exp3 expected_leading_exponents(const Triple& j) {
  return {(j[0] + j[1] - j[2]) / 2, (j[0] - j[1] + j[2]) / 2, (-j[0] + j[1] + j[2]) / 2};
}

inline LeadingTerm leading_term(const LaurentPoly3& phi, const Triple& j) {
  auto top = phi.max_total_degree();
  if (!top) throw FalsificationError("leading term: zero polynomial", triple_str(j));
  const auto part = phi.homogeneous_part(*top);
  if (part.size() != 1)
    throw FalsificationError("leading term: top-degree part is not a single monomial at " + triple_str(j),
                             part.to_string());
  const auto& [e, c] = *part.terms().begin();
  if (e != expected_leading_exponents(j))
    throw FalsificationError("leading term: wrong exponents at " + triple_str(j), part.to_string());
  return {c, e};
}

// Pair (a,b) of 0-based indices -> variable index.
inline int pair_var(int a, int b) {
  if (a > b) std::swap(a, b);
  return a == 0 ? (b == 1 ? 0 : 1) : 2;
}

struct S3Result {
  bool ok = true;
  std::optional<Triple> witness;
};

// phi_J(x12,x13,x23) == phi_{sigma J}(x_{s1 s2}, x_{s1 s3}, x_{s2 s3}); sigma is 0-based.
inline S3Result s3_check(const SchurTable& t, const std::array<int, 3>& sigma) {
  const std::array<int, 3> slot_to_var{pair_var(sigma[0], sigma[1]), pair_var(sigma[0], sigma[2]),
                                       pair_var(sigma[1], sigma[2])};
  for (const auto& [j, phi] : t.entries()) {
    const Triple img{j[sigma[0]], j[sigma[1]], j[sigma[2]]};
    if (!t.contains(img) || !(t.phi(img).permute(slot_to_var) == phi)) return {false, j};
  }
  return {};
}

// All three Pieri equations at every J whose neighbours lie inside the table and level(J) <= through.
inline Report verify_pieri(const SchurTable& t, int through) {
  Report rep("pieri");
  through = std::min(through, t.max_level() - 2);
  for (const auto& [j, phi] : t.entries()) {
    if (level(j) > through) continue;
    for (const auto& eq : kPieri) {
      Stopwatch sw;
      const auto r = pieri_residual(t, eq, j);
      auto& rec = rep.add(std::string(eq.name) + triple_str(j), eq.name, r.is_zero(), {{"triple", j}},
                          r.is_zero() ? std::nullopt : std::optional<std::string>(r.to_string()));
      rec.millis = sw.millis();
    }
  }
  return rep;
}

// Unit value at (1,1,1), leading monomial structure, distinct leading exponents per level,
// invariance under each x_v -> 1/x_v.
inline Report verify_structure(const SchurTable& t) {
  Report rep("structure");
  std::map<int, std::map<Exp3, Triple>> seen;
  for (const auto& [j, phi] : t.entries()) {
    const Rat v = phi.value_at_ones();
    rep.add("unit" + triple_str(j), "unit_value", v.is_one(), {{"triple", j}},
            v.is_one() ? std::nullopt : std::optional<std::string>(v.str()));
    try {
      const auto lt = leading_term(phi, j);
      auto [it, fresh] = seen[level(j)].emplace(lt.exps, j);
      rep.add("lead" + triple_str(j), "leading_term", fresh, {{"triple", j}, {"exps", lt.exps}, {"coeff", lt.coeff.str()}},
              fresh ? std::nullopt : std::optional<std::string>("same leading exponents as " + triple_str(it->second)));
    } catch (const FalsificationError& e) {
      rep.add("lead" + triple_str(j), "leading_term", false, {{"triple", j}}, e.witness());
    }
    bool inv = true;
    for (int v2 = 0; v2 < 3; ++v2) inv = inv && phi.invert_variable(v2) == phi;
    rep.add("inv" + triple_str(j), "inversion_invariance", inv, {{"triple", j}});
  }
  return rep;
}

inline json table_to_json(const SchurTable& t) {
  json entries = json::array();
  for (const auto& [j, phi] : t.entries()) entries.push_back({{"triple", j}, {"poly", laurent_to_json(phi)}});
  return {{"format_version", 1}, {"max_level", t.max_level()}, {"entries", entries}};
}

inline std::string table_canonical_text(const SchurTable& t) { return canonical_dump(table_to_json(t)); }
inline std::string table_checksum(const SchurTable& t) { return fnv1a64_hex(table_canonical_text(t)); }

inline SchurTable table_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("table: top level must be an object");
  if (!j.contains("format_version") || j.at("format_version") != 1) throw FormatError("table: unsupported format_version");
  if (!j.contains("max_level") || !j.at("max_level").is_number_integer()) throw FormatError("table: missing max_level");
  const int max_level = j.at("max_level").get<int>();
  if (max_level < 0 || max_level % 2 != 0) throw FormatError("table: max_level must be even and nonnegative");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw FormatError("table: missing entries");
  std::map<Triple, LaurentPoly3> entries;
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("triple") || !e.contains("poly")) throw FormatError("table: malformed entry");
    const Triple t = exp_from_json(e.at("triple"));
    if (!is_admissible(t)) throw FormatError("table: non-admissible triple " + triple_str(t));
    if (level(t) > max_level) throw FormatError("table: triple " + triple_str(t) + " above max_level");
    if (entries.count(t)) throw FormatError("table: duplicate triple " + triple_str(t));
    entries.emplace(t, laurent_from_json(e.at("poly")));
  }
  for (int n = 0; n <= max_level; n += 2)
    for (const auto& t : enumerate_level(n))
      if (!entries.count(t)) throw FormatError("table: incomplete, missing " + triple_str(t));
  return SchurTable(max_level, std::move(entries));
}

inline void save_table(const SchurTable& t, const std::string& path) { write_file(path, table_canonical_text(t)); }

inline SchurTable load_table(const std::string& path) {
  return table_from_json(parse_json(read_file(path), "table " + path));
}

}  // namespace g2schur
