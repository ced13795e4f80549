#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2schur/dense_poly.hpp"
#include "g2schur/diffops.hpp"
#include "g2schur/linalg.hpp"
#include "g2schur/parallel.hpp"
#include "g2schur/report.hpp"

namespace g2schur {

struct PBasisElement {
  int m = 0, k = 0, l = 0;
  LaurentPoly3 poly;
};

namespace detail {

inline LaurentPoly3 eval_at(const DensePoly1& p, const LaurentPoly3& x) {
  LaurentPoly3 r;
  for (int i = p.degree(); i >= 0; --i) r = r * x + LaurentPoly3(p.coeff(i));
  return r;
}

inline LaurentPoly3 u_var() { return (LaurentPoly3::variable(0) - LaurentPoly3::variable(1)) * LaurentPoly3::variable(2, -1); }
inline LaurentPoly3 v_var() { return (LaurentPoly3::variable(0) + LaurentPoly3::variable(1)) * LaurentPoly3::variable(2, -1); }

inline Rat double_factorial(int n) {
  Rat r(1);
  for (int i = n; i > 1; i -= 2) r *= Rat(i);
  return r;
}

}  // namespace detail

// X23^m P_k(U) P_l(V) for any k, l; a Laurent expression once k + l > m.
inline LaurentPoly3 pbasis_laurent(int m, int k, int l) {
  if (m < 0 || k < 0 || l < 0) throw Error("pbasis: negative index");
  return LaurentPoly3::variable(2, m) * detail::eval_at(legendre(k), detail::u_var()) *
         detail::eval_at(legendre(l), detail::v_var());
}

inline PBasisElement pbasis(int m, int k, int l) {
  if (k + l > m) throw Error("pbasis: need k + l <= m");
  auto p = pbasis_laurent(m, k, l);
  if (!p.is_polynomial()) throw Error("pbasis: negative powers of X23 did not cancel at " + triple_str({m, k, l}));
  return {m, k, l, std::move(p)};
}

// All exponent triples of total degree m, in map order.
inline std::vector<Exp3> monomials_of_degree(int m) {
  std::vector<Exp3> r;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b) r.push_back({a, b, m - a - b});
  return r;
}

inline RatVector coordinates(const LaurentPoly3& p, int m) {
  const auto mons = monomials_of_degree(m);
  RatVector v(mons.size(), Rat(0));
  std::size_t seen = 0;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    v[i] = p.coeff(mons[i]);
    seen += !v[i].is_zero();
  }
  if (seen != p.size()) throw Error("coordinates: not a degree-" + std::to_string(m) + " polynomial");
  return v;
}

inline LaurentPoly3 from_coordinates(const RatVector& v, int m) {
  const auto mons = monomials_of_degree(m);
  LaurentPoly3 p;
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!v[i].is_zero()) p.add_term(mons[i], v[i]);
  return p;
}

struct HomogeneousSpace {
  int degree = 0;
  std::vector<PBasisElement> basis;
};

inline HomogeneousSpace homogeneous_space(int m) {
  HomogeneousSpace s{m, {}};
  RowEchelon e(monomials_of_degree(m).size());
  for (int k = 0; k <= m; ++k)
    for (int l = 0; k + l <= m; ++l) {
      s.basis.push_back(pbasis(m, k, l));
      if (!e.insert(coordinates(s.basis.back().poly, m)))
        throw FalsificationError("P basis is linearly dependent", "m=" + std::to_string(m));
    }
  return s;
}

// Stacked matrix of the degree -2 components H_i on degree-m polynomials, rows keyed by output monomial.
inline RatMatrix stacked_matrix(const std::vector<int>& ops, int m) {
  const auto mons = monomials_of_degree(m);
  RatMatrix rows;
  for (int k : ops) {
    const auto& h = homogeneous_component(k, -2);
    std::map<Exp3, RatVector> block;
    for (std::size_t j = 0; j < mons.size(); ++j) {
      const auto img = apply_homogeneous(h, LaurentPoly3::monomial(mons[j]));
      for (const auto& [e, c] : img.terms()) {
        auto& row = block[e];
        if (row.empty()) row.assign(mons.size(), Rat(0));
        row[j] += c;
      }
    }
    for (auto& [e, row] : block) rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<LaurentPoly3> common_nullspace(const std::vector<int>& ops, int m) {
  const auto n = monomials_of_degree(m).size();
  std::vector<LaurentPoly3> r;
  for (const auto& v : nullspace(stacked_matrix(ops, m), n)) r.push_back(from_coordinates(v, m));
  return r;
}

inline bool same_span_polys(const std::vector<LaurentPoly3>& a, const std::vector<LaurentPoly3>& b, int m) {
  std::vector<RatVector> va, vb;
  for (const auto& p : a) va.push_back(coordinates(p, m));
  for (const auto& p : b) vb.push_back(coordinates(p, m));
  return same_span(va, vb, monomials_of_degree(m).size());
}

inline std::vector<PBasisElement> claimed_kernel_H1(int m) {
  std::vector<PBasisElement> r;
  for (int l = 0; 2 * l <= m; ++l) r.push_back(pbasis(m, l, l));
  return r;
}

inline Rat h1_eigenvalue(int k, int l) { return Rat(l * (l + 1) - k * (k + 1)); }

// X12 X13 H1 on P_{m,k,l} minus its eigenvalue multiple; zero when diagonal.
inline LaurentPoly3 h1_diagonal_residual(const PBasisElement& p) {
  const auto x = LaurentPoly3::variable(0) * LaurentPoly3::variable(1);
  return x * apply_homogeneous(homogeneous_component(1, -2), p.poly) - p.poly * h1_eigenvalue(p.k, p.l);
}

struct KernelH1 {
  int degree = 0;
  std::vector<LaurentPoly3> nullspace;
  std::vector<PBasisElement> claimed;
};

inline KernelH1 kernel_H1(int m) {
  if (m < 0) throw Error("kernel_H1: negative degree");
  KernelH1 r{m, common_nullspace({1}, m), claimed_kernel_H1(m)};
  std::vector<LaurentPoly3> c;
  for (const auto& p : r.claimed) c.push_back(p.poly);
  if (!same_span_polys(r.nullspace, c, m))
    throw FalsificationError("ker H1 differs from span of P_{m,l,l}",
                             "m=" + std::to_string(m) + " nullspace dim " + std::to_string(r.nullspace.size()));
  for (const auto& p : homogeneous_space(m).basis) {
    const auto res = h1_diagonal_residual(p);
    if (!res.is_zero())
      throw FalsificationError("X12 X13 H1 not diagonal on P basis", triple_str({p.m, p.k, p.l}) + ": " + res.to_string());
  }
  return r;
}

// Both sides of the H2 and H3 action formulas on P_{m,l,l}.
inline Report action_check(int m, int l) {
  if (2 * l > m) throw Error("action_check: need 2l <= m");
  Report rep("action");
  rep.config() = {{"m", m}, {"l", l}};
  const auto x12 = LaurentPoly3::variable(0), x13 = LaurentPoly3::variable(1), x23 = LaurentPoly3::variable(2);
  const auto p = pbasis_laurent(m, l, l), pk = pbasis_laurent(m, l + 1, l), pl = pbasis_laurent(m, l, l + 1);
  const Rat a(m + 1), b(m + 2 * l + 2), c(l + 1);
  const auto inv23 = LaurentPoly3::variable(2, -1);
  const auto lhs2 = x12 * x23 * apply_homogeneous(homogeneous_component(2, -2), p);
  const auto rhs2 = (x12 * inv23 * p * b - pk * c - pl * c) * a;
  const auto lhs3 = x13 * x23 * apply_homogeneous(homogeneous_component(3, -2), p);
  const auto rhs3 = (x13 * inv23 * p * b + pk * c - pl * c) * a;
  const std::string tag = std::to_string(m) + "_" + std::to_string(l);
  for (auto [k, lhs, rhs] : {std::tuple{2, &lhs2, &rhs2}, std::tuple{3, &lhs3, &rhs3}}) {
    const auto d = *lhs - *rhs;
    rep.add("h" + std::to_string(k) + "_action_" + tag, "action", d.is_zero(), {{"m", m}, {"l", l}, {"operator", k}},
            d.is_zero() ? std::nullopt : std::optional<std::string>(d.to_string()));
  }
  return rep;
}

// (1-x^2) P_l' + (l+1)(P_{l+1} - x P_l) = 0
inline bool legendre_derivative_identity(int l) {
  const DensePoly1 x = DensePoly1::x();
  const DensePoly1 r = (DensePoly1(1) - x * x) * legendre(l).derivative() +
                       (legendre(l + 1) - x * legendre(l)) * Rat(l + 1);
  return r.is_zero();
}

// Expected lex-leading term of H_k P_{m,l,l}, k = 2 or 3.
inline std::optional<std::pair<Exp3, Rat>> expected_leading(int k, int m, int l) {
  if (m == 0) return std::nullopt;
  const Rat lf2 = factorial(l) * factorial(l);
  if (m > 2 * l) {
    const Rat df = detail::double_factorial(2 * l - 1);
    return std::make_pair(Exp3{2 * l, 0, m - 2 * l - 2}, df * df / lf2 * Rat((m + 1) * (m - 2 * l)));
  }
  const Rat df = detail::double_factorial(2 * l + 1);
  Rat c = df * df / lf2 * Rat(2 * l * l, 4 * l * l - 1);
  if (k == 3) c = -c;
  return std::make_pair(Exp3{2 * l - 2, 0, 0}, c);
}

inline Report leading_term_check(int m, int l) {
  if (2 * l > m) throw Error("leading_term_check: need 2l <= m");
  Report rep("leading_term");
  rep.config() = {{"m", m}, {"l", l}};
  const auto p = pbasis(m, l, l).poly;
  for (int k = 2; k <= 3; ++k) {
    const auto got = apply_homogeneous(homogeneous_component(k, -2), p).lex_leading();
    const auto want = expected_leading(k, m, l);
    const bool ok = got == want;
    auto show = [](const std::optional<std::pair<Exp3, Rat>>& t) {
      return t ? t->second.str() + "*X^" + triple_str(t->first) : std::string("0");
    };
    rep.add("h" + std::to_string(k) + "_leading_" + std::to_string(m) + "_" + std::to_string(l), "leading_term", ok,
            {{"m", m}, {"l", l}, {"operator", k}, {"leading", show(got)}},
            ok ? std::nullopt : std::optional<std::string>("expected " + show(want)));
  }
  return rep;
}

// Displayed generator of ker H1 cap ker Hj at degree 2n, j = 2 or 3.
inline LaurentPoly3 phi_even(int j, int n) {
  LaurentPoly3 r;
  for (int l = 0; l <= n; ++l) {
    Rat c = Rat(2 * l + 1, n + l + 1) * binomial(2 * n, n - l);
    if (j == 2 && (n - l) % 2) c = -c;
    r += pbasis(2 * n, l, l).poly * c;
  }
  return r;
}

inline std::vector<LaurentPoly3> common_kernel(int j, int m) {
  if (j != 2 && j != 3) throw Error("common_kernel: pair must be (1,2) or (1,3)");
  if (m < 0) throw Error("common_kernel: negative degree");
  auto ker = common_nullspace({1, j}, m);
  const std::string w = "pair (1," + std::to_string(j) + ") m=" + std::to_string(m);
  if (ker.size() != (m % 2 ? 0u : 1u))
    throw FalsificationError("common kernel dimension", w + " dim " + std::to_string(ker.size()));
  if (m % 2 == 0 && !same_span_polys(ker, {phi_even(j, m / 2)}, m))
    throw FalsificationError("common kernel not spanned by displayed generator", w);
  return ker;
}

inline std::size_t triple_kernel(int m) {
  if (m < 0) throw Error("triple_kernel: negative degree");
  const auto d = common_nullspace({1, 2, 3}, m).size();
  if (d != (m == 0 ? 1u : 0u)) throw FalsificationError("triple kernel is not trivial", "m=" + std::to_string(m));
  return d;
}

// Two leading terms of P_k from Rodrigues' formula against the recurrence.
inline bool rodrigues_check(int k) {
  const auto p = legendre(k);
  const Rat lead = factorial(2 * k) / (pow(Rat(2), static_cast<unsigned>(k)) * factorial(k) * factorial(k));
  bool ok = p.degree() == k && p.coeff(k) == lead;
  if (k >= 1) ok = ok && p.coeff(k - 1).is_zero();
  if (k >= 2) ok = ok && p.coeff(k - 2) == -factorial(2 * k - 2) / (pow(Rat(2), static_cast<unsigned>(k)) * factorial(k - 1) * factorial(k - 2));
  return ok;
}

// Kernel dimensions per degree, computed without the throwing wrappers so failures land in the report.
inline json kernel_degree_json(int m) {
  const auto dim = [&](std::vector<int> ops) { return common_nullspace(ops, m).size(); };
  const auto d1 = dim({1}), d12 = dim({1, 2}), d13 = dim({1, 3}), d123 = dim({1, 2, 3});
  const std::size_t want_pair = m % 2 ? 0 : 1;
  const bool ok = d1 == static_cast<std::size_t>(m / 2 + 1) && d12 == want_pair && d13 == want_pair &&
                  d123 == (m == 0 ? 1u : 0u);
  return {{"degree", m}, {"dim_H1", d1}, {"dim_pair_12", d12}, {"dim_pair_13", d13}, {"dim_triple", d123},
          {"status", ok ? "pass" : "fail"}};
}

inline Report kernel_suite(int max_degree, int max_detail = 8) {
  Report rep("kernel");
  rep.config() = {{"max_degree", max_degree}, {"max_detail_degree", max_detail}};
  std::vector<int> ms;
  for (int m = 0; m <= max_degree; ++m) ms.push_back(m);
  auto per = parallel_map(ms, [&](int m) {
    std::vector<CheckRecord> recs;
    auto add = [&](std::string id, std::string check, bool ok, json data, std::optional<std::string> w = std::nullopt) {
      recs.push_back({std::move(id), std::move(check), ok ? Status::Pass : Status::Fail, std::move(data), std::move(w), 0});
    };
    const std::string s = std::to_string(m);
    const json dims = kernel_degree_json(m);
    add("dims" + s, "kernel_dimensions", dims["status"] == "pass", dims);
    {
      std::vector<LaurentPoly3> c;
      for (const auto& p : claimed_kernel_H1(m)) c.push_back(p.poly);
      add("kerH1_span" + s, "kernel_H1_span", same_span_polys(common_nullspace({1}, m), c, m), {{"degree", m}});
    }
    if (m % 2 == 0)
      for (int j = 2; j <= 3; ++j) {
        const auto phi = phi_even(j, m / 2);
        const bool ann = apply_homogeneous(homogeneous_component(1, -2), phi).is_zero() &&
                         apply_homogeneous(homogeneous_component(j, -2), phi).is_zero();
        add("phi1" + std::to_string(j) + "_" + s, "pair_generator", ann && same_span_polys(common_nullspace({1, j}, m), {phi}, m),
            {{"degree", m}, {"pair", j}});
      }
    if (m <= max_detail) {
      for (const auto& p : homogeneous_space(m).basis) {
        const auto r = h1_diagonal_residual(p);
        add("diag" + triple_str({p.m, p.k, p.l}), "h1_diagonal", r.is_zero(), {{"m", p.m}, {"k", p.k}, {"l", p.l}},
            r.is_zero() ? std::nullopt : std::optional<std::string>(r.to_string()));
      }
      for (int l = 0; 2 * l <= m; ++l) {
        for (const auto& part : {action_check(m, l), leading_term_check(m, l)})
          for (const auto& r : part.records()) recs.push_back(r);
      }
    }
    return recs;
  });
  json dims = json::array();
  for (auto& recs : per)
    for (auto& r : recs) {
      if (r.check == "kernel_dimensions") dims.push_back(r.data);
      rep.add(std::move(r));
    }
  for (int k = 0; k <= 12; ++k) {
    rep.add("rodrigues" + std::to_string(k), "rodrigues", rodrigues_check(k), {{"k", k}});
    rep.add("legendre_identity" + std::to_string(k), "legendre_identity", legendre_derivative_identity(k), {{"l", k}});
  }
  rep.extra() = {{"kernels", dims}};
  return rep;
}

}  // namespace g2schur
