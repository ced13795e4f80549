#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "g2schur/report.hpp"
#include "g2schur/schur_table.hpp"
#include "g2schur/trunc_series.hpp"

namespace g2schur {

// One term num / ((x_a - 1/x_a)^over_a (x_b - 1/x_b)^over_b) * d^deriv.
struct DiffTerm {
  LaurentPoly3 num;
  bool over_a = false;
  bool over_b = false;
  Exp3 deriv{0, 0, 0};
};

struct DiffOpSpec {
  int index = 1;      // 1, 2, 3
  int a = 0, b = 1;   // variables carrying the derivatives
  int c = 2;          // the spectator variable
  std::vector<DiffTerm> terms;
};

// Variables (a, b, c) of H_k: H1 (x12,x13 | x23), H2 (x12,x23 | x13), H3 (x13,x23 | x12).
inline std::array<int, 3> hamiltonian_vars(int k) {
  switch (k) {
    case 1: return {0, 1, 2};
    case 2: return {0, 2, 1};
    case 3: return {1, 2, 0};
  }
  throw Error("Hamiltonian index must be 1, 2 or 3");
}

inline DiffOpSpec hamiltonian(int k) {
  const auto [a, b, c] = hamiltonian_vars(k);
  using L = LaurentPoly3;
  const L one(Rat(1));
  auto unit = [](int v, int n) {
    Exp3 e{0, 0, 0};
    e[v] = n;
    return e;
  };
  DiffOpSpec op{k, a, b, c, {}};
  op.terms.push_back({L::variable(a, 2), false, false, unit(a, 2)});
  op.terms.push_back({L::variable(b, 2), false, false, unit(b, 2)});
  const L cross = (L::variable(a, 2) + one) * (L::variable(b, 2) + one) * Rat(2) -
                  L::variable(a) * L::variable(b) * L::symmetric_generator(c) * Rat(4);
  op.terms.push_back({cross, true, true, unit(a, 1) + unit(b, 1)});
  op.terms.push_back({L::variable(a, 2) * Rat(3) + one, true, false, unit(a, 1)});
  op.terms.push_back({L::variable(b, 2) * Rat(3) + one, false, true, unit(b, 1)});
  op.terms.push_back({one, false, false, {0, 0, 0}});
  return op;
}

// D_k = (x_a - 1/x_a)(x_b - 1/x_b)
inline LaurentPoly3 cleared_denominator(int k) {
  const auto v = hamiltonian_vars(k);
  return LaurentPoly3::antisymmetric_generator(v[0]) * LaurentPoly3::antisymmetric_generator(v[1]);
}

// D_k * (H_k p - mu p); zero exactly when p is a mu-eigenfunction.
inline LaurentPoly3 apply_H_cleared(int k, const LaurentPoly3& p, const Rat& mu) {
  const DiffOpSpec op = hamiltonian(k);
  const LaurentPoly3 fa = LaurentPoly3::antisymmetric_generator(op.a);
  const LaurentPoly3 fb = LaurentPoly3::antisymmetric_generator(op.b);
  LaurentPoly3 r;
  for (const auto& t : op.terms) {
    LaurentPoly3 d = p.partial(t.deriv);
    if (d.is_zero()) continue;
    LaurentPoly3 term = t.num * d;
    if (!t.over_a) term = term * fa;
    if (!t.over_b) term = term * fb;
    r += term;
  }
  r -= cleared_denominator(k) * p * mu;
  return r;
}

// Degree-m component of H_k after x = 1 + X: sum of coeff * d^deriv with coeff homogeneous of degree m + |deriv|.
struct HomogeneousOp {
  int k = 1;
  int degree = -2;
  std::map<Exp3, LaurentPoly3> terms;  // deriv multi-index -> coefficient
};

namespace detail {

// (1+X)/(2+X) through `order` in variable v.
inline TruncSeries3<Rat> inv_factor_series(int v, int order) {
  TruncSeries3<Rat> s(order);
  // (1+X) * sum_n (-1)^n X^n / 2^(n+1)
  for (int n = 0; n <= order; ++n) {
    Rat c = Rat(n % 2 ? -1 : 1) * pow(Rat(1, 2), static_cast<unsigned>(n + 1));
    Exp3 e{0, 0, 0};
    e[v] = n;
    s.add_term(e, c);
    if (n + 1 <= order) {
      e[v] = n + 1;
      s.add_term(e, c);
    }
  }
  return s;
}

inline HomogeneousOp build_component(int k, int m) {
  const DiffOpSpec op = hamiltonian(k);
  HomogeneousOp h{k, m, {}};
  for (const auto& t : op.terms) {
    const int ord = total_degree(t.deriv);
    const int neg = static_cast<int>(t.over_a) + static_cast<int>(t.over_b);
    const int s = m + ord + neg;  // degree needed in the regular factor
    if (s < 0) continue;
    TruncSeries3<Rat> reg = shift_expand(t.num, s);
    if (t.over_a) reg *= inv_factor_series(op.a, s);
    if (t.over_b) reg *= inv_factor_series(op.b, s);
    Exp3 shift{0, 0, 0};
    if (t.over_a) shift[op.a] -= 1;
    if (t.over_b) shift[op.b] -= 1;
    LaurentPoly3 coeff = reg.part(s).shift(shift);
    if (coeff.is_zero()) continue;
    auto [it, fresh] = h.terms.try_emplace(t.deriv, coeff);
    if (!fresh) it->second += coeff;
    if (it->second.is_zero()) h.terms.erase(it);
  }
  return h;
}

}  // namespace detail

inline const HomogeneousOp& homogeneous_component(int k, int m) {
  if (m < -2) throw Error("homogeneous_component: degree must be >= -2");
  static std::mutex mu;
  static std::map<std::pair<int, int>, HomogeneousOp> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, m});
  if (it == cache.end()) it = cache.emplace(std::make_pair(k, m), detail::build_component(k, m)).first;
  return it->second;
}

template <class F>
Laurent3<F> lift(const LaurentPoly3& p) {
  if constexpr (std::is_same_v<F, Rat>) {
    return p;
  } else {
    Laurent3<F> r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, F(c));
    return r;
  }
}

template <class F>
Laurent3<F> apply_homogeneous(const HomogeneousOp& op, const Laurent3<F>& p) {
  Laurent3<F> r;
  for (const auto& [deriv, coeff] : op.terms) {
    Laurent3<F> d = p.partial(deriv);
    if (d.is_zero()) continue;
    r += lift<F>(coeff) * d;
  }
  return r;
}

inline Report verify_eigen(const SchurTable& t, int max_level) {
  Report rep("eigen");
  std::vector<Triple> triples;
  for (const auto& [j, phi] : t.entries())
    if (level(j) <= max_level) triples.push_back(j);
  auto results = parallel_map(triples, [&](const Triple& j) {
    std::vector<CheckRecord> recs;
    for (int k = 1; k <= 3; ++k) {
      Stopwatch sw;
      const Rat mu = Rat(j[k - 1] + 1) * Rat(j[k - 1] + 1);
      const auto r = apply_H_cleared(k, t.phi(j), mu);
      CheckRecord rec{"eigen" + std::to_string(k) + triple_str(j), "eigen",
                      r.is_zero() ? Status::Pass : Status::Fail,
                      {{"triple", j}, {"k", k}, {"eigenvalue", mu.str()}},
                      r.is_zero() ? std::nullopt : std::optional<std::string>(r.to_string()), 0};
      rec.millis = sw.millis();
      recs.push_back(std::move(rec));
    }
    return recs;
  });
  for (auto& v : results)
    for (auto& r : v) rep.add(std::move(r));
  return rep;
}

}  // namespace g2schur
