#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "g2schur/laurent.hpp"

namespace g2schur {

class SingularSeriesError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

// Truncated power series in (X12, X13, X23), exact through total degree `order`.
// Stored as homogeneous parts 0..order.
template <class F>
class TruncSeries3 {
 public:
  using Poly = Laurent3<F>;

  explicit TruncSeries3(int order = 0) : parts_(static_cast<std::size_t>(check_order(order)) + 1) {}
  TruncSeries3(int order, const F& c) : TruncSeries3(order) { parts_[0] = Poly(c); }

  // Drops monomials above `order`; negative exponents are rejected.
  static TruncSeries3 from_poly(const Poly& p, int order) {
    TruncSeries3 s(order);
    for (const auto& [e, c] : p.terms()) s.add_term(e, c);
    return s;
  }

  static TruncSeries3 variable(int i, int order) { return from_poly(Poly::variable(i), order); }

  int order() const { return static_cast<int>(parts_.size()) - 1; }
  const Poly& part(int d) const { return parts_.at(static_cast<std::size_t>(d)); }
  const std::vector<Poly>& parts() const { return parts_; }

  bool is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const Poly& p) { return p.is_zero(); });
  }

  F coeff(const Exp3& e) const {
    const int d = total_degree(e);
    if (d < 0 || d > order()) return F(0);
    return parts_[static_cast<std::size_t>(d)].coeff(e);
  }

  void add_term(const Exp3& e, const F& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw ArithmeticError("TruncSeries3: negative exponent");
    const int d = total_degree(e);
    if (d > order()) return;
    parts_[static_cast<std::size_t>(d)].add_term(e, c);
  }

  void set_part(int d, Poly p) {
    for (const auto& [e, c] : p.terms())
      if (total_degree(e) != d || e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw ArithmeticError("TruncSeries3: part is not a homogeneous polynomial of the stated degree");
    if (d <= order()) parts_.at(static_cast<std::size_t>(d)) = std::move(p);
  }

  Poly to_poly() const {
    Poly r;
    for (const auto& p : parts_) r += p;
    return r;
  }

  TruncSeries3 truncated(int new_order) const {
    TruncSeries3 r(std::min(new_order, order()));
    for (int d = 0; d <= r.order(); ++d) r.parts_[static_cast<std::size_t>(d)] = parts_[static_cast<std::size_t>(d)];
    return r;
  }

  TruncSeries3& operator+=(const TruncSeries3& o) {
    shrink_to(o.order());
    for (int d = 0; d <= order(); ++d) parts_[static_cast<std::size_t>(d)] += o.parts_[static_cast<std::size_t>(d)];
    return *this;
  }
  TruncSeries3& operator-=(const TruncSeries3& o) {
    shrink_to(o.order());
    for (int d = 0; d <= order(); ++d) parts_[static_cast<std::size_t>(d)] -= o.parts_[static_cast<std::size_t>(d)];
    return *this;
  }
  TruncSeries3& operator*=(const F& s) {
    for (auto& p : parts_) p *= s;
    return *this;
  }
  friend TruncSeries3 operator+(TruncSeries3 a, const TruncSeries3& b) { return a += b; }
  friend TruncSeries3 operator-(TruncSeries3 a, const TruncSeries3& b) { return a -= b; }
  friend TruncSeries3 operator-(TruncSeries3 a) {
    for (auto& p : a.parts_) p = -p;
    return a;
  }
  friend TruncSeries3 operator*(TruncSeries3 a, const F& s) { return a *= s; }
  friend TruncSeries3 operator*(const F& s, TruncSeries3 a) { return a *= s; }

  friend TruncSeries3 operator*(const TruncSeries3& a, const TruncSeries3& b) {
    TruncSeries3 r(std::min(a.order(), b.order()));
    for (int da = 0; da <= r.order(); ++da) {
      if (a.parts_[static_cast<std::size_t>(da)].is_zero()) continue;
      for (int db = 0; da + db <= r.order(); ++db)
        r.parts_[static_cast<std::size_t>(da + db)] +=
            a.parts_[static_cast<std::size_t>(da)] * b.parts_[static_cast<std::size_t>(db)];
    }
    return r;
  }
  TruncSeries3& operator*=(const TruncSeries3& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries3& a, const TruncSeries3& b) { return a.parts_ == b.parts_; }

  TruncSeries3 pow(unsigned n) const {
    TruncSeries3 r(order(), F(1));
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  // Multiplicative inverse through the same order; constant term must be nonzero.
  TruncSeries3 invert() const {
    const F c0 = parts_[0].coeff({0, 0, 0});
    if (c0.is_zero()) throw SingularSeriesError("TruncSeries3: constant term is not invertible");
    const F inv = F(1) / c0;
    TruncSeries3 r(order());
    r.parts_[0] = Poly(inv);
    for (int d = 1; d <= order(); ++d) {
      Poly acc;
      for (int e = 1; e <= d; ++e) {
        const auto& se = parts_[static_cast<std::size_t>(e)];
        if (se.is_zero()) continue;
        acc += se * r.parts_[static_cast<std::size_t>(d - e)];
      }
      r.parts_[static_cast<std::size_t>(d)] = acc * (-inv);
    }
    return r;
  }

  // Euler operator X12 d/dX12 + X13 d/dX13 + X23 d/dX23.
  TruncSeries3 euler() const {
    TruncSeries3 r(order());
    for (int d = 0; d <= order(); ++d)
      r.parts_[static_cast<std::size_t>(d)] = parts_[static_cast<std::size_t>(d)] * F(Rat(d));
    return r;
  }

  // X_var -> 0
  TruncSeries3 set_zero(int var) const {
    TruncSeries3 r(order());
    for (int d = 0; d <= order(); ++d)
      for (const auto& [e, c] : parts_[static_cast<std::size_t>(d)].terms())
        if (e[var] == 0) r.parts_[static_cast<std::size_t>(d)].add_term(e, c);
    return r;
  }

  TruncSeries3 scale_part(int d, const F& s) const {
    TruncSeries3 r = *this;
    r.parts_.at(static_cast<std::size_t>(d)) *= s;
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw ArithmeticError("TruncSeries3: negative order");
    return order;
  }
  void shrink_to(int o) {
    if (o < order()) parts_.resize(static_cast<std::size_t>(o) + 1);
  }

  std::vector<Poly> parts_;
};

// Substitute x_i = 1 + X_i in a Laurent polynomial, expanding (1+X)^e binomially through `order`.
template <class F>
TruncSeries3<F> shift_expand(const Laurent3<F>& p, int order) {
  std::map<int, std::vector<Rat>> rows;
  auto binom_row = [&](int e) -> const std::vector<Rat>& {
    auto it = rows.find(e);
    if (it != rows.end()) return it->second;
    std::vector<Rat> v;
    for (int k = 0; k <= order; ++k) v.push_back(gen_binomial(e, k));
    return rows.emplace(e, std::move(v)).first->second;
  };
  TruncSeries3<F> r(order);
  for (const auto& [e, c] : p.terms()) {
    const auto& b0 = binom_row(e[0]);
    const auto& b1 = binom_row(e[1]);
    const auto& b2 = binom_row(e[2]);
    for (int a = 0; a <= order; ++a) {
      if (b0[a].is_zero()) continue;
      for (int b = 0; a + b <= order; ++b) {
        if (b1[b].is_zero()) continue;
        const Rat ab = b0[a] * b1[b];
        for (int g = 0; a + b + g <= order; ++g)
          if (!b2[g].is_zero()) r.add_term({a, b, g}, c * F(ab * b2[g]));
      }
    }
  }
  return r;
}

}  // namespace g2schur
