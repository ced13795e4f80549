#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "g2schur/rat.hpp"

namespace g2schur {

// Exponent triple (e12, e13, e23); std::array ordering is lexicographic, x12 > x13 > x23.
using Exp3 = std::array<int, 3>;

inline int total_degree(const Exp3& e) { return e[0] + e[1] + e[2]; }

inline Exp3 operator+(const Exp3& a, const Exp3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

using VarNames = std::array<const char*, 3>;
inline constexpr VarNames kSmallVars{"x12", "x13", "x23"};
inline constexpr VarNames kShiftVars{"X12", "X13", "X23"};

// Sparse Laurent polynomial in three variables over the field F.
// Canonical: no stored zero coefficients.
template <class F>
class Laurent3 {
 public:
  using Coeff = F;
  using Map = std::map<Exp3, F>;

  Laurent3() = default;
  explicit Laurent3(const F& c) {
    if (!c.is_zero()) terms_.emplace(Exp3{0, 0, 0}, c);
  }

  static Laurent3 monomial(const Exp3& e, const F& c = F(1)) {
    Laurent3 p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }

  static Laurent3 variable(int i, int power = 1) {
    Exp3 e{0, 0, 0};
    e[i] = power;
    return monomial(e);
  }

  // x_i + x_i^{-1}
  static Laurent3 symmetric_generator(int i) { return variable(i, 1) + variable(i, -1); }
  // x_i - x_i^{-1}
  static Laurent3 antisymmetric_generator(int i) { return variable(i, 1) - variable(i, -1); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  F coeff(const Exp3& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Exp3& e, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Laurent3& operator+=(const Laurent3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent3& operator-=(const Laurent3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent3& operator*=(const F& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Laurent3 operator+(Laurent3 a, const Laurent3& b) { return a += b; }
  friend Laurent3 operator-(Laurent3 a, const Laurent3& b) { return a -= b; }
  friend Laurent3 operator-(const Laurent3& a) {
    Laurent3 r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Laurent3 operator*(Laurent3 a, const F& s) { return a *= s; }
  friend Laurent3 operator*(const F& s, Laurent3 a) { return a *= s; }

  friend Laurent3 operator*(const Laurent3& a, const Laurent3& b) {
    Laurent3 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent3& operator*=(const Laurent3& o) { return *this = *this * o; }

  friend bool operator==(const Laurent3& a, const Laurent3& b) { return a.terms_ == b.terms_; }

  Laurent3 pow(unsigned n) const {
    Laurent3 r(F(1));
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  Laurent3 derivative(int var) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp3 d = e;
      d[var] -= 1;
      r.add_term(d, c * F(Rat(e[var])));
    }
    return r;
  }

  // Mixed partial of multi-index `order` (derivatives commute on Laurent polynomials).
  Laurent3 partial(const Exp3& order) const {
    Laurent3 r = *this;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < order[v]; ++k) r = r.derivative(v);
    return r;
  }

  // Euler operator sum_i x_i d/dx_i: multiplies each monomial by its total degree.
  Laurent3 euler() const {
    Laurent3 r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * F(Rat(total_degree(e))));
    return r;
  }

  Laurent3 shift(const Exp3& by) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  // Exponent at position perm[i] of the result is exponent i of the input.
  Laurent3 permute(const std::array<int, 3>& perm) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_) {
      Exp3 d{};
      for (int i = 0; i < 3; ++i) d[perm[i]] = e[i];
      r.terms_.emplace(d, c);
    }
    return r;
  }

  // x_var -> x_var^{-1}
  Laurent3 invert_variable(int var) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_) {
      Exp3 d = e;
      d[var] = -d[var];
      r.terms_.emplace(d, c);
    }
    return r;
  }

  // x_var -> 1
  Laurent3 specialize_one(int var) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_) {
      Exp3 d = e;
      d[var] = 0;
      r.add_term(d, c);
    }
    return r;
  }

  F value_at_ones() const {
    F s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  std::optional<int> max_total_degree() const {
    std::optional<int> m;
    for (const auto& [e, c] : terms_)
      if (!m || total_degree(e) > *m) m = total_degree(e);
    return m;
  }
  std::optional<int> min_total_degree() const {
    std::optional<int> m;
    for (const auto& [e, c] : terms_)
      if (!m || total_degree(e) < *m) m = total_degree(e);
    return m;
  }

  Laurent3 homogeneous_part(int d) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  Laurent3 truncated(int max_degree) const {
    Laurent3 r;
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= max_degree) r.terms_.emplace(e, c);
    return r;
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      if (e[0] < 0 || e[1] < 0 || e[2] < 0) return false;
    return true;
  }

  // Largest monomial in lexicographic order x12 > x13 > x23.
  std::optional<std::pair<Exp3, F>> lex_leading() const {
    if (terms_.empty()) return std::nullopt;
    const auto& [e, c] = *terms_.rbegin();
    return std::make_pair(e, c);
  }

  std::string to_string(const VarNames& names = kSmallVars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (int i = 0; i < 3; ++i)
        if (e[i] != 0) os << "*" << names[i] << "^" << e[i];
    }
    return os.str();
  }

 private:
  Map terms_;
};

using LaurentPoly3 = Laurent3<Rat>;

}  // namespace g2schur
