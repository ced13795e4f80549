#pragma once

#include <array>
#include <string>

#include "g2schur/laurent.hpp"

namespace g2schur {

// Polynomial in the symbols (j1, j2, j3) with exact rational coefficients.
class PolyJ {
 public:
  using JExp = std::array<int, 3>;

  PolyJ() = default;
  PolyJ(const Rat& c) : p_(c) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  PolyJ(I c) : p_(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static PolyJ monomial(const JExp& e, const Rat& c = Rat(1)) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw ArithmeticError("PolyJ: negative exponent");
    PolyJ r;
    r.p_ = LaurentPoly3::monomial(e, c);
    return r;
  }
  static PolyJ j(int i) {
    JExp e{0, 0, 0};
    e[i] = 1;
    return monomial(e);
  }

  const LaurentPoly3::Map& terms() const { return p_.terms(); }
  bool is_zero() const { return p_.is_zero(); }
  Rat coeff(const JExp& e) const { return p_.coeff(e); }
  void add_term(const JExp& e, const Rat& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw ArithmeticError("PolyJ: negative exponent");
    p_.add_term(e, c);
  }

  int total_degree() const { return p_.is_zero() ? -1 : *p_.max_total_degree(); }

  Rat eval(const Rat& j1, const Rat& j2, const Rat& j3) const {
    Rat s(0);
    for (const auto& [e, c] : p_.terms()) s += c * pow(j1, e[0]) * pow(j2, e[1]) * pow(j3, e[2]);
    return s;
  }
  Rat eval(int j1, int j2, int j3) const { return eval(Rat(j1), Rat(j2), Rat(j3)); }

  PolyJ& operator+=(const PolyJ& o) { p_ += o.p_; return *this; }
  PolyJ& operator-=(const PolyJ& o) { p_ -= o.p_; return *this; }
  PolyJ& operator*=(const Rat& s) { p_ *= s; return *this; }
  friend PolyJ operator+(PolyJ a, const PolyJ& b) { return a += b; }
  friend PolyJ operator-(PolyJ a, const PolyJ& b) { return a -= b; }
  friend PolyJ operator-(PolyJ a) { a.p_ = -a.p_; return a; }
  friend PolyJ operator*(PolyJ a, const Rat& s) { return a *= s; }
  friend PolyJ operator*(const Rat& s, PolyJ a) { return a *= s; }
  friend PolyJ operator*(const PolyJ& a, const PolyJ& b) {
    PolyJ r;
    r.p_ = a.p_ * b.p_;
    return r;
  }
  friend bool operator==(const PolyJ& a, const PolyJ& b) { return a.p_ == b.p_; }

  std::string to_string() const { return p_.to_string(VarNames{"j1", "j2", "j3"}); }

 private:
  LaurentPoly3 p_;
};

}  // namespace g2schur
