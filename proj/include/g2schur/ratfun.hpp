#pragma once

#include <ostream>
#include <string>

#include "g2schur/dense_poly.hpp"

namespace g2schur {

// Univariate rational function num/den in kappa; den monic, gcd(num, den) = 1.
class RatFun1 {
 public:
  RatFun1() : den_(1) {}
  RatFun1(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RatFun1(I c) : RatFun1(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  RatFun1(const DensePoly1& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun1(DensePoly1 num, DensePoly1 den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  // kappa^n for any integer n.
  static RatFun1 kappa_power(int n) {
    if (n >= 0) return RatFun1(DensePoly1::monomial(n, Rat(1)));
    return RatFun1(DensePoly1(1), DensePoly1::monomial(-n, Rat(1)));
  }

  // sum_e c_e kappa^e over a finite Laurent range [lo, lo + coeffs.size()).
  static RatFun1 from_laurent(int lo, const std::vector<Rat>& coeffs) {
    if (lo >= 0) {
      std::vector<Rat> c(static_cast<std::size_t>(lo), Rat(0));
      c.insert(c.end(), coeffs.begin(), coeffs.end());
      return RatFun1(DensePoly1(std::move(c)));
    }
    return RatFun1(DensePoly1(coeffs), DensePoly1::monomial(-lo, Rat(1)));
  }

  const DensePoly1& num() const { return num_; }
  const DensePoly1& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }

  RatFun1 inverse() const {
    if (is_zero()) throw ArithmeticError("RatFun1: inverse of zero");
    return RatFun1(den_, num_);
  }

  RatFun1& operator+=(const RatFun1& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  RatFun1& operator-=(const RatFun1& o) { return *this += -o; }
  RatFun1& operator*=(const RatFun1& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun1();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RatFun1& operator/=(const RatFun1& o) { return *this *= o.inverse(); }

  friend RatFun1 operator+(RatFun1 a, const RatFun1& b) { return a += b; }
  friend RatFun1 operator-(RatFun1 a, const RatFun1& b) { return a -= b; }
  friend RatFun1 operator*(RatFun1 a, const RatFun1& b) { return a *= b; }
  friend RatFun1 operator/(RatFun1 a, const RatFun1& b) { return a /= b; }
  friend RatFun1 operator-(RatFun1 a) {
    a.num_ = -a.num_;
    return a;
  }

  // Canonical form makes this equivalent to cross-multiplication.
  friend bool operator==(const RatFun1& a, const RatFun1& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  bool equals_by_cross_multiplication(const RatFun1& o) const { return num_ * o.den_ == o.num_ * den_; }

  Rat eval(const Rat& k) const { return num_.eval(k) / den_.eval(k); }

  std::string str() const {
    if (den_.degree() == 0) return num_.to_string("k");
    return "(" + num_.to_string("k") + ")/(" + den_.to_string("k") + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFun1& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_.is_zero()) throw ArithmeticError("RatFun1: zero denominator");
    if (num_.is_zero()) {
      den_ = DensePoly1(1);
      return;
    }
    if (den_.degree() > 0) {
      DensePoly1 g = DensePoly1::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = DensePoly1::divmod(num_, g).first;
        den_ = DensePoly1::divmod(den_, g).first;
      }
    }
    const Rat lc = den_.leading();
    if (!lc.is_one()) {
      const Rat inv = lc.inverse();
      num_ *= inv;
      den_ *= inv;
    }
  }

  DensePoly1 num_;
  DensePoly1 den_;
};

}  // namespace g2schur
