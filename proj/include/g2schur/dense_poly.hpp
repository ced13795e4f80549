#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2schur/rat.hpp"

namespace g2schur {

// Dense univariate polynomial, index = exponent. No trailing zeros.
class DensePoly1 {
 public:
  DensePoly1() = default;
  DensePoly1(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  template <std::integral I>
  DensePoly1(I c) : DensePoly1(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit DensePoly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly1 x() { return monomial(1, Rat(1)); }
  static DensePoly1 monomial(int deg, const Rat& c) {
    DensePoly1 p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
    p.c_.back() = c;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  DensePoly1& operator+=(const DensePoly1& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly1& operator-=(const DensePoly1& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly1& operator*=(const Rat& s) {
    if (s.is_zero()) c_.clear();
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend DensePoly1 operator+(DensePoly1 a, const DensePoly1& b) { return a += b; }
  friend DensePoly1 operator-(DensePoly1 a, const DensePoly1& b) { return a -= b; }
  friend DensePoly1 operator-(DensePoly1 a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend DensePoly1 operator*(DensePoly1 a, const Rat& s) { return a *= s; }
  friend DensePoly1 operator*(const Rat& s, DensePoly1 a) { return a *= s; }
  friend DensePoly1 operator*(const DensePoly1& a, const DensePoly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return DensePoly1(std::move(r));
  }
  DensePoly1& operator*=(const DensePoly1& o) { return *this = *this * o; }
  friend bool operator==(const DensePoly1& a, const DensePoly1& b) { return a.c_ == b.c_; }

  DensePoly1 derivative() const {
    std::vector<Rat> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
    return DensePoly1(std::move(r));
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  DensePoly1 monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
  }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<DensePoly1, DensePoly1> divmod(const DensePoly1& a, const DensePoly1& b) {
    if (b.is_zero()) throw ArithmeticError("DensePoly1: division by zero polynomial");
    DensePoly1 r = a;
    if (r.degree() < b.degree()) return {DensePoly1(), r};
    std::vector<Rat> q(static_cast<std::size_t>(r.degree() - b.degree()) + 1, Rat(0));
    const Rat inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int s = r.degree() - b.degree();
      const Rat f = r.leading() * inv;
      q[static_cast<std::size_t>(s)] = f;
      for (int i = 0; i <= b.degree(); ++i) r.c_[static_cast<std::size_t>(i + s)] -= f * b.c_[static_cast<std::size_t>(i)];
      r.trim();
    }
    return {DensePoly1(std::move(q)), r};
  }

  // Monic gcd; gcd(0,0) = 0.
  static DensePoly1 gcd(DensePoly1 a, DensePoly1 b) {
    while (!b.is_zero()) {
      DensePoly1 r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const char* var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i > 0) os << "*" << var << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Legendre polynomial normalized by P_k(1) = 1, via (k+1)P_{k+1} = (2k+1)xP_k - kP_{k-1}.
inline DensePoly1 legendre(int k) {
  if (k < 0) throw ArithmeticError("legendre: negative degree");
  DensePoly1 prev(1);
  if (k == 0) return prev;
  DensePoly1 cur = DensePoly1::x();
  for (int n = 1; n < k; ++n) {
    DensePoly1 next = (DensePoly1::x() * cur) * Rat(2 * n + 1) - prev * Rat(n);
    next *= Rat(1, n + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace g2schur
