#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "g2schur/error.hpp"

namespace g2schur {

// Exact rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I n) : v_(mpz_class(static_cast<long>(n))) {}  // NOLINT(google-explicit-constructor)

  Rat(const mpz_class& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  template <std::integral I, std::integral J>
  Rat(I num, J den) : Rat(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with optional leading '-'; rejects anything else.
  static Rat parse(std::string_view s) {
    auto valid_int = [](std::string_view t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && t[0] == '-') i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw FormatError("malformed rational: '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw FormatError("malformed rational (zero denominator): '" + std::string(s) + "'");
    return Rat(n, d);
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rat inverse() const {
    if (is_zero()) throw ArithmeticError("Rat: inverse of zero");
    return Rat(mpq_class(v_.get_den(), v_.get_num()));
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw ArithmeticError("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rat pow(const Rat& base, unsigned e) {
  Rat r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rat factorial(int n) {
  if (n < 0) throw ArithmeticError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

inline Rat binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

// Generalized binomial coefficient C(e, k) for integer e (possibly negative), k >= 0.
inline Rat gen_binomial(long e, int k) {
  if (k < 0) return Rat(0);
  mpz_class b;
  const mpz_class n(e);
  mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace g2schur
