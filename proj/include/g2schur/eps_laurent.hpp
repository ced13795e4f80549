#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "g2schur/ratfun.hpp"

namespace g2schur {

// Truncated Laurent series in eps over RatFun1: coefficients known exactly for degrees <= order().
// order() == kExact means the series is a finite Laurent polynomial known completely.
class EpsLaurent {
 public:
  static constexpr int kExact = INT_MAX / 4;

  EpsLaurent() : order_(kExact) {}
  explicit EpsLaurent(const RatFun1& c) : order_(kExact) {
    if (!c.is_zero()) c_.emplace(0, c);
  }

  static EpsLaurent exact(std::map<int, RatFun1> coeffs) {
    EpsLaurent r;
    for (auto& [d, c] : coeffs)
      if (!c.is_zero()) r.c_.emplace(d, std::move(c));
    return r;
  }
  static EpsLaurent monomial(int d, const RatFun1& c = RatFun1(1)) { return exact({{d, c}}); }

  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  const std::map<int, RatFun1>& coeffs() const { return c_; }
  bool known_zero() const { return c_.empty(); }

  // Lowest degree with nonzero coefficient; for a series zero through order() this is order()+1.
  int valuation() const { return c_.empty() ? sat(order_ + 1) : c_.begin()->first; }

  RatFun1 coeff(int d) const {
    if (d > order_) throw ArithmeticError("EpsLaurent: coefficient beyond truncation order requested");
    auto it = c_.find(d);
    return it == c_.end() ? RatFun1() : it->second;
  }

  // Pole order at eps = 0 (0 if none); requires the valuation to be determined.
  int pole_order() const {
    if (c_.empty() && order_ < 0) throw ArithmeticError("EpsLaurent: pole order undetermined at this truncation");
    return std::max(0, -valuation());
  }

  EpsLaurent truncated(int o) const {
    EpsLaurent r;
    r.order_ = std::min(o, order_);
    for (const auto& [d, c] : c_)
      if (d <= r.order_) r.c_.emplace(d, c);
    return r;
  }

  EpsLaurent& operator+=(const EpsLaurent& o) {
    order_ = std::min(order_, o.order_);
    for (const auto& [d, c] : o.c_) add(d, c);
    prune_above_order();
    return *this;
  }
  EpsLaurent& operator-=(const EpsLaurent& o) { return *this += -o; }
  friend EpsLaurent operator+(EpsLaurent a, const EpsLaurent& b) { return a += b; }
  friend EpsLaurent operator-(EpsLaurent a, const EpsLaurent& b) { return a -= b; }
  friend EpsLaurent operator-(EpsLaurent a) {
    for (auto& [d, c] : a.c_) c = -c;
    return a;
  }
  friend EpsLaurent operator*(EpsLaurent a, const RatFun1& s) {
    if (s.is_zero()) {
      a.c_.clear();
      return a;
    }
    for (auto& [d, c] : a.c_) c *= s;
    return a;
  }

  friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
    EpsLaurent r;
    r.order_ = product_order(a, b);
    for (const auto& [da, ca] : a.c_)
      for (const auto& [db, cb] : b.c_)
        if (da + db <= r.order_) r.add(da + db, ca * cb);
    return r;
  }
  EpsLaurent& operator*=(const EpsLaurent& o) { return *this = *this * o; }

  // Multiply by eps^k.
  EpsLaurent shifted(int k) const {
    EpsLaurent r;
    r.order_ = is_exact() ? kExact : order_ + k;
    for (const auto& [d, c] : c_) r.c_.emplace(d + k, c);
    return r;
  }

  // Inverse with derived order: valuation v -> -v, order o -> o - 2v, capped at `cap`
  // (cap is required when the operand is exact and not a monomial).
  EpsLaurent inverse(std::optional<int> cap = std::nullopt) const {
    if (c_.empty()) throw ArithmeticError("EpsLaurent: inverse of series with undetermined leading term");
    const int v = c_.begin()->first;
    int o = is_exact() ? kExact : order_ - 2 * v;
    if (is_exact() && c_.size() > 1 && !cap) throw ArithmeticError("EpsLaurent: inverse of exact non-monomial needs a cap");
    if (cap) o = std::min(o, *cap);
    EpsLaurent r;
    r.order_ = o;
    const RatFun1 inv = c_.begin()->second.inverse();
    if (c_.size() == 1) {
      if (-v <= o) r.c_.emplace(-v, inv);
      return r;
    }
    // r_{-v+n} = -inv * sum_{k=1..n} a_{v+k} r_{-v+n-k}
    std::map<int, RatFun1> out;
    out.emplace(-v, inv);
    for (int n = 1; -v + n <= o; ++n) {
      RatFun1 acc;
      for (int k = 1; k <= n; ++k) {
        auto ai = c_.find(v + k);
        if (ai == c_.end()) continue;
        auto ri = out.find(-v + n - k);
        if (ri == out.end()) continue;
        acc += ai->second * ri->second;
      }
      if (!acc.is_zero()) out.emplace(-v + n, -(acc * inv));
    }
    r.c_ = std::move(out);
    return r;
  }

  EpsLaurent pow(unsigned n, std::optional<int> cap = std::nullopt) const {
    EpsLaurent r(RatFun1(1));
    for (unsigned i = 0; i < n; ++i) {
      r *= *this;
      if (cap) r = r.truncated(*cap);
    }
    return r;
  }

  friend bool operator==(const EpsLaurent& a, const EpsLaurent& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "[" << c << "]*eps^" << d;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(eps^" << order_ + 1 << ")";
    return os.str();
  }

 private:
  static int sat(long v) { return static_cast<int>(std::clamp<long>(v, -kExact, kExact)); }

  static int product_order(const EpsLaurent& a, const EpsLaurent& b) {
    if (a.is_exact() && b.is_exact()) return kExact;
    if (a.is_exact() && a.c_.empty()) return kExact;
    if (b.is_exact() && b.c_.empty()) return kExact;
    const long va = a.valuation(), vb = b.valuation();
    long o = kExact;
    if (!b.is_exact()) o = std::min(o, va + b.order_);
    if (!a.is_exact()) o = std::min(o, vb + a.order_);
    return sat(o);
  }

  void add(int d, const RatFun1& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  void prune_above_order() {
    while (!c_.empty() && c_.rbegin()->first > order_) c_.erase(std::prev(c_.end()));
  }

  int order_;
  std::map<int, RatFun1> c_;
};

}  // namespace g2schur
