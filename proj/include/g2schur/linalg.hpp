#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "g2schur/rat.hpp"

namespace g2schur {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;  // row-major

namespace detail {

using IntRow = std::vector<mpz_class>;

inline IntRow to_int_row(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  IntRow r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].num() * (l / v[i].den());
  return r;
}

inline void normalize_content(IntRow& r) {
  mpz_class g = 0;
  for (const auto& x : r)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline int first_nonzero(const IntRow& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return static_cast<int>(i);
  return -1;
}

// target <- piv[p] * target - target[p] * piv, then strip content.
inline void eliminate(IntRow& target, const IntRow& piv, int p) {
  if (target[static_cast<std::size_t>(p)] == 0) return;
  const mpz_class a = piv[static_cast<std::size_t>(p)];
  const mpz_class b = target[static_cast<std::size_t>(p)];
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = a * target[i] - b * piv[i];
  normalize_content(target);
}

}  // namespace detail

// Incrementally built fraction-free echelon form over the integers.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

  // Returns true when v is independent of the rows inserted so far.
  bool insert(const RatVector& v) {
    detail::IntRow r = reduce(v);
    const int p = detail::first_nonzero(r);
    if (p < 0) return false;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  bool in_span(const RatVector& v) const { return detail::first_nonzero(reduce(v)) < 0; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

 private:
  detail::IntRow reduce(const RatVector& v) const {
    if (v.size() != ncols_) throw ArithmeticError("RowEchelon: width mismatch");
    detail::IntRow r = detail::to_int_row(v);
    detail::normalize_content(r);
    for (std::size_t i = 0; i < rows_.size(); ++i) detail::eliminate(r, rows_[i], pivots_[i]);
    return r;
  }

  std::size_t ncols_;
  std::vector<detail::IntRow> rows_;
  std::vector<int> pivots_;
};

inline std::size_t rank(const RatMatrix& m, std::size_t ncols) {
  RowEchelon e(ncols);
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

// Basis of {x : m x = 0}, one vector per free column, normalized to 1 there.
inline std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t ncols) {
  std::vector<detail::IntRow> rows;
  std::vector<int> pivots;
  for (const auto& v : m) {
    if (v.size() != ncols) throw ArithmeticError("nullspace: width mismatch");
    detail::IntRow r = detail::to_int_row(v);
    detail::normalize_content(r);
    for (std::size_t i = 0; i < rows.size(); ++i) detail::eliminate(r, rows[i], pivots[i]);
    const int p = detail::first_nonzero(r);
    if (p < 0) continue;
    for (std::size_t i = 0; i < rows.size(); ++i) detail::eliminate(rows[i], r, p);
    rows.push_back(std::move(r));
    pivots.push_back(p);
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(ncols, Rat(0));
    x[f] = Rat(1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto p = static_cast<std::size_t>(pivots[i]);
      if (rows[i][f] != 0) x[p] = -Rat(rows[i][f], rows[i][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// Equal spans, judged by rank (mutual membership).
inline bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t ncols) {
  RowEchelon ea(ncols), eb(ncols);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : b)
    if (!ea.in_span(v)) return false;
  for (const auto& v : a)
    if (!eb.in_span(v)) return false;
  return true;
}

// Gauss-Jordan inverse of a square matrix; nullopt when singular.
inline std::optional<RatMatrix> inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, RatVector(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ArithmeticError("inverse: matrix not square");
    inv[i][i] = Rat(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rat s = a[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rat f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  RatVector r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace g2schur
