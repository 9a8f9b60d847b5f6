#ifndef POLYSPEC_SERIES_HPP
#define POLYSPEC_SERIES_HPP

// Truncated power series, in two flavours: integer exponents (Ehrhart-style
// series) and exact rational exponents (weighted lattice sums).  All
// coefficients are exact rationals and every operation states the order up to
// which its result is valid.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/numeric.hpp"
#include "polyspec/qpolynomial.hpp"

namespace polyspec {

// sum_{m=0..order} c[m] z^m, exact up to and including z^order.
struct TruncatedSeries {
  int order = 0;
  QVec c;

  TruncatedSeries() = default;
  TruncatedSeries(int order_, QVec coeffs) : order(order_), c(std::move(coeffs)) {
    c.resize(order + 1, Rat(0));
  }

  Rat coeff(int m) const {
    if (m < 0 || m > order) return Rat(0);
    return m < static_cast<int>(c.size()) ? c[m] : Rat(0);
  }

  bool operator==(const TruncatedSeries& o) const {
    if (order != o.order) return false;
    for (int m = 0; m <= order; ++m)
      if (coeff(m) != o.coeff(m)) return false;
    return true;
  }
};

// Product of two series, valid to the smaller of the two orders.
inline TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order, b.order);
  QVec r(order + 1, Rat(0));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) r[i + j] += a.coeff(i) * b.coeff(j);
  return TruncatedSeries(order, std::move(r));
}

// Multiply a series by a polynomial in z; exactness order is preserved.
inline TruncatedSeries multiply(const TruncatedSeries& a, const QPolynomial& p) {
  QVec r(a.order + 1, Rat(0));
  for (int i = 0; i <= a.order; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= p.degree() && i + j <= a.order; ++j)
      r[i + j] += a.coeff(i) * p.coeff(j);
  }
  return TruncatedSeries(a.order, std::move(r));
}

// Coefficients of theta(z) / (1-z)^{n+1} up to z^T: the m-th coefficient is
// sum_p theta[p] * binom(m - p + n, n).
inline TruncatedSeries series_from_numerator(const IntVector& theta, int n, int T) {
  QVec r(T + 1, Rat(0));
  for (int m = 0; m <= T; ++m) {
    Int acc = 0;
    for (int p = 0; p < static_cast<int>(theta.size()) && p <= m; ++p)
      acc += theta[p] * binomial(Int(m - p + n), n);
    r[m] = Rat(acc);
  }
  return TruncatedSeries(T, std::move(r));
}

// sum over rational exponents e <= order of c[e] z^e, exact on that range.
struct FractionalSeries {
  Rat order = 0;
  std::map<Rat, Rat> c;

  Rat coeff(const Rat& e) const {
    auto it = c.find(e);
    return it == c.end() ? Rat(0) : it->second;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [e, v] : c) {
      if (v == 0) continue;
      if (!first) out << ", ";
      out << numerator(e).str();
      if (denominator(e) != 1) out << "/" << denominator(e).str();
      out << ": " << numerator(v).str();
      if (denominator(v) != 1) out << "/" << denominator(v).str();
      first = false;
    }
    out << "}";
    return out.str();
  }
};

// Multiply a fractional series by (1-z)^k.  Exponents shift by integers only,
// so the result is exact for exponents <= the input order; entries beyond the
// order are dropped and zeros are pruned.
inline FractionalSeries multiply_by_one_minus_z_pow(const FractionalSeries& s, int k) {
  FractionalSeries out;
  out.order = s.order;
  for (const auto& [e, v] : s.c) {
    if (v == 0) continue;
    for (int j = 0; j <= k; ++j) {
      const Rat exp = e + j;
      if (exp > out.order) break;
      const Rat term = v * Rat(((j % 2) ? Int(-1) : Int(1)) * binomial(Int(k), j));
      auto [it, inserted] = out.c.emplace(exp, term);
      if (!inserted) it->second += term;
    }
  }
  for (auto it = out.c.begin(); it != out.c.end();)
    it = (it->second == 0) ? out.c.erase(it) : std::next(it);
  return out;
}

}  // namespace polyspec

#endif  // POLYSPEC_SERIES_HPP
