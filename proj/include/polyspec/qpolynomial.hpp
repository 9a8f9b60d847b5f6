#ifndef POLYSPEC_QPOLYNOMIAL_HPP
#define POLYSPEC_QPOLYNOMIAL_HPP

// Dense univariate polynomials with exact rational coefficients.  Degrees stay
// small (at most the ambient dimension plus one), so density is the simple and
// fast representation.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polyspec/errors.hpp"
#include "polyspec/numeric.hpp"

namespace polyspec {

// Nonnegative integer coefficient vectors (theta- and delta-vectors), stored
// with index = exponent and length n+1 for ambient dimension n.
using IntVector = IVec;

inline Int sum(const IntVector& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

inline bool all_zero(const IntVector& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(QVec coeffs) : c_(std::move(coeffs)) { normalize(); }

  static QPolynomial constant(Rat v) { return QPolynomial(QVec{std::move(v)}); }

  static QPolynomial monomial(int k, Rat coeff = Rat(1)) {
    QVec c(k + 1, Rat(0));
    c[k] = std::move(coeff);
    return QPolynomial(std::move(c));
  }

  static QPolynomial from_int_vector(const IntVector& v) {
    QVec c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return QPolynomial(std::move(c));
  }

  // binom(X + shift, n) as a polynomial in X: the product
  // (X + shift)(X + shift - 1)...(X + shift - n + 1) / n!.
  static QPolynomial binomial_in_x(int n, const Int& shift) {
    QPolynomial p = constant(Rat(1));
    for (int i = 0; i < n; ++i) {
      p = p * QPolynomial(QVec{Rat(shift - i), Rat(1)});
    }
    return p * Rat(Rat(1) / Rat(factorial(n)));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
  }

  const QVec& coeffs() const { return c_; }

  Rat leading_coeff() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  QPolynomial operator+(const QPolynomial& o) const {
    QVec r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPolynomial(std::move(r));
  }

  QPolynomial operator-(const QPolynomial& o) const { return *this + (o * Rat(-1)); }

  QPolynomial operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return QPolynomial();
    QVec r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPolynomial(std::move(r));
  }

  QPolynomial operator*(const Rat& s) const {
    QVec r = c_;
    for (Rat& x : r) x *= s;
    return QPolynomial(std::move(r));
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  // z^d * p(1/z): coefficient i of the result is coefficient d-i of p.
  QPolynomial reversed(int d) const {
    if (d < degree())
      throw DegreeTooLarge("reverse(p, d) requires d >= deg p (d = " +
                           std::to_string(d) + ", deg = " + std::to_string(degree()) + ")");
    QVec r(d + 1, Rat(0));
    for (int i = 0; i <= degree(); ++i) r[d - i] = c_[i];
    return QPolynomial(std::move(r));
  }

  // Long division: returns (quotient, remainder) with deg rem < deg divisor.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw InternalError("polynomial division by zero");
    QVec rem = c_;
    QVec quo;
    const int dd = divisor.degree();
    while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
      const int k = static_cast<int>(rem.size()) - 1 - dd;
      const Rat f = rem.back() / divisor.c_.back();
      if (static_cast<int>(quo.size()) < k + 1) quo.resize(k + 1, Rat(0));
      quo[k] = f;
      for (int i = 0; i <= dd; ++i) rem[k + i] -= f * divisor.c_[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
  }

  // Rendering with ascending powers collapsed to conventional notation,
  // e.g. "5/2*m^2 + 3/2*m".
  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rat& a = c_[i];
      if (a == 0) continue;
      if (first) {
        if (a < 0) out << "-";
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      const Rat mag = a < 0 ? Rat(-a) : a;
      if (i == 0 || mag != 1) {
        out << numerator(mag).str();
        if (denominator(mag) != 1) out << "/" << denominator(mag).str();
        if (i > 0) out << "*";
      }
      if (i > 0) {
        out << var;
        if (i > 1) out << "^" << i;
      }
      first = false;
    }
    return out.str();
  }

 private:
  QVec c_;  // c_[i] multiplies X^i; invariant: back() != 0 unless empty

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline QPolynomial operator*(const Rat& s, const QPolynomial& p) { return p * s; }

// z^d p(1/z) as a free function, mirroring the reverse operation on vectors.
inline QPolynomial reverse(const QPolynomial& p, int d) { return p.reversed(d); }

// The degree-<=n polynomial sum_p theta[p] * binom(X + n - p, n), expanded in
// the monomial basis.  Its value at a nonnegative integer m is the m-th
// coefficient of theta(z)/(1-z)^{n+1}.
inline QPolynomial polynomial_from_theta(const IntVector& theta, int n) {
  QPolynomial p;
  for (int q = 0; q < static_cast<int>(theta.size()); ++q) {
    if (theta[q] == 0) continue;
    p = p + QPolynomial::binomial_in_x(n, Int(n - q)) * Rat(theta[q]);
  }
  return p;
}

}  // namespace polyspec

#endif  // POLYSPEC_QPOLYNOMIAL_HPP
