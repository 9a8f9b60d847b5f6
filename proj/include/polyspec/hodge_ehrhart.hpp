#ifndef POLYSPEC_HODGE_EHRHART_HPP
#define POLYSPEC_HODGE_EHRHART_HPP

// The graded counting polynomials attached to a fractional spectrum, and the
// structural facts the library certifies about them: symmetry of the theta
// classes, the graded reciprocity laws, vanishing orders, coefficient
// identities, the Vieta root identities, the reflexive/anti-reflexive
// classification with root-line location, and the factorization analysis
// available when the reduced theta polynomial has all roots on the unit
// circle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/check.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/qpolynomial.hpp"
#include "polyspec/roots.hpp"
#include "polyspec/theta_family.hpp"

namespace polyspec {

struct HodgeEhrhartPolynomials {
  std::map<Rat, QPolynomial> per_class;  // alpha -> L^alpha
  QPolynomial total;                     // L_psi, the sum over classes
};

// L^alpha(X) = sum_p theta^alpha_p C(X + n - p, n) for each stored class.
inline HodgeEhrhartPolynomials hodge_ehrhart_polynomials(const ThetaFamily& tf) {
  HodgeEhrhartPolynomials out;
  for (const auto& [alpha, vec] : tf.classes) {
    QPolynomial l = polynomial_from_theta(vec, tf.n);
    out.total = out.total + l;
    out.per_class.emplace(alpha, std::move(l));
  }
  return out;
}

// theta^alpha(z) = z^{n+1} theta^{1-alpha}(1/z) for alpha != 0, i.e.
// theta^alpha_p = theta^{1-alpha}_{n+1-p}; the alpha = 0 class is palindromic
// about n/2 on its own.
inline Verdict theta_symmetry_check(const ThetaFamily& tf) {
  const int n = tf.n;
  Verdict verdict;
  for (const auto& [alpha, vec] : tf.classes) {
    bool ok = true;
    std::ostringstream detail;
    if (alpha == 0) {
      for (int p = 0; p <= n; ++p)
        if (vec[p] != vec[n - p]) {
          ok = false;
          detail << "theta^0_" << p << " = " << vec[p] << " != theta^0_" << (n - p) << " = "
                 << vec[n - p];
          break;
        }
    } else {
      const IntVector partner = tf.class_or_zero(Rat(1) - alpha);
      for (int p = 1; p <= n; ++p)
        if (vec[p] != partner[n + 1 - p]) {
          ok = false;
          detail << "theta^{" << rat_to_string(alpha) << "}_" << p << " = " << vec[p]
                 << " != theta^{" << rat_to_string(Rat(1) - alpha) << "}_" << (n + 1 - p)
                 << " = " << partner[n + 1 - p];
          break;
        }
    }
    std::ostringstream name;
    name << "theta class " << rat_to_string(alpha) << " paired with class "
         << rat_to_string(alpha == 0 ? Rat(0) : Rat(1) - alpha);
    verdict.record(name.str(), ok, detail.str());
  }
  return verdict;
}

// Graded reciprocity: L^alpha(-m) = (-1)^n L^{1-alpha}(m) for alpha != 0,
// L^0(-m) = (-1)^n L^0(m-1), and consequently for the total polynomial
// L(-m) = (-1)^n ( L(m) + L^0(m-1) - L^0(m) ).
inline Verdict reciprocity_check(const ThetaFamily& tf, const HodgeEhrhartPolynomials& polys,
                                 int mmax = 10) {
  const int n = tf.n;
  const Rat sgn = (n % 2 == 0) ? 1 : -1;
  const QPolynomial zero;
  auto l_of = [&](const Rat& alpha) -> const QPolynomial& {
    const auto it = polys.per_class.find(alpha);
    return it == polys.per_class.end() ? zero : it->second;
  };

  Verdict verdict;
  for (const auto& [alpha, l] : polys.per_class) {
    if (alpha == 0) continue;
    const QPolynomial& partner = l_of(Rat(1) - alpha);
    bool ok = true;
    std::ostringstream detail;
    for (int m = 1; m <= mmax && ok; ++m)
      if (l(Rat(-m)) != sgn * partner(Rat(m))) {
        ok = false;
        detail << "fails at m = " << m;
      }
    std::ostringstream name;
    name << "class " << rat_to_string(alpha) << " reciprocal to class "
         << rat_to_string(Rat(1) - alpha);
    verdict.record(name.str(), ok, detail.str());
  }
  {
    const QPolynomial& l0 = l_of(0);
    bool ok = true;
    std::ostringstream detail;
    for (int m = 1; m <= mmax && ok; ++m)
      if (l0(Rat(-m)) != sgn * l0(Rat(m - 1))) {
        ok = false;
        detail << "fails at m = " << m;
      }
    verdict.record("integer class reciprocal to itself with shift", ok, detail.str());
  }
  {
    const QPolynomial& l0 = l_of(0);
    bool ok = true;
    std::ostringstream detail;
    for (int m = 1; m <= mmax && ok; ++m) {
      const Rat lhs = polys.total(Rat(-m));
      const Rat rhs = sgn * (polys.total(Rat(m)) + l0(Rat(m - 1)) - l0(Rat(m)));
      if (lhs != rhs) {
        ok = false;
        detail << "fails at m = " << m;
      }
    }
    verdict.record("total polynomial satisfies the combined reciprocity", ok, detail.str());
  }
  return verdict;
}

// For alpha != 0 the polynomial L^alpha vanishes at 0, 1, ..., p0 - 1 and
// takes the value theta^alpha_{p0} at p0, where p0 is the position of the
// first nonzero entry of the class.
inline Verdict vanishing_order_check(const ThetaFamily& tf,
                                     const HodgeEhrhartPolynomials& polys) {
  Verdict verdict;
  for (const auto& [alpha, vec] : tf.classes) {
    if (alpha == 0) continue;
    int p0 = 1;
    while (p0 <= tf.n && vec[p0] == 0) ++p0;
    const QPolynomial& l = polys.per_class.at(alpha);
    if (p0 > tf.n) {  // an explicitly stored all-zero class
      std::ostringstream name;
      name << "class " << rat_to_string(alpha) << " vanishes identically";
      verdict.record(name.str(), l.is_zero());
      continue;
    }
    bool ok = true;
    std::ostringstream detail;
    for (int j = 0; j < p0 && ok; ++j)
      if (l(Rat(j)) != 0) {
        ok = false;
        detail << "expected a zero at " << j;
      }
    if (ok && l(Rat(p0)) != Rat(vec[p0])) {
      ok = false;
      detail << "value at " << p0 << " is " << rat_to_string(l(Rat(p0))) << ", expected "
             << vec[p0];
    }
    std::ostringstream name;
    name << "class " << rat_to_string(alpha) << " vanishes through " << (p0 - 1)
         << " and wakes at " << p0;
    verdict.record(name.str(), ok, detail.str());
  }
  return verdict;
}

// The five coefficient identities tying L_psi = sum_i c_i X^i to the integer
// class L^0 = sum_i c0_i X^i and the theta data.
inline Verdict coefficient_identities(const ThetaFamily& tf,
                                      const HodgeEhrhartPolynomials& polys) {
  const int n = tf.n;
  const QPolynomial& total = polys.total;
  const auto it0 = polys.per_class.find(Rat(0));
  const QPolynomial l0 = it0 == polys.per_class.end() ? QPolynomial() : it0->second;

  Verdict verdict;
  {
    const Rat lhs = Rat(factorial(n)) * total.coeff(n);
    std::ostringstream detail;
    if (lhs != Rat(tf.mu()))
      detail << "n! c_n = " << rat_to_string(lhs) << " but mu = " << tf.mu();
    verdict.record("n! times the leading coefficient equals mu", lhs == Rat(tf.mu()),
                   detail.str());
  }
  {
    bool ok = true;
    std::ostringstream detail;
    for (int j = 1; j <= n; j += 2)
      if (total.coeff(n - j) != l0.coeff(n - j)) {
        ok = false;
        detail << "c_" << (n - j) << " = " << rat_to_string(total.coeff(n - j))
               << " != " << rat_to_string(l0.coeff(n - j));
        break;
      }
    verdict.record("odd-step coefficients agree with the integer class", ok, detail.str());
  }
  {
    bool ok = true;
    std::ostringstream detail;
    for (int j = 1; j <= n && ok; ++j) {
      const Rat lhs = Rat(1 - (j % 2 == 0 ? 1 : -1)) * total.coeff(n - j);
      Rat rhs = 0;
      for (int l = 0; l <= j - 1; ++l) {
        const Rat term = Rat(binomial(Int(n - l), n - j)) * l0.coeff(n - l);
        rhs += ((j + 1 - l) % 2 == 0) ? term : -term;
      }
      if (lhs != rhs) {
        ok = false;
        detail << "fails at j = " << j << ": " << rat_to_string(lhs)
               << " != " << rat_to_string(rhs);
      }
    }
    verdict.record("alternating-sum expansion over the integer class", ok, detail.str());
  }
  {
    const Rat t0 = Rat(tf.theta0()[0]);
    const bool ok = total.coeff(0) == t0 && l0.coeff(0) == t0;
    std::ostringstream detail;
    if (!ok)
      detail << "c_0 = " << rat_to_string(total.coeff(0)) << ", c0_0 = "
             << rat_to_string(l0.coeff(0)) << ", theta^0_0 = " << rat_to_string(t0);
    verdict.record("constant terms equal theta^0_0", ok, detail.str());
  }
  {
    const Rat lhs = Rat(factorial(n)) * total.coeff(n - 1);
    const Rat rhs = Rat(n, 2) * Rat(tf.dim_h0());
    std::ostringstream detail;
    if (lhs != rhs)
      detail << "n! c_{n-1} = " << rat_to_string(lhs) << " but (n/2) dim H_0 = "
             << rat_to_string(rhs);
    verdict.record("subleading coefficient carries dim H_0", lhs == rhs, detail.str());
  }
  return verdict;
}

// Vieta identities for the full root multiset of L_psi: the root sum is
// -(n/2) dim H_0 / mu and the root product is (-1)^n n! theta^0_0 / mu.
// Exact statements about coefficient ratios, so no root finding is involved.
inline Verdict root_sum_product_check(const ThetaFamily& tf,
                                      const HodgeEhrhartPolynomials& polys) {
  const int n = tf.n;
  if (polys.total.degree() != n)
    throw DegenerateDegree("total polynomial does not have full degree");
  const Rat cn = polys.total.coeff(n);

  Verdict verdict;
  {
    const Rat lhs = polys.total.coeff(n - 1) / cn;
    const Rat rhs = Rat(n, 2) * Rat(tf.dim_h0()) / Rat(tf.mu());
    std::ostringstream detail;
    if (lhs != rhs)
      detail << "c_{n-1}/c_n = " << rat_to_string(lhs) << " but (n/2) dim H_0 / mu = "
             << rat_to_string(rhs);
    verdict.record("root sum equals -(n/2) dim H_0 / mu", lhs == rhs, detail.str());
  }
  {
    const Rat lhs = polys.total.coeff(0) / cn;
    const Rat rhs = Rat(factorial(n)) * Rat(tf.theta0()[0]) / Rat(tf.mu());
    std::ostringstream detail;
    if (lhs != rhs)
      detail << "c_0/c_n = " << rat_to_string(lhs) << " but n! theta^0_0 / mu = "
             << rat_to_string(rhs);
    verdict.record("root product equals (-1)^n n! theta^0_0 / mu", lhs == rhs, detail.str());
  }
  return verdict;
}

enum class ReflexivityKind { reflexive, anti_reflexive, mixed };
enum class RootLineKind { cl, acl, cl_star, acl_star, none };

inline std::string to_string(ReflexivityKind k) {
  switch (k) {
    case ReflexivityKind::reflexive: return "reflexive";
    case ReflexivityKind::anti_reflexive: return "anti-reflexive";
    default: return "mixed";
  }
}

inline std::string to_string(RootLineKind k) {
  switch (k) {
    case RootLineKind::cl: return "CL";
    case RootLineKind::acl: return "ACL";
    case RootLineKind::cl_star: return "CL*";
    case RootLineKind::acl_star: return "ACL*";
    default: return "none";
  }
}

// Classification from the class structure alone: reflexive when everything
// sits in the integer class, anti-reflexive when nothing does.
inline ReflexivityKind reflexivity_kind(const ThetaFamily& tf) {
  const bool has_integer = !all_zero(tf.theta0());
  const bool has_fractional = !all_zero(tf.theta_ne0());
  if (has_integer && !has_fractional) return ReflexivityKind::reflexive;
  if (!has_integer && has_fractional) return ReflexivityKind::anti_reflexive;
  return ReflexivityKind::mixed;
}

struct Classification {
  ReflexivityKind kind = ReflexivityKind::mixed;
  RootLineKind root_line = RootLineKind::none;
  std::vector<Int> trivial_roots;  // exact integer roots of L_psi
  Int mu = 0;
  Int dim_h0 = 0;
  bool consistent = true;  // kind agrees with total-theta symmetry
  std::string note;
};

inline Classification classify(const ThetaFamily& tf, const HodgeEhrhartPolynomials& polys,
                               double tol = 1e-8) {
  const int n = tf.n;
  Classification cls;
  cls.mu = tf.mu();
  cls.dim_h0 = tf.dim_h0();
  if (cls.mu == 0) {
    cls.note = "empty spectrum: no roots to locate";
    return cls;
  }
  cls.kind = reflexivity_kind(tf);

  // Total-theta symmetry cross-check: palindromy about n/2 characterizes the
  // reflexive kind, palindromy about (n+1)/2 (with empty degree 0) the
  // anti-reflexive kind.
  const IntVector theta = tf.theta_total();
  bool palin_n = true;
  for (int p = 0; p <= n; ++p)
    if (theta[p] != theta[n - p]) palin_n = false;
  bool palin_n1 = theta[0] == 0;
  for (int p = 1; p <= n; ++p)
    if (theta[p] != theta[n + 1 - p]) palin_n1 = false;
  if (palin_n != (cls.kind == ReflexivityKind::reflexive)) {
    cls.consistent = false;
    cls.note = "total theta palindromy disagrees with the reflexive classification";
  }
  if (palin_n1 != (cls.kind == ReflexivityKind::anti_reflexive)) {
    cls.consistent = false;
    if (!cls.note.empty()) cls.note += "; ";
    cls.note += "total theta anti-palindromy disagrees with the anti-reflexive classification";
  }

  cls.trivial_roots = integer_roots(polys.total);
  const std::vector<std::complex<double>> roots = find_roots(polys.total);
  if (line_test(roots, -0.5, {}, tol))
    cls.root_line = RootLineKind::cl;
  else if (line_test(roots, 0.0, {}, tol))
    cls.root_line = RootLineKind::acl;
  else if (!cls.trivial_roots.empty() && line_test(roots, -0.5, cls.trivial_roots, tol))
    cls.root_line = RootLineKind::cl_star;
  else if (!cls.trivial_roots.empty() && line_test(roots, 0.0, cls.trivial_roots, tol))
    cls.root_line = RootLineKind::acl_star;
  else
    cls.root_line = RootLineKind::none;
  return cls;
}

// Factorization analysis of L_psi driven by theta(z) = z^k U(z): when all
// roots of U lie on the unit circle, L_psi splits exactly as
// (X + 1 - k)(X + 2 - k) ... (X + n - r - k) v(X) with deg v = r = deg U,
// and the roots of v sit on the vertical line Re = -(n + 1 - r)/2 + k.
struct RvAnalysis {
  bool applicable = false;
  std::string reason;           // set when not applicable
  int k = 0;                    // order of vanishing of theta at 0
  int r = 0;                    // degree of the unit part
  IntVector unit_part;          // U, with U(0) != 0
  QPolynomial predicted_factors;
  QPolynomial v;                // exact quotient L_psi / predicted_factors
  double line_re = 0;
  bool division_exact = false;
  bool v_on_line = false;
  bool dichotomy = false;       // (r, k) pattern matches the classification
  std::string dichotomy_note;
};

inline RvAnalysis rv_analysis(const ThetaFamily& tf, const HodgeEhrhartPolynomials& polys,
                              double tol = 1e-8) {
  const int n = tf.n;
  RvAnalysis rv;
  const IntVector theta = tf.theta_total();
  if (all_zero(theta)) {
    rv.reason = "total theta vanishes";
    return rv;
  }

  int k = 0;
  while (theta[k] == 0) ++k;
  int top = n;
  while (theta[top] == 0) --top;
  rv.k = k;
  rv.r = top - k;
  rv.unit_part = IntVector(theta.begin() + k, theta.begin() + top + 1);

  if (rv.r >= 1) {
    const std::vector<std::complex<double>> u_roots =
        find_roots(QPolynomial::from_int_vector(rv.unit_part));
    for (const std::complex<double>& z : u_roots)
      if (std::abs(std::abs(z) - 1.0) > tol) {
        std::ostringstream reason;
        reason << "unit part has a root of modulus " << std::abs(z);
        rv.reason = reason.str();
        return rv;
      }
  }
  rv.applicable = true;

  rv.predicted_factors = QPolynomial::constant(1);
  for (int i = 1; i <= n - rv.r; ++i)
    rv.predicted_factors =
        rv.predicted_factors * (QPolynomial::monomial(1) + QPolynomial::constant(i - rv.k));
  const auto [quotient, remainder] = polys.total.divmod(rv.predicted_factors);
  rv.division_exact = remainder.is_zero();
  rv.v = quotient;
  rv.line_re = -(n + 1 - rv.r) / 2.0 + rv.k;
  rv.v_on_line = rv.division_exact &&
                 (rv.v.degree() < 1 || line_test(find_roots(rv.v), rv.line_re, {}, tol));

  const ReflexivityKind kind = reflexivity_kind(tf);
  const bool pattern_reflexive = rv.r == n - 2 * rv.k;
  const bool pattern_anti = rv.r == n - 2 * rv.k + 1;
  rv.dichotomy = pattern_reflexive == (kind == ReflexivityKind::reflexive) &&
                 pattern_anti == (kind == ReflexivityKind::anti_reflexive);
  std::ostringstream note;
  note << "r = " << rv.r << ", n - 2k = " << (n - 2 * rv.k) << ", classification "
       << to_string(kind);
  rv.dichotomy_note = note.str();
  return rv;
}

}  // namespace polyspec

#endif  // POLYSPEC_HODGE_EHRHART_HPP
