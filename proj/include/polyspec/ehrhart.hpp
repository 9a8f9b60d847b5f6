#ifndef POLYSPEC_EHRHART_HPP
#define POLYSPEC_EHRHART_HPP

// Classical lattice-point counting data of a polytope P: the counting
// polynomial L_P with L_P(m) = #(mP intersect Z^n), its delta vector (the
// numerator coefficients of sum_m L_P(m) z^m over (1-z)^{n+1}), and the
// standard structural checks (reciprocity, palindromy versus reflexivity,
// the lower bound inequalities, and the split of delta into a palindromic
// pair coming from the integer and fractional spectrum classes).

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polyspec/check.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/qpolynomial.hpp"
#include "polyspec/theta_family.hpp"

namespace polyspec {

// Counting polynomial by Lagrange interpolation through m = 0..n.  The result
// is exact; degree-n polynomiality of the count guarantees n+1 samples
// suffice.
inline QPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  const int n = p.dim();
  std::vector<Int> samples(n + 1);
  for (int m = 0; m <= n; ++m) samples[m] = lattice_point_count(p, m);

  QPolynomial result;
  for (int m = 0; m <= n; ++m) {
    QPolynomial basis = QPolynomial::constant(1);
    Rat denom = 1;
    for (int k = 0; k <= n; ++k) {
      if (k == m) continue;
      basis = basis * (QPolynomial::monomial(1) + QPolynomial::constant(-k));
      denom *= Rat(m - k);
    }
    result = result + basis * (Rat(samples[m]) / denom);
  }
  return result;
}

// delta_k = sum_j (-1)^j C(n+1, j) L((k-j)P), k = 0..n.  Exact integer
// convolution of the counts against (1-z)^{n+1}.
inline IntVector delta_vector(const LatticePolytope& p) {
  const int n = p.dim();
  std::vector<Int> counts(n + 1);
  for (int m = 0; m <= n; ++m) counts[m] = lattice_point_count(p, m);

  IntVector delta(n + 1, Int(0));
  for (int k = 0; k <= n; ++k) {
    Int d = 0;
    for (int j = 0; j <= k; ++j) {
      const Int term = binomial(Int(n + 1), j) * counts[k - j];
      d += (j % 2 == 0) ? term : -term;
    }
    if (d < 0) {
      std::ostringstream msg;
      msg << "delta_" << k << " = " << d << " is negative";
      throw NegativeDelta(msg.str());
    }
    delta[k] = d;
  }
  if (delta[0] != 1) throw InternalError("delta_0 must be 1");
  if (sum(delta) != p.normalized_volume())
    throw InternalError("delta vector does not sum to the normalized volume");
  return delta;
}

// Weighted count L0(m) = 1 + sum_{j=1..m} #(boundary of jP intersect Z^n):
// every lattice point is counted once, at its Newton degree.
inline Int weighted_L0(const LatticePolytope& p, const Int& m) {
  if (m < 0) throw InputError("weighted count needs m >= 0");
  Int total = 1;
  for (Int j = 1; j <= m; ++j) total += boundary_lattice_point_count(p, j);
  return total;
}

// All facet offsets equal to 1, i.e. P = { x : <g_F, x> <= 1 } with
// primitive integer normals.
inline bool reflexive_check(const LatticePolytope& p) {
  for (const FacetInequality& f : p.facets())
    if (f.rhs != 1) return false;
  return true;
}

// L_P(-m) = (-1)^n #(interior of mP intersect Z^n) for m = 1..mmax.
inline Verdict ehrhart_reciprocity_check(const LatticePolytope& p,
                                         const QPolynomial& ehrhart, int mmax = 5) {
  const int n = p.dim();
  Verdict verdict;
  for (int m = 1; m <= mmax; ++m) {
    const Rat lhs = ehrhart(Rat(-m));
    const Rat rhs = Rat((n % 2 == 0 ? 1 : -1) * interior_lattice_point_count(p, m));
    std::ostringstream name;
    name << "counting polynomial at -" << m << " matches the signed interior count";
    std::ostringstream detail;
    if (lhs != rhs)
      detail << "L(-" << m << ") = " << rat_to_string(lhs) << " but signed interior count is "
             << rat_to_string(rhs);
    verdict.record(name.str(), lhs == rhs, detail.str());
  }
  return verdict;
}

// Palindromy of delta is equivalent to reflexivity; the check verifies the
// equivalence in the direction that applies to this polytope.
inline Verdict hibi_palindromic_check(const LatticePolytope& p, const IntVector& delta) {
  const int n = p.dim();
  bool palindromic = true;
  for (int k = 0; k <= n; ++k)
    if (delta[k] != delta[n - k]) palindromic = false;
  const bool reflexive = reflexive_check(p);

  Verdict verdict;
  std::ostringstream detail;
  if (palindromic != reflexive)
    detail << "delta " << (palindromic ? "is" : "is not") << " palindromic but the polytope "
           << (reflexive ? "is" : "is not") << " reflexive";
  verdict.record("delta palindromic exactly when all facet offsets are 1",
                 palindromic == reflexive, detail.str());
  return verdict;
}

// Lower bound inequalities for a polytope with an interior lattice point:
// delta_0 = 1, delta_n >= 1, and 1 <= delta_1 <= delta_i for i = 1..n-1.
inline Verdict lower_bound_check(const IntVector& delta) {
  const int n = static_cast<int>(delta.size()) - 1;
  Verdict verdict;
  verdict.record("delta_0 equals 1", delta[0] == 1);
  verdict.record("delta_n is at least 1", delta[n] >= 1);
  if (n >= 2) {
    bool ok = delta[1] >= 1;
    std::ostringstream detail;
    if (!ok) detail << "delta_1 = " << delta[1];
    for (int i = 2; i <= n - 1; ++i) {
      if (delta[i] < delta[1]) {
        ok = false;
        detail << (detail.tellp() > 0 ? "; " : "") << "delta_" << i << " = " << delta[i]
               << " < delta_1 = " << delta[1];
      }
    }
    verdict.record("1 <= delta_1 <= delta_i for i = 1..n-1", ok, detail.str());
  }
  return verdict;
}

// Count-level identities for the small delta entries.
inline Verdict delta_special_values_check(const LatticePolytope& p, const IntVector& delta) {
  const int n = p.dim();
  Verdict verdict;
  {
    const Int count1 = lattice_point_count(p, 1);
    const Int expected = count1 - n - 1;
    std::ostringstream detail;
    if (delta[1] != expected)
      detail << "delta_1 = " << delta[1] << " but #(P) - n - 1 = " << expected;
    verdict.record("delta_1 equals #(P) - n - 1", delta[1] == expected, detail.str());
  }
  {
    const Int interior1 = interior_lattice_point_count(p, 1);
    std::ostringstream detail;
    if (delta[n] != interior1)
      detail << "delta_n = " << delta[n] << " but interior count is " << interior1;
    verdict.record("delta_n equals the interior point count", delta[n] == interior1,
                   detail.str());
  }
  {
    std::ostringstream detail;
    if (sum(delta) != p.normalized_volume())
      detail << "sum " << sum(delta) << " vs volume " << p.normalized_volume();
    verdict.record("delta sums to the normalized volume",
                   sum(delta) == p.normalized_volume(), detail.str());
  }
  return verdict;
}

// Split of the total theta vector into the integer-class part A (palindromic
// of degree n) and the shifted fractional part B with theta^{/=0} = z B(z)
// (palindromic of degree n-1).  When theta equals delta this is the classical
// decomposition delta(z) = A(z) + z B(z).
inline std::pair<IntVector, IntVector> betke_mcmullen_split(const ThetaFamily& tf) {
  const int n = tf.n;
  const IntVector a = tf.theta0();
  const IntVector ne0 = tf.theta_ne0();
  if (ne0[0] != 0) throw InternalError("fractional theta classes must vanish in degree 0");
  IntVector b(ne0.begin() + 1, ne0.end());  // length n, degree <= n-1

  for (int k = 0; k <= n; ++k)
    if (a[k] != a[n - k])
      throw PalindromyViolation("integer-class part of the split is not palindromic");
  for (int k = 0; k + 1 <= n; ++k)
    if (b[k] != b[n - 1 - k])
      throw PalindromyViolation("fractional-class part of the split is not palindromic");
  return {a, b};
}

}  // namespace polyspec

#endif  // POLYSPEC_EHRHART_HPP
