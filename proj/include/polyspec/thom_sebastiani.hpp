#ifndef POLYSPEC_THOM_SEBASTIANI_HPP
#define POLYSPEC_THOM_SEBASTIANI_HPP

// Product (join) operations: fractional spectra always multiply by adding
// exponents, while the graded theta classes multiply only when at least one
// factor is reflexive.  (Counterexample otherwise: theta' = 2z and
// theta'' = z in one variable each have their mass at degree 1, but the true
// product theta is z + z^2, not 2z^2.)  For counting series the analogous
// product identity is checked directly from lattice-point counts of a free
// sum against the factor counts.

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "polyspec/check.hpp"
#include "polyspec/ehrhart.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/hodge_ehrhart.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/polytope_spectrum.hpp"
#include "polyspec/spectrum.hpp"
#include "polyspec/theta_family.hpp"

namespace polyspec {

// Product spectrum: exponents add, multiplicities multiply.  Always defined.
inline FractionalSpectrum spectrum_product(const FractionalSpectrum& a,
                                           const FractionalSpectrum& b) {
  std::map<Rat, Int> atoms;
  for (const auto& [ea, ma] : a.atoms)
    for (const auto& [eb, mb] : b.atoms) atoms[ea + eb] += ma * mb;
  return FractionalSpectrum(a.n + b.n, std::move(atoms));
}

// Product of theta families, requiring at least one reflexive factor: every
// class of the non-reflexive factor is convolved with the single integer
// class of the reflexive one.  The result is cross-checked against the theta
// family of the product spectrum.
inline ThetaFamily theta_product(const ThetaFamily& a, const ThetaFamily& b) {
  const bool a_ref = reflexivity_kind(a) == ReflexivityKind::reflexive;
  const bool b_ref = reflexivity_kind(b) == ReflexivityKind::reflexive;
  if (!a_ref && !b_ref)
    throw ReflexivityRequired(
        "theta classes multiply only when at least one factor is reflexive");
  const ThetaFamily& general = b_ref ? a : b;
  const ThetaFamily& reflexive = b_ref ? b : a;

  const int n = a.n + b.n;
  const IntVector ref0 = reflexive.theta0();
  std::map<Rat, IntVector> classes;
  for (const auto& [alpha, vec] : general.classes) {
    if (all_zero(vec)) continue;
    IntVector prod(n + 1, Int(0));
    for (std::size_t i = 0; i < vec.size(); ++i)
      for (std::size_t j = 0; j < ref0.size(); ++j) prod[i + j] += vec[i] * ref0[j];
    classes.emplace(alpha, std::move(prod));
  }
  ThetaFamily result(n, std::move(classes));

  const ThetaFamily direct =
      ThetaFamily::from_spectrum(spectrum_product(a.to_spectrum(), b.to_spectrum()));
  if (!(result.classes == direct.classes))
    throw InternalError("theta product disagrees with the product spectrum");
  return result;
}

// With both factors reflexive the counting series multiply up to one factor
// of (1-z): coefficientwise, L(m) = sum_{i+j=m} L'(i) L''(j) minus the same
// sum at m-1.  Verified through z^trunc using the graded polynomials.
inline Verdict ehr_product_check(const ThetaFamily& a, const ThetaFamily& b, int trunc = 8) {
  if (reflexivity_kind(a) != ReflexivityKind::reflexive ||
      reflexivity_kind(b) != ReflexivityKind::reflexive)
    throw ReflexivityRequired("the counting-series product identity needs both factors reflexive");

  const QPolynomial la = hodge_ehrhart_polynomials(a).total;
  const QPolynomial lb = hodge_ehrhart_polynomials(b).total;
  const QPolynomial lab = hodge_ehrhart_polynomials(theta_product(a, b)).total;

  auto convolve = [&](int m) {
    Rat s = 0;
    for (int i = 0; i <= m; ++i) s += la(Rat(i)) * lb(Rat(m - i));
    return s;
  };
  bool ok = true;
  std::ostringstream detail;
  for (int m = 0; m <= trunc && ok; ++m) {
    const Rat rhs = convolve(m) - (m >= 1 ? convolve(m - 1) : Rat(0));
    if (lab(Rat(m)) != rhs) {
      ok = false;
      detail << "coefficient of z^" << m << ": " << rat_to_string(lab(Rat(m)))
             << " != " << rat_to_string(rhs);
    }
  }
  Verdict verdict;
  std::ostringstream name;
  name << "product counting series matches (1-z) times the factor series through z^" << trunc;
  verdict.record(name.str(), ok, detail.str());
  return verdict;
}

// Free-sum counting identity (one reflexive factor suffices): the counting
// series of the free sum equals (1-z) times the product of the factor
// series.  Checked from raw lattice-point counts, independent of any theta
// machinery.
inline Verdict free_sum_count_check(const LatticePolytope& p, const LatticePolytope& q,
                                    int trunc = 8) {
  if (!reflexive_check(p) && !reflexive_check(q))
    throw ReflexivityRequired("the free-sum counting identity needs a reflexive factor");
  const LatticePolytope sum = free_sum(p, q);

  std::vector<Int> cp(trunc + 1), cq(trunc + 1), cs(trunc + 1);
  for (int m = 0; m <= trunc; ++m) {
    cp[m] = lattice_point_count(p, m);
    cq[m] = lattice_point_count(q, m);
    cs[m] = lattice_point_count(sum, m);
  }
  auto convolve = [&](int m) {
    Int s = 0;
    for (int i = 0; i <= m; ++i) s += cp[i] * cq[m - i];
    return s;
  };
  bool ok = true;
  std::ostringstream detail;
  for (int m = 0; m <= trunc && ok; ++m) {
    const Int rhs = convolve(m) - (m >= 1 ? convolve(m - 1) : Int(0));
    if (cs[m] != rhs) {
      ok = false;
      detail << "count of the free sum at m = " << m << " is " << cs[m] << ", expected "
             << rhs;
    }
  }
  Verdict verdict;
  std::ostringstream name;
  name << "free-sum counts match (1-z) times the factor count series through z^" << trunc;
  verdict.record(name.str(), ok, detail.str());
  return verdict;
}

// Coherence of the two product routes on polytopes: the delta vector of a
// free sum equals the total theta of the product of the factor spectra.
inline Verdict free_sum_coherence_check(const LatticePolytope& p, const LatticePolytope& q) {
  const ThetaFamily ta = ThetaFamily::from_spectrum(spectrum_from_polytope(p));
  const ThetaFamily tb = ThetaFamily::from_spectrum(spectrum_from_polytope(q));
  const IntVector theta = theta_product(ta, tb).theta_total();
  const IntVector delta = delta_vector(free_sum(p, q));

  bool ok = theta == delta;
  std::ostringstream detail;
  if (!ok) {
    detail << "delta =";
    for (const Int& d : delta) detail << " " << d;
    detail << ", theta =";
    for (const Int& t : theta) detail << " " << t;
  }
  Verdict verdict;
  verdict.record("free-sum delta equals the product theta", ok, detail.str());
  return verdict;
}

}  // namespace polyspec

#endif  // POLYSPEC_THOM_SEBASTIANI_HPP
