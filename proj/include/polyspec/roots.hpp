#ifndef POLYSPEC_ROOTS_HPP
#define POLYSPEC_ROOTS_HPP

// Root location for the certified polynomials.  Numeric roots come from the
// companion-matrix eigenvalues refined by Newton iteration, with a relative
// residual gate; integer roots are found exactly (divisor search plus exact
// evaluation) so that "trivial" roots can be excluded from line tests without
// floating-point ambiguity.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "polyspec/errors.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/qpolynomial.hpp"

namespace polyspec {

namespace detail {

inline std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * z + c[i];
  return v;
}

// Scale-aware residual: |p(r)| relative to the evaluation magnitude
// sum_i |c_i| max(1,|r|)^i, which bounds the rounding noise of the evaluation.
inline double relative_residual(const std::vector<double>& c, std::complex<double> r) {
  double scale = 0, pw = 1;
  const double m = std::max(1.0, std::abs(r));
  for (double ci : c) {
    scale += std::abs(ci) * pw;
    pw *= m;
  }
  return std::abs(horner(c, r)) / std::max(scale, 1e-300);
}

}  // namespace detail

// All complex roots of p, each refined until the relative residual is below
// 1e-10, sorted by (real, imaginary).  Degree must be at least 1.
inline std::vector<std::complex<double>> find_roots(const QPolynomial& p) {
  const int d = p.degree();
  if (d < 1) throw InputError("root finding needs a polynomial of degree >= 1");

  std::vector<double> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = to_double(p.coeff(i));
  std::vector<double> dc(d);
  for (int i = 1; i <= d; ++i) dc[i - 1] = i * c[i];

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalue iteration did not converge");

  std::vector<std::complex<double>> roots;
  roots.reserve(d);
  for (int i = 0; i < d; ++i) {
    std::complex<double> r = solver.eigenvalues()[i];
    double best_res = detail::relative_residual(c, r);
    std::complex<double> best = r;
    for (int it = 0; it < 60 && best_res > 1e-16; ++it) {
      const std::complex<double> dv = detail::horner(dc, r);
      if (std::abs(dv) == 0) break;
      r -= detail::horner(c, r) / dv;
      const double res = detail::relative_residual(c, r);
      if (res < best_res) {
        best_res = res;
        best = r;
      }
    }
    if (best_res > 1e-10) throw ConvergenceFailure("root residual above tolerance");
    roots.push_back(best);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

// Exact integer roots of p (rational coefficients): an integer root of
// the integer-rescaled polynomial divides its trailing coefficient, so a
// divisor search plus exact evaluation finds them all.  Sorted ascending.
inline std::vector<Int> integer_roots(const QPolynomial& p) {
  if (p.is_zero()) throw InputError("the zero polynomial has every root");
  Int lcm_den = 1;
  for (const Rat& x : p.coeffs())
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  IVec c(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i)
    c[i] = numerator(p.coeff(i)) * (lcm_den / denominator(p.coeff(i)));

  std::vector<Int> roots;
  std::size_t low = 0;
  while (low < c.size() - 1 && c[low] == 0) ++low;  // factors of X
  if (low > 0) roots.push_back(0);
  IVec reduced(c.begin() + low, c.end());
  if (reduced.size() <= 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  auto eval = [&](const Int& x) {
    Int v = 0;
    for (int i = static_cast<int>(reduced.size()) - 1; i >= 0; --i) v = v * x + reduced[i];
    return v;
  };
  Int a0 = reduced[0];
  if (a0 < 0) a0 = -a0;
  for (Int d = 1; d * d <= a0; ++d) {
    if (a0 % d != 0) continue;
    const Int cands[4] = {d, Int(a0 / d), Int(-d), Int(-(a0 / d))};
    for (const Int& cand : cands)
      if (eval(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// True when every root (excluding near-matches of the given exact integer
// roots) lies on the vertical line Re = line_re within a relative tolerance.
inline bool line_test(const std::vector<std::complex<double>>& roots, double line_re,
                      const std::vector<Int>& exclude = {}, double tol = 1e-8) {
  for (const std::complex<double>& r : roots) {
    bool excluded = false;
    for (const Int& k : exclude)
      if (std::abs(r - std::complex<double>(to_double(k), 0.0)) <
          1e-6 * std::max(1.0, std::abs(r)))
        excluded = true;
    if (excluded) continue;
    if (std::abs(r.real() - line_re) >= tol * std::max(1.0, std::abs(r))) return false;
  }
  return true;
}

}  // namespace polyspec

#endif  // POLYSPEC_ROOTS_HPP
