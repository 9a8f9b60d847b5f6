#ifndef POLYSPEC_THETA_FAMILY_HPP
#define POLYSPEC_THETA_FAMILY_HPP

// A theta family collects, for one function or polytope of dimension n, the
// theta-vector of every monodromy class alpha in [0,1).  The total vector
// theta = sum_alpha theta^alpha is the Poincare polynomial of the Hodge
// filtration; mu = theta(1) and dim H_0 = theta^0(1).

#include <map>
#include <sstream>
#include <string>

#include "polyspec/errors.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/qpolynomial.hpp"
#include "polyspec/spectrum.hpp"

namespace polyspec {

struct ThetaFamily {
  int n = 0;
  std::map<Rat, IntVector> classes;  // alpha in [0,1) -> (theta_0,...,theta_n)

  ThetaFamily() = default;
  ThetaFamily(int n_, std::map<Rat, IntVector> classes_)
      : n(n_), classes(std::move(classes_)) {
    validate();
  }

  void validate() const {
    if (n < 1) throw InputError("theta family dimension must be >= 1");
    for (const auto& [alpha, vec] : classes) {
      if (alpha < 0 || alpha >= 1)
        throw InputError("theta class index must lie in [0, 1)");
      if (static_cast<int>(vec.size()) != n + 1)
        throw InputError("theta vector must have length n + 1");
      for (const Int& x : vec)
        if (x < 0) throw InputError("theta entries must be nonnegative");
      if (alpha != 0 && vec[0] != 0)
        throw InputError("theta^alpha_0 must vanish for alpha != 0");
    }
  }

  static ThetaFamily from_spectrum(const FractionalSpectrum& s) {
    ThetaFamily f;
    f.n = s.n;
    for (auto& [alpha, vec] : spectrum_to_theta(s, s.n))
      if (!all_zero(vec)) f.classes.emplace(alpha, vec);
    f.validate();
    return f;
  }

  // Inverse of the grading: alpha != 0 contributes exponent alpha + p - 1 with
  // multiplicity theta^alpha_p, and alpha == 0 contributes the integer p.
  FractionalSpectrum to_spectrum() const {
    std::map<Rat, Int> atoms;
    for (const auto& [alpha, vec] : classes) {
      for (int p = 0; p <= n; ++p) {
        if (vec[p] == 0) continue;
        const Rat e = (alpha == 0) ? Rat(p) : alpha + Rat(p - 1);
        atoms[e] += vec[p];
      }
    }
    return FractionalSpectrum(n, std::move(atoms));
  }

  const IntVector* find_class(const Rat& alpha) const {
    auto it = classes.find(alpha);
    return it == classes.end() ? nullptr : &it->second;
  }

  IntVector class_or_zero(const Rat& alpha) const {
    const IntVector* v = find_class(alpha);
    return v ? *v : IntVector(n + 1, Int(0));
  }

  IntVector theta0() const { return class_or_zero(Rat(0)); }

  IntVector theta_ne0() const {
    IntVector total(n + 1, Int(0));
    for (const auto& [alpha, vec] : classes) {
      if (alpha == 0) continue;
      for (int p = 0; p <= n; ++p) total[p] += vec[p];
    }
    return total;
  }

  IntVector theta_total() const {
    IntVector total(n + 1, Int(0));
    for (const auto& [alpha, vec] : classes)
      for (int p = 0; p <= n; ++p) total[p] += vec[p];
    return total;
  }

  Int mu() const { return sum(theta_total()); }
  Int dim_h0() const { return sum(theta0()); }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, vec] : classes) {
      if (!first) out << "; ";
      out << "alpha=" << numerator(alpha).str();
      if (denominator(alpha) != 1) out << "/" << denominator(alpha).str();
      out << ": (";
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (i) out << ", ";
        out << vec[i].str();
      }
      out << ")";
      first = false;
    }
    return first ? "empty" : out.str();
  }
};

}  // namespace polyspec

#endif  // POLYSPEC_THETA_FAMILY_HPP
