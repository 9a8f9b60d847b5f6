#ifndef POLYSPEC_SPECTRUM_HPP
#define POLYSPEC_SPECTRUM_HPP

// Fractional spectra: finite multisets of exact rational exponents in [0, n]
// with positive integer multiplicities, together with the grading that turns a
// spectrum into the family of theta-vectors indexed by classes alpha in [0,1).

#include <map>
#include <sstream>
#include <string>

#include "polyspec/errors.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/qpolynomial.hpp"

namespace polyspec {

struct FractionalSpectrum {
  int n = 0;                 // ambient dimension; exponents live in [0, n]
  std::map<Rat, Int> atoms;  // exponent -> multiplicity (>= 1)

  FractionalSpectrum() = default;
  FractionalSpectrum(int n_, std::map<Rat, Int> atoms_) : n(n_), atoms(std::move(atoms_)) {
    validate();
  }

  void validate() const {
    if (n < 1) throw InputError("spectrum dimension must be >= 1");
    for (const auto& [e, m] : atoms) {
      if (m < 1) throw InputError("spectrum multiplicities must be >= 1");
      if (e < 0 || e > n) {
        std::ostringstream msg;
        msg << "spectral exponent " << numerator(e).str() << "/" << denominator(e).str()
            << " outside [0, " << n << "]";
        throw ExponentOutOfRange(msg.str());
      }
    }
  }

  Int mu() const {
    Int total = 0;
    for (const auto& [e, m] : atoms) total += m;
    return total;
  }

  Int multiplicity(const Rat& e) const {
    auto it = atoms.find(e);
    return it == atoms.end() ? Int(0) : it->second;
  }

  bool integer_exponents_only() const {
    for (const auto& [e, m] : atoms)
      if (!is_integer(e)) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [e, m] : atoms) {
      if (!first) out << ", ";
      out << numerator(e).str();
      if (denominator(e) != 1) out << "/" << denominator(e).str();
      out << ": " << m.str();
      first = false;
    }
    out << "}";
    return out.str();
  }

  bool operator==(const FractionalSpectrum& o) const {
    return n == o.n && atoms == o.atoms;
  }
};

// True iff multiplicity(e) == multiplicity(n - e) for every exponent: the
// spectrum is symmetric about n/2.
inline bool spectrum_symmetry_check(const FractionalSpectrum& s) {
  for (const auto& [e, m] : s.atoms)
    if (s.multiplicity(Rat(s.n) - e) != m) return false;
  return true;
}

// Grade a spectrum into theta-vectors by monodromy class.  Writing each
// exponent e as alpha + p - 1 with alpha = frac(e) when e is fractional, and
// as the integer p when e is integral:
//   alpha != 0:  theta^alpha_p = multiplicity(alpha + p - 1), p in [1, n]
//   alpha == 0:  theta^0_p     = multiplicity(p),             p in [0, n].
// Exponents that cannot be housed this way raise ExponentOutOfRange.
inline std::map<Rat, IntVector> spectrum_to_theta(const FractionalSpectrum& s, int n) {
  std::map<Rat, IntVector> classes;
  auto vec_for = [&](const Rat& alpha) -> IntVector& {
    auto [it, inserted] = classes.emplace(alpha, IntVector(n + 1, Int(0)));
    return it->second;
  };
  for (const auto& [e, m] : s.atoms) {
    if (e < 0 || e > n)
      throw ExponentOutOfRange("spectral exponent outside [0, n]");
    if (is_integer(e)) {
      const int p = to_int(numerator(e));
      vec_for(Rat(0))[p] += m;
    } else {
      const Int fl = rat_floor(e);
      const Rat alpha = e - Rat(fl);
      const int p = to_int(fl) + 1;
      if (p < 1 || p > n)
        throw ExponentOutOfRange("fractional exponent cannot be housed in [1, n]");
      vec_for(alpha)[p] += m;
    }
  }
  return classes;
}

}  // namespace polyspec

#endif  // POLYSPEC_SPECTRUM_HPP
