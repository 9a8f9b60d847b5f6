#ifndef POLYSPEC_POLYTOPE_SPECTRUM_HPP
#define POLYSPEC_POLYTOPE_SPECTRUM_HPP

// The fractional spectrum of a lattice polytope with interior origin: the
// multiset of Newton degrees of the lattice points in the fundamental
// half-open boxes of a boundary-triangulation fan.  Independently of that
// construction, the weighted enumeration sum_{x in Z^n} z^{nu(x)} must equal
// Spec(z) / (1-z)^n as a series in fractional powers of z; the oracle check
// below compares the two routes coefficient by coefficient.

#include <sstream>
#include <string>
#include <vector>

#include "polyspec/check.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/half_open.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/series.hpp"
#include "polyspec/spectrum.hpp"

namespace polyspec {

inline FractionalSpectrum spectrum_from_polytope(const LatticePolytope& p) {
  std::map<Rat, Int> atoms;
  for (const HalfOpenSimplicialCone& cone : half_open_decomposition(p))
    for (const Rat& nu : box_point_degrees(cone)) atoms[nu] += 1;

  FractionalSpectrum spec(p.dim(), std::move(atoms));
  if (spec.mu() != p.normalized_volume())
    throw InternalError("spectrum size does not match the normalized volume");
  if (spec.multiplicity(0) != 1)
    throw InternalError("spectrum of a polytope must contain 0 exactly once");
  return spec;
}

// Direct weighted count: sum over all lattice points x with nu(x) <= trunc of
// z^{nu(x)}.  Exponentially many points in trunc, so keep trunc modest.
inline FractionalSeries weighted_sum_oracle(const LatticePolytope& p, const Int& trunc) {
  if (trunc < 0) throw InputError("oracle truncation order must be >= 0");
  FractionalSeries series;
  series.order = Rat(trunc);
  for (const IVec& x : lattice_points(p, trunc)) {
    const Rat nu = newton_degree(p, x);
    if (nu <= series.order) series.c[nu] += 1;
  }
  return series;
}

// Compare (1-z)^n * oracle against the spectrum on all exponents <= trunc - n.
inline Verdict oracle_equivalence_check(const LatticePolytope& p,
                                        const FractionalSpectrum& spec, const Int& trunc) {
  const int n = p.dim();
  FractionalSeries lhs =
      multiply_by_one_minus_z_pow(weighted_sum_oracle(p, trunc), n);
  const Rat bound = Rat(trunc - n);

  std::ostringstream mismatches;
  bool ok = true;
  auto compare = [&](const Rat& e, const Rat& got, const Rat& want) {
    if (got == want) return;
    ok = false;
    mismatches << (mismatches.tellp() > 0 ? "; " : "") << "coefficient at z^"
               << rat_to_string(e) << ": got " << rat_to_string(got) << ", expected "
               << rat_to_string(want);
  };
  for (const auto& [e, v] : lhs.c)
    if (e <= bound) compare(e, v, Rat(spec.multiplicity(e)));
  for (const auto& [e, mult] : spec.atoms)
    if (e <= bound && lhs.c.find(e) == lhs.c.end()) compare(e, 0, Rat(mult));

  Verdict verdict;
  std::ostringstream name;
  name << "weighted count series matches the spectrum through exponent "
       << rat_to_string(bound);
  verdict.record(name.str(), ok, mismatches.str());
  return verdict;
}

}  // namespace polyspec

#endif  // POLYSPEC_POLYTOPE_SPECTRUM_HPP
