#ifndef POLYSPEC_ERRORS_HPP
#define POLYSPEC_ERRORS_HPP

// Exception taxonomy.  Input problems (bad files, invalid geometry) and
// violated mathematical preconditions are distinct from internal consistency
// failures, which always indicate a bug in the library itself.

#include <stdexcept>
#include <string>

namespace polyspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: unparsable files, wrong shapes, bad field values.
struct InputError : Error {
  using Error::Error;
};

// The origin is not strictly inside the polytope (some facet has rhs <= 0).
struct OriginNotInterior : Error {
  using Error::Error;
};

// The vertex set does not span the ambient space.
struct NotFullDimensional : Error {
  using Error::Error;
};

// A listed point is a duplicate or not an extreme point of the hull.
struct InvalidPolytope : Error {
  using Error::Error;
};

// reverse(p, d) called with d smaller than deg p.
struct DegreeTooLarge : Error {
  using Error::Error;
};

// A spectral exponent cannot be housed in the theta grading for the stated
// dimension (exponents must lie in [0, n]).
struct ExponentOutOfRange : Error {
  using Error::Error;
};

// A computed delta-vector entry is negative.  Delta-vectors of lattice
// polytopes are nonnegative, so this signals an internal bug.
struct NegativeDelta : Error {
  using Error::Error;
};

// A functional equation that every admissible theta family satisfies
// (palindromy of the split parts) fails: the input family is inconsistent.
struct PalindromyViolation : Error {
  using Error::Error;
};

// The polynomial handed to a Vieta-style check has vanishing leading term.
struct DegenerateDegree : Error {
  using Error::Error;
};

// The numeric root finder could not certify all roots to tolerance.
struct ConvergenceFailure : Error {
  using Error::Error;
};

// A Thom-Sebastiani product at theta level requires at least one reflexive
// factor; the classical counterexample (theta' = 2z, theta'' = z, where the
// true product theta is z + z^2, not 2z^2) shows the hypothesis is sharp.
struct ReflexivityRequired : Error {
  using Error::Error;
};

// Impossible situation: an invariant the mathematics guarantees was violated.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace polyspec

#endif  // POLYSPEC_ERRORS_HPP
