#ifndef POLYSPEC_NUMERIC_HPP
#define POLYSPEC_NUMERIC_HPP

// Exact arithmetic primitives shared by the whole library: arbitrary-precision
// integers and rationals, plus small combinatorial helpers.  Every quantity the
// library certifies is computed with these types; floating point appears only
// in the numeric root finder.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/errors.hpp"

namespace polyspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// binomial(n, k) for arbitrary integer n and k >= 0, via the falling-factorial
// product.  The product of k consecutive integers is divisible by k!, so the
// final division is exact.
inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int num = 1;
  for (int i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

// Floor/ceil division for exact integers (C++ '/' truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Int rat_floor(const Rat& r) {
  return floor_div(numerator(r), denominator(r));
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

inline long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw InternalError("integer too large for machine conversion");
  }
  return v.convert_to<long long>();
}

inline int to_int(const Int& v) {
  if (v > std::numeric_limits<int>::max() ||
      v < std::numeric_limits<int>::min()) {
    throw InternalError("integer too large for machine conversion");
  }
  return v.convert_to<int>();
}

// "p/q" for proper fractions, plain "p" for integers.
inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Int vector_gcd(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace polyspec

#endif  // POLYSPEC_NUMERIC_HPP
