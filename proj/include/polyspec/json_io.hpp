#ifndef POLYSPEC_JSON_IO_HPP
#define POLYSPEC_JSON_IO_HPP

// JSON input/output for polytopes and spectra, plus the exact-rational
// encoding used by reports.  Input errors carry positions ("atoms[2][1]...")
// so bad files are easy to fix.  Rationals are serialized as decimal strings
// under "num"/"den" to stay lossless at any size.

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "polyspec/errors.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/spectrum.hpp"

namespace polyspec {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
}

enum class InputKind { polytope, spectrum };

// A polytope file has "vertices", a spectrum file has "atoms".
inline InputKind detect_kind(const Json& j) {
  if (!j.is_object()) throw InputError("top-level JSON value must be an object");
  const bool has_vertices = j.contains("vertices");
  const bool has_atoms = j.contains("atoms");
  if (has_vertices && !has_atoms) return InputKind::polytope;
  if (has_atoms && !has_vertices) return InputKind::spectrum;
  throw InputError("input must have exactly one of \"vertices\" or \"atoms\"");
}

namespace detail {

inline int require_dim(const Json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("\"dim\" must be an integer");
  const long long n = j["dim"].get<long long>();
  if (n < 1 || n > 64) throw InputError("\"dim\" must be between 1 and 64");
  return static_cast<int>(n);
}

inline Int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + " must be an integer");
  return Int(j.get<long long>());
}

}  // namespace detail

inline LatticePolytope polytope_from_json(const Json& j) {
  const int n = detail::require_dim(j);
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw InputError("\"vertices\" must be a non-empty array");
  std::vector<IVec> verts;
  verts.reserve(j["vertices"].size());
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const Json& row = j["vertices"][i];
    std::ostringstream at;
    at << "vertices[" << i << "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError(at.str() + " must be an array of length " + std::to_string(n));
    IVec v(n);
    for (int k = 0; k < n; ++k) {
      std::ostringstream cell;
      cell << at.str() << "[" << k << "]";
      v[k] = detail::require_int(row[k], cell.str());
    }
    verts.push_back(std::move(v));
  }
  return LatticePolytope(n, std::move(verts));
}

inline Json polytope_to_json(const LatticePolytope& p) {
  Json verts = Json::array();
  for (const IVec& v : p.vertices()) {
    Json row = Json::array();
    for (const Int& x : v) row.push_back(to_ll(x));
    verts.push_back(std::move(row));
  }
  return Json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

// Spectrum files list atoms as [numerator, denominator, multiplicity].
inline FractionalSpectrum spectrum_from_json(const Json& j) {
  const int n = detail::require_dim(j);
  if (!j["atoms"].is_array() || j["atoms"].empty())
    throw InputError("\"atoms\" must be a non-empty array");
  std::map<Rat, Int> atoms;
  for (std::size_t i = 0; i < j["atoms"].size(); ++i) {
    const Json& row = j["atoms"][i];
    std::ostringstream at;
    at << "atoms[" << i << "]";
    if (!row.is_array() || row.size() != 3)
      throw InputError(at.str() + " must be [numerator, denominator, multiplicity]");
    const Int num = detail::require_int(row[0], at.str() + "[0]");
    const Int den = detail::require_int(row[1], at.str() + "[1]");
    const Int mult = detail::require_int(row[2], at.str() + "[2]");
    if (den == 0) throw InputError(at.str() + ": denominator must be nonzero");
    if (mult < 1) throw InputError(at.str() + ": multiplicity must be >= 1");
    atoms[Rat(num, den)] += mult;
  }
  return FractionalSpectrum(n, std::move(atoms));
}

inline Json spectrum_to_json(const FractionalSpectrum& s) {
  Json atoms = Json::array();
  for (const auto& [e, m] : s.atoms)
    atoms.push_back(Json::array({to_ll(numerator(e)), to_ll(denominator(e)), to_ll(m)}));
  return Json{{"dim", s.n}, {"atoms", std::move(atoms)}};
}

// Lossless rational encoding for report payloads.
inline Json rat_to_json(const Rat& r) {
  return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Rat rat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j["num"].is_string() || !j["den"].is_string())
    throw InputError("rational values must be {\"num\": string, \"den\": string}");
  try {
    const Int num(j["num"].get<std::string>());
    const Int den(j["den"].get<std::string>());
    if (den == 0) throw InputError("rational denominator must be nonzero");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw InputError(std::string("cannot parse rational: ") + e.what());
  }
}

}  // namespace polyspec

#endif  // POLYSPEC_JSON_IO_HPP
