#ifndef POLYSPEC_HALF_OPEN_HPP
#define POLYSPEC_HALF_OPEN_HPP

// Half-open decomposition of the simplicial fan over a boundary
// triangulation.  The cones over the triangulation simplices cover the whole
// space but overlap along shared walls; removing each wall from exactly one
// of its two cones turns the cover into an exact partition.  The assignment
// is made with a reference point: a wall stays closed in the cone whose side
// the reference point is on.  We take the barycenter of the last facet in
// the sorted facet list and break degenerate incidences by a lexicographic
// perturbation, so the result is deterministic and exactly one cone keeps
// all of its walls.

#include <algorithm>
#include <functional>
#include <vector>

#include "polyspec/errors.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/linalg.hpp"
#include "polyspec/numeric.hpp"

namespace polyspec {

struct HalfOpenSimplicialCone {
  std::vector<IVec> generators;  // n linearly independent lattice vectors
  std::vector<bool> open_flags;  // open_flags[j]: wall {lambda_j = 0} removed
  Int det;                       // |det of the generator matrix|, >= 1

  // Rows of the inverse generator matrix: chart[j] is the linear functional
  // giving the j-th cone coordinate lambda_j(x).
  QMat chart;

  bool fully_closed() const {
    return std::none_of(open_flags.begin(), open_flags.end(), [](bool b) { return b; });
  }
};

// Exact membership test: x = sum_j lambda_j * generators[j] with lambda_j >= 0,
// strictly positive where the wall is open.
inline bool cone_contains(const HalfOpenSimplicialCone& cone, const IVec& x) {
  const QVec lambda = mat_vec(cone.chart, qvec_from_ivec(x));
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] < 0) return false;
    if (cone.open_flags[j] && lambda[j] == 0) return false;
  }
  return true;
}

inline std::vector<HalfOpenSimplicialCone> half_open_decomposition(const LatticePolytope& p) {
  const int n = p.dim();

  // Reference point: barycenter of the facet that sorts last.
  const FacetInequality& ref_facet = p.facets().back();
  QVec xi(n, Rat(0));
  for (int idx : ref_facet.vertex_indices)
    for (int i = 0; i < n; ++i) xi[i] += Rat(p.vertices()[idx][i]);
  for (Rat& c : xi) c /= Rat(static_cast<int>(ref_facet.vertex_indices.size()));

  std::vector<HalfOpenSimplicialCone> cones;
  cones.reserve(p.boundary_triangulation().size());
  int fully_closed_count = 0;
  for (const std::vector<int>& simplex : p.boundary_triangulation()) {
    HalfOpenSimplicialCone cone;
    cone.generators.reserve(simplex.size());
    for (int idx : simplex) cone.generators.push_back(p.vertices()[idx]);

    QMat w(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = Rat(cone.generators[j][i]);
    cone.chart = inverse(std::move(w));
    cone.det = int_det(cone.generators);
    if (cone.det < 0) cone.det = -cone.det;
    if (cone.det == 0) throw InternalError("degenerate cone in half-open decomposition");

    const QVec lambda_xi = mat_vec(cone.chart, xi);
    cone.open_flags.assign(n, false);
    for (int j = 0; j < n; ++j) {
      Rat s = lambda_xi[j];
      if (s == 0) {
        // The reference point sits on this wall; perturb it infinitesimally
        // along the coordinate axes, earlier axes dominating.
        for (int k = 0; k < n && s == 0; ++k) s = cone.chart[j][k];
      }
      if (s == 0) throw InternalError("degenerate wall functional");
      cone.open_flags[j] = s < 0;
    }
    if (cone.fully_closed()) ++fully_closed_count;
    cones.push_back(std::move(cone));
  }
  if (fully_closed_count != 1)
    throw InternalError("half-open decomposition must keep exactly one cone closed");
  return cones;
}

// Degrees nu(x) = sum_j lambda_j(x) of the lattice points in the fundamental
// half-open parallelepiped { sum_j lambda_j g_j : lambda_j in [0,1) closed,
// (0,1] open }.  Sorted ascending; the count always equals det.
inline std::vector<Rat> box_point_degrees(const HalfOpenSimplicialCone& cone) {
  const int n = static_cast<int>(cone.generators.size());
  IVec lo(n, Int(0)), hi(n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int& w = cone.generators[j][i];
      if (w < 0)
        lo[i] += w;
      else
        hi[i] += w;
    }

  std::vector<Rat> degrees;
  IVec x(n, Int(0));
  const std::function<void(int)> scan = [&](int i) {
    if (i == n) {
      const QVec lambda = mat_vec(cone.chart, qvec_from_ivec(x));
      Rat nu = 0;
      for (int j = 0; j < n; ++j) {
        const Rat& l = lambda[j];
        if (cone.open_flags[j] ? (l <= 0 || l > 1) : (l < 0 || l >= 1)) return;
        nu += l;
      }
      degrees.push_back(nu);
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      scan(i + 1);
    }
    x[i] = 0;
  };
  scan(0);

  if (Int(static_cast<long long>(degrees.size())) != cone.det)
    throw InternalError("box point count does not match the cone determinant");
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace polyspec

#endif  // POLYSPEC_HALF_OPEN_HPP
