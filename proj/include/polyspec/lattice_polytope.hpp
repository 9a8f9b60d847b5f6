#ifndef POLYSPEC_LATTICE_POLYTOPE_HPP
#define POLYSPEC_LATTICE_POLYTOPE_HPP

// Full-dimensional lattice polytopes with the origin strictly inside.  The
// constructor validates the vertex list (integrality, extremeness, full
// dimension, interior origin), derives the facet inequalities by an exact
// brute-force supporting-hyperplane enumeration, and fixes a deterministic
// boundary triangulation by recursively pulling lexicographically smallest
// vertices.  Everything is immutable after construction, so values are freely
// shareable across threads.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/errors.hpp"
#include "polyspec/linalg.hpp"
#include "polyspec/numeric.hpp"

namespace polyspec {

struct FacetInequality {
  IVec normal;                      // primitive integer g, gcd of entries = 1
  Int rhs;                          // positive integer c; facet side is <g,x> <= c
  std::vector<int> vertex_indices;  // vertices lying on the facet, ascending

  // The normalized normal a_F = g / c, so the polytope is {x : <a_F, x> <= 1}.
  QVec normalized() const {
    QVec a(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) a[i] = Rat(normal[i], rhs);
    return a;
  }
};

inline bool operator<(const FacetInequality& a, const FacetInequality& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.rhs < b.rhs;
}

inline bool operator==(const FacetInequality& a, const FacetInequality& b) {
  return a.normal == b.normal && a.rhs == b.rhs;
}

namespace detail {

// A supporting hyperplane <g, x> <= c of a rational point set, with the
// indices of the points where equality holds.
struct RationalFacet {
  QVec normal;
  Rat rhs;
  std::vector<int> members;
};

// Exact brute-force facet enumeration for a full-dimensional point set in
// Q^d: every d-subset that affinely spans a hyperplane is tested for the
// supporting property.  Quadratic-ish in subsets but exact, and the point
// sets here are small (at most ~14 points, d <= 6).
inline std::vector<RationalFacet> hull_facets(const std::vector<QVec>& pts, int d) {
  const int npts = static_cast<int>(pts.size());
  std::vector<RationalFacet> out;
  std::map<std::pair<QVec, Rat>, std::vector<int>> seen;  // normalized (g,c) -> members

  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  if (npts < d) return out;

  auto advance = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && idx[i] == npts - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  do {
    // Hyperplane through the chosen points: solve <g, p> - c = 0, i.e. the
    // nullspace of the d x (d+1) matrix with rows (p_i, -1).
    QMat rows(d, QVec(d + 1));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) rows[i][j] = pts[idx[i]][j];
      rows[i][d] = -1;
    }
    const std::vector<QVec> null = nullspace(std::move(rows));
    if (null.size() != 1) continue;  // points affinely dependent
    QVec g(null[0].begin(), null[0].begin() + d);
    Rat c = null[0][d];
    bool g_zero = true;
    for (const Rat& x : g)
      if (x != 0) g_zero = false;
    if (g_zero) continue;

    // Supporting-side test over all points.
    int below = 0, above = 0;
    std::vector<Rat> slack(npts);
    for (int j = 0; j < npts; ++j) {
      slack[j] = dot(g, pts[j]) - c;
      if (slack[j] < 0) ++below;
      if (slack[j] > 0) ++above;
    }
    if (below > 0 && above > 0) continue;  // cuts through the hull
    if (above > 0) {                       // flip orientation to "<="
      for (Rat& x : g) x = -x;
      c = -c;
      for (Rat& s : slack) s = -s;
    }
    // Normalize by the first nonzero normal entry (positive scaling only).
    Rat scale = 0;
    for (const Rat& x : g) {
      if (x != 0) {
        scale = x < 0 ? Rat(-x) : x;
        break;
      }
    }
    for (Rat& x : g) x /= scale;
    c /= scale;

    std::vector<int> members;
    for (int j = 0; j < npts; ++j)
      if (slack[j] == 0) members.push_back(j);
    seen.emplace(std::make_pair(std::move(g), std::move(c)), std::move(members));
  } while (advance());

  out.reserve(seen.size());
  for (auto& [key, members] : seen)
    out.push_back({key.first, key.second, std::move(members)});
  return out;
}

}  // namespace detail

class LatticePolytope {
 public:
  LatticePolytope(int dim, std::vector<IVec> vertices)
      : n_(dim), verts_(std::move(vertices)) {
    build();
  }

  int dim() const { return n_; }
  const std::vector<IVec>& vertices() const { return verts_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }
  bool is_simplicial() const { return simplicial_; }
  const Int& normalized_volume() const { return volume_; }

  // Boundary triangulation: a list of (n-1)-simplices covering the boundary,
  // each given by n vertex indices in ascending order.  Deterministic.
  const std::vector<std::vector<int>>& boundary_triangulation() const {
    return triangulation_;
  }

 private:
  int n_;
  std::vector<IVec> verts_;
  std::vector<FacetInequality> facets_;
  std::vector<std::vector<int>> triangulation_;
  bool simplicial_ = true;
  Int volume_ = 0;

  QVec vertex_q(int i) const { return qvec_from_ivec(verts_[i]); }

  void build() {
    if (n_ < 1) throw InputError("polytope dimension must be >= 1");
    if (verts_.empty()) throw InputError("polytope needs vertices");
    for (const IVec& v : verts_)
      if (static_cast<int>(v.size()) != n_)
        throw InputError("vertex length does not match the stated dimension");

    {
      std::vector<IVec> sorted = verts_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidPolytope("duplicate vertex in input");
    }

    // Full dimensionality: the differences from the first vertex must span.
    {
      QMat diffs;
      for (std::size_t i = 1; i < verts_.size(); ++i) {
        QVec d(n_);
        for (int j = 0; j < n_; ++j) d[j] = Rat(verts_[i][j] - verts_[0][j]);
        diffs.push_back(std::move(d));
      }
      if (rank(std::move(diffs)) != n_)
        throw NotFullDimensional("vertex set does not span the ambient space");
    }

    // Facets, converted to primitive integer form.
    std::vector<QVec> qpts;
    qpts.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) qpts.push_back(vertex_q(static_cast<int>(i)));
    for (detail::RationalFacet& rf : detail::hull_facets(qpts, n_)) {
      Int lcm_den = 1;
      for (const Rat& x : rf.normal)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
      IVec g(n_);
      for (int j = 0; j < n_; ++j)
        g[j] = numerator(rf.normal[j]) * (lcm_den / denominator(rf.normal[j]));
      const Int gg = vector_gcd(g);
      for (Int& x : g) x /= gg;
      // rhs from any member vertex: integral because g and the vertex are.
      const Int c = dot(g, verts_[rf.members.front()]);
      if (c <= 0)
        throw OriginNotInterior("origin is not strictly inside the polytope");
      std::sort(rf.members.begin(), rf.members.end());
      facets_.push_back({std::move(g), c, std::move(rf.members)});
    }
    std::sort(facets_.begin(), facets_.end());
    if (static_cast<int>(facets_.size()) < n_ + 1)
      throw InternalError("too few facets for a full-dimensional polytope");

    // Extremeness: a listed point is a vertex iff its active facet normals
    // span the ambient space.
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      QMat active;
      for (const FacetInequality& f : facets_)
        if (std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(),
                               static_cast<int>(i)))
          active.push_back(qvec_from_ivec(f.normal));
      if (rank(std::move(active)) != n_) {
        std::ostringstream msg;
        msg << "input point #" << i << " is not an extreme point of the hull";
        throw InvalidPolytope(msg.str());
      }
    }

    for (const FacetInequality& f : facets_)
      if (static_cast<int>(f.vertex_indices.size()) != n_) simplicial_ = false;

    // Triangulate each facet (without new vertices) and accumulate the
    // normalized volume of the cones over the pieces.
    for (const FacetInequality& f : facets_) {
      for (std::vector<int> simplex : triangulate_face(f.vertex_indices, n_ - 1)) {
        std::sort(simplex.begin(), simplex.end());
        std::vector<IVec> cols;
        cols.reserve(simplex.size());
        for (int idx : simplex) cols.push_back(verts_[idx]);
        Int d = int_det(cols);
        if (d < 0) d = -d;
        if (d == 0) throw InternalError("degenerate simplex in boundary triangulation");
        volume_ += d;
        triangulation_.push_back(std::move(simplex));
      }
    }
  }

  // Triangulation of a d-dimensional face given by global vertex indices:
  // pull the lexicographically smallest vertex and recurse on the facets of
  // the face that avoid it.
  std::vector<std::vector<int>> triangulate_face(const std::vector<int>& idx, int d) const {
    if (static_cast<int>(idx.size()) == d + 1) return {idx};

    std::vector<QVec> ambient;
    ambient.reserve(idx.size());
    for (int i : idx) ambient.push_back(vertex_q(i));
    const AffineChart chart = make_affine_chart(ambient);
    if (chart.dim != d) throw InternalError("face has unexpected affine dimension");
    std::vector<QVec> local;
    local.reserve(idx.size());
    for (const QVec& p : ambient) local.push_back(chart.to_chart(p));

    int pull = 0;
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (verts_[idx[i]] < verts_[idx[pull]]) pull = static_cast<int>(i);

    std::vector<std::vector<int>> out;
    for (const detail::RationalFacet& rf : detail::hull_facets(local, d)) {
      if (std::find(rf.members.begin(), rf.members.end(), pull) != rf.members.end())
        continue;
      std::vector<int> sub_idx;
      sub_idx.reserve(rf.members.size());
      for (int m : rf.members) sub_idx.push_back(idx[m]);
      for (std::vector<int> piece : triangulate_face(sub_idx, d - 1)) {
        piece.push_back(idx[pull]);
        out.push_back(std::move(piece));
      }
    }
    return out;
  }
};

// The complete facet list as a free function, for symmetry with the other
// polytope queries.
inline const std::vector<FacetInequality>& facet_representation(const LatticePolytope& p) {
  return p.facets();
}

inline Int normalized_volume(const LatticePolytope& p) { return p.normalized_volume(); }

// Newton degree nu(x) = min{ lambda >= 0 : x in lambda P } = max_F <g,x>/c.
// nu(0) = 0 and nu is positive elsewhere because the origin is interior.
inline Rat newton_degree(const LatticePolytope& p, const IVec& x) {
  Rat best = 0;
  for (const FacetInequality& f : p.facets()) {
    const Rat v = Rat(dot(f.normal, x), f.rhs);
    if (v > best) best = v;
  }
  return best;
}

namespace detail {

// Shared pruned enumerator for { x integer : <g_F, x> <= b_F for all F }
// intersected with a coordinate box.  Uses per-coordinate interval
// propagation: at depth k the unassigned suffix of each constraint is bounded
// below by its box minimum, which yields exact bounds for x_k.
class LatticePointEnumerator {
 public:
  LatticePointEnumerator(const LatticePolytope& p, const Int& m, const Int& slack)
      : n_(p.dim()) {
    // Bounding box of mP: m * [min_i, max_i] over vertices.
    lo_.assign(n_, Int(0));
    hi_.assign(n_, Int(0));
    for (int j = 0; j < n_; ++j) {
      Int mn = p.vertices()[0][j], mx = p.vertices()[0][j];
      for (const IVec& v : p.vertices()) {
        mn = std::min(mn, v[j]);
        mx = std::max(mx, v[j]);
      }
      lo_[j] = m * mn;
      hi_[j] = m * mx;
    }
    for (const FacetInequality& f : p.facets()) {
      rows_.push_back(f.normal);
      rhs_.push_back(m * f.rhs - slack);
    }
    // min_rem_[F][k] = minimum of sum_{j >= k} g_{F,j} x_j over the box.
    min_rem_.assign(rows_.size(), IVec(n_ + 1, Int(0)));
    for (std::size_t f = 0; f < rows_.size(); ++f)
      for (int k = n_ - 1; k >= 0; --k) {
        const Int& g = rows_[f][k];
        min_rem_[f][k] =
            min_rem_[f][k + 1] + (g >= 0 ? g * lo_[k] : g * hi_[k]);
      }
  }

  // Invoke fn(x) for every solution; fn may be a counter or a collector.
  void enumerate(const std::function<void(const IVec&)>& fn) const {
    IVec x(n_, Int(0));
    IVec partial(rows_.size(), Int(0));  // sum of assigned prefix per row
    recurse(0, x, partial, fn);
  }

 private:
  int n_;
  IVec lo_, hi_;
  std::vector<IVec> rows_;
  IVec rhs_;
  std::vector<IVec> min_rem_;

  void recurse(int k, IVec& x, IVec& partial,
               const std::function<void(const IVec&)>& fn) const {
    if (k == n_) {
      fn(x);
      return;
    }
    Int lo = lo_[k], hi = hi_[k];
    for (std::size_t f = 0; f < rows_.size() && lo <= hi; ++f) {
      const Int& g = rows_[f][k];
      const Int budget = rhs_[f] - partial[f] - min_rem_[f][k + 1];
      if (g > 0) {
        hi = std::min(hi, floor_div(budget, g));
      } else if (g < 0) {
        lo = std::max(lo, ceil_div(budget, g));
      } else if (budget < 0) {
        return;  // constraint already violated on this branch
      }
    }
    for (Int v = lo; v <= hi; ++v) {
      x[k] = v;
      for (std::size_t f = 0; f < rows_.size(); ++f) partial[f] += rows_[f][k] * v;
      recurse(k + 1, x, partial, fn);
      for (std::size_t f = 0; f < rows_.size(); ++f) partial[f] -= rows_[f][k] * v;
    }
    x[k] = 0;
  }
};

}  // namespace detail

// All lattice points of the dilate mP (m >= 0).
inline std::vector<IVec> lattice_points(const LatticePolytope& p, const Int& m) {
  std::vector<IVec> pts;
  detail::LatticePointEnumerator(p, m, Int(0)).enumerate([&](const IVec& x) {
    pts.push_back(x);
  });
  return pts;
}

inline Int lattice_point_count(const LatticePolytope& p, const Int& m) {
  Int count = 0;
  detail::LatticePointEnumerator(p, m, Int(0)).enumerate([&](const IVec&) { ++count; });
  return count;
}

// Interior points of mP: all facet inequalities strict, i.e. <g,x> <= mc - 1.
inline Int interior_lattice_point_count(const LatticePolytope& p, const Int& m) {
  Int count = 0;
  detail::LatticePointEnumerator(p, m, Int(1)).enumerate([&](const IVec&) { ++count; });
  return count;
}

// Points on the boundary shell of exactly the m-th dilate: nu(x) = m.
inline Int boundary_lattice_point_count(const LatticePolytope& p, const Int& m) {
  return lattice_point_count(p, m) - interior_lattice_point_count(p, m);
}

// Free sum P (+) Q: the hull of P x {0} and {0} x Q.  The origin stays
// interior, and the vertex sets embed disjointly (the origin is never a
// vertex).
inline LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q) {
  const int n1 = p.dim(), n2 = q.dim();
  std::vector<IVec> verts;
  verts.reserve(p.vertices().size() + q.vertices().size());
  for (const IVec& v : p.vertices()) {
    IVec w(n1 + n2, Int(0));
    for (int i = 0; i < n1; ++i) w[i] = v[i];
    verts.push_back(std::move(w));
  }
  for (const IVec& v : q.vertices()) {
    IVec w(n1 + n2, Int(0));
    for (int i = 0; i < n2; ++i) w[n1 + i] = v[i];
    verts.push_back(std::move(w));
  }
  return LatticePolytope(n1 + n2, std::move(verts));
}

}  // namespace polyspec

#endif  // POLYSPEC_LATTICE_POLYTOPE_HPP
