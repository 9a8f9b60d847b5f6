// Polytope geometry: facet enumeration (cross-checked against an independent
// 2D monotone-chain hull), lattice point enumeration, degree functions,
// triangulation, free sums and the half-open cone decomposition.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "polyspec/half_open.hpp"
#include "polyspec/lattice_polytope.hpp"

using namespace polyspec;

namespace {

// Independent 2D facet oracle: Andrew's monotone chain gives the hull in
// counterclockwise order; each edge (a, b) yields the outward inequality
// <(dy, -dx), x> <= <(dy, -dx), a> with the normal made primitive.
Int cross2d(const IVec& o, const IVec& a, const IVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<IVec> hull_ccw(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  std::vector<IVec> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::set<std::pair<IVec, Int>> oracle_facets(const std::vector<IVec>& pts) {
  const std::vector<IVec> h = hull_ccw(pts);
  std::set<std::pair<IVec, Int>> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const IVec& a = h[i];
    const IVec& b = h[(i + 1) % h.size()];
    IVec g = {b[1] - a[1], a[0] - b[0]};
    const Int gg = vector_gcd(g);
    for (Int& x : g) x /= gg;
    out.emplace(std::move(g), dot(g, a));
  }
  return out;
}

std::set<std::pair<IVec, Int>> facet_set(const LatticePolytope& p) {
  std::set<std::pair<IVec, Int>> out;
  for (const FacetInequality& f : p.facets()) out.emplace(f.normal, f.rhs);
  return out;
}

LatticePolytope cross_polytope(int n) {
  std::vector<IVec> verts;
  for (int i = 0; i < n; ++i) {
    IVec e(n, Int(0));
    e[i] = 1;
    verts.push_back(e);
    e[i] = -1;
    verts.push_back(e);
  }
  return LatticePolytope(n, std::move(verts));
}

bool in_dilate(const LatticePolytope& p, const IVec& x, const Int& m) {
  for (const FacetInequality& f : p.facets())
    if (dot(f.normal, x) > m * f.rhs) return false;
  return true;
}

}  // namespace

TEST_CASE("facet enumeration matches the 2D hull oracle") {
  const std::vector<std::vector<IVec>> cases = {
      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},              // cross polygon
      {{1, 0}, {0, 1}, {-1, -1}},                      // unimodular-ish simplex
      {{1, 0}, {0, 1}, {-2, -3}},                      // skew simplex
      {{2, 0}, {0, 2}, {-2, 0}, {0, -2}},              // dilated cross polygon
      {{3, 0}, {1, 2}, {-2, 2}, {-2, -1}, {1, -2}},    // pentagon
  };
  for (const auto& verts : cases) {
    // Scramble the input order; the facet set must not depend on it.
    std::vector<IVec> scrambled = verts;
    std::rotate(scrambled.begin(), scrambled.begin() + 1, scrambled.end());
    const LatticePolytope p(2, scrambled);
    CHECK(facet_set(p) == oracle_facets(verts));
  }
}

TEST_CASE("facets of reference polytopes") {
  SECTION("skew simplex has all offsets 1") {
    const LatticePolytope p(2, {{1, 0}, {0, 1}, {-2, -3}});
    REQUIRE(p.facets().size() == 3);
    CHECK(p.facets()[0].normal == IVec{-2, 1});
    CHECK(p.facets()[0].rhs == 1);
    CHECK(p.facets()[1].normal == IVec{1, -1});
    CHECK(p.facets()[1].rhs == 1);
    CHECK(p.facets()[2].normal == IVec{1, 1});
    CHECK(p.facets()[2].rhs == 1);
    CHECK(p.normalized_volume() == 6);
    CHECK(p.is_simplicial());
  }

  SECTION("3D cross polytope") {
    const LatticePolytope p = cross_polytope(3);
    CHECK(p.facets().size() == 8);
    for (const FacetInequality& f : p.facets()) {
      CHECK(f.rhs == 1);
      for (const Int& g : f.normal) CHECK((g == 1 || g == -1));
      CHECK(f.vertex_indices.size() == 3);
    }
    CHECK(p.is_simplicial());
    CHECK(p.normalized_volume() == 8);
  }

  SECTION("cube is not simplicial") {
    std::vector<IVec> verts;
    for (int a : {-1, 1})
      for (int b : {-1, 1})
        for (int c : {-1, 1}) verts.push_back(IVec{a, b, c});
    const LatticePolytope cube(3, verts);
    CHECK(cube.facets().size() == 6);
    CHECK_FALSE(cube.is_simplicial());
    CHECK(cube.normalized_volume() == 48);
    for (const FacetInequality& f : cube.facets()) CHECK(f.vertex_indices.size() == 4);
  }

  SECTION("normalized facet form divides by the offset") {
    const LatticePolytope p(1, {{-1}, {2}});
    REQUIRE(p.facets().size() == 2);
    CHECK(p.facets()[0].normal == IVec{-1});
    CHECK(p.facets()[0].rhs == 1);
    CHECK(p.facets()[1].normal == IVec{1});
    CHECK(p.facets()[1].rhs == 2);
    CHECK(p.facets()[1].normalized() == QVec{Rat(1, 2)});
  }
}

TEST_CASE("invalid inputs are rejected with specific errors") {
  CHECK_THROWS_AS(LatticePolytope(0, {{}}), InputError);
  CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {0}}), InputError);
  CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {1, 0}, {0, 1}}), InvalidPolytope);
  CHECK_THROWS_AS(LatticePolytope(2, {{-1, 0}, {1, 0}, {2, 0}}), NotFullDimensional);

  // Origin on the boundary or outside.
  CHECK_THROWS_AS(LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}}), OriginNotInterior);
  CHECK_THROWS_AS(LatticePolytope(2, {{1, 1}, {2, 1}, {1, 2}}), OriginNotInterior);

  // A point interior to an edge is not extreme, and neither is an interior
  // point of the hull itself.
  CHECK_THROWS_WITH(LatticePolytope(1, {{-2}, {2}, {1}}),
                    Catch::Matchers::ContainsSubstring("not an extreme point"));
  CHECK_THROWS_WITH(LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -1}, {0, 0}}),
                    Catch::Matchers::ContainsSubstring("not an extreme point"));
}

TEST_CASE("lattice point counting in dilates") {
  const LatticePolytope cross2 = cross_polytope(2);
  CHECK(lattice_point_count(cross2, 0) == 1);
  CHECK(lattice_point_count(cross2, 1) == 5);
  CHECK(lattice_point_count(cross2, 2) == 13);
  CHECK(lattice_point_count(cross2, 3) == 25);
  CHECK(interior_lattice_point_count(cross2, 1) == 1);
  CHECK(boundary_lattice_point_count(cross2, 1) == 4);
  CHECK(boundary_lattice_point_count(cross2, 2) == 8);

  const LatticePolytope skew(2, {{1, 0}, {0, 1}, {-2, -3}});
  CHECK(lattice_point_count(skew, 1) == 7);
  CHECK(lattice_point_count(skew, 2) == 19);

  const LatticePolytope cross3 = cross_polytope(3);
  CHECK(lattice_point_count(cross3, 1) == 7);
  CHECK(lattice_point_count(cross3, 2) == 25);
  CHECK(lattice_point_count(cross3, 3) == 63);

  std::vector<IVec> cube_verts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) cube_verts.push_back(IVec{a, b, c});
  const LatticePolytope cube(3, cube_verts);
  CHECK(lattice_point_count(cube, 1) == 27);
  CHECK(lattice_point_count(cube, 2) == 125);
  CHECK(interior_lattice_point_count(cube, 1) == 1);

  SECTION("the explicit point list matches the count and the inequalities") {
    const std::vector<IVec> pts = lattice_points(cross2, 2);
    CHECK(Int(static_cast<long long>(pts.size())) == 13);
    const std::set<IVec> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == pts.size());
    for (const IVec& x : pts) CHECK(in_dilate(cross2, x, 2));
  }
}

TEST_CASE("degree function: homogeneity and membership") {
  const LatticePolytope skew(2, {{1, 0}, {0, 1}, {-2, -3}});
  const LatticePolytope cross2 = cross_polytope(2);

  CHECK(newton_degree(cross2, IVec{0, 0}) == Rat(0));
  CHECK(newton_degree(cross2, IVec{1, 1}) == Rat(2));
  CHECK(newton_degree(cross2, IVec{2, -1}) == Rat(3));
  CHECK(newton_degree(skew, IVec{-1, 0}) == Rat(2));  // hits <(-2,1), x> <= 1

  for (const LatticePolytope* p : {&skew, &cross2}) {
    SECTION("scaling a point scales its degree") {
      for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b) {
          const Rat nu = newton_degree(*p, IVec{a, b});
          for (int k = 0; k <= 3; ++k)
            CHECK(newton_degree(*p, IVec{k * a, k * b}) == Rat(k) * nu);
        }
    }
    SECTION("x lies in the m-th dilate exactly when its degree is <= m") {
      for (Int a = -5; a <= 5; ++a)
        for (Int b = -5; b <= 5; ++b)
          for (Int m = 0; m <= 4; ++m)
            CHECK((newton_degree(*p, IVec{a, b}) <= Rat(m)) ==
                  in_dilate(*p, IVec{a, b}, m));
    }
  }
}

TEST_CASE("free sums") {
  const LatticePolytope seg(1, {{-1}, {1}});
  const LatticePolytope cross2 = cross_polytope(2);

  SECTION("segment + cross polygon is the octahedron") {
    const LatticePolytope octa = free_sum(seg, cross2);
    CHECK(octa.dim() == 3);
    CHECK(octa.vertices().size() == 6);
    CHECK(facet_set(octa) == facet_set(cross_polytope(3)));
    CHECK(octa.normalized_volume() == seg.normalized_volume() * cross2.normalized_volume());
  }

  SECTION("lattice points of a free sum meet only at the origin") {
    const LatticePolytope skew(2, {{1, 0}, {0, 1}, {-2, -3}});
    const LatticePolytope fs = free_sum(skew, seg);
    CHECK(lattice_point_count(fs, 1) ==
          lattice_point_count(skew, 1) + lattice_point_count(seg, 1) - 1);
    CHECK(fs.normalized_volume() == skew.normalized_volume() * seg.normalized_volume());
  }
}

TEST_CASE("half-open decomposition partitions the lattice") {
  SECTION("segment: one cone per ray, one of them closed") {
    const LatticePolytope seg(1, {{-1}, {1}});
    const auto cones = half_open_decomposition(seg);
    REQUIRE(cones.size() == 2);
    int closed = 0;
    for (const auto& c : cones) closed += c.fully_closed() ? 1 : 0;
    CHECK(closed == 1);
    // The positive ray keeps its boundary; the negative ray gives it up.
    for (const auto& c : cones) {
      REQUIRE(c.generators.size() == 1);
      if (c.generators[0] == IVec{1}) CHECK(c.fully_closed());
      if (c.generators[0] == IVec{-1}) CHECK_FALSE(c.fully_closed());
    }
  }

  const std::vector<LatticePolytope> cases = {
      cross_polytope(2),
      LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}),
      LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -1}}),
      LatticePolytope(1, {{-1}, {2}}),
  };
  for (const LatticePolytope& p : cases) {
    const auto cones = half_open_decomposition(p);

    SECTION("every nearby lattice point lies in exactly one cone") {
      std::vector<IVec> box;
      if (p.dim() == 1) {
        for (Int a = -5; a <= 5; ++a) box.push_back(IVec{a});
      } else {
        for (Int a = -5; a <= 5; ++a)
          for (Int b = -5; b <= 5; ++b) box.push_back(IVec{a, b});
      }
      for (const IVec& x : box) {
        int hits = 0;
        for (const auto& c : cones) hits += cone_contains(c, x) ? 1 : 0;
        CHECK(hits == 1);
      }
    }

    SECTION("exactly one cone is fully closed, and it contains the origin") {
      int closed = 0;
      for (const auto& c : cones)
        if (c.fully_closed()) {
          ++closed;
          CHECK(cone_contains(c, IVec(p.dim(), Int(0))));
        }
      CHECK(closed == 1);
    }

    SECTION("box point degrees account for the full volume") {
      Int total = 0;
      for (const auto& c : cones) {
        const auto degrees = box_point_degrees(c);
        CHECK(Int(static_cast<long long>(degrees.size())) == c.det);
        total += Int(static_cast<long long>(degrees.size()));
        for (const Rat& nu : degrees) {
          CHECK(nu >= 0);
          CHECK(nu <= p.dim());
        }
      }
      CHECK(total == p.normalized_volume());
    }
  }
}
