// Counting polynomials, delta vectors, the weighted count, reciprocity,
// palindromy/reflexivity, lower bounds, and the split of the delta vector
// into its two palindromic halves.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "polyspec/ehrhart.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/polytope_spectrum.hpp"
#include "polyspec/theta_family.hpp"

using namespace polyspec;

namespace {

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

LatticePolytope unit_cube3() {
  std::vector<IVec> verts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) verts.push_back(IVec{a, b, c});
  return LatticePolytope(3, std::move(verts));
}

QPolynomial poly(std::initializer_list<Rat> ascending) {
  return QPolynomial(QVec(ascending));
}

}  // namespace

TEST_CASE("counting polynomials interpolate and extrapolate exactly") {
  struct Case {
    LatticePolytope p;
    QPolynomial expected;
  };
  const std::vector<Case> cases = {
      {cross_polytope(2), poly({Rat(1), Rat(2), Rat(2)})},
      {LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}), poly({Rat(1), Rat(3), Rat(3)})},
      {LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -1}}),
       poly({Rat(1), Rat(3, 2), Rat(3, 2)})},
      {unit_cube3(), poly({Rat(1), Rat(6), Rat(12), Rat(8)})},
  };
  for (const Case& c : cases) {
    const QPolynomial l = ehrhart_polynomial(c.p);
    CHECK(l == c.expected);
    // The interpolation uses m = 0..n; values beyond that range are genuine
    // predictions and must still match brute-force counts.
    for (Int m = c.p.dim() + 1; m <= c.p.dim() + 2; ++m)
      CHECK(l(Rat(m)) == Rat(lattice_point_count(c.p, m)));
  }
}

TEST_CASE("delta vectors of reference polytopes") {
  CHECK(delta_vector(cross_polytope(2)) == IntVector{1, 2, 1});
  CHECK(delta_vector(cross_polytope(3)) == IntVector{1, 3, 3, 1});
  CHECK(delta_vector(LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}})) ==
        IntVector{1, 4, 1});
  CHECK(delta_vector(LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -1}})) ==
        IntVector{1, 1, 1});
  CHECK(delta_vector(unit_cube3()) == IntVector{1, 23, 23, 1});
  CHECK(delta_vector(LatticePolytope(1, {{-1}, {2}})) == IntVector{1, 2});

  // Dilating doubles every facet offset; the delta vector loses palindromy.
  const LatticePolytope twice(2, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}});
  CHECK(delta_vector(twice) == IntVector{1, 10, 5});
}

TEST_CASE("delta special values: first, last, and total") {
  const std::vector<LatticePolytope> cases = {
      cross_polytope(2),
      cross_polytope(3),
      LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}),
      LatticePolytope(1, {{-1}, {2}}),
      unit_cube3(),
  };
  for (const LatticePolytope& p : cases) {
    const IntVector delta = delta_vector(p);
    const Verdict v = delta_special_values_check(p, delta);
    INFO(v.summary());
    CHECK(v.all_pass());

    // Direct restatement against raw counts.
    const int n = p.dim();
    CHECK(delta[1] == lattice_point_count(p, 1) - n - 1);
    CHECK(delta[n] == interior_lattice_point_count(p, 1));
    CHECK(sum(delta) == p.normalized_volume());
  }
}

TEST_CASE("weighted counts") {
  // For a reflexive polytope every nonzero lattice point sits on the boundary
  // of exactly one dilate, so the weighted count equals the plain count.
  const LatticePolytope cross2 = cross_polytope(2);
  for (Int m = 0; m <= 4; ++m)
    CHECK(weighted_L0(cross2, m) == lattice_point_count(cross2, m));

  // For [-1, 2] the boundary contributes two points at every positive level.
  const LatticePolytope seg(1, {{-1}, {2}});
  CHECK(weighted_L0(seg, 0) == 1);
  CHECK(weighted_L0(seg, 1) == 3);
  CHECK(weighted_L0(seg, 2) == 5);
  CHECK(weighted_L0(seg, 3) == 7);

  CHECK_THROWS_AS(weighted_L0(seg, Int(-1)), InputError);

  SECTION("weighted counts match the integer-class polynomial") {
    for (const LatticePolytope& p :
         {cross_polytope(2), LatticePolytope(1, {{-1}, {2}}),
          LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}})}) {
      const ThetaFamily tf = ThetaFamily::from_spectrum(spectrum_from_polytope(p));
      const QPolynomial l0 = polynomial_from_theta(tf.theta0(), p.dim());
      for (Int m = 0; m <= 4; ++m) CHECK(l0(Rat(m)) == Rat(weighted_L0(p, m)));
    }
  }
}

TEST_CASE("counting reciprocity") {
  const std::vector<LatticePolytope> cases = {
      cross_polytope(2),
      cross_polytope(3),
      LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}),
      LatticePolytope(1, {{-1}, {2}}),
      LatticePolytope(2, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}}),
      unit_cube3(),
  };
  for (const LatticePolytope& p : cases) {
    const QPolynomial l = ehrhart_polynomial(p);
    const Verdict v = ehrhart_reciprocity_check(p, l, 5);
    INFO(v.summary());
    CHECK(v.all_pass());
  }

  // Spot check the sign convention by hand: for the square of side 4,
  // L(-1) = (-1)^2 * (number of interior points of the square itself).
  const LatticePolytope twice(2, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}});
  const QPolynomial l = ehrhart_polynomial(twice);
  CHECK(l(Rat(-1)) == Rat(interior_lattice_point_count(twice, 1)));
  CHECK(l(Rat(-2)) == Rat(interior_lattice_point_count(twice, 2)));
}

TEST_CASE("palindromy of the delta vector characterizes offset-one polytopes") {
  SECTION("both properties hold") {
    for (const LatticePolytope& p :
         {cross_polytope(2), cross_polytope(3),
          LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}), unit_cube3()}) {
      CHECK(reflexive_check(p));
      const Verdict v = hibi_palindromic_check(p, delta_vector(p));
      INFO(v.summary());
      CHECK(v.all_pass());
    }
  }

  SECTION("both properties fail") {
    for (const LatticePolytope& p :
         {LatticePolytope(1, {{-1}, {2}}),
          LatticePolytope(2, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}})}) {
      CHECK_FALSE(reflexive_check(p));
      // The equivalence still passes: palindromy fails alongside.
      const Verdict v = hibi_palindromic_check(p, delta_vector(p));
      INFO(v.summary());
      CHECK(v.all_pass());
    }
  }
}

TEST_CASE("lower bounds on delta vectors") {
  for (const LatticePolytope& p :
       {cross_polytope(2), cross_polytope(3),
        LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}),
        LatticePolytope(2, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}}), unit_cube3()}) {
    const Verdict v = lower_bound_check(delta_vector(p));
    INFO(v.summary());
    CHECK(v.all_pass());
  }

  // The checker must actually be able to fail: delta_1 = 0 < 1 violates the
  // bound in dimension 2, and a leading entry != 1 violates the first clause.
  CHECK_FALSE(lower_bound_check(IntVector{1, 0, 2}).all_pass());
  CHECK_FALSE(lower_bound_check(IntVector{2, 1, 1}).all_pass());
  CHECK_FALSE(lower_bound_check(IntVector{1, 1, 0}).all_pass());
  CHECK_FALSE(lower_bound_check(IntVector{1, 3, 2, 1}).all_pass());  // delta_1 > delta_2
}

TEST_CASE("splitting delta into two palindromic halves") {
  SECTION("segment with a fractional box point") {
    const LatticePolytope seg(1, {{-1}, {2}});
    const ThetaFamily tf = ThetaFamily::from_spectrum(spectrum_from_polytope(seg));
    const auto [a, b] = betke_mcmullen_split(tf);
    CHECK(a == IntVector{1, 1});
    CHECK(b == IntVector{1});
  }

  SECTION("purely integral spectrum puts everything in the first half") {
    const ThetaFamily tf =
        ThetaFamily::from_spectrum(spectrum_from_polytope(cross_polytope(2)));
    const auto [a, b] = betke_mcmullen_split(tf);
    CHECK(a == IntVector{1, 2, 1});
    CHECK(all_zero(b));
  }

  SECTION("the two halves reassemble the delta vector") {
    for (const LatticePolytope& p :
         {LatticePolytope(1, {{-1}, {2}}), cross_polytope(2),
          LatticePolytope(2, {{1, 0}, {0, 1}, {-2, -3}}), unit_cube3()}) {
      const int n = p.dim();
      const IntVector delta = delta_vector(p);
      const ThetaFamily tf = ThetaFamily::from_spectrum(spectrum_from_polytope(p));
      const auto [a, b] = betke_mcmullen_split(tf);
      REQUIRE(static_cast<int>(a.size()) == n + 1);
      REQUIRE(static_cast<int>(b.size()) == n);
      for (int k = 0; k <= n; ++k) {
        const Int bk = (k >= 1) ? b[k - 1] : Int(0);
        CHECK(a[k] + bk == delta[k]);
      }
    }
  }

  SECTION("a non-palindromic integer part is rejected") {
    ThetaFamily tf;
    tf.n = 2;
    tf.classes[Rat(0)] = IntVector{1, 1, 0};
    tf.validate();
    CHECK_THROWS_AS(betke_mcmullen_split(tf), PalindromyViolation);
  }
}
