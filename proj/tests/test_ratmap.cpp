#include <catch2/catch_amalgamated.hpp>

#include "ratorb/mobius.hpp"
#include "ratorb/point.hpp"
#include "ratorb/ratmap.hpp"

using namespace ratorb;

static Poly P(std::initializer_list<long> ascending) {
  std::vector<Rat> v;
  for (long x : ascending) v.push_back(rat(x));
  return Poly(v);
}

static const Poly kT2 = P({-1, 0, 2});
static const Poly kT3 = P({0, -3, 0, 4});
static const Poly kT6 = P({-1, 0, 18, 0, -48, 0, 32});
static RatMap Z2() { return RatMap(P({1, 0, 1}), P({0, 2})); }

static ProjectivePoint fin(long n, long d = 1) { return ProjectivePoint::finite(rat(n, d)); }
static ProjectivePoint inf() { return ProjectivePoint::infinity(); }

TEST_CASE("projective point ordering and printing") {
  auto c1 = ProjectivePoint::algebraic(P({-2, 0, 1}));
  auto c2 = ProjectivePoint::algebraic(P({1, 0, 1}));
  std::vector<ProjectivePoint> pts = {inf(), c2, fin(0), c1, fin(-1)};
  std::sort(pts.begin(), pts.end());
  CHECK(pts[0] == fin(-1));
  CHECK(pts[1] == fin(0));
  CHECK(pts[2] == c1);
  CHECK(pts[3] == c2);
  CHECK(pts[4] == inf());
  CHECK(fin(-1, 8).str() == "-1/8");
  CHECK(inf().str() == "inf");
  CHECK(c1.str() == "root(z^2 - 2)");
  CHECK(c1.point_count() == 2);
  CHECK(fin(3).point_count() == 1);
  CHECK_THROWS(ProjectivePoint::algebraic(P({-1, 0, 1})));  // splits
  // denominators cleared for printing
  auto c3 = ProjectivePoint::algebraic(Poly(std::vector<Rat>{rat(-1, 8), rat(5, 2), rat(1)}));
  CHECK(c3.str() == "root(8*z^2 + 20*z - 1)");
}

TEST_CASE("mobius maps") {
  MobiusMap mu = MobiusMap::from_three_points(inf(), fin(1), fin(-1), fin(0), fin(1), inf());
  CHECK(mu.apply(inf()) == fin(0));
  CHECK(mu.apply(fin(1)) == fin(1));
  CHECK(mu.apply(fin(-1)) == inf());
  MobiusMap ident = MobiusMap::from_three_points(fin(0), fin(1), inf(), fin(0), fin(1), inf());
  CHECK(ident == MobiusMap::identity());
  CHECK(mu.compose(mu.inverse()) == MobiusMap::identity());
  // proportional rows compare equal
  CHECK(MobiusMap(rat(2), rat(0), rat(0), rat(2)) == MobiusMap::identity());
  CHECK_THROWS_AS(MobiusMap(rat(1), rat(2), rat(2), rat(4)), InputError);
  // class transport: z + 1 carries root(z^2 - 2) to root(z^2 - 2z - 1)
  auto c = ProjectivePoint::algebraic(P({-2, 0, 1}));
  auto shifted = MobiusMap::shift(rat(1)).apply(c);
  CHECK(shifted == ProjectivePoint::algebraic(P({-1, -2, 1})));
  CHECK(MobiusMap::shift(rat(1)).inverse().apply(shifted) == c);
}

TEST_CASE("canonical form of rational maps") {
  CHECK(RatMap(P({-1, 0, 1}), P({-1, 1})) == RatMap(P({1, 1})));
  RatMap f(P({0, 1}), P({1, 2}));
  CHECK(f.den().is_monic());
  CHECK(f.num() == Poly(std::vector<Rat>{rat(0), rat(1, 2)}));
  CHECK(RatMap(P({2, 0, 2}), P({2})) == RatMap(P({1, 0, 1})));
  CHECK(RatMap(P({-2, 0, 1}), P({-1, 0, 2})).degree() == 2);
  CHECK(Z2().degree() == 2);
  CHECK(Z2().str() == "(1/2*z^2 + 1/2)/(z)");
  CHECK(RatMap(kT3).is_polynomial());
  CHECK_FALSE(Z2().is_polynomial());
  CHECK(RatMap::identity().is_identity());
  CHECK_THROWS_AS(RatMap(P({1}), Poly::zero()), InputError);
}

TEST_CASE("evaluation") {
  RatMap t3(kT3);
  CHECK(t3.eval(rat(1, 2)) == fin(-1));
  CHECK(t3.eval(rat(2)) == fin(26));
  CHECK(t3.eval_infinity() == inf());
  CHECK(Z2().eval(rat(0)) == inf());
  CHECK(Z2().eval_infinity() == inf());
  CHECK(RatMap(P({1}), P({0, 1})).eval_infinity() == fin(0));
  CHECK(RatMap(P({1, 2}), P({-3, 1})).eval_infinity() == fin(2));
  CHECK(RatMap(P({1, 2}), P({-3, 1})).eval(rat(3)) == inf());
}

TEST_CASE("evaluation of conjugate classes") {
  auto sqrt2 = ProjectivePoint::algebraic(P({-2, 0, 1}));
  auto i_cls = ProjectivePoint::algebraic(P({1, 0, 1}));
  CHECK(RatMap(P({0, 0, 1})).eval(sqrt2) == fin(2));
  CHECK(RatMap(P({1, 1})).eval(sqrt2) == ProjectivePoint::algebraic(P({-1, -2, 1})));
  CHECK(RatMap(P({0, 0, 1})).eval(i_cls) == fin(-1));
  CHECK(Z2().eval(i_cls) == fin(0));
  CHECK(RatMap(P({1}), P({1, 0, 1})).eval(i_cls) == inf());
  // cube root of 2 under squaring generates the conjugate class of 4^(1/3)
  auto curt2 = ProjectivePoint::algebraic(P({-2, 0, 0, 1}));
  CHECK(RatMap(P({0, 0, 1})).eval(curt2) == ProjectivePoint::algebraic(P({-4, 0, 0, 1})));
}

TEST_CASE("local degrees") {
  RatMap t3(kT3);
  CHECK(local_degree(t3, fin(1, 2)) == 2);
  CHECK(local_degree(t3, fin(-1, 2)) == 2);
  CHECK(local_degree(t3, fin(0)) == 1);
  CHECK(local_degree(t3, inf()) == 3);
  RatMap p4(P({0, 0, 0, 0, 1}));
  CHECK(local_degree(p4, fin(0)) == 4);
  CHECK(local_degree(p4, inf()) == 4);
  CHECK(local_degree(p4, fin(3)) == 1);
  CHECK(local_degree(Z2(), fin(1)) == 2);
  CHECK(local_degree(Z2(), fin(-1)) == 2);
  CHECK(local_degree(Z2(), fin(0)) == 1);
  CHECK(local_degree(Z2(), inf()) == 1);
  // class critical point: both square roots of -1 are simple for z^2
  auto i_cls = ProjectivePoint::algebraic(P({1, 0, 1}));
  CHECK(local_degree(RatMap(P({0, 0, 1})), i_cls) == 1);
  RatMap sq1(P({1, 0, 1}) * P({1, 0, 1}));
  CHECK(local_degree(sq1, i_cls) == 2);
}

TEST_CASE("fiber polynomials") {
  RatMap t3(kT3);
  Poly fib = fiber_poly(t3, fin(-1));
  CHECK(root_multiplicity(fib, rat(1, 2)) == 2);
  CHECK(root_multiplicity(fib, rat(-1)) == 1);
  CHECK(fiber_poly(Z2(), inf()) == P({0, 1}));
  // degree shortfall marks a fiber through infinity
  CHECK(fiber_poly(t3, fin(5)).degree() == 3);
  CHECK(fiber_poly(RatMap(P({1}), P({0, 1})), fin(0)).degree() == 0);
}

TEST_CASE("composition") {
  RatMap t2(kT2), t3(kT3);
  CHECK(compose(t2, t3) == RatMap(kT6));
  CHECK(compose(t3, t2) == RatMap(kT6));
  CHECK(compose(Z2(), RatMap(P({0, 0, 1}))) == compose(t2, Z2()));
  CHECK(compose(t3, RatMap::identity()) == t3);
  CHECK(compose(RatMap::identity(), t3) == t3);
  CHECK(compose(t2, t3).degree() == 6);
  // constants collapse
  CHECK(compose(t3, RatMap(rat(2))) == RatMap(rat(26)));
  CHECK(compose(RatMap(rat(7)), t3) == RatMap(rat(7)));
  CHECK_THROWS_AS(compose(RatMap(P({1}), P({0, 1})), RatMap(rat(0))), InputError);
}

TEST_CASE("iteration and the degree cap") {
  RatMap sq(P({0, 0, 1}));
  CHECK(iterate_map(sq, 3) == RatMap(P({0, 0, 0, 0, 0, 0, 0, 0, 1})));
  CHECK(iterate_map(sq, 0) == RatMap::identity());
  CHECK(iterate_map(Z2(), 2) == compose(Z2(), Z2()));
  long saved = composition_degree_cap();
  composition_degree_cap() = 100;
  CHECK_THROWS_AS(iterate_map(sq, 7), LimitError);
  composition_degree_cap() = saved;
  CHECK_THROWS_AS(iterate_map(sq, -1), InputError);
}

TEST_CASE("mobius conjugation") {
  RatMap t2(kT2);
  RatMap conj = mobius_conjugate(t2, MobiusMap::scale(rat(-1)));
  CHECK(conj == RatMap(P({1, 0, -2})));
  // conjugation preserves degree and is undone by the inverse
  MobiusMap mu(rat(2), rat(1), rat(1), rat(1));
  RatMap g = mobius_conjugate(Z2(), mu);
  CHECK(g.degree() == 2);
  CHECK(mobius_conjugate(g, mu.inverse()) == Z2());
}

TEST_CASE("right division") {
  RatMap t2(kT2), t3(kT3), t6(kT6);
  auto q1 = right_divide(t6, t2);
  REQUIRE(q1.has_value());
  CHECK(*q1 == t3);
  auto q2 = right_divide(t6, t3);
  REQUIRE(q2.has_value());
  CHECK(*q2 == t2);
  CHECK_FALSE(right_divide(t3, t2).has_value());
  // z^4 - 2 = ((t^2 + 2t - 7)/4) o T2, an even polynomial factors through T2
  auto qe = right_divide(RatMap(P({-2, 0, 0, 0, 1})), RatMap(kT2));
  REQUIRE(qe.has_value());
  CHECK(*qe == RatMap(Poly(std::vector<Rat>{rat(-7, 4), rat(1, 2), rat(1, 4)})));
  // an odd-degree term blocks any factorization through an even map
  CHECK_FALSE(right_divide(RatMap(P({0, 0, 0, 1, 1})), RatMap(kT2)).has_value());
  auto q3 = right_divide(RatMap(P({-2, 0, 0, 0, 1})), RatMap(P({0, 0, 1})));
  REQUIRE(q3.has_value());
  CHECK(*q3 == RatMap(P({-2, 0, 1})));
  // even polynomial factors through the square
  auto q4 = right_divide(RatMap(P({0, 0, 1, 0, 0, 0, 1})), RatMap(P({0, 0, 1})));
  REQUIRE(q4.has_value());
  CHECK(*q4 == RatMap(P({0, 1, 0, 1})));
  // non-polynomial quotient
  auto q5 = right_divide(compose(Z2(), RatMap(P({0, 0, 0, 1}))), RatMap(P({0, 0, 0, 1})));
  REQUIRE(q5.has_value());
  CHECK(*q5 == Z2());
  // quotient can be recovered for iterates
  RatMap b(P({0, 1, 0, 1}));  // z^3 + z
  auto q6 = right_divide(iterate_map(b, 2), b);
  REQUIRE(q6.has_value());
  CHECK(*q6 == b);
}

TEST_CASE("wronskian") {
  CHECK(wronskian(RatMap(kT3)) == P({-3, 0, 12}));
  // (z^2 + 1)/(2z): numerator z^2 - 1 up to the canonical scaling
  Poly w = wronskian(Z2());
  auto roots = rational_roots(w);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == rat(-1));
  CHECK(roots[1] == rat(1));
}
