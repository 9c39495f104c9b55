#include <catch2/catch_amalgamated.hpp>

#include "ratorb/linalg.hpp"
#include "ratorb/polyfrac.hpp"
#include "ratorb/polynomial.hpp"
#include "ratorb/rational.hpp"

using namespace ratorb;

static Poly P(std::initializer_list<long> ascending) {
  std::vector<Rat> v;
  for (long x : ascending) v.push_back(rat(x));
  return Poly(v);
}

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat_from_string("-6/8") == rat(-3, 4));
  CHECK(rat(1, 3) + rat(2, 5) == rat(11, 15));
  CHECK(pow_rat(rat(2, 3), -2) == rat(9, 4));
  CHECK(pow_rat(rat(-2), 3) == rat(-8));
  CHECK(den(rat(3, -6)) == 2);
  Int root;
  CHECK(perfect_root(Int(729), 3, root));
  CHECK(root == 9);
  CHECK(perfect_root(Int(-8), 3, root));
  CHECK(root == -2);
  CHECK_FALSE(perfect_root(Int(10), 2, root));
}

TEST_CASE("polynomial arithmetic and division") {
  Poly a = P({-1, 0, 1});       // z^2 - 1
  Poly b = P({1, 1});           // z + 1
  CHECK(poly_div_exact(a, b) == P({-1, 1}));
  CHECK((a * b).degree() == 3);
  CHECK(a.eval(rat(3)) == rat(8));
  auto dm = poly_divmod(P({1, 0, 0, 1}), P({1, 1}));  // z^3+1 = (z^2-z+1)(z+1)
  CHECK(dm.quot == P({1, -1, 1}));
  CHECK(dm.rem.is_zero());
  CHECK(P({0, 0, 2}).monic() == P({0, 0, 1}));
  CHECK(P({1, 2, 1}).compose(P({0, 0, 1})) == P({1, 0, 2, 0, 1}));
  CHECK(P({0, 1}).pow(3) == P({0, 0, 0, 1}));
  // z^2+2z+3 reversed at homogenization degree 2: 3z^2+2z+1
  CHECK(P({3, 2, 1}).reversed(2) == P({1, 2, 3}));
  CHECK(P({0, 1, 1}).reversed(3) == P({0, 1, 1, 0}).reversed(3));
}

TEST_CASE("gcd tower oracle") {
  // gcd(4z^3 - 3z - 1, 12z^2 - 3) = z + 1/2 after monic normalization
  Poly a = P({-1, -3, 0, 4});
  Poly da = P({-3, 0, 12});
  Poly g = poly_gcd(a, da);
  CHECK(g == Poly(std::vector<Rat>{rat(1, 2), rat(1)}));
  CHECK(poly_gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(poly_gcd(P({2}), P({0, 1})).degree() == 0);
}

TEST_CASE("squarefree decomposition oracle") {
  // 4z^3 - 3z - 1 = 4 (z - 1) (z + 1/2)^2
  auto sf = squarefree_decomposition(P({-1, -3, 0, 4}));
  CHECK(sf.content == rat(4));
  REQUIRE(sf.factors.size() == 2);
  CHECK(sf.factors[0].first == P({-1, 1}));
  CHECK(sf.factors[0].second == 1);
  CHECK(sf.factors[1].first == Poly(std::vector<Rat>{rat(1, 2), rat(1)}));
  CHECK(sf.factors[1].second == 2);
  // reconstruction
  Poly rec = Poly(sf.content);
  for (auto& [f, m] : sf.factors) rec = rec * f.pow(static_cast<unsigned long>(m));
  CHECK(rec == P({-1, -3, 0, 4}));
  // z^6: single factor z at multiplicity 6
  auto sf2 = squarefree_decomposition(P({0, 0, 0, 0, 0, 0, 1}));
  REQUIRE(sf2.factors.size() == 1);
  CHECK(sf2.factors[0] == std::make_pair(P({0, 1}), 6));
}

TEST_CASE("resultant oracle: critical values of the degree-3 Chebyshev polynomial") {
  // Res_z(4z^3 - 3z - t, 12z^2 - 3) = 1728 (t^2 - 1), frozen by evaluation
  auto res_at = [](const Rat& t) {
    Poly a = P({0, -3, 0, 4}) - Poly(t);
    return resultant(a, P({-3, 0, 12}));
  };
  CHECK(res_at(rat(0)) == rat(-1728));
  CHECK(res_at(rat(1)) == rat(0));
  CHECK(res_at(rat(-1)) == rat(0));
  CHECK(res_at(rat(2)) == rat(1728 * 3));
  // interpolation reconstructs the full resultant in t
  std::vector<std::pair<Rat, Rat>> pts;
  for (long t = -2; t <= 2; ++t) pts.emplace_back(rat(t), res_at(rat(t)));
  Poly rt = interpolate(pts);
  CHECK(rt == P({-1728, 0, 1728}));
  CHECK(resultant(P({-1, 0, 1}), P({-4, 0, 1})) == rat(9));  // (z^2-1, z^2-4)
  CHECK(resultant(P({-1, 1}), P({-1, 1})) == rat(0));
}

TEST_CASE("rational root extraction") {
  // (z-1)(2z-1)(3z+1) = 6z^3 - 7z^2 + 1
  auto r = rational_roots(P({1, 0, -7, 6}));
  REQUIRE(r.size() == 3);
  CHECK(r[0] == rat(-1, 3));
  CHECK(r[1] == rat(1, 2));
  CHECK(r[2] == rat(1));
  CHECK(rational_roots(P({1, 0, 1})).empty());         // z^2 + 1
  CHECK(rational_roots(P({-2, 0, 1})).empty());        // z^2 - 2
  auto r2 = rational_roots(P({0, 0, -1, 1}));          // z^3 - z^2
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == rat(0));
  CHECK(r2[1] == rat(1));
  // multiplicity does not duplicate roots
  CHECK(rational_roots(P({1, 2, 1})).size() == 1);
  CHECK(root_multiplicity(P({1, 2, 1}), rat(-1)) == 2);
  CHECK(root_multiplicity(P({1, 2, 1}), rat(1)) == 0);
  // large-denominator root 22/7: (7z - 22)(z^2+1)
  auto r3 = rational_roots(P({-22, 7}) * P({1, 0, 1}));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0] == rat(22, 7));
}

TEST_CASE("function field gcd oracle") {
  // gcd_t(t^4 - z^4, t^6 - z^6) = t^2 - z^2
  Poly z4 = P({0, 0, 0, 0, 1});
  Poly z6 = P({0, 0, 0, 0, 0, 0, 1});
  FFPoly a(std::vector<PolyFrac>{PolyFrac(-z4), PolyFrac(), PolyFrac(), PolyFrac(), PolyFrac(rat(1))});
  FFPoly b(std::vector<PolyFrac>{PolyFrac(-z6), PolyFrac(), PolyFrac(), PolyFrac(), PolyFrac(), PolyFrac(), PolyFrac(rat(1))});
  FFPoly g = function_field_gcd(a, b);
  REQUIRE(g.degree() == 2);
  CHECK(g.coeff(2) == PolyFrac(rat(1)));
  CHECK(g.coeff(1).is_zero());
  CHECK(g.coeff(0) == PolyFrac(-P({0, 0, 1})));
  // coprime pair: gcd degree 0
  FFPoly c(std::vector<PolyFrac>{PolyFrac(-P({0, 1})), PolyFrac(rat(1))});       // t - z
  FFPoly d(std::vector<PolyFrac>{PolyFrac(-P({1, 1})), PolyFrac(rat(1))});       // t - (z+1)
  CHECK(function_field_gcd(c, d).degree() == 0);
}

TEST_CASE("squarefree factor splitting") {
  // z^4 - 4 = (z^2 - 2)(z^2 + 2)
  auto f1 = split_irreducible_factors(P({-4, 0, 0, 0, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == P({-2, 0, 1}));
  CHECK(f1[1] == P({2, 0, 1}));
  // z^4 + 4 = (z^2 - 2z + 2)(z^2 + 2z + 2)
  auto f2 = split_irreducible_factors(P({4, 0, 0, 0, 1}));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == P({2, -2, 1}));
  CHECK(f2[1] == P({2, 2, 1}));
  // z^4 + 1 stays whole
  auto f3 = split_irreducible_factors(P({1, 0, 0, 0, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].degree() == 4);
  // rational roots peel off first: (z - 1)(z + 2)(z^2 + 3)
  auto f4 = split_irreducible_factors(P({-1, 1}) * P({2, 1}) * P({3, 0, 1}));
  REQUIRE(f4.size() == 3);
  CHECK(f4[0] == P({-1, 1}));
  CHECK(f4[1] == P({2, 1}));
  CHECK(f4[2] == P({3, 0, 1}));
  // 512z^4 - 2048z^3 + 1344z^2 - 536z - 1 is irreducible
  auto f5 = split_irreducible_factors(P({-1, -536, 1344, -2048, 512}));
  REQUIRE(f5.size() == 1);
  CHECK(f5[0].degree() == 4);
  CHECK(f5[0].is_monic());
  // degree >= 5 without rational roots is returned whole even when composite
  auto f6 = split_irreducible_factors(P({1, 0, 1}) * P({-2, 0, 0, 1}));
  REQUIRE(f6.size() == 1);
  CHECK(f6[0].degree() == 5);
}

TEST_CASE("polyfrac field ops") {
  PolyFrac f(P({0, 1}), P({1, 1}));            // z/(z+1)
  PolyFrac g(P({0, 2}), P({2, 2}));            // reduces to the same
  CHECK(f == g);
  CHECK((f * f.inverse()) == PolyFrac(rat(1)));
  PolyFrac h = f + PolyFrac(rat(1));
  CHECK(h == PolyFrac(P({1, 2}), P({1, 1})));
  CHECK(PolyFrac(P({0, 0, 1}), P({0, 1})) == PolyFrac(P({0, 1})));  // z^2/z = z
}

TEST_CASE("linear algebra") {
  RatMatrix m = {{rat(1), rat(2)}, {rat(2), rat(4)}};
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] * 1 + ns[0][1] * 2 == 0);
  auto sol = solve_unique({{rat(2), rat(1)}, {rat(1), rat(-1)}}, {rat(5), rat(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == rat(2));
  CHECK((*sol)[1] == rat(1));
  CHECK_FALSE(solve_unique({{rat(1), rat(1)}, {rat(2), rat(2)}}, {rat(1), rat(3)}).has_value());
}

TEST_CASE("polynomial printing") {
  CHECK(P({-1, 0, 4}).str() == "4*z^2 - 1");
  CHECK(P({0, 1}).str() == "z");
  CHECK(Poly(std::vector<Rat>{rat(1, 2), rat(1)}).str() == "z + 1/2");
  CHECK(Poly().str() == "0");
}
