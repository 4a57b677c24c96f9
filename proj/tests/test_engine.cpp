// Closed-form construction of the operator families on tuple bases.

#include <catch_amalgamated.hpp>

#include "ygz/crossval.hpp"
#include "ygz/engine.hpp"
#include "ygz/module_spec.hpp"

using namespace ygz;

namespace {

YangianFactor factor(Weight lambda, Weight mu, Rat h) {
  YangianFactor f;
  f.lambda = std::move(lambda);
  f.mu = std::move(mu);
  f.h = std::move(h);
  return f;
}

ModuleSpec spec(int N, std::vector<YangianFactor> fs) {
  ModuleSpec s;
  s.N = N;
  s.factors = std::move(fs);
  return s;
}

ModuleSpec c2(Rat h) { return spec(2, {factor({1, 0}, {}, std::move(h))}); }

}  // namespace

TEST_CASE("row eigenvalue factor") {
  RationalFunction a = alpha({2, 1});
  CHECK(a == RationalFunction(Poly::linear(rat(2)), Poly::linear(rat(-1))));
  CHECK(alpha({}) == RationalFunction::one());
  CHECK(alpha({0}) == RationalFunction::one());
}

TEST_CASE("eigenvalue of the two-factor module on the cyclic tuple") {
  ModuleSpec s = spec(2, {c2(rat(0)).factors[0], c2(rat(1, 2)).factors[0]});
  SchemeTuple top = top_tuple(s);
  RationalFunction x = chi(s, top, 1);
  Poly num = Poly::linear(rat(1)) * Poly::linear(rat(3, 2));
  Poly den = Poly::linear(rat(0)) * Poly::linear(rat(1, 2));
  CHECK(x == RationalFunction(num, den));
}

TEST_CASE("pole-clearing polynomial and nodal points") {
  ModuleSpec s = c2(rat(0));
  SchemeTuple top = top_tuple(s);
  RhoNodes rn = rho_and_nodes(s, top, 1);
  CHECK(rn.rho == Poly::linear(rat(0)));
  CHECK(rn.varpi == Poly::linear(rat(1)));
  REQUIRE(rn.nodes.size() == 1);
  CHECK(rn.nodes[0].second == rat(-1));
  // bottom tuple: nodal point 0
  SchemeTuple bot = top;
  bot[0].entry(1, 1) = 0;
  CHECK(node_point(s, bot, 1, 0, 1) == 0);
  CHECK(varpi(s, bot, 1) == Poly::linear(rat(0)));
}

TEST_CASE("shift identity of the pole-clearing ladder") {
  ModuleSpec s = spec(2, {factor({3, 1, 0}, {2}, rat(0))});
  for (int m = 1; m <= 1; ++m) {
    Poly lhs = rho_poly(s, m) * rho_poly(s, m).shifted(rat(-1));
    Poly rhs = rho_poly(s, m + 1) * rho_poly(s, m - 1).shifted(rat(-1));
    CHECK(lhs == rhs);
  }
  CHECK(rho_degree(s, 1) == 2);  // m*n + sum of pinned lengths
}

TEST_CASE("one-box transition coefficients by hand") {
  ModuleSpec s = c2(rat(0));
  SchemeTuple top = top_tuple(s);
  SchemeTuple bot = top;
  bot[0].entry(1, 1) = 0;
  CHECK(beta_coeff(s, top, 1, 0, 1) == 1);
  CHECK(gamma_coeff(s, bot, 1, 0, 1) == -1);
}

TEST_CASE("full action on the two-dimensional module") {
  GTModule mod = build_action(c2(rat(0)));
  REQUIRE(mod.dim() == 2);
  // basis order: bottom tuple first
  CHECK(mod.basis[0][0].entry(1, 1) == 0);
  CHECK(mod.basis[1][0].entry(1, 1) == 1);
  CHECK(mod.a[0].entry(0, 0) == Poly::one());
  CHECK(mod.a[1].entry(0, 0) == Poly::linear(rat(0)));
  CHECK(mod.a[1].entry(1, 1) == Poly::linear(rat(1)));
  CHECK(mod.a[1].entry(0, 1) == Poly());
  Poly det = Poly::linear(rat(1)) * Poly::linear(rat(-1));
  CHECK(mod.a[2].entry(0, 0) == det);
  CHECK(mod.a[2].entry(1, 1) == det);
  // one-box moves are the constant unit matrices
  CHECK(mod.b[0].entry(0, 1) == Poly::one());
  CHECK(mod.b[0].entry(1, 0) == Poly());
  CHECK(mod.c[0].entry(1, 0) == Poly::one());
  // the complementary family closes the quadratic identity
  CHECK(mod.d[0].entry(0, 0) == Poly::linear(rat(1)));
  CHECK(mod.d[0].entry(1, 1) == Poly::linear(rat(0)));
}

TEST_CASE("colliding nodal points are refused") {
  ModuleSpec s = spec(2, {c2(rat(0)).factors[0], c2(rat(1)).factors[0]});
  CHECK_THROWS_AS(build_action(s), NodesCollide);
}

TEST_CASE("degree grading of the families") {
  ModuleSpec s = spec(2, {factor({2, 0}, {}, rat(0)), factor({1, 0}, {}, rat(1, 2))});
  GTModule mod = build_action(s);
  for (int m = 0; m <= s.N; ++m) CHECK(mod.a[m].degree() == rho_degree(s, m));
  for (int m = 1; m <= s.N - 1; ++m) {
    CHECK(mod.b[m - 1].degree() <= rho_degree(s, m) - 1);
    CHECK(mod.c[m - 1].degree() <= rho_degree(s, m) - 1);
    CHECK(mod.d[m - 1].degree() == rho_degree(s, m));
  }
}

TEST_CASE("commutation and exchange identities hold for the built families") {
  CHECK(verify_engine_relations(build_action(c2(rat(0)))));
  CHECK(verify_engine_relations(build_action(spec(2, {factor({3, 1, 0}, {2}, rat(0))}))));
  CHECK(verify_engine_relations(build_action(spec(3, {factor({2, 1, 0}, {}, rat(0))}))));
}

TEST_CASE("cyclic vector") {
  GTModule mod = build_action(spec(3, {factor({2, 1, 0}, {}, rat(0))}));
  std::vector<Rat> v = singular_vector(mod);
  int t0 = mod.index_of(top_tuple(mod.spec));
  for (int r = 0; r < mod.dim(); ++r) CHECK(v[r] == ((r == t0) ? 1 : 0));
}

TEST_CASE("raising word to the bottom tuple") {
  ModuleSpec s = c2(rat(0));
  SchemeTuple bot = top_tuple(s);
  bot[0].entry(1, 1) = 0;
  auto word = raising_path(s, bot);
  REQUIRE(word.size() == 1);
  CHECK(word[0].m == 1);
  CHECK(word[0].point == rat(-1));
  CHECK(raising_path(s, top_tuple(s)).empty());
}

TEST_CASE("characteristic polynomials from the diagram ladder") {
  auto p4 = drinfeld_polys(spec(3, {factor({2, 1, 0}, {}, rat(0))}));
  REQUIRE(p4.size() == 2);
  CHECK(p4[0] == Poly::linear(rat(1)));
  CHECK(p4[1] == Poly::linear(rat(-1)));
  auto p2 = drinfeld_polys(spec(2, {c2(rat(0)).factors[0], c2(rat(1, 2)).factors[0]}));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == Poly::linear(rat(0)) * Poly::linear(rat(1, 2)));
}

TEST_CASE("eigenvalue data separates tuples exactly when expected") {
  CHECK(simple_spectrum_check(spec(2, {c2(rat(0)).factors[0], c2(rat(1, 2)).factors[0]})));
  CHECK(simple_spectrum_check(spec(3, {factor({2, 1, 0}, {}, rat(0))})));
  CHECK_FALSE(simple_spectrum_check(spec(2, {c2(rat(0)).factors[0], c2(rat(0)).factors[0]})));
}
