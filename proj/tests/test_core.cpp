// Exact scalar, polynomial, and matrix layer.

#include <catch_amalgamated.hpp>

#include "ygz/matrix.hpp"
#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

using namespace ygz;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-5") == rat(-5));
  CHECK(parse_rat("6/4") == rat(3, 2));
  CHECK(rat_str(rat(3, 2)) == "3/2");
  CHECK(rat_str(rat(-7)) == "-7");
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("rational predicates") {
  CHECK(is_integer(rat(4, 2)));
  CHECK_FALSE(is_integer(rat(1, 2)));
  CHECK(rat_floor(rat(-3, 2)) == -2);
  CHECK(rat_floor(rat(7, 2)) == 3);
  CHECK(rat_floor(rat(5)) == 5);
}

TEST_CASE("sample stream is deterministic and respects exclusions") {
  SampleStream a(42), b(42);
  std::vector<Rat> first;
  for (int i = 0; i < 10; ++i) {
    Rat x = a.next();
    CHECK(x == b.next());
    CHECK_FALSE(is_integer(x));  // never lands on an integer lattice point
    for (const Rat& y : first) CHECK(x != y);
    first.push_back(x);
  }
  SampleStream c(42, {first[0], first[2]});
  Rat z = c.next();
  CHECK(z != first[0]);
  CHECK(z == first[1]);  // skipped value is exactly the excluded one
}

TEST_CASE("polynomial arithmetic") {
  Poly p({rat(1), rat(2), rat(1)});  // 1 + 2u + u^2
  Poly q = Poly::linear(rat(1));     // u + 1
  CHECK(p == q * q);
  CHECK(p.degree() == 2);
  CHECK(p(rat(3)) == 16);
  CHECK((p - q * q).is_zero());
  CHECK((p - q * q).degree() == -1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.leading() == 1);
  CHECK((-q).coeff(1) == -1);
  CHECK((rat(3) * q).coeff(0) == 3);
  CHECK_THROWS_AS(Poly().leading(), ZeroPolynomial);
}

TEST_CASE("polynomial division, gcd, shift, derivative") {
  Poly a = Poly::linear(rat(2)) * Poly::linear(rat(-1)) * Poly::linear(rat(5));
  auto [quot, rem] = Poly::divmod(a, Poly::linear(rat(-1)));
  CHECK(rem.is_zero());
  CHECK(quot == Poly::linear(rat(2)) * Poly::linear(rat(5)));
  auto [q2, r2] = Poly::divmod(a, Poly::linear(rat(7)));
  CHECK(r2.degree() == 0);
  CHECK(a == q2 * Poly::linear(rat(7)) + r2);
  CHECK(Poly::gcd(a, Poly::linear(rat(2)) * Poly::linear(rat(3))) == Poly::linear(rat(2)));
  Poly s = a.shifted(rat(1, 2));
  for (long k = -3; k <= 3; ++k) CHECK(s(rat(k)) == a(rat(k) + rat(1, 2)));
  CHECK(a.derivative().degree() == 2);
  CHECK(Poly::linear(rat(9)).derivative() == Poly::one());
  CHECK((rat(2) * Poly::linear(rat(0))).monic() == Poly::linear(rat(0)));
  CHECK_THROWS_AS(Poly::divmod(a, Poly()), ZeroPolynomial);
}

TEST_CASE("squarefree detection") {
  Poly u = Poly::linear(rat(0));
  CHECK(is_squarefree(u * Poly::linear(rat(1))));
  CHECK(is_squarefree(u * u - Poly::one()));
  CHECK_FALSE(is_squarefree(u * u));
  CHECK_FALSE(is_squarefree(Poly::linear(rat(-1)) * Poly::linear(rat(-1)) * u));
  CHECK(is_squarefree(Poly::constant(rat(5))));
  CHECK_THROWS_AS(is_squarefree(Poly()), ZeroPolynomial);
}

TEST_CASE("rational function reduction and arithmetic") {
  Poly u = Poly::linear(rat(0));
  RationalFunction f(u * u - Poly::one(), Poly::linear(rat(-1)));  // (u^2-1)/(u-1)
  CHECK(f.num() == Poly::linear(rat(1)));
  CHECK(f.den() == Poly::one());
  RationalFunction g(Poly::one(), rat(2) * Poly::linear(rat(3)));
  CHECK(g.den() == Poly::linear(rat(3)));  // denominator normalized monic
  CHECK(g.num() == Poly::constant(rat(1, 2)));
  CHECK(f * g == RationalFunction(Poly::linear(rat(1)), rat(2) * Poly::linear(rat(3))));
  CHECK(f / f == RationalFunction::one());
  CHECK(f.shifted(rat(2))(rat(1)) == f(rat(3)));
  CHECK(g(rat(0)) == rat(1, 6));
  CHECK_THROWS_AS(f / RationalFunction(Poly(), Poly::one()), ZeroPolynomial);
}

TEST_CASE("matrix arithmetic and kronecker products") {
  Mat a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
  Mat id = Mat::identity(2);
  CHECK(a * id == a);
  CHECK(a + (-a) == Mat(2, 2));
  CHECK((rat(2) * a).at(1, 1) == 8);
  Mat b(2, 2);
  b.at(0, 1) = 1;
  // left factor is the most significant index: block structure check
  Mat k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 1) == 1);  // a(0,0) * b(0,1)
  CHECK(k.at(0, 3) == 2);  // a(0,1) * b(0,1)
  CHECK(k.at(2, 1) == 3);  // a(1,0) * b(0,1)
  CHECK(kron(a, id) != kron(id, a));
  Mat v = a.apply({rat(1), rat(1)});
  CHECK(v.at(0, 0) == 3);
  CHECK(v.at(1, 0) == 7);
  CHECK(a.submatrix({1}, {0, 1}).at(0, 1) == 4);
  CHECK_THROWS_AS(a * Mat(3, 3), ShapeMismatch);
}

TEST_CASE("matrix inverse") {
  Mat a(2, 2);  // unipotent: inverse flips the off-diagonal sign
  a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 1) = 1;
  Mat inv = mat_inverse(a);
  CHECK(inv.at(0, 1) == -1);
  CHECK(a * inv == Mat::identity(2));
  Mat b(3, 3);
  SampleStream s(7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = s.next();
  CHECK(mat_inverse(b) * b == Mat::identity(3));
  Mat sing(2, 2);
  sing.at(0, 0) = 1; sing.at(1, 0) = 2;
  CHECK_THROWS_AS(mat_inverse(sing), SingularMatrix);
}

TEST_CASE("kernel and rank") {
  Mat m(2, 3);
  m.at(0, 0) = 1; m.at(0, 2) = 1;
  m.at(1, 0) = 2; m.at(1, 2) = 2;
  auto ker = mat_kernel(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    Mat img = m.apply(v);
    CHECK(img.is_zero());
  }
  CHECK(mat_rank(m) == 1);
  CHECK(mat_rank(Mat::identity(4)) == 4);
  CHECK(mat_kernel(Mat::identity(2)).empty());
}

TEST_CASE("matrix polynomials") {
  Mat c0 = Mat::identity(2);
  Mat c1(2, 2);
  c1.at(0, 1) = 1;
  MatrixPoly p({c0, c1});
  CHECK(p.degree() == 1);
  CHECK(p(rat(3)).at(0, 1) == 3);
  CHECK(p.entry(0, 1) == Poly::linear(rat(0)));
  CHECK(p.entry(0, 0) == Poly::one());
  CHECK(p.coeff(5, 2, 2) == Mat(2, 2));
  MatrixPoly trimmed({c0, Mat(2, 2)});
  CHECK(trimmed.degree() == 0);
  MatrixPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.eval_or(rat(1), 2, 2) == Mat(2, 2));
  CHECK_THROWS_AS(zero(rat(1)), ShapeMismatch);
}

TEST_CASE("lagrange interpolation recovers a matrix polynomial") {
  Mat c0(2, 2), c1(2, 2), c2(2, 2);
  c0.at(0, 0) = rat(1, 3);
  c1.at(0, 1) = rat(-2);
  c2.at(1, 0) = rat(5, 7);
  MatrixPoly p({c0, c1, c2});
  SampleStream s(99);
  std::vector<std::pair<Rat, Mat>> pts;
  for (int i = 0; i < 3; ++i) {
    Rat x = s.next();
    pts.emplace_back(x, p(x));
  }
  CHECK(lagrange_interpolate(pts, 2) == p);
  CHECK_THROWS_AS(lagrange_interpolate(pts, 3), ShapeMismatch);
  pts[1].first = pts[0].first;
  CHECK_THROWS_AS(lagrange_interpolate(pts, 2), DuplicateNode);
}

TEST_CASE("minimal polynomials") {
  Poly u = Poly::linear(rat(0));
  CHECK(minimal_polynomial(Mat::identity(3)) == Poly::linear(rat(-1)));
  Mat nil(2, 2);
  nil.at(0, 1) = 1;
  CHECK(minimal_polynomial(nil) == u * u);
  CHECK_FALSE(is_squarefree(minimal_polynomial(nil)));
  Mat uni = Mat::identity(2);
  uni.at(0, 1) = 1;
  CHECK(minimal_polynomial(uni) == Poly::linear(rat(-1)) * Poly::linear(rat(-1)));
  Mat diag(2, 2);
  diag.at(0, 0) = 1; diag.at(1, 1) = 2;
  Poly mp = minimal_polynomial(diag);
  CHECK(mp == Poly::linear(rat(-1)) * Poly::linear(rat(-2)));
  CHECK(is_squarefree(mp));
  // annihilation check
  Mat z = mp.coeff(0) * Mat::identity(2) + mp.coeff(1) * diag + mp.coeff(2) * (diag * diag);
  CHECK(z.is_zero());
}
