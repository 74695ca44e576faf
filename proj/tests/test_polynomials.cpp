#include <doctest.h>

#include "qci/error.hpp"
#include "qci/polynomial.hpp"

using namespace qci;

namespace {

template <Field K>
Polynomial<K> P(const RingPtr<K>& r, const char* s) {
  return parse_polynomial(r, s);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(101);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.format(100) == "-1");
  CHECK(f.from_rational(mpq_class(1, 2)) == 51);
  CHECK_THROWS_AS(PrimeField(100), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
  std::uint32_t r = 0;
  CHECK(square_root(f, f.from_int(-1), r));  // 101 = 1 mod 4
  CHECK(f.mul(r, r) == 100);
}

TEST_CASE("square roots") {
  PrimeField f(101);
  for (std::uint32_t a = 1; a < 101; ++a) {
    std::uint32_t r;
    const bool ok = square_root(f, a, r);
    CHECK(ok == (f.pow(a, 50) == 1));
    if (ok) CHECK(f.mul(r, r) == a);
  }
  RationalField q;
  mpq_class r;
  CHECK(square_root(q, mpq_class(9, 4), r));
  CHECK(r == mpq_class(3, 2));
  CHECK_FALSE(square_root(q, mpq_class(2), r));
}

TEST_CASE("extension fields") {
  // t^2 + 1 is irreducible over F_103 (103 = 3 mod 4).
  ExtensionField f(103, {1, 0, 1});
  CHECK(f.order() == 103 * 103);
  const auto a = f.generator();
  CHECK(f.equal(f.mul(a, a), f.from_int(-1)));
  const auto x = f.from_polynomial({5, 7});
  CHECK(f.equal(f.mul(x, f.inv(x)), f.one()));
  CHECK_THROWS_AS(ExtensionField(101, {1, 0, 1}), Error);  // -1 is a square mod 101
  Rng rng(5);
  auto g = ExtensionField::random(101, 3, rng);
  CHECK(g.degree() == 3);
  // Squares have square roots.
  for (std::uint64_t i = 1; i < 40; ++i) {
    auto e = g.element_at(i * 977);
    auto sq = g.mul(e, e);
    ExtensionField::Element root;
    REQUIRE(square_root(g, sq, root));
    CHECK(g.equal(g.mul(root, root), sq));
  }
  CHECK(g.equal(power(g, g.generator(), g.order() - 1), g.one()));
}

TEST_CASE("polynomial arithmetic") {
  auto R = make_polynomial_ring(PrimeField(101), 5);
  auto f = P(R, "x1+x2");
  auto g = P(R, "x1-x2");
  CHECK(f * g == P(R, "x1^2-x2^2"));
  CHECK((f * Polynomial<PrimeField>(R)).is_zero());
  auto prod = P(R, "x1+x2+x4") * P(R, "x2+x3+x5");
  CHECK(prod.size() == 9);
  CHECK(prod == P(R, "x1*x2 + x1*x3 + x1*x5 + x2^2 + x2*x3 + x2*x4 + x2*x5 + x3*x4 + x4*x5"));
  CHECK(prod.is_homogeneous());
  CHECK(prod.total_degree() == 2);
  CHECK(f.power(3) == f * f * f);
  CHECK(P(R, "2*x1/4") == P(R, "1/2*x1"));
  CHECK(P(R, "(x1+x2)^2") == P(R, "x1^2+2*x1*x2+x2^2"));
}

TEST_CASE("grevlex leading terms") {
  auto R = make_polynomial_ring(RationalField{}, 5);
  CHECK(P(R, "x3^2-x1*x4").leading_monomial() == Monomial({0, 0, 2, 0, 0}));
  CHECK(P(R, "x2^2-x3*x5").leading_monomial() == Monomial({0, 2, 0, 0, 0}));
  auto L = make_polynomial_ring(RationalField{}, 5, MonomialOrder::lex);
  CHECK(P(L, "x3^2-x1*x4").leading_monomial() == Monomial({1, 0, 0, 1, 0}));
  CHECK(monomials_of_degree(3, 2, MonomialOrder::grevlex).size() == 6);
}

TEST_CASE("printing") {
  auto R = make_polynomial_ring(PrimeField(101), 3);
  CHECK(P(R, "x1^2 - x2*x3 + 3").to_string() == "x1^2 - x2*x3 + 3");
  CHECK(P(R, "0").to_string() == "0");
  auto Q = make_polynomial_ring(RationalField{}, 2, MonomialOrder::grevlex, {"a", "b"});
  CHECK(P(Q, "a/3 - 2*b").to_string() == "1/3*a - 2*b");
}

TEST_CASE("parse errors carry positions") {
  auto R = make_polynomial_ring(RationalField{}, 3);
  try {
    parse_polynomial(R, "x1 + y7", 4, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_polynomial(R, "x1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x4"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x1/0"), ParseError);
  try {
    parse_polynomial(R, "x1\n + x2 ) ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("mixed rings are rejected") {
  auto R = make_polynomial_ring(PrimeField(101), 2);
  auto S = make_polynomial_ring(PrimeField(103), 2);
  try {
    auto h = P(R, "x1") + P(S, "x1");
    (void)h;
    FAIL("expected ring mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ring_mismatch);
  }
}

TEST_CASE("hessian") {
  auto R2 = make_polynomial_ring(PrimeField(101), 2);
  auto h = hessian(P(R2, "x1*x2"));
  CHECK(h(0, 1) == 1);
  CHECK(h(1, 0) == 1);
  CHECK(h(0, 0) == 0);
  CHECK(rank(h) == 2);
  auto R3 = make_polynomial_ring(RationalField{}, 3);
  CHECK(rank(hessian(P(R3, "x1^2"))) == 1);
  auto h3 = hessian(P(R3, "x1^2 - x2*x3"));
  CHECK(h3 == Matrix<RationalField>::from_rows(RationalField{}, 3, {{2, 0, 0}, {0, 0, -1}, {0, -1, 0}}));
  CHECK(rank(h3) == 3);
  CHECK(quadric_from_hessian(R3, h3) == P(R3, "x1^2 - x2*x3"));
  CHECK_THROWS_AS(hessian(P(R3, "x1^3")), Error);
  CHECK_THROWS_AS(hessian(P(R3, "x1")), Error);
}

TEST_CASE("initial forms") {
  auto R = make_polynomial_ring(RationalField{}, 3);
  CHECK(initial_form(P(R, "x1 + x1*x2")) == P(R, "x1"));
  CHECK(initial_form(P(R, "x1*x2 - x3^2")) == P(R, "x1*x2 - x3^2"));
  CHECK(initial_form(P(R, "(1+x1)*(x2+x3) - (x2+x3)")) == P(R, "x1*x2 + x1*x3"));
  CHECK_THROWS_AS(initial_form(Polynomial<RationalField>(R)), Error);
}

TEST_CASE("substitution") {
  auto R = make_polynomial_ring(RationalField{}, 2);
  auto f = P(R, "x1^2 - x2^2");
  auto g = f.substitute({P(R, "x1+x2"), P(R, "x1-x2")});
  CHECK(g == P(R, "4*x1*x2"));
}
