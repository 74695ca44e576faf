#include <doctest.h>

#include "qci/examples.hpp"
#include "qci/error.hpp"

using namespace qci;

using Sizes = std::vector<std::size_t>;

TEST_CASE("ring B over several fields") {
  CHECK(make_example_b(RationalField{}).ring->hilbert_series() == Sizes{1, 5, 7, 3});
  for (std::uint32_t p : {5u, 101u, 32003u}) {
    auto ex = make_example_b(PrimeField(p));
    CHECK(ex.ring->hilbert_series() == Sizes{1, 5, 7, 3});
    auto I = RingIdeal<PrimeField>::generated_by(ex.ring, {ex.f1, ex.f2});
    CHECK(I.quotient_hilbert() == Sizes{1, 3});
  }
}

TEST_CASE("small quotients") {
  PrimeField f(101);
  auto a = make_quotient(f, 1, {"x1^2"});
  CHECK(a->dim() == 2);
  CHECK(a->hilbert_series() == Sizes{1, 1});
  auto b = make_quotient(f, 1, {"x1"});
  CHECK(b->dim() == 1);
  CHECK(b->top_degree() == 0);
  CHECK(b->loewy_length() == 1);
  try {
    make_quotient(f, 2, {"x1^2"});
    FAIL("expected non-artinian error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_artinian);
    CHECK(std::string(e.what()).find("x2") != std::string::npos);
  }
  CHECK_THROWS_AS(make_quotient(f, 1, {"x1^2+x1"}), Error);
}

TEST_CASE("loewy lengths and generator counts on B") {
  auto ex = make_example_b(PrimeField(101));
  auto B = ex.ring;
  CHECK(B->loewy_length() == 4);
  auto I = RingIdeal<PrimeField>::generated_by(B, {ex.f1, ex.f2});
  CHECK(I.nu() == 2);
  CHECK(RingIdeal<PrimeField>::maximal_power(B, 1).nu() == 5);
  CHECK(RingIdeal<PrimeField>::maximal_power(B, 3).nu() == 3);
  for (int n = 1; n <= 4; ++n) CHECK(make_square_ci(PrimeField(101), n)->loewy_length() == n + 1);
  // m^k computed as a power agrees with the degree filtration.
  auto m = RingIdeal<PrimeField>::maximal_power(B, 1);
  CHECK(m.power(2) == RingIdeal<PrimeField>::maximal_power(B, 2));
  CHECK(m.power(3) == RingIdeal<PrimeField>::maximal_power(B, 3));
}

TEST_CASE("annihilators and colons") {
  PrimeField f(101);
  auto R = make_quotient(f, 2, {"x1^2", "x2^3"});
  auto x1 = RingElement<PrimeField>::variable(R, 0);
  auto ann = annihilator(x1);
  CHECK(ann == RingIdeal<PrimeField>::generated_by(R, {x1}));
  // socle of k[x1,x2]/(x1^2,x2^3) is spanned by x1*x2^2.
  auto soc = socle(R);
  CHECK(soc.dim() == 1);
  CHECK(soc.contains(RingElement<PrimeField>::parse(R, "x1*x2^2")));
  // rank-nullity for multiplication maps
  for (const char* s : {"x1", "x2", "x1+x2", "x2^2", "x1*x2+x2^2"}) {
    auto x = RingElement<PrimeField>::parse(R, s);
    auto xr = RingIdeal<PrimeField>::generated_by(R, {x});
    CHECK(annihilator(x).dim() + xr.dim() == R->dim());
  }
}

TEST_CASE("exact zero-divisors") {
  PrimeField f(101);
  auto A = make_quotient(f, 1, {"x1^2"});
  auto x = RingElement<PrimeField>::variable(A, 0);
  auto y = is_exact_zero_divisor(x);
  REQUIRE(y);
  CHECK(RingIdeal<PrimeField>::generated_by(A, {*y}) == RingIdeal<PrimeField>::generated_by(A, {x}));

  auto C = make_square_ci(f, 2);
  auto l = RingElement<PrimeField>::parse(C, "x1+x2");
  auto w = is_exact_zero_divisor(l);
  REQUIRE(w);
  CHECK(RingIdeal<PrimeField>::generated_by(C, {*w}) ==
        RingIdeal<PrimeField>::generated_by(C, {RingElement<PrimeField>::parse(C, "x1-x2")}));
  // symmetry
  auto back = is_exact_zero_divisor(*w);
  REQUIRE(back);
  CHECK(RingIdeal<PrimeField>::generated_by(C, {*back}) == RingIdeal<PrimeField>::generated_by(C, {l}));

  auto ex = make_example_b(f);
  CHECK_FALSE(is_exact_zero_divisor(ex.f1));
  CHECK_THROWS_AS(is_exact_zero_divisor(RingElement<PrimeField>::one(A)), Error);
  CHECK_THROWS_AS(is_exact_zero_divisor(RingElement<PrimeField>::zero(A)), Error);
}
