#include <doctest.h>

#include "qci/error.hpp"
#include "qci/univariate.hpp"

using namespace qci;

namespace {

UPoly<PrimeField> from_ints(const PrimeField& f, std::vector<long> c) {
  UPoly<PrimeField> p;
  for (long x : c) p.push_back(f.from_int(x));
  upoly_trim(f, p);
  return p;
}

}  // namespace

TEST_CASE("division and gcd") {
  PrimeField f(101);
  const auto a = from_ints(f, {-1, 0, 1});  // t^2 - 1
  const auto b = from_ints(f, {-1, 1});     // t - 1
  UPoly<PrimeField> q, r;
  upoly_divmod(f, a, b, q, r);
  CHECK(q == from_ints(f, {1, 1}));
  CHECK(r.empty());
  CHECK(upoly_gcd(f, a, from_ints(f, {1, 2, 1})) == from_ints(f, {1, 1}));
  CHECK_THROWS_AS(upoly_divmod(f, a, UPoly<PrimeField>{}, q, r), Error);
  CHECK(upoly_eval(f, a, 10u) == 99u);
}

TEST_CASE("factorization over a prime field") {
  PrimeField f(101);
  Rng rng(3);
  // (t - 2)^2 (t - 5) (t^2 - 2); 2 is a non-residue mod 101.
  auto a = upoly_mul(f, upoly_mul(f, from_ints(f, {-2, 1}), from_ints(f, {-2, 1})),
                     upoly_mul(f, from_ints(f, {-5, 1}), from_ints(f, {-2, 0, 1})));
  const auto fac = upoly_factor(f, a, rng);
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].factor.size() == 2);
  CHECK(fac[1].factor.size() == 2);
  CHECK(fac[2].factor == from_ints(f, {-2, 0, 1}));
  UPoly<PrimeField> prod{1};
  for (const auto& x : fac)
    for (int m = 0; m < x.multiplicity; ++m) prod = upoly_mul(f, prod, x.factor);
  CHECK(prod == a);
  auto roots = upoly_roots(f, a, rng);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::uint32_t>{2, 5});
}

TEST_CASE("p-th powers are handled") {
  PrimeField f(5);
  Rng rng(1);
  // t^5 - t^0 = (t - 1)^5 over F_5.
  const auto fac = upoly_factor(f, from_ints(f, {-1, 0, 0, 0, 0, 1}), rng);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].multiplicity == 5);
  CHECK(fac[0].factor == from_ints(f, {-1, 1}));
}

TEST_CASE("roots in an extension field") {
  Rng rng(9);
  auto g = ExtensionField::random(101, 2, rng);
  // t^2 - 2 splits over GF(101^2).
  UPoly<ExtensionField> a{g.from_int(-2), g.zero(), g.one()};
  const auto roots = upoly_roots(g, a, rng);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(g.equal(g.mul(r, r), g.from_int(2)));
}
