#include <doctest.h>

#include "qci/error.hpp"
#include "qci/examples.hpp"
#include "qci/koszul.hpp"

using namespace qci;

namespace {

template <Field K>
RingElement<K> E(const QuotientPtr<K>& r, const char* s) {
  return RingElement<K>::parse(r, s);
}

}  // namespace

TEST_CASE("subsets in lexicographic order") {
  const auto s = subsets_of_size(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == 0b0011);
  CHECK(s[1] == 0b0101);
  CHECK(s[2] == 0b1001);
  CHECK(s[3] == 0b0110);
  CHECK(s[5] == 0b1100);
  CHECK(subsets_of_size(3, 0).size() == 1);
  CHECK(subsets_of_size(3, 4).empty());
}

TEST_CASE("Koszul homology of the running example") {
  auto ex = make_example_b(PrimeField(101));
  KoszulComplex<PrimeField> e(ex.ring, {ex.f1, ex.f2});
  CHECK(e.max_internal_degree() == 5);
  const auto rep = homology_report(e);
  CHECK(rep.table.total_z(1) == 20);
  CHECK(rep.table.total_b(1) == 12);
  CHECK(rep.table.total_h(1) == 8);
  CHECK(rep.table.total_h(2) == 4);
  CHECK(rep.table.total_h(0) == 4);
  CHECK(rep.table.euler_characteristic() == 0);
  // Z_1 and B_1 by internal degree.
  CHECK(rep.table.z[1][2] == 3);
  CHECK(rep.table.z[1][3] == 11);
  CHECK(rep.table.z[1][4] == 6);
  CHECK(rep.table.b[1][2] == 1);
  CHECK(rep.table.b[1][3] == 5);
  CHECK(rep.table.b[1][4] == 6);
  REQUIRE(rep.h1_generators.size() == 2);
  CHECK(rep.h1_generator_degrees == std::vector<int>{2, 2});
  for (const auto& z : rep.h1_generators) CHECK(e.is_zero(e.boundary(z)));
  CHECK(grade(e, rep) == 0);
}

TEST_CASE("differentials compose to zero") {
  auto ex = make_example_b(RationalField{});
  KoszulComplex<RationalField> e(ex.ring, {ex.f1, ex.f2});
  for (int d = 0; d <= e.max_internal_degree(); ++d) {
    const auto d1 = e.boundary(1, d);
    const auto d2 = e.boundary(2, d);
    if (d1.rows() && d2.cols()) CHECK((d1 * d2).is_zero());
  }
  // The pinned cycles are cycles, and the wedge is a 2-cycle.
  const auto& abcd = example_b_cycle_entries();
  auto z1 = e.zero_chain(1), z2 = e.zero_chain(1);
  z1.components[0] = E(ex.ring, abcd[0].c_str()).coordinates();
  z1.components[1] = E(ex.ring, abcd[2].c_str()).coordinates();
  z2.components[0] = E(ex.ring, abcd[1].c_str()).coordinates();
  z2.components[1] = E(ex.ring, abcd[3].c_str()).coordinates();
  CHECK(e.is_zero(e.boundary(z1)));
  CHECK(e.is_zero(e.boundary(z2)));
  const auto w = e.wedge(z1, z2);
  CHECK(e.is_zero(e.boundary(w)));
  CHECK_FALSE(e.is_zero(w));
  CHECK(e.is_zero(e.add(e.wedge(z1, z2), e.wedge(z2, z1))));
}

TEST_CASE("qci certificate for the running example") {
  auto ex = make_example_b(PrimeField(101));
  const auto res = qci_check<PrimeField>(ex.ring, {ex.f1, ex.f2});
  REQUIRE(res.certified);
  const auto& c = res.certificate;
  CHECK(c.grade == 0);
  CHECK(c.nu_ideal == 2);
  CHECK(c.nu_h1 == 2);
  CHECK(c.h1_free);
  CHECK(c.entries_in_m);
  REQUIRE(c.delta);
  // Delta is determined up to a unit; compare the ideals it generates.
  const auto pinned = E(ex.ring, "x1*x2 - x1*x3 - x1*x4 + x2*x3 + x2*x4 - x3*x5");
  CHECK(RingIdeal<PrimeField>::generated_by(ex.ring, {*c.delta}) ==
        RingIdeal<PrimeField>::generated_by(ex.ring, {pinned}));
  CHECK(RingIdeal<PrimeField>::maximal_power(ex.ring, 2).contains(*c.delta));
  CHECK_FALSE(RingIdeal<PrimeField>::maximal_power(ex.ring, 3).contains(*c.delta));
  CHECK(*c.delta_in_m_power);
  CHECK(*c.annihilator_of_ideal_is_delta);
  CHECK(*c.annihilator_of_delta_is_ideal);
  CHECK(*c.h1_dimension_formula);
  CHECK(*c.multiplication_by_delta);
}

TEST_CASE("pinned determinant over the rationals") {
  auto ex = make_example_b(RationalField{});
  const auto& abcd = example_b_cycle_entries();
  const auto a = E(ex.ring, abcd[0].c_str()), b = E(ex.ring, abcd[1].c_str());
  const auto c = E(ex.ring, abcd[2].c_str()), d = E(ex.ring, abcd[3].c_str());
  CHECK((a * d - b * c) == E(ex.ring, "x1*x2 - x1*x3 - x1*x4 + x2*x3 + x2*x4 - x3*x5"));
  CHECK(two_generated_criterion(ex.f1, ex.f2, a, b, c, d));
  const auto zero = RingElement<RationalField>::zero(ex.ring);
  CHECK_FALSE(two_generated_criterion(ex.f1, ex.f2, zero, zero, zero, zero));
}

TEST_CASE("two-generated criterion on a complete intersection") {
  auto R = make_square_ci(PrimeField(101), 2);
  const auto x = E(R, "x1"), y = E(R, "x2"), zero = RingElement<PrimeField>::zero(R);
  CHECK(two_generated_criterion(x, y, x, zero, zero, y));
  CHECK_FALSE(two_generated_criterion(x, y, zero, zero, zero, zero));
  CHECK_THROWS_AS(two_generated_criterion(x, y, RingElement<PrimeField>::one(R), zero, zero, y), Error);
}

TEST_CASE("refutations and preconditions") {
  auto ex = make_example_b(PrimeField(101));
  const auto res = qci_check<PrimeField>(ex.ring, {E(ex.ring, "x4")});
  CHECK_FALSE(res.certified);
  CHECK_FALSE(res.refutation.empty());

  auto R = make_quotient(PrimeField(101), 1, {"x1^3"});
  KoszulComplex<PrimeField> e(R, {E(R, "x1")});
  const auto rep = homology_report(e);
  CHECK(rep.table.total_h(1) == 1);
  CHECK(qci_check<PrimeField>(R, {E(R, "x1")}).certified);

  // ann(x1) = m^2 needs two generators; H_1 looks free up to the top degree
  // of the complex but not beyond it.
  auto S = make_quotient(PrimeField(101), 2, {"x1^3", "-18*x1^2*x2 + x2^3", "29*x1^2 + 35*x2^2"});
  const auto top = qci_check<PrimeField>(S, {E(S, "x1")});
  CHECK_FALSE(top.certified);
  CHECK(top.certificate.nu_h1 == 2);
  CHECK_FALSE(top.certificate.h1_free);

  try {
    KoszulComplex<PrimeField> bad(ex.ring, {ex.f1, ex.f2, ex.f1 + ex.f2});
    FAIL("expected not_minimal");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::not_minimal);
  }
  KoszulComplex<PrimeField> loose(ex.ring, {ex.f1, ex.f2, ex.f1 + ex.f2}, false);
  CHECK(loose.length() == 3);
  CHECK_THROWS_AS(KoszulComplex<PrimeField>(ex.ring, {RingElement<PrimeField>::one(ex.ring)}), Error);
  CHECK_THROWS_AS(KoszulComplex<PrimeField>(ex.ring, {E(ex.ring, "x1 + x2^2")}), Error);
}

TEST_CASE("grade of ideals") {
  auto R = make_square_ci(RationalField{}, 2);
  CHECK(grade(RingIdeal<RationalField>::generated_by(R, {E(R, "x1"), E(R, "x2")})) == 0);
  CHECK_THROWS_AS(grade(RingIdeal<RationalField>::zero(R)), Error);
}

TEST_CASE("no exact zero-divisors in I over F5") {
  auto ex = make_example_b(PrimeField(5));
  EzdOptions opt;
  opt.inside_ideal = true;
  opt.max_degree = 2;
  const auto res = ezd_search<PrimeField>(ex.ring, {ex.f1, ex.f2}, opt);
  CHECK(res.pairs.empty());
  // I_1 has dim 2 and I_2 = B_2 has dim 7.
  CHECK(res.candidates == 6 + 19531);
}

TEST_CASE("exact zero-divisors exist in k[x1,x2]/(x1^2,x2^2)") {
  auto R = make_square_ci(PrimeField(3), 2);
  EzdOptions opt;
  const auto res = ezd_search<PrimeField>(R, {}, opt);
  // x1 + b x2 is exact for every b: (0 : x1 + b x2) = (x1 - b x2).
  CHECK(res.candidates == 4);
  CHECK(res.pairs.size() == 4);
  CHECK_THROWS_AS(ezd_search<RationalField>(make_square_ci(RationalField{}, 2), {}, opt), Error);
}

TEST_CASE("symbolic factorization obstruction") {
  auto ex = make_example_b(RationalField{});
  const auto obs = ezd_symbolic<RationalField>(ex.ring, {ex.f1, ex.f2});
  REQUIRE(obs.exponent);
  CHECK(*obs.exponent == 2);
  CHECK(obs.product_ideal.size() == 10);
  const auto& S = obs.parameters;
  std::vector<Polynomial<RationalField>> seven;
  for (const auto& s : example_b_symbolic_expressions()) seven.push_back(parse_polynomial(S, s));
  // Same ideal as the hand derivation.
  const auto mine = buchberger(S, obs.expressions);
  const auto theirs = buchberger(S, seven);
  for (const auto& p : seven) CHECK(mine.contains(p));
  for (const auto& p : obs.expressions) CHECK(theirs.contains(p));
}
