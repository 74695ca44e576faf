#include <doctest.h>

#include "qci/error.hpp"
#include "qci/examples.hpp"
#include "qci/homotopy.hpp"

using namespace qci;

namespace {

using Sizes = std::vector<std::size_t>;
using Longs = std::vector<long>;

}  // namespace

TEST_CASE("power series arithmetic") {
  const auto h = PowerSeries::polynomial({1, 2, 1}, 6);
  const auto inv = h.inverse();
  CHECK((h * inv) == PowerSeries::polynomial({1}, 6));
  CHECK(poincare_from_koszul(PowerSeries::polynomial({1, 2, 1}, 3), 5).integers() == Longs{1, 2, 3, 4, 5});
  CHECK(poincare_from_koszul(PowerSeries::polynomial({1, 1}, 2), 5).integers() == Longs{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(poincare_from_koszul(PowerSeries::polynomial({2, 1}, 2), 5), Error);
  CHECK_THROWS_AS(PowerSeries::polynomial({0, 1}, 3).inverse(), Error);
  CHECK(PowerSeries::polynomial({1, -5, 7}, 4).to_string() == "1 - 5z + 7z^2 + O(z^4)");
}

TEST_CASE("Poincare series and deviations of B") {
  const auto p = poincare_from_koszul(PowerSeries::polynomial({1, 5, 7, 3}, 4), 8);
  const auto c = p.integers();
  CHECK(Longs(c.begin(), c.begin() + 4) == Longs{1, 5, 18, 58});
  const auto eps = deviations(p, 3);
  CHECK(eps == Longs{5, 8, 8});
  const auto all = deviations(p, 7);
  CHECK(series_from_deviations(all, 8) == p);
}

TEST_CASE("deviations of simple series") {
  CHECK(deviations(PowerSeries::polynomial({1, 1, 1, 1, 1, 1}, 6), 5) == Longs{1, 1, 0, 0, 0});
  CHECK(deviations(PowerSeries::polynomial({1}, 6), 5) == Longs{0, 0, 0, 0, 0});
  CHECK_THROWS_AS(deviations(PowerSeries({1, mpq_class(1, 2)}, 3), 2), Error);
  CHECK_THROWS_AS(deviations(PowerSeries::polynomial({1}, 2), 4), Error);
}

TEST_CASE("quadratic dual of B") {
  auto ex = make_example_b(RationalField{});
  const auto d = QuadraticDual<RationalField>::build(ex.polynomials, ex.relations);
  CHECK(d.dims() == Sizes{5, 18, 58});
  CHECK(d.check_associativity());
  const auto z = degree2_center(d);
  CHECK(z.dim == 1);
  // The square of the first dual generator is central.
  const auto sq = d.multiply11(0, 0);
  REQUIRE(z.basis.size() == 1);
  bool proportional = true;
  std::size_t lead = 0;
  while (lead < sq.size() && sgn(sq[lead]) == 0) ++lead;
  REQUIRE(lead < sq.size());
  const auto ratio = z.basis[0][lead] / sq[lead];
  for (std::size_t i = 0; i < sq.size(); ++i) proportional = proportional && z.basis[0][i] == ratio * sq[i];
  CHECK(proportional);
}

TEST_CASE("quadratic duals of small algebras") {
  PrimeField f(101);
  auto p1 = make_polynomial_ring(f, 1);
  auto d1 = QuadraticDual<PrimeField>::build(p1, {parse_polynomial(p1, "x1^2")});
  CHECK(d1.dims() == Sizes{1, 1, 1});
  CHECK(degree2_center(d1).dim == 1);
  auto p2 = make_polynomial_ring(f, 2);
  CHECK(QuadraticDual<PrimeField>::build(p2, {}).dims() == Sizes{2, 1, 0});
  auto ci = QuadraticDual<PrimeField>::build(p2, {parse_polynomial(p2, "x1^2"), parse_polynomial(p2, "x2^2")});
  CHECK(ci.dims() == Sizes{2, 3, 4});
  CHECK(degree2_center(ci).dim == 2);
  CHECK_THROWS_AS(QuadraticDual<PrimeField>::build(p2, {parse_polynomial(p2, "x1^3")}), Error);
  auto p3 = make_polynomial_ring(PrimeField(3), 1);
  CHECK_THROWS_AS(degree2_center(QuadraticDual<PrimeField>::build(p3, {parse_polynomial(p3, "x1^2")})), Error);
  auto p5 = make_polynomial_ring(PrimeField(2), 1);
  CHECK_THROWS_AS(QuadraticDual<PrimeField>::build(p5, {parse_polynomial(p5, "x1^2")}), Error);
}

TEST_CASE("Hilbert series duality for Koszul algebras") {
  auto ex = make_example_b(PrimeField(101));
  const auto d = QuadraticDual<PrimeField>::build(ex.polynomials, ex.relations);
  const auto h = PowerSeries::polynomial({1, 5, 7, 3}, 4).alternate();
  const auto dims = d.dims();
  const auto dual = PowerSeries::polynomial({1, long(dims[0]), long(dims[1]), long(dims[2])}, 4);
  CHECK((h * dual) == PowerSeries::polynomial({1}, 4));
}

TEST_CASE("residue field resolutions") {
  PrimeField f(101);
  auto a = make_quotient(f, 1, {"x1^2"});
  const auto t = residue_field_resolution(a, 4);
  CHECK(t.totals() == Sizes{1, 1, 1, 1, 1});
  for (int i = 0; i <= 4; ++i) CHECK(t.at(i, i) == 1);
  auto ex = make_example_b(f);
  CHECK(residue_field_resolution(ex.ring, 3).totals() == Sizes{1, 5, 18, 58});
  CHECK(is_koszul_up_to(ex.ring, 4));
  CHECK_FALSE(is_koszul_up_to(make_quotient(f, 1, {"x1^3"}), 2));
  CHECK(is_koszul_up_to(make_square_ci(f, 2), 4));
}

TEST_CASE("Tate pattern of B/I") {
  auto ex = make_example_b(PrimeField(101));
  const auto i = RingIdeal<PrimeField>::generated_by(ex.ring, {ex.f1, ex.f2});
  CHECK(minimal_resolution(i, 4).totals() == Sizes{1, 2, 3, 4, 5});
  // Principal ideal generated by an exact zero-divisor: periodic resolution.
  auto r = make_square_ci(PrimeField(101), 2);
  const auto x = RingElement<PrimeField>::parse(r, "x1+x2");
  CHECK(minimal_resolution(RingIdeal<PrimeField>::generated_by(r, {x}), 5).totals() == Sizes{1, 1, 1, 1, 1, 1});
}

TEST_CASE("internal degree bound marks tables incomplete") {
  auto ex = make_example_b(PrimeField(101));
  const auto t = minimal_resolution(RingIdeal<PrimeField>::maximal_power(ex.ring, 1), 3, 2);
  CHECK_FALSE(t.complete);
  CHECK(t.at(1, 1) == 5);
  CHECK(t.at(2, 2) == 18);
  CHECK(t.to_string().find("total:") != std::string::npos);
}

TEST_CASE("ambient betti numbers") {
  CHECK(ambient_betti(make_example_b(RationalField{}).ring) == Sizes{1, 8, 20, 23, 13, 3});
  for (std::uint32_t p : {101u, 32003u})
    CHECK(ambient_betti(make_example_b(PrimeField(p)).ring) == Sizes{1, 8, 20, 23, 13, 3});
  PrimeField f(101);
  CHECK(ambient_betti(make_quotient(f, 1, {"x1^2"})) == Sizes{1, 1});
  CHECK(ambient_betti(make_quotient(f, 2, {"x1^2", "x1*x2", "x2^2"})) == Sizes{1, 3, 2});
  CHECK(is_complete_intersection(make_square_ci(f, 2)));
  CHECK_FALSE(is_complete_intersection(make_example_b(f).ring));
  CHECK_FALSE(is_complete_intersection(make_quotient(f, 2, {"x1^2", "x1*x2", "x2^2"})));
  CHECK_THROWS_AS(is_complete_intersection(make_quotient(f, 2, {"x1", "x2^2"})), Error);
}

TEST_CASE("embeddedness obstruction") {
  PrimeField f(101);
  auto ex = make_example_b(f);
  const auto cert = qci_check<PrimeField>(ex.ring, {ex.f1, ex.f2}).certificate;
  const auto rep = embeddedness_obstruction(ex.ring, cert);
  CHECK(rep.verdict == Embeddedness::not_embedded);
  CHECK(rep.center_dim == 1);
  CHECK(rep.complexity == 2);

  auto a = make_quotient(f, 1, {"x1^2"});
  const auto c1 = qci_check<PrimeField>(a, {RingElement<PrimeField>::variable(a, 0)}).certificate;
  CHECK(embeddedness_obstruction(a, c1).verdict == Embeddedness::inconclusive);

  auto ci = make_square_ci(f, 2);
  const auto c2 = qci_check<PrimeField>(ci, {RingElement<PrimeField>::variable(ci, 0),
                                             RingElement<PrimeField>::variable(ci, 1)}).certificate;
  const auto r2 = embeddedness_obstruction(ci, c2);
  CHECK(r2.verdict == Embeddedness::inconclusive);
  CHECK(r2.center_dim == 2);

  auto cubic = make_quotient(f, 1, {"x1^3"});
  const auto c3 = qci_check<PrimeField>(cubic, {RingElement<PrimeField>::variable(cubic, 0)}).certificate;
  CHECK_THROWS_AS(embeddedness_obstruction(cubic, c3), Error);
}

TEST_CASE("Loewy bounds") {
  PrimeField f(101);
  auto ex = make_example_b(f);
  const auto rep = loewy_check(RingIdeal<PrimeField>::generated_by(ex.ring, {ex.f1, ex.f2}));
  CHECK(rep.loewy_length == 4);
  CHECK(rep.nu_ideal == 2);
  CHECK(rep.nu_maximal == 5);
  CHECK(rep.nu_top_power == 3);
  CHECK_FALSE(rep.quotient_complete_intersection);
  REQUIRE(rep.bound3);
  CHECK(*rep.bound3);
  CHECK(rep.all_hold());
  for (int n = 1; n <= 3; ++n) {
    auto ci = make_square_ci(f, n);
    const auto r = loewy_check(RingIdeal<PrimeField>::maximal_power(ci, 1));
    CHECK(r.loewy_length == n + 1);
    CHECK(r.nu_ideal == static_cast<std::size_t>(n));
    CHECK(r.quotient_complete_intersection);
    CHECK(r.all_hold());
  }
}
