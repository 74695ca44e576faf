#include <doctest.h>

#include "qci/examples.hpp"
#include "qci/error.hpp"
#include "qci/groebner.hpp"

using namespace qci;

namespace {

template <Field K>
std::vector<Polynomial<K>> parse_all(const RingPtr<K>& r, const std::vector<std::string>& s) {
  std::vector<Polynomial<K>> out;
  for (const auto& t : s) out.push_back(parse_polynomial(r, t));
  return out;
}

template <Field K>
std::vector<std::string> strings(const std::vector<Monomial>& ms, const RingPtr<K>& r) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string(r->names()));
  return out;
}

}  // namespace

TEST_CASE_TEMPLATE("the relations of B are their own reduced basis", K, PrimeField, RationalField) {
  K field = [] {
    if constexpr (std::same_as<K, PrimeField>) return PrimeField(101);
    else return RationalField{};
  }();
  auto R = make_polynomial_ring(field, 5);
  auto c = parse_all(R, example_b_relations());
  auto gb = buchberger(R, c, BuchbergerOptions{.chain_criterion = false});
  REQUIRE(gb.generators().size() == 8);
  for (const auto& g : gb.generators()) {
    bool found = false;
    for (const auto& f : c) found = found || (f.monic() == g);
    CHECK(found);
  }
  // Only two S-pairs survive the monomial and coprime criteria.
  CHECK(gb.stats().reduced == 2);
  CHECK(gb.stats().reduced_to_zero == 2);
  auto lm = [&](const char* s) { return parse_polynomial(R, s).leading_monomial(); };
  const auto& rp = gb.stats().reduced_pairs;
  auto has = [&](const Monomial& a, const Monomial& b) {
    for (const auto& [x, y] : rp)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  CHECK(has(lm("x3*x4"), lm("x3^2")));
  CHECK(has(lm("x2*x5"), lm("x2^2")));

  CHECK(strings(gb.standard_monomials(2), R) ==
        std::vector<std::string>{"x1*x2", "x1*x3", "x2*x3", "x1*x4", "x2*x4", "x1*x5", "x3*x5"});
  CHECK(strings(gb.standard_monomials(3), R) == std::vector<std::string>{"x1*x2*x3", "x1*x2*x4", "x1*x3*x5"});
  CHECK(gb.standard_monomials(4).empty());

  CHECK(gb.normal_form(parse_polynomial(R, "x2^2")) == parse_polynomial(R, "x3*x5"));
  for (const auto& f : c) CHECK(gb.normal_form(f).is_zero());
  auto delta = parse_polynomial(R, "(x1-x2)*(x2-x3-x4) - x4*(-x3+x4+2*x5)");
  CHECK(gb.normal_form(delta) == parse_polynomial(R, "x1*x2 - x1*x3 - x1*x4 + x2*x3 + x2*x4 - x3*x5"));

  // With the chain criterion on, the result is the same basis.
  auto gb2 = buchberger(R, c);
  CHECK(gb2.generators() == gb.generators());
}

TEST_CASE("basic bases") {
  auto R = make_polynomial_ring(PrimeField(101), 2);
  auto gb = buchberger(R, parse_all(R, {"x1"}));
  CHECK(gb.generators().size() == 1);
  CHECK(gb.generators()[0] == parse_polynomial(R, "x1"));
  auto gb2 = buchberger(R, parse_all(R, {"x1^2-x2^2", "x1*x2"}));
  CHECK(gb2.contains(parse_polynomial(R, "x2^3")));
  CHECK(gb2.generators().size() == 3);
  // Fixed point.
  auto gb3 = buchberger(R, gb2.generators());
  CHECK(gb3.generators() == gb2.generators());
  CHECK(buchberger(R, parse_all(R, {"x1+1", "x1"})).is_unit_ideal());
}

TEST_CASE("lex basis") {
  auto R = make_polynomial_ring(RationalField{}, 3, MonomialOrder::lex);
  auto gb = buchberger(R, parse_all(R, {"x1^2+x2+x3-1", "x1+x2^2+x3-1", "x1+x2+x3^2-1"}));
  // The last element of a lex basis of a zero-dimensional ideal is univariate in x3.
  const auto& last = gb.generators().front();
  for (const auto& t : last.terms()) CHECK(t.monomial.support() == (t.monomial.is_one() ? 0u : 4u));
  CHECK(last.total_degree() == 6);
}

TEST_CASE("irrelevant primary") {
  auto R = make_polynomial_ring(PrimeField(101), 4);
  auto r = is_irrelevant_primary(parse_all(R, {"x1^2", "x2^2", "x3^2", "x4^2"}));
  CHECK(r.primary);
  CHECK(r.witness_degree == 5);
  auto R3 = make_polynomial_ring(PrimeField(101), 3);
  auto s = is_irrelevant_primary(parse_all(R3, {"x1", "x2"}));
  CHECK_FALSE(s.primary);
  CHECK(s.ray_variable == 2);
  CHECK_THROWS_AS(is_irrelevant_primary(parse_all(R3, {"x1+1"})), Error);
}

TEST_CASE("minimal generator classification") {
  auto R = make_polynomial_ring(PrimeField(101), 5);
  auto c = parse_all(R, example_b_relations());
  CHECK(minimal_generator_test(parse_polynomial(R, "x1^2-x2*x3"), c) == GeneratorClass::minimal_generator);
  CHECK(minimal_generator_test(parse_polynomial(R, "x1*(x1^2-x2*x3)"), c) == GeneratorClass::in_m_times_ideal);
  CHECK(minimal_generator_test(parse_polynomial(R, "(x1+x2+x4)*(x2+x3+x5)"), c) ==
        GeneratorClass::not_in_ideal);
}

TEST_CASE("containment") {
  auto R = make_polynomial_ring(RationalField{}, 1);
  CHECK(ideal_containment(parse_all(R, {"x1^2"}), parse_all(R, {"x1"})));
  CHECK_FALSE(ideal_containment(parse_all(R, {"x1"}), parse_all(R, {"x1^2"})));
}
