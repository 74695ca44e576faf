#include <doctest.h>

#include "qci/error.hpp"
#include "qci/examples.hpp"
#include "qci/generic.hpp"

using namespace qci;

namespace {

using FP = PrimeField;

std::vector<Polynomial<FP>> parse_all(const RingPtr<FP>& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial<FP>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

bool proportional(const Polynomial<FP>& a, const Polynomial<FP>& b) {
  return !a.is_zero() && a.monic() == b.monic();
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal_inconsistency;
}

}  // namespace

TEST_CASE("quadric sampling is reproducible") {
  FP f(101);
  const auto a = sample_quadrics(5, f, 1);
  const auto b = sample_quadrics(5, f, 1);
  REQUIRE(a.forms.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(a.forms[i] == b.forms[i]);
  const auto c = sample_quadrics(5, f, 2);
  bool same = true;
  for (std::size_t i = 0; i < 5; ++i) same = same && a.forms[i] == c.forms[i];
  if (same) WARN("distinct seeds produced the same sequence");
  const auto one = sample_quadrics(1, f, 7);
  REQUIRE(one.forms.size() == 1);
  CHECK(one.forms[0].size() <= 1);
  CHECK(code_of([] { sample_quadrics(3, FP(2), 1); }) == ErrorCode::unsupported_characteristic);
}

TEST_CASE("regular sequences") {
  FP f(101);
  for (int n = 1; n <= 4; ++n) {
    auto r = make_polynomial_ring(f, n);
    std::vector<Polynomial<FP>> sq;
    for (int i = 0; i < n; ++i) sq.push_back(Polynomial<FP>::variable(r, i).power(2));
    CHECK(is_regular_sequence(sq));
  }
  auto r2 = make_polynomial_ring(f, 2);
  CHECK_FALSE(is_regular_sequence(parse_all(r2, {"x1^2", "x1*x2"})));
  auto r3 = make_polynomial_ring(f, 3);
  CHECK(is_regular_sequence(parse_all(r3, {"x1^2", "x2^3", "x3^2 + x1*x2"})));
  CHECK_THROWS_AS(is_regular_sequence(parse_all(r3, {"x1^2", "x2^2"})), Error);
}

TEST_CASE("regularity agrees with the Groebner staircase") {
  FP f(101);
  int irregular = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(t % 5);
    auto s = sample_quadrics(n, f, 99, t);
    // Every third trial gets a repeated form, which cannot be regular.
    if (t % 3 == 0 && n >= 2) s.forms[1] = s.forms[0].scale(3);
    const bool reg = is_regular_sequence(s.forms);
    CHECK(reg == is_irrelevant_primary(s.forms).primary);
    if (!reg) ++irregular;
  }
  CHECK(irregular > 0);
}

TEST_CASE("hessian rank irreducibility") {
  FP f(101);
  auto r3 = make_polynomial_ring(f, 3);
  CHECK_FALSE(quadric_irreducible(parse_polynomial(r3, "x1*x2")));
  CHECK_FALSE(quadric_irreducible(parse_polynomial(r3, "x1^2")));
  CHECK(quadric_irreducible(parse_polynomial(r3, "x1^2 - x2*x3")));
  auto r2 = make_polynomial_ring(f, 2);
  CHECK_FALSE(quadric_irreducible(parse_polynomial(r2, "x1^2 + x2^2")));
  CHECK(code_of([&] { quadric_irreducible(parse_polynomial(r3, "x1^3")); }) == ErrorCode::not_quadratic);
  auto c2 = make_polynomial_ring(FP(2), 3);
  CHECK(code_of([&] { quadric_irreducible(parse_polynomial(c2, "x1*x2 + x3^2")); }) ==
        ErrorCode::unsupported_characteristic);
}

TEST_CASE("factoring rank 2 quadrics") {
  FP f(101);
  auto r = make_polynomial_ring(f, 3);
  const auto diff = factor_rank2_quadric(parse_polynomial(r, "x1^2 - x2^2"));
  REQUIRE(diff.factors);
  const auto l1 = diff.factors->first, l2 = diff.factors->second;
  const auto m = parse_polynomial(r, "x1 - x2"), p = parse_polynomial(r, "x1 + x2");
  CHECK(((proportional(l1, m) && proportional(l2, p)) || (proportional(l1, p) && proportional(l2, m))));

  const auto mono = factor_rank2_quadric(parse_polynomial(r, "x1*x2"));
  REQUIRE(mono.factors);
  const auto a = parse_polynomial(r, "x1"), b = parse_polynomial(r, "x2");
  CHECK(((proportional(mono.factors->first, a) && proportional(mono.factors->second, b)) ||
         (proportional(mono.factors->first, b) && proportional(mono.factors->second, a))));

  const auto sq = factor_rank2_quadric(parse_polynomial(r, "4*x1^2 + 4*x1*x3 + x3^2"));
  REQUIRE(sq.factors);
  CHECK(proportional(sq.factors->first, parse_polynomial(r, "2*x1 + x3")));

  // Random products of two linear forms multiply back.
  Rng rng = derived_stream(5, 0);
  for (int t = 0; t < 20; ++t) {
    std::vector<FP::Element> c1(3), c2(3);
    for (auto& c : c1) c = static_cast<FP::Element>(uniform_below(rng, 101));
    for (auto& c : c2) c = static_cast<FP::Element>(uniform_below(rng, 101));
    const auto q = linear_form(r, c1) * linear_form(r, c2);
    if (q.is_zero()) continue;
    const auto fac = factor_rank2_quadric(q);
    REQUIRE(fac.factors);
    CHECK(fac.factors->first * fac.factors->second == q);
  }

  // -1 is a non-square mod 103.
  auto r103 = make_polynomial_ring(FP(103), 2);
  const auto irr = factor_rank2_quadric(parse_polynomial(r103, "x1^2 + x2^2"));
  CHECK_FALSE(irr.factors);
  CHECK(irr.extension_needed);
  auto rq = make_polynomial_ring(RationalField{}, 2);
  CHECK(factor_rank2_quadric(parse_polynomial(rq, "x1^2 - 2*x2^2")).extension_needed);
  const auto rat = factor_rank2_quadric(parse_polynomial(rq, "x1^2 - 4*x2^2"));
  REQUIRE(rat.factors);
  CHECK(rat.factors->first * rat.factors->second == parse_polynomial(rq, "x1^2 - 4*x2^2"));
  CHECK(code_of([&] { factor_rank2_quadric(parse_polynomial(r, "x1^2 + x2^2 + x3^2")); }) == ErrorCode::not_quadratic);
}

TEST_CASE("quadric over a quadratic extension") {
  FP f(103);
  auto r = make_polynomial_ring(f, 2);
  Rng rng = derived_stream(3, 0);
  const auto ext = ExtensionField::random(103, 2, rng);
  auto er = make_polynomial_ring(ext, 2);
  const auto q = lift_to_extension(parse_polynomial(r, "x1^2 + x2^2"), er);
  const auto fac = factor_rank2_quadric(q);
  REQUIRE(fac.factors);
  CHECK(fac.factors->first * fac.factors->second == q);
}

TEST_CASE("pencil search") {
  FP f(101);
  auto r2 = make_polynomial_ring(f, 2);
  const auto ci = parse_all(r2, {"x1^2", "x2^2"});
  const auto en = pencil_reducible_search(ci, PencilMode::enumerate);
  REQUIRE(en.witness);
  CHECK(*en.witness == std::vector<FP::Element>{1, 0});
  CHECK(pencil_reducible_search(ci, PencilMode::exact).exists);

  for (std::uint64_t t = 0; t < 6; ++t) {
    const int n = 2 + static_cast<int>(t % 3);
    const auto s = sample_quadrics(n, f, 11, t);
    const auto ex = pencil_reducible_search(s.forms, PencilMode::exact);
    CHECK(ex.exists);
    CHECK_FALSE(ex.witness);
    if (n <= 3) {
      const auto e2 = pencil_reducible_search(s.forms, PencilMode::enumerate);
      CHECK(e2.exists == ex.exists);
    }
  }

  auto r5 = make_polynomial_ring(f, 5);
  const auto w5 = witness_quadrics(r5, 5);
  // x1^2 occurs in none of them, so the point (1, 0, 0, 0, 0) is a common zero.
  CHECK_FALSE(is_regular_sequence(w5));
  CHECK_FALSE(pencil_reducible_search(w5, PencilMode::exact).exists);
}

TEST_CASE("witness matrices") {
  FP f(101);
  for (int n = 2; n <= 5; ++n) {
    auto w = make_polynomial_ring(f, n);
    auto x = make_polynomial_ring(f, n);
    CHECK(pencil_matrix(witness_quadrics(x, n), w) == witness_matrix(w, n));
  }
  auto x5 = make_polynomial_ring(f, 5);
  CHECK(witness_quadrics(x5, 5)[0] == parse_polynomial(x5, "x1*x3 + 1/2*x2^2"));
  CHECK(witness_quadrics(x5, 5)[1] == parse_polynomial(x5, "x1*x4 + x2*x3"));
  CHECK_FALSE(witness_matrix_check(f, 4));
  CHECK(witness_matrix_check(f, 5));
  CHECK(witness_matrix_check(f, 6));
  CHECK(witness_matrix_check(RationalField{}, 5));
}

TEST_CASE("exact pairs from reducible pencil elements") {
  FP f(101);
  auto r1 = make_polynomial_ring(f, 1);
  const auto p1 = build_exact_pair(parse_all(r1, {"x1^2"}), {1});
  CHECK(p1.x == RingElement<FP>::variable(p1.ring, 0).scale(p1.x.coordinates()[1]));
  CHECK(proportional(p1.l1, p1.l2));

  auto r2 = make_polynomial_ring(f, 2);
  const auto ci = parse_all(r2, {"x1^2", "x2^2"});
  const auto p2 = build_exact_pair(ci, {1, 1});
  CHECK(p2.pencil_element == parse_polynomial(r2, "x1^2 + x2^2"));
  CHECK(p2.l1 * p2.l2 == p2.pencil_element);
  CHECK(annihilator(p2.x) == RingIdeal<FP>::generated_by(p2.ring, {p2.y}));
  const auto p3 = build_exact_pair(ci, {1, 0});
  CHECK(proportional(p3.l1, parse_polynomial(r2, "x1")));

  auto r3 = make_polynomial_ring(f, 3);
  const auto sq3 = parse_all(r3, {"x1^2", "x2^2", "x3^2"});
  CHECK(code_of([&] { build_exact_pair(sq3, {1, 1, 1}); }) == ErrorCode::not_quadratic);
  CHECK(code_of([&] { build_exact_pair(sq3, {0, 0, 0}); }) == ErrorCode::invalid_argument);
  auto r103 = make_polynomial_ring(FP(103), 2);
  CHECK(code_of([&] { build_exact_pair(parse_all(r103, {"x1^2", "x2^2"}), {1, 1}); }) ==
        ErrorCode::unsupported_mode);
}

TEST_CASE("pencil points over extensions") {
  FP f(101);
  const auto s = sample_quadrics(4, f, 21, 0);
  Rng rng = derived_stream(21, 1000);
  const auto pt = pencil_point_over_extension(s.forms, rng);
  REQUIRE(pt);
  CHECK(pt->field.degree() == 2 * pt->residue_degree);
  auto er = make_polynomial_ring(pt->field, 4);
  std::vector<Polynomial<ExtensionField>> lifted;
  for (const auto& g : s.forms) lifted.push_back(lift_to_extension(g, er));
  const auto pair = build_exact_pair(lifted, pt->b);
  CHECK(pair.l1 * pair.l2 == pair.pencil_element);
  CHECK(minimal_generator_test(pair.pencil_element, lifted) == GeneratorClass::minimal_generator);
}

TEST_CASE("linear exact zero-divisor sieve matches brute force") {
  for (int trial = 0; trial < 3; ++trial) {
    FP f(7);
    QuotientPtr<FP> ring;
    if (trial == 0) {
      ring = make_square_ci(f, 3);
    } else {
      auto s = sample_quadrics(3, f, 40, static_cast<std::uint64_t>(trial));
      while (!is_regular_sequence(s.forms)) s = sample_quadrics(3, f, 41, static_cast<std::uint64_t>(trial));
      ring = QuotientRing<FP>::build(s.ring, s.forms);
    }
    Rng rng = derived_stream(8, static_cast<std::uint64_t>(trial));
    const auto sieve = linear_exact_zero_divisors(ring, rng);
    CHECK(sieve.candidates == 57);
    std::size_t brute = 0;
    const std::size_t b1 = ring->begin(1);
    for (std::uint64_t idx = 1; idx < 343; ++idx) {
      std::vector<FP::Element> c{FP::Element(idx / 49), FP::Element(idx / 7 % 7), FP::Element(idx % 7)};
      std::size_t lead = 0;
      while (c[lead] == 0) ++lead;
      if (c[lead] != 1) continue;
      auto v = ring->zero_vector();
      for (std::size_t i = 0; i < 3; ++i) v[b1 + i] = c[i];
      if (is_exact_zero_divisor(RingElement<FP>(ring, v))) ++brute;
    }
    CHECK(sieve.pairs.size() == brute);
    CHECK(brute > 0);
    for (const auto& p : sieve.pairs) CHECK(annihilator(p.x) == RingIdeal<FP>::generated_by(ring, {p.y}));
  }
}

TEST_CASE("generic experiment") {
  const auto r1 = run_experiment(1, 101, 4, 1);
  CHECK(r1.pairs_verified == 4);
  const auto r3 = run_experiment(3, 101, 5, 1);
  CHECK(r3.regular == 5);
  CHECK(r3.pairs_verified == 5);
  for (const auto& t : r3.trials) {
    CHECK(t.x_test_reducible == std::optional<bool>(true));
    CHECK(t.x);
  }
  const auto again = run_experiment(3, 101, 5, 1);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(again.trials[i].forms == r3.trials[i].forms);
    CHECK(again.trials[i].x == r3.trials[i].x);
  }
  const auto r4 = run_experiment(4, 101, 2, 3);
  CHECK(r4.pairs_verified == 2);
  ExperimentOptions quick;
  quick.linear_search = false;
  const auto r5 = run_experiment(5, 101, 3, 1, quick);
  CHECK(r5.regular == 3);
  CHECK(r5.anomalies == 0);
  CHECK(code_of([] { run_experiment(3, 2, 1, 1); }) == ErrorCode::unsupported_characteristic);
}
