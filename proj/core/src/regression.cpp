#include "qci/regression.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "qci/error.hpp"
#include "qci/examples.hpp"
#include "qci/generic.hpp"
#include "qci/homotopy.hpp"
#include "qci/koszul.hpp"
#include "qci/properties.hpp"

namespace qci {

namespace {

using FP = PrimeField;
using QQ = RationalField;
using Sizes = std::vector<std::size_t>;

class Checks {
 public:
  explicit Checks(CriterionResult& r) : r_(r) {}
  bool expect(bool ok, const std::string& what) {
    r_.details.push_back((ok ? "ok    " : "FAIL  ") + what);
    r_.pass = r_.pass && ok;
    return ok;
  }
  void note(const std::string& what) { r_.details.push_back("note  " + what); }

 private:
  CriterionResult& r_;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

template <Field K>
std::vector<RingElement<K>> parse_elements(const QuotientPtr<K>& r, const std::vector<std::string>& s) {
  std::vector<RingElement<K>> out;
  for (const auto& t : s) out.push_back(RingElement<K>::parse(r, t));
  return out;
}

template <Field K>
void hilbert_of_b(Checks& c, const K& field) {
  const auto ex = make_example_b(field);
  const auto h = ex.ring->hilbert_series();
  c.expect(h == Sizes{1, 5, 7, 3}, "H_B over " + field.name() + " = " + join(h));
  const auto hq = quotient_by(ex.ring, {ex.f1, ex.f2})->hilbert_series();
  c.expect(hq == Sizes{1, 3}, "H_B/I over " + field.name() + " = " + join(hq));
}

void criterion1(Checks& c) {
  hilbert_of_b(c, QQ{});
  for (std::uint32_t p : {5u, 101u, 32003u}) hilbert_of_b(c, FP(p));
}

template <Field K>
void groebner_fixed_point(Checks& c, const K& field) {
  auto r = make_polynomial_ring(field, 5);
  std::vector<Polynomial<K>> rel;
  for (const auto& s : example_b_relations()) rel.push_back(parse_polynomial(r, s));
  const auto gb = buchberger(r, rel, BuchbergerOptions{.chain_criterion = false});
  bool same = gb.generators().size() == rel.size();
  for (const auto& g : gb.generators()) {
    bool found = false;
    for (const auto& f : rel) found = found || f.monic() == g;
    same = same && found;
  }
  c.expect(same, "the 8 relations are their own reduced grevlex basis over " + field.name());
  c.expect(gb.stats().reduced == 2 && gb.stats().reduced_to_zero == 2,
           "S-pairs reduced after the two criteria: " + std::to_string(gb.stats().reduced) + ", all to zero");
  auto names = [&](int d) {
    std::vector<std::string> out;
    for (const auto& m : gb.standard_monomials(d)) out.push_back(m.to_string(r->names()));
    return out;
  };
  const auto s2 = names(2), s3 = names(3);
  c.expect(s2 == std::vector<std::string>{"x1*x2", "x1*x3", "x2*x3", "x1*x4", "x2*x4", "x1*x5", "x3*x5"},
           "degree 2 standard monomials: " + join(s2));
  c.expect(s3 == std::vector<std::string>{"x1*x2*x3", "x1*x2*x4", "x1*x3*x5"}, "degree 3 standard monomials: " + join(s3));
}

void criterion2(Checks& c) {
  groebner_fixed_point(c, QQ{});
  groebner_fixed_point(c, FP(101));
}

void criterion3(Checks& c) {
  const auto ex = make_example_b(FP(101));
  const KoszulComplex<FP> e(ex.ring, {ex.f1, ex.f2});
  const auto rep = homology_report(e);
  const auto& t = rep.table;
  c.expect(t.total_z(1) == 20 && t.total_b(1) == 12 && t.total_h(1) == 8 && t.total_h(2) == 4,
           "(Z_1, B_1, H_1, H_2) = (" + std::to_string(t.total_z(1)) + ", " + std::to_string(t.total_b(1)) + ", " +
               std::to_string(t.total_h(1)) + ", " + std::to_string(t.total_h(2)) + ")");
  c.expect(t.total_h(0) == 4 && t.euler_characteristic() == 0,
           "Euler sum " + std::to_string(t.total_h(0)) + " - " + std::to_string(t.total_h(1)) + " + " +
               std::to_string(t.total_h(2)) + " = " + std::to_string(t.euler_characteristic()));
  const auto res = qci_check<FP>(ex.ring, {ex.f1, ex.f2});
  const auto& cert = res.certificate;
  c.expect(cert.h1_free && cert.nu_h1 == 2, "H_1 is free of rank " + std::to_string(cert.nu_h1) + " over S = B/I");
  bool lambda = !cert.lambda_bijective.empty();
  for (bool b : cert.lambda_bijective) lambda = lambda && b;
  c.expect(lambda && t.total_h(2) == t.total_h(0), "exterior algebra map is bijective, H_2 is free of rank 1");
}

void criterion4(Checks& c) {
  const auto ex = make_example_b(FP(101));
  const auto res = qci_check<FP>(ex.ring, {ex.f1, ex.f2});
  const auto& cert = res.certificate;
  c.expect(res.certified, "q.c.i. certificate for I = (f1, f2)");
  c.expect(cert.annihilator_of_ideal_is_delta.value_or(false), "(0:I) = (Delta)");
  c.expect(cert.annihilator_of_delta_is_ideal.value_or(false), "(0:Delta) = I");
  if (c.expect(cert.delta.has_value(), "Delta present")) {
    const auto m2 = RingIdeal<FP>::maximal_power(ex.ring, 2), m3 = RingIdeal<FP>::maximal_power(ex.ring, 3);
    c.expect(m2.contains(*cert.delta) && !m3.contains(*cert.delta), "Delta = " + cert.delta->to_string() +
                                                                        " lies in m^2 and not in m^3");
  }
  const auto abcd = parse_elements(ex.ring, example_b_cycle_entries());
  const bool two = two_generated_criterion(ex.f1, ex.f2, abcd[0], abcd[1], abcd[2], abcd[3]);
  c.expect(two, "two-generated criterion with (a, b, c, d) = (" + join(example_b_cycle_entries()) + ")");
  c.expect(two == res.certified, "two-generated criterion agrees with the certificate");
}

void criterion5(Checks& c) {
  const auto ex = make_example_b(FP(5));
  EzdOptions opt;
  opt.inside_ideal = true;
  opt.max_degree = 2;
  const auto res = ezd_search<FP>(ex.ring, {ex.f1, ex.f2}, opt);
  c.expect(res.pairs.empty(), "enumeration over F_5, degrees <= 2 inside I: " + std::to_string(res.candidates) +
                                  " candidates, " + std::to_string(res.pairs.size()) + " exact zero-divisors");
  const auto exq = make_example_b(QQ{});
  const auto obs = ezd_symbolic<QQ>(exq.ring, {exq.f1, exq.f2});
  std::vector<Polynomial<QQ>> seven;
  for (const auto& s : example_b_symbolic_expressions()) seven.push_back(parse_polynomial(obs.parameters, s));
  std::vector<Polynomial<QQ>> square;
  for (std::size_t i = 0; i < obs.product_ideal.size(); ++i)
    for (std::size_t j = i; j < obs.product_ideal.size(); ++j)
      square.push_back(obs.product_ideal[i] * obs.product_ideal[j]);
  c.expect(ideal_containment(square, seven), "((a,b)(c,...,g))^2 lies in the ideal of the seven expressions");
  c.expect(ideal_containment(seven, obs.expressions) && ideal_containment(obs.expressions, seven),
           "generated coefficient conditions span the same ideal as the seven expressions");
  c.expect(obs.exponent == std::optional<int>(2), "least exponent e with ((a,b)(c,...,g))^e inside: " +
                                                      (obs.exponent ? std::to_string(*obs.exponent) : "none"));
}

void criterion6(Checks& c) {
  const auto ex = make_example_b(FP(101));
  const auto k = residue_field_resolution(ex.ring, 3).totals();
  c.expect(k == Sizes{1, 5, 18, 58}, "betti numbers of k over B: " + join(k));
  const auto p = poincare_from_koszul(PowerSeries::polynomial({1, 5, 7, 3}, 4), 8);
  const auto pc = p.integers();
  c.expect(std::vector<long>(pc.begin(), pc.begin() + 4) == std::vector<long>{1, 5, 18, 58},
           "Poincare series " + p.to_string());
  const auto eps = deviations(p, 3);
  c.expect(eps == std::vector<long>{5, 8, 8}, "deviations " + join(eps));
  const auto dual = QuadraticDual<FP>::build(ex.polynomials, ex.relations);
  const auto z = degree2_center(dual);
  c.expect(z.dim == 1, "degree-2 commutant dimension " + std::to_string(z.dim));
  const auto cert = qci_check<FP>(ex.ring, {ex.f1, ex.f2}).certificate;
  const auto emb = embeddedness_obstruction(ex.ring, cert);
  c.expect(emb.verdict == Embeddedness::not_embedded,
           "embeddedness: " + to_string(emb.verdict) + " (center " + std::to_string(emb.center_dim) + " < complexity " +
               std::to_string(emb.complexity) + ")");
}

template <Field K>
void ambient(Checks& c, const K& field) {
  const auto b = ambient_betti(make_example_b(field).ring);
  c.expect(b == Sizes{1, 8, 20, 23, 13, 3}, "ambient betti over " + field.name() + ": " + join(b));
}

void criterion7(Checks& c) {
  ambient(c, FP(101));
  ambient(c, FP(32003));
  ambient(c, QQ{});
  const auto ex = make_example_b(FP(101));
  c.expect(!is_complete_intersection(ex.ring), "B is not a complete intersection");
  c.expect(is_koszul_up_to(ex.ring, 4), "B is Koszul up to homological degree 4");
}

// Principal ideals generated by exact zero-divisors, from small rings and a
// sampled quadric complete intersection.
std::vector<RingElement<FP>> principal_ezd_corpus(std::uint64_t seed) {
  const FP f(101);
  std::vector<RingElement<FP>> out;
  auto r1 = make_quotient(f, 1, {"x1^2"});
  out.push_back(RingElement<FP>::variable(r1, 0));
  auto r2 = make_square_ci(f, 2);
  out.push_back(RingElement<FP>::parse(r2, "x1+x2"));
  auto r3 = make_square_ci(f, 3);
  out.push_back(RingElement<FP>::variable(r3, 0));
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto s = sample_quadrics(3, f, seed, t);
    if (!is_regular_sequence(s.forms)) continue;
    const auto b = pencil_reducible_search(s.forms, PencilMode::enumerate).witness;
    if (!b) continue;
    try {
      out.push_back(build_exact_pair(s.forms, *b).x);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::unsupported_mode) throw;
    }
  }
  return out;
}

void criterion8(Checks& c, const RegressionOptions& o) {
  const auto ex = make_example_b(FP(101));
  const auto i = RingIdeal<FP>::generated_by(ex.ring, {ex.f1, ex.f2});
  const auto t = minimal_resolution(i, 4).totals();
  const auto tate = (PowerSeries::polynomial({1, 2, 1}, 5) * PowerSeries::polynomial({1, 0, -2, 0, 1}, 5).inverse()).integers();
  Sizes expected;
  for (long v : tate) expected.push_back(static_cast<std::size_t>(v));
  c.expect(t == expected && t == Sizes{1, 2, 3, 4, 5}, "betti numbers of B/I over B: " + join(t) +
                                                           ", coefficients of (1+z)^2/(1-z^2)^2: " + join(tate));
  for (const auto& x : principal_ezd_corpus(o.seed)) {
    const bool exact = is_exact_zero_divisor(x).has_value();
    const auto b = minimal_resolution(RingIdeal<FP>::generated_by(x.ring(), {x}), 5).totals();
    bool ones = true;
    for (auto v : b) ones = ones && v == 1;
    c.expect(exact && ones, "R/(" + x.to_string() + ") in a ring of dimension " + std::to_string(x.ring()->dim()) +
                                ": betti " + join(b));
  }
}

void criterion9(Checks& c, const RegressionOptions& o) {
  const auto ex = make_example_b(FP(101));
  const auto i = RingIdeal<FP>::generated_by(ex.ring, {ex.f1, ex.f2});
  const auto rep = loewy_check(i);
  c.expect(rep.loewy_length == 4 && rep.nu_ideal == 2 && rep.nu_maximal == 5 && rep.nu_top_power == 3,
           "B: loewy length " + std::to_string(rep.loewy_length) + ", nu(I) " + std::to_string(rep.nu_ideal) +
               ", nu(m) " + std::to_string(rep.nu_maximal) + ", nu(m^3) " + std::to_string(rep.nu_top_power));
  c.expect(rep.bound3.value_or(false) && rep.nu_ideal + 2 == static_cast<std::size_t>(rep.loewy_length),
           "B: nu(I) = loewy length - 2 with B/I not a complete intersection");
  std::vector<RingIdeal<FP>> corpus{i};
  for (int n = 1; n <= 3; ++n) corpus.push_back(RingIdeal<FP>::maximal_power(make_square_ci(FP(101), n), 1));
  for (const auto& x : principal_ezd_corpus(o.seed)) corpus.push_back(RingIdeal<FP>::generated_by(x.ring(), {x}));
  std::size_t certified = 0, holding = 0;
  for (const auto& j : corpus) {
    if (!qci_check(j.ring(), j.minimal_generators()).certified) continue;
    ++certified;
    if (loewy_check(j).all_hold()) ++holding;
  }
  c.expect(certified == corpus.size() && holding == certified,
           "bounds hold for " + std::to_string(holding) + " of " + std::to_string(certified) + " certified ideals in a corpus of " +
               std::to_string(corpus.size()));
}

void criterion10(Checks& c, const RegressionOptions& o) {
  for (int n : {3, 4}) {
    const auto rep = run_experiment(n, o.prime, o.quadric_trials, o.seed);
    std::size_t extension = 0;
    for (const auto& t : rep.trials)
      if (t.pair_verified && t.witness_field != FP(o.prime).name()) ++extension;
    c.expect(rep.regular == o.quadric_trials && rep.pairs_verified == rep.regular,
             "n = " + std::to_string(n) + ": " + std::to_string(rep.pairs_verified) + " of " +
                 std::to_string(rep.regular) + " regular trials give a verified linear exact pair (" +
                 std::to_string(extension) + " over an extension, " + std::to_string(rep.discards) + " discards)");
  }
  const auto rep = run_experiment(5, o.prime, o.quadric_trials, o.seed);
  std::size_t reducible = 0, survivors = 0;
  for (const auto& t : rep.trials) {
    if (t.x_test_reducible.value_or(true)) ++reducible;
    survivors += t.linear_survivors;
  }
  c.expect(rep.trials_with_exact_zero_divisor == 0 && reducible == 0,
           "n = 5: " + std::to_string(rep.trials_with_exact_zero_divisor) + " of " + std::to_string(rep.regular) +
               " trials with a linear exact zero-divisor, " + std::to_string(reducible) +
               " with a reducible pencil element (" + std::to_string(survivors) + " sieve survivors checked)");
  for (const auto& t : rep.trials)
    if (!t.note.empty()) c.note("n = 5, seed " + std::to_string(o.seed) + ", trial " + std::to_string(t.index) + ": " + t.note);
  c.expect(rep.anomalies == 0, "n = 5 anomalies: " + std::to_string(rep.anomalies));
}

void criterion11(Checks& c) {
  const FP f(101);
  for (int n : {4, 5, 6}) {
    const bool primary = witness_matrix_check(f, n);
    c.expect(primary == (n >= 5), "I_3(W_" + std::to_string(n) + ") primary to (w): " + (primary ? "yes" : "no"));
  }
}

void criterion12(Checks& c, const RegressionOptions& o) {
  const auto rep = run_property_suite(o.seed, o.property_instances, o.prime);
  for (const auto& chk : rep.checks)
    c.expect(chk.failures == 0, chk.module + ": " + chk.name + " (" + std::to_string(chk.runs) + " runs" +
                                    (chk.failures ? ", first failure " + chk.first_failure : "") + ")");
  c.expect(rep.ok(), std::to_string(rep.instances) + " random instances, seed " + std::to_string(rep.seed));
}

}  // namespace

const std::string& criterion_name(int id) {
  static const std::vector<std::string> names = {
      "example B construction",       "Groebner fixed point",     "Koszul homology of (f1, f2)",
      "q.c.i. certificate",           "no exact zero-divisor in I", "homotopy invariants of B",
      "ambient betti numbers",        "Tate pattern",             "Loewy bounds",
      "quadrics experiment",          "witness matrices",         "property suites"};
  if (id < 1 || id > criterion_count) throw Error(ErrorCode::invalid_argument, "no criterion " + std::to_string(id));
  return names[id - 1];
}

CriterionResult run_criterion(int id, const RegressionOptions& o) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  r.pass = true;
  Checks c(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion1(c); break;
      case 2: criterion2(c); break;
      case 3: criterion3(c); break;
      case 4: criterion4(c); break;
      case 5: criterion5(c); break;
      case 6: criterion6(c); break;
      case 7: criterion7(c); break;
      case 8: criterion8(c, o); break;
      case 9: criterion9(c, o); break;
      case 10: criterion10(c, o); break;
      case 11: criterion11(c); break;
      case 12: criterion12(c, o); break;
    }
  } catch (const std::exception& e) {
    c.expect(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_regression(const RegressionOptions& o,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) {
    out.push_back(run_criterion(id, o));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " + r.name + buf;
}

}  // namespace qci
