#include "qci/properties.hpp"

#include <functional>
#include <map>

#include "qci/error.hpp"
#include "qci/groebner.hpp"
#include "qci/koszul.hpp"
#include "qci/quotient.hpp"

namespace qci {

bool PropertyReport::ok() const {
  for (const auto& c : checks)
    if (c.failures) return false;
  return !checks.empty();
}

namespace {

using FP = PrimeField;
using Poly = Polynomial<FP>;

class Ledger {
 public:
  void record(const std::string& module, const std::string& name, bool ok, const std::string& instance) {
    auto key = module + "/" + name;
    auto it = index_.find(key);
    if (it == index_.end()) {
      it = index_.emplace(key, checks_.size()).first;
      checks_.push_back({module, name, 0, 0, {}});
    }
    auto& c = checks_[it->second];
    ++c.runs;
    if (!ok && c.failures++ == 0) c.first_failure = instance;
  }
  std::vector<PropertyCheck> take() { return std::move(checks_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyCheck> checks_;
};

FP::Element draw(Rng& rng, const FP& f) { return static_cast<FP::Element>(uniform_below(rng, f.prime())); }

Poly random_form(const RingPtr<FP>& r, int degree, Rng& rng, unsigned density_percent) {
  std::vector<Poly::Term> terms;
  for (const auto& m : monomials_of_degree(r->nvars(), degree, r->order()))
    if (uniform_below(rng, 100) < density_percent) terms.push_back({m, draw(rng, r->field())});
  return Poly::from_terms(r, std::move(terms));
}

Poly random_polynomial(const RingPtr<FP>& r, Rng& rng) {
  Poly p(r);
  for (int d = 0; d <= 3; ++d) p += random_form(r, d, rng, 50);
  return p;
}

struct Instance {
  RingPtr<FP> ring;
  std::vector<Poly> gens;
  QuotientPtr<FP> quotient;
  std::string label;
};

Instance random_instance(const FP& f, Rng& rng, std::uint64_t index) {
  const int n = 1 + static_cast<int>(uniform_below(rng, 4));
  auto r = make_polynomial_ring(f, n);
  for (int attempt = 0;; ++attempt) {
    std::vector<Poly> gens;
    for (int i = 0; i < n; ++i) {
      const int d = 2 + static_cast<int>(uniform_below(rng, 2));
      auto g = Poly::variable(r, i).power(static_cast<unsigned>(d));
      if (attempt < 20) g += random_form(r, d, rng, 30);
      gens.push_back(g);
    }
    const auto extra = uniform_below(rng, 3);
    for (std::uint64_t e = 0; e < extra; ++e) {
      auto g = random_form(r, 2 + static_cast<int>(uniform_below(rng, 2)), rng, 60);
      if (!g.is_zero()) gens.push_back(g);
    }
    try {
      auto q = QuotientRing<FP>::build(r, gens);
      std::string label = "instance " + std::to_string(index) + ": (";
      for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? ", " : "") + gens[i].to_string();
      return {r, gens, q, label + ")"};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::non_artinian) throw;
    }
  }
}

RingElement<FP> random_element(const QuotientPtr<FP>& q, Rng& rng, int degree = -1) {
  auto v = q->zero_vector();
  const std::size_t lo = degree < 0 ? 0 : q->begin(degree), hi = degree < 0 ? q->dim() : q->end(degree);
  for (std::size_t i = lo; i < hi; ++i) v[i] = draw(rng, q->field());
  return RingElement<FP>(q, v);
}

void polynomial_properties(Ledger& led, const Instance& in, Rng& rng) {
  const auto& r = in.ring;
  const auto a = random_polynomial(r, rng), b = random_polynomial(r, rng), c = random_polynomial(r, rng);
  led.record("polynomials", "addition is associative", (a + b) + c == a + (b + c), in.label);
  led.record("polynomials", "multiplication is commutative", a * b == b * a, in.label);
  led.record("polynomials", "multiplication is associative", (a * b) * c == a * (b * c), in.label);
  led.record("polynomials", "distributive law", a * (b + c) == a * b + a * c, in.label);
  led.record("polynomials", "additive inverse", (a - a).is_zero() && (a + (-a)).is_zero(), in.label);
  if (!a.is_zero() && !b.is_zero())
    led.record("polynomials", "initial form is multiplicative", initial_form(a * b) == initial_form(a) * initial_form(b),
               in.label);

  // Hessian rank under an invertible linear change of variables.
  const int n = r->nvars();
  const auto q = random_form(r, 2, rng, 60);
  if (q.is_zero()) return;
  Matrix<FP> g(r->field(), n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = draw(rng, r->field());
  } while (r->field().is_zero(determinant(g)));
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) images.push_back(linear_form(r, g.row(i)));
  const auto moved = q.substitute(images);
  led.record("polynomials", "hessian rank is invariant under linear change", rank(hessian(q)) == rank(hessian(moved)),
             in.label);
}

void groebner_properties(Ledger& led, const Instance& in, Rng& rng) {
  const auto& gb = in.quotient->groebner_basis();
  const auto f = random_polynomial(in.ring, rng);
  const auto nf = gb.normal_form(f);
  // Another generating set: the original generators plus combinations of them.
  auto other = in.gens;
  for (std::size_t i = 0; i + 1 < in.gens.size(); ++i)
    other.push_back(in.gens[i] * random_form(in.ring, 1, rng, 70) + in.gens[i + 1]);
  const auto gb2 = buchberger(in.ring, other);
  led.record("groebner", "f - normal_form(f) lies in the ideal", gb2.contains(f - nf), in.label);
  led.record("groebner", "normal form is standard", gb2.normal_form(nf) == nf, in.label);
  bool counts = true;
  for (int d = 0; d <= in.quotient->top_degree() + 1; ++d)
    counts = counts && gb.standard_monomials(d).size() == gb2.standard_monomials(d).size();
  led.record("groebner", "staircase is independent of the generating set", counts, in.label);
  led.record("groebner", "reduced basis is a fixed point", buchberger(in.ring, gb.generators()).generators() == gb.generators(),
             in.label);
  led.record("groebner", "reduced basis is canonical", gb2.generators() == gb.generators(), in.label);
}

void quotient_properties(Ledger& led, const Instance& in, Rng& rng) {
  const auto& q = in.quotient;
  std::size_t total = 0;
  for (auto h : q->hilbert_series()) total += h;
  led.record("quotient", "hilbert series sums to the dimension", total == q->dim(), in.label);
  led.record("quotient", "loewy length is one more than the top degree", q->loewy_length() == q->top_degree() + 1,
             in.label);
  const auto soc = socle(q);
  bool top = true;
  for (std::size_t i = q->begin(q->top_degree()); i < q->end(q->top_degree()); ++i) {
    auto v = q->zero_vector();
    v[i] = q->field().one();
    top = top && soc.contains(RingElement<FP>(q, v));
  }
  led.record("quotient", "socle contains the top component", top, in.label);

  const auto x = random_element(q, rng);
  if (!x.is_zero()) {
    const auto ann = annihilator(x);
    const auto xr = RingIdeal<FP>::generated_by(q, {x});
    led.record("quotient", "rank-nullity of multiplication", ann.dim() + xr.dim() == q->dim(), in.label);
  }
  if (q->top_degree() >= 1) {
    const auto l = random_element(q, rng, 1);
    if (!l.is_zero()) {
      if (auto y = is_exact_zero_divisor(l)) {
        const auto back = is_exact_zero_divisor(*y);
        led.record("quotient", "exact pairs are symmetric",
                   back && RingIdeal<FP>::generated_by(q, {*back}) == RingIdeal<FP>::generated_by(q, {l}), in.label);
      }
    }
    // Variables of pure-power rings are often exact.
    const auto v = RingElement<FP>::variable(q, 0);
    if (!v.is_zero() && !v.is_unit())
      if (auto y = is_exact_zero_divisor(v)) {
        const auto back = is_exact_zero_divisor(*y);
        led.record("quotient", "exact pairs are symmetric",
                   back && RingIdeal<FP>::generated_by(q, {*back}) == RingIdeal<FP>::generated_by(q, {v}), in.label);
      }
  }
}

void koszul_properties(Ledger& led, const Instance& in, Rng& rng) {
  const auto& q = in.quotient;
  if (q->top_degree() < 1) return;
  std::vector<RingElement<FP>> seq;
  const auto m = 1 + uniform_below(rng, 2);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto l = random_element(q, rng, 1);
    if (!l.is_zero()) seq.push_back(l);
  }
  if (seq.empty()) return;
  KoszulComplex<FP> e(q, seq, false);
  bool d2 = true;
  for (int p = 2; p <= e.length(); ++p)
    for (int d = 0; d <= e.max_internal_degree(); ++d) d2 = d2 && (e.boundary(p - 1, d) * e.boundary(p, d)).is_zero();
  led.record("koszul", "boundary squares to zero", d2, in.label);
  const auto rep = homology_report(e);
  led.record("koszul", "euler characteristic vanishes", rep.table.euler_characteristic() == 0, in.label);

  const auto ideal = RingIdeal<FP>::generated_by(q, seq);
  const auto gens = ideal.minimal_generators();
  const auto res = qci_check(q, gens);
  if (!res.certified) return;
  const auto& c = res.certificate;
  led.record("koszul", "nu(I) - nu(H_1) equals the grade",
             static_cast<int>(c.nu_ideal) - static_cast<int>(c.nu_h1) == c.grade, in.label);
  if (c.grade == 0) {
    led.record("koszul", "grade-zero certificate conditions",
               c.annihilator_of_ideal_is_delta.value_or(false) && c.annihilator_of_delta_is_ideal.value_or(false) &&
                   c.h1_dimension_formula.value_or(false) && c.multiplication_by_delta.value_or(false),
               in.label);
    if (gens.size() == 2 && c.a.size() == 2 && c.a[0].size() == 2)
      led.record("koszul", "two-generated criterion agrees with the certificate",
                 two_generated_criterion(gens[0], gens[1], c.a[0][0], c.a[0][1], c.a[1][0], c.a[1][1]), in.label);
  }
}

}  // namespace

PropertyReport run_property_suite(std::uint64_t seed, std::size_t instances, std::uint32_t prime) {
  const FP f(prime);
  Ledger led;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = derived_stream(seed, i);
    const auto in = random_instance(f, rng, i);
    polynomial_properties(led, in, rng);
    groebner_properties(led, in, rng);
    quotient_properties(led, in, rng);
    koszul_properties(led, in, rng);
  }
  return {seed, prime, instances, led.take()};
}

}  // namespace qci
