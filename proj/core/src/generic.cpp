#include "qci/generic.hpp"

#include <algorithm>
#include <unordered_map>

#include "qci/error.hpp"
#include "qci/univariate.hpp"

namespace qci {

namespace {

template <Field K>
using Grid = std::vector<std::vector<Polynomial<K>>>;

std::vector<std::string> prefixed_names(const std::string& stem, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

// Calls visit(v) on every normalized nonzero vector of K^dim (first nonzero
// entry 1) until it returns true. Returns the number of vectors visited.
template <Field K, class F>
std::size_t for_each_projective(const K& f, int dim, F&& visit) {
  const mpz_class order = f.order();
  if (!order.fits_ulong_p()) throw Error(ErrorCode::unsupported_mode, "field too large to enumerate");
  const std::uint64_t q = order.get_ui();
  std::size_t visited = 0;
  std::vector<typename K::Element> v(dim, f.zero());
  for (int lead = 0; lead < dim; ++lead) {
    std::fill(v.begin(), v.end(), f.zero());
    v[lead] = f.one();
    const int free = dim - 1 - lead;
    std::vector<std::uint64_t> digits(free, 0);
    for (;;) {
      for (int k = 0; k < free; ++k) v[lead + 1 + k] = f.element_at(digits[k]);
      ++visited;
      if (visit(v)) return visited;
      int k = free - 1;
      while (k >= 0 && ++digits[k] == q) digits[k--] = 0;
      if (k < 0) break;
    }
  }
  return visited;
}

template <Field K>
void check_quadrics(const std::vector<Polynomial<K>>& forms) {
  if (forms.empty()) throw Error(ErrorCode::invalid_argument, "empty sequence of forms");
  const auto& ring = forms.front().ring();
  if (ring->field().characteristic() == 2)
    throw Error(ErrorCode::unsupported_characteristic, "quadric pencils need characteristic other than 2");
  for (const auto& f : forms) {
    if (!(*f.ring() == *ring)) throw Error(ErrorCode::ring_mismatch, "forms live in different rings");
    for (const auto& t : f.terms())
      if (t.monomial.degree() != 2) throw Error(ErrorCode::not_quadratic, "not a quadratic form: " + f.to_string());
  }
}

template <Field K>
Matrix<K> combine(const K& f, const std::vector<Matrix<K>>& hs, const std::vector<typename K::Element>& b) {
  Matrix<K> m(f, hs.front().rows(), hs.front().cols());
  for (std::size_t h = 0; h < hs.size(); ++h) {
    if (f.is_zero(b[h])) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(b[h], hs[h](i, j)));
  }
  return m;
}

template <Field K>
Polynomial<K> det3(const Grid<K>& m, std::size_t r, std::size_t s, std::size_t t, std::size_t a, std::size_t b,
                   std::size_t c) {
  return m[r][a] * (m[s][b] * m[t][c] - m[s][c] * m[t][b]) - m[r][b] * (m[s][a] * m[t][c] - m[s][c] * m[t][a]) +
         m[r][c] * (m[s][a] * m[t][b] - m[s][b] * m[t][a]);
}

template <Field K>
typename K::Element random_element(const K& f, Rng& rng) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return static_cast<PrimeField::Element>(uniform_below(rng, f.prime()));
  } else {
    std::vector<std::uint32_t> c(f.degree());
    for (auto& x : c) x = static_cast<std::uint32_t>(uniform_below(rng, f.prime()));
    return f.from_polynomial(c);
  }
}

}  // namespace

QuadricSequence<PrimeField> sample_quadrics(int n, const PrimeField& field, Rng& rng) {
  if (field.prime() == 2)
    throw Error(ErrorCode::unsupported_characteristic, "quadric sampling needs an odd prime");
  if (n < 1) throw Error(ErrorCode::invalid_argument, "need at least one variable");
  if (n > max_variables) throw Error(ErrorCode::too_many_variables, "too many variables");
  QuadricSequence<PrimeField> s;
  s.ring = make_polynomial_ring(field, n);
  const auto monos = monomials_of_degree(n, 2, MonomialOrder::grevlex);
  for (int h = 0; h < n; ++h) {
    std::vector<Polynomial<PrimeField>::Term> terms;
    for (const auto& m : monos) terms.push_back({m, static_cast<std::uint32_t>(uniform_below(rng, field.prime()))});
    s.forms.push_back(Polynomial<PrimeField>::from_terms(s.ring, std::move(terms)));
  }
  return s;
}

QuadricSequence<PrimeField> sample_quadrics(int n, const PrimeField& field, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = derived_stream(seed, trial);
  auto s = sample_quadrics(n, field, rng);
  s.seed = seed;
  s.trial = trial;
  return s;
}

template <Field K>
bool is_regular_sequence(const std::vector<Polynomial<K>>& forms) {
  if (forms.empty()) throw Error(ErrorCode::invalid_argument, "empty sequence of forms");
  const auto& ring = forms.front().ring();
  const int n = ring->nvars();
  if (static_cast<int>(forms.size()) != n)
    throw Error(ErrorCode::invalid_argument, "regularity test needs n forms in n variables");
  int total = 0;
  for (const auto& f : forms) {
    if (!(*f.ring() == *ring)) throw Error(ErrorCode::ring_mismatch, "forms live in different rings");
    if (f.is_zero()) return false;
    if (!f.is_homogeneous()) throw Error(ErrorCode::not_homogeneous, "not homogeneous: " + f.to_string());
    total += f.total_degree();
  }
  const int big_n = total - n + 1;
  const auto cols = monomials_of_degree(n, big_n, ring->order());
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  const K& k = ring->field();
  Matrix<K> t(k, 0, cols.size());
  for (const auto& f : forms) {
    const int d = big_n - f.total_degree();
    if (d < 0) continue;
    for (const auto& m : monomials_of_degree(n, d, ring->order())) {
      std::vector<typename K::Element> row(cols.size(), k.zero());
      for (const auto& term : f.terms()) row[index.at(term.monomial * m)] = term.coeff;
      t.append_row(row);
    }
  }
  return rank(t) == cols.size();
}

template <Field K>
bool quadric_irreducible(const Polynomial<K>& f) {
  if (f.is_zero() || f.total_degree() != 2 || !f.is_homogeneous())
    throw Error(ErrorCode::not_quadratic, "not a quadratic form: " + f.to_string());
  return rank(hessian(f)) >= 3;
}

template <Field K>
Grid<K> pencil_matrix(const std::vector<Polynomial<K>>& forms, const RingPtr<K>& w) {
  check_quadrics(forms);
  if (w->nvars() < static_cast<int>(forms.size()))
    throw Error(ErrorCode::invalid_argument, "pencil ring needs one variable per form");
  const K& k = w->field();
  const std::size_t n = static_cast<std::size_t>(forms.front().ring()->nvars());
  std::vector<Matrix<K>> hs;
  for (const auto& f : forms) hs.push_back(hessian(f));
  Grid<K> m(n, std::vector<Polynomial<K>>(n, Polynomial<K>(w)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename Polynomial<K>::Term> terms;
      for (std::size_t h = 0; h < hs.size(); ++h)
        if (!k.is_zero(hs[h](i, j))) terms.push_back({Monomial::variable(static_cast<int>(h)), hs[h](i, j)});
      m[i][j] = Polynomial<K>::from_terms(w, std::move(terms));
    }
  return m;
}

template <Field K>
std::vector<Polynomial<K>> minors3(const Grid<K>& m) {
  std::vector<Polynomial<K>> out, seen;
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
              auto d = det3(m, r, s, t, a, b, c);
              if (d.is_zero()) continue;
              auto key = d.monic();
              if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
              seen.push_back(std::move(key));
              out.push_back(std::move(d));
            }
  return out;
}

template <Field K>
PencilResult<K> pencil_reducible_search(const std::vector<Polynomial<K>>& forms, PencilMode mode) {
  check_quadrics(forms);
  const K& k = forms.front().field();
  const int n = static_cast<int>(forms.size());
  PencilResult<K> r;
  if (mode == PencilMode::exact) {
    auto w = make_polynomial_ring(k, n, MonomialOrder::grevlex, prefixed_names("w", n));
    const auto i3 = minors3(pencil_matrix(forms, w));
    PrimaryResult pr;
    if (i3.empty()) pr.ray_variable = 0;
    else pr = is_irrelevant_primary(i3);
    r.exists = !pr.primary;
    r.x_test = pr;
    return r;
  }
  if constexpr (std::is_same_v<K, RationalField>) {
    throw Error(ErrorCode::unsupported_mode, "enumerate mode needs a finite field");
  } else {
    std::vector<Matrix<K>> hs;
    for (const auto& f : forms) hs.push_back(hessian(f));
    r.candidates = for_each_projective(k, n, [&](const std::vector<typename K::Element>& b) {
      if (rank(combine(k, hs, b)) > 2) return false;
      r.exists = true;
      r.witness = b;
      return true;
    });
    return r;
  }
}

template <Field K>
LinearFactorization<K> factor_rank2_quadric(const Polynomial<K>& q) {
  const K& k = q.field();
  if (k.characteristic() == 2)
    throw Error(ErrorCode::unsupported_characteristic, "factoring quadrics needs characteristic other than 2");
  if (q.is_zero() || q.total_degree() != 2 || !q.is_homogeneous())
    throw Error(ErrorCode::not_quadratic, "not a quadratic form: " + q.to_string());
  const auto h = hessian(q);
  const std::size_t r = rank(h);
  if (r >= 3) throw Error(ErrorCode::not_quadratic, "quadric of hessian rank " + std::to_string(r) + " is irreducible");
  const auto& ring = q.ring();
  const std::size_t n = h.rows();
  LinearFactorization<K> out;
  auto row_form = [&](std::size_t i) { return linear_form(ring, h.row(i)); };
  if (r == 1) {
    std::size_t i = 0;
    while (k.is_zero(h(i, i))) ++i;
    const auto l = row_form(i);
    out.factors = std::make_pair(l.scale(k.inv(k.add(h(i, i), h(i, i)))), l);
  } else {
    std::size_t si = n, sj = n;
    for (std::size_t i = 0; i < n && si == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!k.is_zero(k.sub(k.mul(h(i, i), h(j, j)), k.mul(h(i, j), h(i, j))))) {
          si = i;
          sj = j;
          break;
        }
    if (si == n) throw Error(ErrorCode::internal_inconsistency, "rank 2 form without a nonsingular principal minor");
    // q = 1/2 u^T G u with u = (H_i x, H_j x) and G the inverse of the principal block.
    const auto det = k.sub(k.mul(h(si, si), h(sj, sj)), k.mul(h(si, sj), h(si, sj)));
    const auto dinv = k.inv(det);
    const auto g11 = k.mul(h(sj, sj), dinv);
    const auto g12 = k.neg(k.mul(h(si, sj), dinv));
    const auto g22 = k.mul(h(si, si), dinv);
    const auto half = k.inv(k.from_int(2));
    const auto u1 = row_form(si), u2 = row_form(sj);
    if (k.is_zero(g11)) {
      out.factors = std::make_pair(u2.scale(half), u1.scale(k.add(g12, g12)) + u2.scale(g22));
    } else {
      // g11 r^2 + 2 g12 r + g22 = 0 gives q = g11/2 (u1 - r1 u2)(u1 - r2 u2).
      const auto disc = k.sub(k.mul(g12, g12), k.mul(g11, g22));
      typename K::Element s;
      if (!square_root(k, disc, s)) {
        out.extension_needed = true;
        return out;
      }
      const auto ginv = k.inv(g11);
      const auto r1 = k.mul(k.sub(s, g12), ginv);
      const auto r2 = k.mul(k.neg(k.add(s, g12)), ginv);
      out.factors = std::make_pair((u1 - u2.scale(r1)).scale(k.mul(g11, half)), u1 - u2.scale(r2));
    }
  }
  if (!(out.factors->first * out.factors->second == q))
    throw Error(ErrorCode::internal_inconsistency, "quadric factorization does not multiply back");
  return out;
}

Polynomial<ExtensionField> lift_to_extension(const Polynomial<PrimeField>& p, const RingPtr<ExtensionField>& target) {
  const auto& e = target->field();
  if (e.prime() != p.field().prime()) throw Error(ErrorCode::ring_mismatch, "extension of a different prime field");
  return map_coefficients(p, target, [&](std::uint32_t c) { return e.from_base(c); });
}

template <Field K>
ExactPairWitness<K> build_exact_pair(const std::vector<Polynomial<K>>& forms, const std::vector<typename K::Element>& b) {
  check_quadrics(forms);
  const K& k = forms.front().field();
  if (b.size() != forms.size()) throw Error(ErrorCode::invalid_argument, "one pencil coefficient per form");
  const auto& ring = forms.front().ring();
  Polynomial<K> q(ring);
  std::size_t replaced = forms.size();
  for (std::size_t h = 0; h < forms.size(); ++h) {
    if (k.is_zero(b[h])) continue;
    q += forms[h].scale(b[h]);
    if (replaced == forms.size()) replaced = h;
  }
  if (q.is_zero()) throw Error(ErrorCode::invalid_argument, "pencil coefficients give the zero form");
  const auto fac = factor_rank2_quadric(q);
  if (!fac.factors) throw Error(ErrorCode::unsupported_mode, "pencil element only factors over an extension");
  auto presentation = forms;
  presentation[replaced] = q;
  auto qr = QuotientRing<K>::build(ring, presentation);
  auto x = RingElement<K>::from_polynomial(qr, fac.factors->first);
  auto y = RingElement<K>::from_polynomial(qr, fac.factors->second);
  const auto partner = is_exact_zero_divisor(x);
  if (!partner) throw Error(ErrorCode::internal_inconsistency, "linear factor is not an exact zero-divisor");
  const auto gen_y = RingIdeal<K>::generated_by(qr, {y});
  const auto gen_x = RingIdeal<K>::generated_by(qr, {x});
  if (!(RingIdeal<K>::generated_by(qr, {*partner}) == gen_y) || !(annihilator(y) == gen_x))
    throw Error(ErrorCode::internal_inconsistency, "factors of the pencil element are not an exact pair");
  if (annihilator(x).dim() != qr->dim() - gen_x.dim())
    throw Error(ErrorCode::internal_inconsistency, "annihilator size does not match the quotient");
  if (minimal_generator_test(q, forms) != GeneratorClass::minimal_generator)
    throw Error(ErrorCode::internal_inconsistency, "pencil element is not a minimal generator");
  return ExactPairWitness<K>{std::move(presentation), replaced, q, fac.factors->first, fac.factors->second,
                             std::move(qr), std::move(x), std::move(y)};
}

std::optional<ExtensionPencilPoint> pencil_point_over_extension(const std::vector<Polynomial<PrimeField>>& forms,
                                                                Rng& rng, int attempts) {
  check_quadrics(forms);
  const PrimeField& fp = forms.front().field();
  const int n = static_cast<int>(forms.size());
  std::vector<Matrix<PrimeField>> hs;
  for (const auto& f : forms) hs.push_back(hessian(f));

  if (n < 3) {
    ExtensionPencilPoint pt{ExtensionField::random(fp.prime(), 2, rng), {}, 1};
    pt.b.assign(n, pt.field.zero());
    pt.b[0] = pt.field.one();
    return pt;
  }

  auto w = make_polynomial_ring(fp, n, MonomialOrder::grevlex, prefixed_names("w", n));
  const auto i3 = minors3(pencil_matrix(forms, w));
  const int m = n - 1;
  auto u = make_polynomial_ring(fp, m, MonomialOrder::lex, prefixed_names("u", m));
  const int last = m - 1;

  for (int attempt = 0; attempt < attempts; ++attempt) {
    Matrix<PrimeField> g(fp, n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = random_element(fp, rng);
    } while (fp.is_zero(determinant(g)));
    // w = G (u_1, ..., u_{n-1}, 1).
    std::vector<Polynomial<PrimeField>> images;
    for (int h = 0; h < n; ++h) {
      std::vector<Polynomial<PrimeField>::Term> terms;
      for (int c = 0; c < m; ++c) terms.push_back({Monomial::variable(c), g(h, c)});
      terms.push_back({Monomial(), g(h, m)});
      images.push_back(Polynomial<PrimeField>::from_terms(u, std::move(terms)));
    }
    std::vector<Polynomial<PrimeField>> affine;
    for (const auto& f : i3) affine.push_back(f.substitute(images));
    const auto gb = buchberger(u, affine);
    if (gb.is_unit_ideal() || gb.infinite_ray() != -1) continue;

    // Shape position: h(u_last) and u_i + r_i(u_last).
    const auto& gens = gb.generators();
    if (static_cast<int>(gens.size()) != m) continue;
    auto univariate = [&](const Polynomial<PrimeField>& p, bool skip_lead) {
      for (std::size_t t = skip_lead ? 1 : 0; t < p.terms().size(); ++t)
        if (p.terms()[t].monomial.degree() != p.terms()[t].monomial[last]) return false;
      return true;
    };
    bool shape = univariate(gens[0], false);
    std::vector<int> lead_var(m, -1);
    for (int i = 1; i < m && shape; ++i) {
      const auto& lm = gens[i].leading_monomial();
      shape = lm.degree() == 1 && lm.last_variable() < last && univariate(gens[i], true);
      if (shape) lead_var[i] = lm.last_variable();
    }
    if (!shape) continue;

    UPoly<PrimeField> hpoly;
    for (const auto& t : gens[0].terms()) {
      const auto e = static_cast<std::size_t>(t.monomial[last]);
      if (hpoly.size() <= e) hpoly.resize(e + 1, fp.zero());
      hpoly[e] = t.coeff;
    }
    const auto factors = upoly_factor(fp, hpoly, rng);
    if (factors.empty()) continue;
    const auto& phi = factors.front().factor;
    const int kdeg = upoly_degree<PrimeField>(phi);
    ExtensionField ext = ExtensionField::random(fp.prime(), 2 * kdeg, rng);
    UPoly<ExtensionField> lifted;
    for (auto c : phi) lifted.push_back(ext.from_base(c));
    const auto roots = upoly_roots(ext, lifted, rng);
    if (roots.empty()) throw Error(ErrorCode::internal_inconsistency, "irreducible factor has no root in its splitting field");
    const auto alpha = roots.front();

    auto eval_last = [&](const Polynomial<PrimeField>& p, bool skip_lead) {
      auto acc = ext.zero();
      for (std::size_t t = skip_lead ? 1 : 0; t < p.terms().size(); ++t)
        acc = ext.add(acc, ext.mul(ext.from_base(p.terms()[t].coeff),
                                   power(ext, alpha, mpz_class(p.terms()[t].monomial[last]))));
      return acc;
    };
    std::vector<ExtensionField::Element> uval(n, ext.zero());
    uval[last] = alpha;
    uval[m] = ext.one();
    for (int i = 1; i < m; ++i) uval[lead_var[i]] = ext.neg(eval_last(gens[i], true));

    ExtensionPencilPoint pt{ext, std::vector<ExtensionField::Element>(n, ext.zero()), kdeg};
    for (int h = 0; h < n; ++h)
      for (int c = 0; c < n; ++c) pt.b[h] = ext.add(pt.b[h], ext.mul(ext.from_base(g(h, c)), uval[c]));

    std::vector<Matrix<ExtensionField>> lifted_h;
    for (const auto& hm : hs) {
      Matrix<ExtensionField> e(ext, hm.rows(), hm.cols());
      for (std::size_t i = 0; i < hm.rows(); ++i)
        for (std::size_t j = 0; j < hm.cols(); ++j) e(i, j) = ext.from_base(hm(i, j));
      lifted_h.push_back(std::move(e));
    }
    if (rank(combine(ext, lifted_h, pt.b)) > 2)
      throw Error(ErrorCode::internal_inconsistency, "solved pencil point does not drop rank");
    return pt;
  }
  return std::nullopt;
}

namespace {

// a mod p, with Lemire's multiply-shift reduction when a < 2^32 is guaranteed.
struct Reducer {
  std::uint64_t p, m;
  bool fast;
  explicit Reducer(std::uint64_t prime) : p(prime), m(~std::uint64_t{0} / prime + 1), fast(prime < (1u << 16)) {}
  std::uint64_t operator()(std::uint64_t a) const {
    if (!fast) return a % p;
    const std::uint64_t low = m * a;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(low) * p) >> 64);
  }
};

// Determinant of a dense square matrix over F_p, destroying `a`.
std::uint32_t det_mod(std::vector<std::uint64_t>& a, std::size_t n, const Reducer& red, const PrimeField& f,
                      const std::vector<std::uint32_t>& inv_table) {
  const std::uint64_t p = red.p;
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = p - det;
    }
    const std::uint64_t pv = a[c * n + c];
    det = red(det * pv);
    const std::uint64_t iv = inv_table.empty() ? f.inv(static_cast<std::uint32_t>(pv)) : inv_table[pv];
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t x = a[r * n + c];
      if (x == 0) continue;
      const std::uint64_t fct = p - red(x * iv);
      for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] = red(a[r * n + j] + red(fct * a[c * n + j]));
    }
  }
  return static_cast<std::uint32_t>(red(det));
}

}  // namespace

LinearSieveResult linear_exact_zero_divisors(const QuotientPtr<PrimeField>& ring, Rng& rng, std::size_t max_results) {
  const PrimeField& f = ring->field();
  const std::uint64_t p = f.prime();
  const Reducer red(p);
  LinearSieveResult out;
  if (ring->top_degree() < 1) return out;
  const std::size_t b1 = ring->begin(1), e = ring->end(1) - b1;
  const std::size_t b2 = ring->top_degree() >= 2 ? ring->begin(2) : 0;
  const std::size_t m2 = ring->top_degree() >= 2 ? ring->end(2) - b2 : 0;

  // mult[i] is e x m2: row k holds b_i b_k in R_2.
  std::vector<Matrix<PrimeField>> mult;
  for (std::size_t i = 0; i < e; ++i) {
    Matrix<PrimeField> mi(f, e, m2);
    for (std::size_t k = 0; k < e; ++k)
      for (const auto& [idx, c] : ring->product(b1 + i, b1 + k)) mi(k, idx - b2) = c;
    mult.push_back(std::move(mi));
  }

  std::vector<std::uint32_t> inv_table;
  if (p < (1u << 20)) {
    inv_table.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) inv_table[a] = f.inv(a);
  }

  // Three random compressions R_2 -> F_p^e; the first drives the root search.
  constexpr int ncomp = 3;
  std::vector<std::vector<std::vector<std::uint64_t>>> comp(ncomp);  // [c][i] = flat e x e
  for (int c = 0; c < ncomp; ++c) {
    Matrix<PrimeField> cm(f, m2, e);
    for (std::size_t r = 0; r < m2; ++r)
      for (std::size_t s = 0; s < e; ++s) cm(r, s) = random_element(f, rng);
    for (std::size_t i = 0; i < e; ++i) {
      const auto a = m2 ? mult[i] * cm : Matrix<PrimeField>(f, e, e);
      std::vector<std::uint64_t> flat(e * e);
      for (std::size_t r = 0; r < e; ++r)
        for (std::size_t s = 0; s < e; ++s) flat[r * e + s] = a(r, s);
      comp[c].push_back(std::move(flat));
    }
  }

  auto combination = [&](int c, const std::vector<std::uint64_t>& coeffs) {
    std::vector<std::uint64_t> a(e * e, 0);
    for (std::size_t i = 0; i < e; ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < e * e; ++j) a[j] = (a[j] + coeffs[i] * comp[c][i][j]) % p;
    }
    return a;
  };

  bool done = false;
  auto check_candidate = [&](const std::vector<std::uint64_t>& coeffs) {
    for (int c = 1; c < ncomp; ++c) {
      auto a = combination(c, coeffs);
      if (det_mod(a, e, red, f, inv_table) != 0) return;
    }
    ++out.survivors;
    std::vector<PrimeField::Element> lv(ring->dim(), f.zero());
    Matrix<PrimeField> ml(f, e, m2);
    for (std::size_t i = 0; i < e; ++i) {
      lv[b1 + i] = static_cast<std::uint32_t>(coeffs[i]);
      if (coeffs[i] == 0) continue;
      for (std::size_t r = 0; r < e; ++r)
        for (std::size_t s = 0; s < m2; ++s)
          ml(r, s) = f.add(ml(r, s), f.mul(static_cast<std::uint32_t>(coeffs[i]), mult[i](r, s)));
    }
    if (rank(ml) == e) return;
    ++out.kernel_hits;
    RingElement<PrimeField> x(ring, lv);
    if (auto y = is_exact_zero_divisor(x)) {
      out.pairs.push_back({x, *y});
      if (max_results && out.pairs.size() >= max_results) done = true;
    }
  };

  // Lagrange basis on the nodes 0..e for det(P + t A_last), a polynomial of degree <= e.
  const std::size_t nodes = e + 1;
  const bool interpolate = p > e;
  std::vector<std::vector<std::uint64_t>> lagrange;
  if (interpolate) {
    for (std::size_t j = 0; j < nodes; ++j) {
      std::vector<std::uint64_t> poly{1};
      std::uint64_t denom = 1;
      for (std::size_t m = 0; m < nodes; ++m) {
        if (m == j) continue;
        std::vector<std::uint64_t> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
          next[d + 1] = (next[d + 1] + poly[d]) % p;
          next[d] = (next[d] + (p - m % p) * poly[d]) % p;
        }
        poly = std::move(next);
        denom = denom * ((j + p - m % p) % p) % p;
      }
      const std::uint64_t di = f.inv(static_cast<std::uint32_t>(denom));
      for (auto& c : poly) c = c * di % p;
      lagrange.push_back(std::move(poly));
    }
  }

  // Powers t^d for the root scan when p is small enough for lazy reduction.
  const bool table = !inv_table.empty() && p < (1u << 28);
  std::vector<std::uint64_t> powers;
  if (table && interpolate) {
    powers.resize(p * nodes);
    for (std::uint64_t t = 0; t < p; ++t) {
      std::uint64_t x = 1;
      for (std::size_t d = 0; d < nodes; ++d, x = x * t % p) powers[t * nodes + d] = x;
    }
  }

  const int prefix_dim = static_cast<int>(e) - 1;
  std::vector<std::uint64_t> coeffs(e, 0), base(e * e), work(e * e), poly(nodes);
  const auto& top = comp[0][e - 1];
  auto det_at = [&](std::uint64_t t) {
    for (std::size_t j = 0; j < e * e; ++j) work[j] = red(base[j] + red(t * top[j]));
    return det_mod(work, e, red, f, inv_table);
  };
  if (prefix_dim > 0) {
    out.candidates += for_each_projective(f, prefix_dim, [&](const std::vector<PrimeField::Element>& c) {
      for (int i = 0; i < prefix_dim; ++i) coeffs[i] = c[i];
      coeffs[e - 1] = 0;
      std::fill(base.begin(), base.end(), 0);
      for (int i = 0; i < prefix_dim; ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < e * e; ++j) base[j] = red(base[j] + red(coeffs[i] * comp[0][i][j]));
      }
      if (!interpolate) {
        for (std::uint64_t t = 0; t < p && !done; ++t) {
          if (det_at(t) != 0) continue;
          coeffs[e - 1] = t;
          check_candidate(coeffs);
        }
        return done;
      }
      std::fill(poly.begin(), poly.end(), 0);
      for (std::size_t j = 0; j < nodes; ++j) {
        const std::uint64_t v = det_at(j);
        if (v == 0) continue;
        for (std::size_t d = 0; d < nodes; ++d) poly[d] = red(poly[d] + red(v * lagrange[j][d]));
      }
      for (std::uint64_t t = 0; t < p && !done; ++t) {
        std::uint64_t acc = 0;
        if (table) {
          const std::uint64_t* pw = &powers[t * nodes];
          for (std::size_t d = 0; d < nodes; ++d) acc += poly[d] * pw[d];
          acc %= p;
        } else {
          for (std::size_t d = nodes; d-- > 0;) acc = (acc * t + poly[d]) % p;
        }
        if (acc != 0) continue;
        coeffs[e - 1] = t;
        check_candidate(coeffs);
      }
      return done;
    }) * p;
  }
  if (!done) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[e - 1] = 1;
    ++out.candidates;
    auto a = combination(0, coeffs);
    if (det_mod(a, e, red, f, inv_table) == 0) check_candidate(coeffs);
  }
  return out;
}

template <Field K>
Grid<K> witness_matrix(const RingPtr<K>& w, int n) {
  if (n < 1 || w->nvars() < n) throw Error(ErrorCode::invalid_argument, "witness matrix needs n variables");
  Grid<K> m(n, std::vector<Polynomial<K>>(n, Polynomial<K>(w)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j >= 4 && i + j <= n + 3) m[i - 1][j - 1] = Polynomial<K>::variable(w, i + j - 4);
  return m;
}

template <Field K>
std::vector<Polynomial<K>> witness_quadrics(const RingPtr<K>& x, int n) {
  if (n < 1 || x->nvars() < n) throw Error(ErrorCode::invalid_argument, "witness quadrics need n variables");
  const K& k = x->field();
  std::vector<Polynomial<K>> out;
  for (int h = 1; h <= n; ++h) {
    Matrix<K> e(k, x->nvars(), x->nvars());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i + j == h + 3) e(i - 1, j - 1) = k.one();
    out.push_back(quadric_from_hessian(x, e));
  }
  return out;
}

template <Field K>
bool witness_matrix_check(const K& field, int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "witness matrices need n >= 2");
  auto w = make_polynomial_ring(field, n, MonomialOrder::grevlex, prefixed_names("w", n));
  const auto i3 = minors3(witness_matrix(w, n));
  if (i3.empty()) return false;
  return is_irrelevant_primary(i3).primary;
}

namespace {

template <Field K>
std::vector<std::string> format_all(const K& f, const std::vector<typename K::Element>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(f.format(c));
  return out;
}

template <Field K>
void record_pair(TrialRecord& rec, const std::vector<Polynomial<K>>& forms, const std::vector<typename K::Element>& b) {
  const auto w = build_exact_pair(forms, b);
  rec.witness_field = forms.front().field().name();
  rec.witness = format_all(forms.front().field(), b);
  rec.pencil_element = w.pencil_element.to_string();
  rec.x = w.x.to_string();
  rec.y = w.y.to_string();
  rec.pair_verified = true;
}

}  // namespace

ExperimentReport run_experiment(int n, std::uint32_t p, std::size_t trials, std::uint64_t seed,
                                const ExperimentOptions& options) {
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "need at least one trial");
  const PrimeField fp(p);
  if (p == 2) throw Error(ErrorCode::unsupported_characteristic, "quadric experiments need an odd prime");
  ExperimentReport rep;
  rep.n = n;
  rep.prime = p;
  rep.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    TrialRecord rec;
    rec.index = t;
    Rng rng = derived_stream(seed, t);
    auto s = sample_quadrics(n, fp, rng);
    while (!is_regular_sequence(s.forms)) {
      if (++rec.discards > options.max_resamples)
        throw Error(ErrorCode::bounds_too_small, "no regular sequence within the resample bound");
      s = sample_quadrics(n, fp, rng);
    }
    rec.regular = true;
    for (const auto& f : s.forms) rec.forms.push_back(f.to_string());

    if (options.x_test) {
      const auto x = pencil_reducible_search(s.forms, PencilMode::exact);
      rec.x_test_reducible = x.exists;
      if (x.x_test && x.x_test->witness_degree) rec.x_test_witness_degree = x.x_test->witness_degree;
    }

    const bool expect_pair = n <= 4;
    if (expect_pair || (rec.x_test_reducible && *rec.x_test_reducible)) {
      bool built = false;
      if (n <= 3) {
        // Split pencil element over F_p, if any.
        std::vector<Matrix<PrimeField>> hs;
        for (const auto& f : s.forms) hs.push_back(hessian(f));
        for_each_projective(fp, n, [&](const std::vector<PrimeField::Element>& b) {
          if (rank(combine(fp, hs, b)) > 2) return false;
          Polynomial<PrimeField> q(s.ring);
          for (int h = 0; h < n; ++h) q += s.forms[h].scale(b[h]);
          if (!factor_rank2_quadric(q).factors) return false;
          record_pair(rec, s.forms, b);
          return built = true;
        });
      }
      if (!built) {
        const auto pt = pencil_point_over_extension(s.forms, rng);
        if (pt) {
          auto ering = make_polynomial_ring(pt->field, n);
          std::vector<Polynomial<ExtensionField>> lifted;
          for (const auto& f : s.forms) lifted.push_back(lift_to_extension(f, ering));
          record_pair(rec, lifted, pt->b);
          built = true;
        } else {
          rec.note = "pencil point not found in shape position";
        }
      }
    }

    if (n >= 5 && options.linear_search) {
      auto ring = QuotientRing<PrimeField>::build(s.ring, s.forms);
      const auto sieve = linear_exact_zero_divisors(ring, rng, 1);
      rec.linear_candidates = sieve.candidates;
      rec.linear_survivors = sieve.survivors;
      rec.exact_zero_divisors = sieve.pairs.size();
      if (!sieve.pairs.empty()) {
        rec.x = sieve.pairs.front().x.to_string();
        rec.y = sieve.pairs.front().y.to_string();
      }
    }

    rep.discards += static_cast<std::size_t>(rec.discards);
    if (rec.regular) ++rep.regular;
    if (rec.pair_verified) ++rep.pairs_verified;
    const bool ezd = rec.pair_verified || rec.exact_zero_divisors > 0;
    if (ezd) ++rep.trials_with_exact_zero_divisor;
    if (n >= 5 && (ezd || (rec.x_test_reducible && *rec.x_test_reducible))) {
      ++rep.anomalies;
      if (rec.note.empty()) rec.note = "anomaly: exact zero-divisor or reducible pencil at n >= 5";
    }
    rep.trials.push_back(std::move(rec));
  }
  return rep;
}

#define QCI_INSTANTIATE(K)                                                                                    \
  template bool is_regular_sequence<K>(const std::vector<Polynomial<K>>&);                                   \
  template bool quadric_irreducible<K>(const Polynomial<K>&);                                                \
  template Grid<K> pencil_matrix<K>(const std::vector<Polynomial<K>>&, const RingPtr<K>&);                   \
  template std::vector<Polynomial<K>> minors3<K>(const Grid<K>&);                                            \
  template PencilResult<K> pencil_reducible_search<K>(const std::vector<Polynomial<K>>&, PencilMode);        \
  template LinearFactorization<K> factor_rank2_quadric<K>(const Polynomial<K>&);                             \
  template ExactPairWitness<K> build_exact_pair<K>(const std::vector<Polynomial<K>>&,                        \
                                                   const std::vector<typename K::Element>&);                 \
  template Grid<K> witness_matrix<K>(const RingPtr<K>&, int);                                                \
  template std::vector<Polynomial<K>> witness_quadrics<K>(const RingPtr<K>&, int);                           \
  template bool witness_matrix_check<K>(const K&, int);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
