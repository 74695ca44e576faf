#include "qci/quotient.hpp"

#include <algorithm>
#include <unordered_map>

#include "qci/error.hpp"

namespace qci {

namespace {

template <Field K>
typename QuotientRing<K>::Sparse sparsify(const K& f, const std::vector<typename K::Element>& v) {
  typename QuotientRing<K>::Sparse s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

template <Field K>
QuotientRing<K>::QuotientRing(GroebnerBasis<K> gb, std::vector<Polynomial<K>> presentation)
    : gb_(std::move(gb)), presentation_(std::move(presentation)) {
  const K& f = field();
  for (int d = 0;; ++d) {
    offsets_.push_back(basis_.size());
    auto mons = gb_.standard_monomials(d);
    if (mons.empty()) break;
    basis_.insert(basis_.end(), mons.begin(), mons.end());
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index.emplace(basis_[i], i);
  const std::size_t n = basis_.size();

  var_columns_.assign(nvars(), std::vector<Sparse>(n));
  for (int k = 0; k < nvars(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Monomial m = basis_[j] * Monomial::variable(k);
      if (auto it = index.find(m); it != index.end()) {
        var_columns_[k][j] = {{it->second, f.one()}};
      } else {
        var_columns_[k][j] = sparsify(f, coordinates(Polynomial<K>::term(polynomial_ring(), m, f.one())));
      }
    }
  }

  table_.assign(n * n, Sparse{});
  for (std::size_t j = 0; j < n; ++j) {
    if (basis_[j].is_one()) {
      for (std::size_t i = 0; i < n; ++i) table_[i * n + j] = {{i, f.one()}};
      continue;
    }
    const int k = basis_[j].last_variable();
    const std::size_t jp = index.at(basis_[j] / Monomial::variable(k));
    for (std::size_t i = 0; i < n; ++i) {
      Vector acc(n, f.zero());
      for (const auto& [t, c] : table_[i * n + jp])
        for (const auto& [s, e] : var_columns_[k][t]) acc[s] = f.add(acc[s], f.mul(c, e));
      table_[i * n + j] = sparsify(f, acc);
    }
  }
}

template <Field K>
QuotientPtr<K> QuotientRing<K>::from_basis(GroebnerBasis<K> gb, std::vector<Polynomial<K>> presentation) {
  if (gb.is_unit_ideal()) throw Error(ErrorCode::invalid_argument, "quotient by the unit ideal");
  const int ray = gb.infinite_ray();
  if (ray >= 0)
    throw Error(ErrorCode::non_artinian, "quotient is not artinian: no power of " +
                                             gb.ring()->names()[ray] + " lies in the ideal");
  return QuotientPtr<K>(new QuotientRing(std::move(gb), std::move(presentation)));
}

template <Field K>
QuotientPtr<K> QuotientRing<K>::build(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens) {
  for (const auto& g : gens)
    if (!g.is_zero() && !g.is_homogeneous())
      throw Error(ErrorCode::not_homogeneous, "generator is not homogeneous: " + g.to_string());
  return from_basis(buchberger(ring, gens), gens);
}

template <Field K>
QuotientPtr<K> QuotientRing<K>::build(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw Error(ErrorCode::invalid_argument, "quotient needs at least one generator");
  return build(gens.front().ring(), gens);
}

template <Field K>
std::size_t QuotientRing<K>::begin(int d) const noexcept {
  if (d < 0) return 0;
  if (d >= static_cast<int>(offsets_.size())) return basis_.size();
  return offsets_[d];
}

template <Field K>
std::size_t QuotientRing<K>::end(int d) const noexcept {
  return begin(d + 1);
}

template <Field K>
std::vector<std::size_t> QuotientRing<K>::hilbert_series() const {
  std::vector<std::size_t> h;
  for (int d = 0; d <= top_degree(); ++d) h.push_back(end(d) - begin(d));
  return h;
}

template <Field K>
std::optional<std::size_t> QuotientRing<K>::index_of(const Monomial& m) const {
  const std::size_t b = begin(m.degree()), e = end(m.degree());
  for (std::size_t i = b; i < e; ++i)
    if (basis_[i] == m) return i;
  return std::nullopt;
}

template <Field K>
typename QuotientRing<K>::Vector QuotientRing<K>::coordinates(const Polynomial<K>& poly) const {
  Vector v = zero_vector();
  const Polynomial<K> nf = gb_.normal_form(poly);
  for (const auto& t : nf.terms()) {
    auto idx = index_of(t.monomial);
    if (!idx) throw Error(ErrorCode::internal_inconsistency, "normal form left a non-standard monomial");
    v[*idx] = t.coeff;
  }
  return v;
}

template <Field K>
Polynomial<K> QuotientRing<K>::to_polynomial(const Vector& v) const {
  std::vector<typename Polynomial<K>::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field().is_zero(v[i])) terms.push_back({basis_[i], v[i]});
  return Polynomial<K>::from_terms(polynomial_ring(), std::move(terms));
}

template <Field K>
typename QuotientRing<K>::Vector QuotientRing<K>::multiply(const Vector& a, const Vector& b) const {
  const K& f = field();
  const std::size_t n = dim();
  Vector r = zero_vector();
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f.is_zero(b[j])) continue;
      const auto c = f.mul(a[i], b[j]);
      for (const auto& [s, e] : table_[i * n + j]) r[s] = f.add(r[s], f.mul(c, e));
    }
  }
  return r;
}

template <Field K>
typename QuotientRing<K>::Vector QuotientRing<K>::multiply_variable(int var, const Vector& a) const {
  const K& f = field();
  Vector r = zero_vector();
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (f.is_zero(a[t])) continue;
    for (const auto& [s, e] : var_columns_[var][t]) r[s] = f.add(r[s], f.mul(a[t], e));
  }
  return r;
}

template <Field K>
Matrix<K> QuotientRing<K>::multiplication_matrix(const Vector& a) const {
  const K& f = field();
  const std::size_t n = dim();
  Matrix<K> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [s, e] : table_[i * n + j]) m(s, j) = f.add(m(s, j), f.mul(a[i], e));
  }
  return m;
}

// --------------------------------------------------------------- RingElement

template <Field K>
RingElement<K>::RingElement(QuotientPtr<K> ring, Vector coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_->dim()) throw Error(ErrorCode::invalid_argument, "coordinate vector has wrong length");
}

template <Field K>
RingElement<K> RingElement<K>::zero(QuotientPtr<K> ring) {
  auto v = ring->zero_vector();
  return RingElement(std::move(ring), std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::one(QuotientPtr<K> ring) {
  auto v = ring->zero_vector();
  v[0] = ring->field().one();
  return RingElement(std::move(ring), std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::variable(QuotientPtr<K> ring, int var) {
  auto v = ring->coordinates(Polynomial<K>::variable(ring->polynomial_ring(), var));
  return RingElement(std::move(ring), std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::from_polynomial(QuotientPtr<K> ring, const Polynomial<K>& f) {
  auto v = ring->coordinates(f);
  return RingElement(std::move(ring), std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::parse(QuotientPtr<K> ring, std::string_view text) {
  return from_polynomial(ring, parse_polynomial(ring->polynomial_ring(), text));
}

template <Field K>
bool RingElement<K>::is_zero() const {
  return is_zero_vector(ring_->field(), coords_);
}

template <Field K>
bool RingElement<K>::is_unit() const {
  return !ring_->field().is_zero(coords_[0]);
}

template <Field K>
int RingElement<K>::lowest_degree() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!ring_->field().is_zero(coords_[i])) return ring_->degree_of(i);
  return -1;
}

template <Field K>
bool RingElement<K>::is_homogeneous() const {
  int d = -1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (ring_->field().is_zero(coords_[i])) continue;
    if (d >= 0 && ring_->degree_of(i) != d) return false;
    d = ring_->degree_of(i);
  }
  return true;
}

template <Field K>
int RingElement<K>::degree() const {
  if (!is_homogeneous() || is_zero())
    throw Error(ErrorCode::not_homogeneous, "degree of a zero or inhomogeneous element");
  return lowest_degree();
}

template <Field K>
RingElement<K> RingElement<K>::operator+(const RingElement& o) const {
  Vector v = coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring_->field().add(v[i], o.coords_[i]);
  return RingElement(ring_, std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::operator-(const RingElement& o) const {
  Vector v = coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring_->field().sub(v[i], o.coords_[i]);
  return RingElement(ring_, std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::operator-() const {
  Vector v = coords_;
  for (auto& x : v) x = ring_->field().neg(x);
  return RingElement(ring_, std::move(v));
}

template <Field K>
RingElement<K> RingElement<K>::operator*(const RingElement& o) const {
  return RingElement(ring_, ring_->multiply(coords_, o.coords_));
}

template <Field K>
RingElement<K> RingElement<K>::scale(const Element& c) const {
  Vector v = coords_;
  for (auto& x : v) x = ring_->field().mul(x, c);
  return RingElement(ring_, std::move(v));
}

// ----------------------------------------------------------------- RingIdeal

template <Field K>
RingIdeal<K>::RingIdeal(QuotientPtr<K> ring, Subspace<K> space) : ring_(std::move(ring)), space_(std::move(space)) {}

template <Field K>
RingIdeal<K> RingIdeal<K>::generated_by(QuotientPtr<K> ring, const std::vector<RingElement<K>>& gens) {
  Subspace<K> s(ring->field(), ring->dim());
  for (const auto& g : gens) {
    const Matrix<K> m = ring->multiplication_matrix(g.coordinates());
    for (std::size_t j = 0; j < ring->dim(); ++j) s.add(m.column(j));
  }
  return RingIdeal(std::move(ring), std::move(s));
}

template <Field K>
RingIdeal<K> RingIdeal<K>::zero(QuotientPtr<K> ring) {
  Subspace<K> s(ring->field(), ring->dim());
  return RingIdeal(std::move(ring), std::move(s));
}

template <Field K>
RingIdeal<K> RingIdeal<K>::whole(QuotientPtr<K> ring) {
  auto s = Subspace<K>::whole(ring->field(), ring->dim());
  return RingIdeal(std::move(ring), std::move(s));
}

template <Field K>
RingIdeal<K> RingIdeal<K>::maximal_power(QuotientPtr<K> ring, int k) {
  const K& f = ring->field();
  Subspace<K> s(f, ring->dim());
  for (std::size_t i = ring->begin(std::max(k, 0)); i < ring->dim(); ++i) {
    Vector v(ring->dim(), f.zero());
    v[i] = f.one();
    s.add(v);
  }
  return RingIdeal(std::move(ring), std::move(s));
}

template <Field K>
std::vector<std::size_t> RingIdeal<K>::hilbert_function() const {
  std::vector<std::size_t> h(ring_->top_degree() + 1, 0);
  for (auto p : space_.pivots()) ++h[ring_->degree_of(p)];
  return h;
}

template <Field K>
std::vector<std::size_t> RingIdeal<K>::quotient_hilbert() const {
  auto h = ring_->hilbert_series();
  const auto j = hilbert_function();
  for (std::size_t d = 0; d < h.size(); ++d) h[d] -= j[d];
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

template <Field K>
RingIdeal<K> RingIdeal<K>::m_times() const {
  Subspace<K> s(ring_->field(), ring_->dim());
  for (const auto& v : space_.basis())
    for (int k = 0; k < ring_->nvars(); ++k) s.add(ring_->multiply_variable(k, v));
  return RingIdeal(ring_, std::move(s));
}

template <Field K>
RingIdeal<K> RingIdeal<K>::operator+(const RingIdeal& o) const {
  return RingIdeal(ring_, space_.sum(o.space_));
}

template <Field K>
RingIdeal<K> RingIdeal<K>::operator*(const RingIdeal& o) const {
  std::vector<RingElement<K>> prods;
  const auto a = minimal_generators();
  const auto b = o.minimal_generators();
  for (const auto& x : a)
    for (const auto& y : b) prods.push_back(x * y);
  return generated_by(ring_, prods);
}

template <Field K>
RingIdeal<K> RingIdeal<K>::power(int k) const {
  RingIdeal r = whole(ring_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

template <Field K>
std::vector<RingElement<K>> RingIdeal<K>::minimal_generators() const {
  Subspace<K> w = m_times().space_;
  std::vector<RingElement<K>> gens;
  for (const auto& v : space_.basis())
    if (w.add(v)) gens.emplace_back(ring_, v);
  return gens;
}

template <Field K>
std::size_t RingIdeal<K>::nu() const {
  return dim() - m_times().dim();
}

// ------------------------------------------------------------ free functions

template <Field K>
RingIdeal<K> colon_ideal(const RingIdeal<K>& j, const RingIdeal<K>& l) {
  const auto& ring = j.ring();
  const K& f = ring->field();
  const std::size_t n = ring->dim();
  const auto free = j.space().free_columns();
  const auto gens = l.minimal_generators();
  Matrix<K> big(f, free.size() * gens.size(), n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix<K> m = ring->multiplication_matrix(gens[g].coordinates());
    for (std::size_t i = 0; i < n; ++i) {
      // r = b_i maps to b_i * g, which is column i of m.
      const auto residue = j.space().reduce(m.column(i));
      for (std::size_t c = 0; c < free.size(); ++c) big(g * free.size() + c, i) = residue[free[c]];
    }
  }
  return RingIdeal<K>(ring, Subspace<K>::from_matrix_rows(nullspace(big)));
}

template <Field K>
RingIdeal<K> annihilator(const RingElement<K>& x) {
  return colon_ideal(RingIdeal<K>::zero(x.ring()), RingIdeal<K>::generated_by(x.ring(), {x}));
}

template <Field K>
RingIdeal<K> annihilator(const RingIdeal<K>& l) {
  return colon_ideal(RingIdeal<K>::zero(l.ring()), l);
}

template <Field K>
RingIdeal<K> socle(const QuotientPtr<K>& ring) {
  return colon_ideal(RingIdeal<K>::zero(ring), RingIdeal<K>::maximal_power(ring, 1));
}

template <Field K>
std::optional<RingElement<K>> is_exact_zero_divisor(const RingElement<K>& x) {
  if (x.is_zero()) throw Error(ErrorCode::invalid_argument, "exact zero-divisor test on zero");
  if (x.is_unit()) throw Error(ErrorCode::invalid_argument, "exact zero-divisor test on a unit");
  const auto ann = annihilator(x);
  const auto gens = ann.minimal_generators();
  if (gens.size() != 1) return std::nullopt;
  const RingElement<K>& y = gens.front();
  const auto xr = RingIdeal<K>::generated_by(x.ring(), {x});
  if (!(annihilator(y) == xr)) return std::nullopt;
  if (x.is_homogeneous() && y.is_homogeneous()) {
    // (0:x) = yR is isomorphic to R/(x) shifted by deg y.
    const auto h_ann = ann.hilbert_function();
    const auto h_quot = xr.quotient_hilbert();
    const int shift = y.degree();
    for (int d = 0; d < static_cast<int>(h_ann.size()); ++d) {
      const int e = d - shift;
      const std::size_t expected = (e >= 0 && e < static_cast<int>(h_quot.size())) ? h_quot[e] : 0;
      if (h_ann[d] != expected) return std::nullopt;
    }
  }
  return y;
}

template <Field K>
QuotientPtr<K> quotient_by(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& gens) {
  std::vector<Polynomial<K>> all = ring->groebner_basis().generators();
  for (const auto& g : gens) all.push_back(g.to_polynomial());
  std::vector<Polynomial<K>> presentation = ring->presentation();
  for (const auto& g : gens) presentation.push_back(g.to_polynomial());
  return QuotientRing<K>::from_basis(buchberger(ring->polynomial_ring(), all), std::move(presentation));
}

#define QCI_INSTANTIATE(K)                                                                   \
  template class QuotientRing<K>;                                                           \
  template class RingElement<K>;                                                            \
  template class RingIdeal<K>;                                                              \
  template RingIdeal<K> colon_ideal<K>(const RingIdeal<K>&, const RingIdeal<K>&);           \
  template RingIdeal<K> annihilator<K>(const RingElement<K>&);                              \
  template RingIdeal<K> annihilator<K>(const RingIdeal<K>&);                                \
  template RingIdeal<K> socle<K>(const QuotientPtr<K>&);                                    \
  template std::optional<RingElement<K>> is_exact_zero_divisor<K>(const RingElement<K>&);   \
  template QuotientPtr<K> quotient_by<K>(const QuotientPtr<K>&, const std::vector<RingElement<K>>&);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
