#include "qci/homotopy.hpp"

#include <algorithm>
#include <sstream>

#include "qci/error.hpp"

namespace qci {

// ------------------------------------------------------------ power series

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs, int precision) : c_(std::move(coeffs)), precision_(precision) {
  if (precision < 0) throw Error(ErrorCode::malformed_series, "negative precision");
  c_.resize(static_cast<std::size_t>(precision), mpq_class(0));
}

PowerSeries PowerSeries::polynomial(const std::vector<long>& coeffs, int precision) {
  std::vector<mpq_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return PowerSeries(std::move(c), precision);
}

const mpq_class& PowerSeries::operator[](int i) const {
  if (i < 0 || i >= precision_)
    throw Error(ErrorCode::malformed_series, "coefficient " + std::to_string(i) + " is beyond the precision " +
                                                 std::to_string(precision_));
  return c_[i];
}

std::vector<long> PowerSeries::integers() const {
  std::vector<long> out;
  for (int i = 0; i < precision_; ++i) {
    if (c_[i].get_den() != 1 || !c_[i].get_num().fits_slong_p())
      throw Error(ErrorCode::malformed_series, "coefficient of z^" + std::to_string(i) + " is not a machine integer");
    out.push_back(c_[i].get_num().get_si());
  }
  return out;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const int p = std::min(precision_, o.precision_);
  std::vector<mpq_class> c(p);
  for (int i = 0; i < p; ++i) c[i] = c_[i] + o.c_[i];
  return PowerSeries(std::move(c), p);
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  const int p = std::min(precision_, o.precision_);
  std::vector<mpq_class> c(p);
  for (int i = 0; i < p; ++i) c[i] = c_[i] - o.c_[i];
  return PowerSeries(std::move(c), p);
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const int p = std::min(precision_, o.precision_);
  std::vector<mpq_class> c(p, mpq_class(0));
  for (int i = 0; i < p; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; i + j < p; ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return PowerSeries(std::move(c), p);
}

PowerSeries PowerSeries::inverse() const {
  if (precision_ == 0 || sgn(c_[0]) == 0)
    throw Error(ErrorCode::malformed_series, "series with zero constant term is not invertible");
  std::vector<mpq_class> b(precision_);
  const mpq_class inv0 = 1 / c_[0];
  b[0] = inv0;
  for (int k = 1; k < precision_; ++k) {
    mpq_class s = 0;
    for (int j = 1; j <= k; ++j) s += c_[j] * b[k - j];
    b[k] = -s * inv0;
  }
  return PowerSeries(std::move(b), precision_);
}

PowerSeries PowerSeries::alternate() const {
  PowerSeries out = *this;
  for (int i = 1; i < precision_; i += 2) out.c_[i] = -out.c_[i];
  return out;
}

PowerSeries PowerSeries::truncate(int precision) const {
  return PowerSeries(std::vector<mpq_class>(c_.begin(), c_.begin() + std::min(precision, precision_)),
                     std::min(precision, precision_));
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < precision_; ++i) {
    if (sgn(c_[i]) == 0) continue;
    mpq_class a = abs(c_[i]);
    if (first)
      os << (sgn(c_[i]) < 0 ? "-" : "");
    else
      os << (sgn(c_[i]) < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  os << " + O(z^" << precision_ << ")";
  return os.str();
}

PowerSeries poincare_from_koszul(const PowerSeries& hilbert, int precision) {
  if (hilbert.precision() == 0 || hilbert[0] != 1)
    throw Error(ErrorCode::malformed_series, "Hilbert series must start with 1");
  // The Hilbert series of an artinian ring is a polynomial.
  return PowerSeries(hilbert.coefficients(), precision).alternate().inverse();
}

namespace {

// q *= (1 + s z^i)
void mul_binomial(std::vector<mpq_class>& q, int i, int s) {
  for (int k = static_cast<int>(q.size()) - 1; k >= i; --k) q[k] += s * q[k - i];
}

// q /= (1 + s z^i)
void div_binomial(std::vector<mpq_class>& q, int i, int s) {
  for (int k = i; k < static_cast<int>(q.size()); ++k) q[k] -= s * q[k - i];
}

// q *= (1 + s z^i)^e for any integer e.
void apply_factor(std::vector<mpq_class>& q, int i, int s, long e) {
  for (long t = 0; t < std::labs(e); ++t) e > 0 ? mul_binomial(q, i, s) : div_binomial(q, i, s);
}

}  // namespace

std::vector<long> deviations(const PowerSeries& p, int m) {
  if (p.precision() < m + 1)
    throw Error(ErrorCode::malformed_series, "series precision " + std::to_string(p.precision()) +
                                                 " is too small for " + std::to_string(m) + " deviations");
  if (p[0] != 1) throw Error(ErrorCode::malformed_series, "Poincare series must start with 1");
  std::vector<mpq_class> q(p.coefficients().begin(), p.coefficients().begin() + m + 1);
  std::vector<long> eps;
  for (int i = 1; i <= m; ++i) {
    const mpq_class& c = q[i];
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw Error(ErrorCode::malformed_series, "deviation " + std::to_string(i) + " is not an integer: " + c.get_str());
    const long e = c.get_num().get_si();
    eps.push_back(e);
    // Odd i: P has the factor (1 + z^i)^e; even i: (1 - z^i)^{-e}.
    if (i % 2)
      apply_factor(q, i, 1, -e);
    else
      apply_factor(q, i, -1, e);
  }
  return eps;
}

PowerSeries series_from_deviations(const std::vector<long>& eps, int precision) {
  std::vector<mpq_class> q(precision, mpq_class(0));
  if (precision > 0) q[0] = 1;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    if (i % 2)
      apply_factor(q, i, 1, eps[k]);
    else
      apply_factor(q, i, -1, -eps[k]);
  }
  return PowerSeries(std::move(q), precision);
}

// ---------------------------------------------------------- quadratic dual

template <Field K>
QuadraticDual<K> QuadraticDual<K>::build(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& relations) {
  const K& f = ring->field();
  if (f.characteristic() == 2)
    throw Error(ErrorCode::unsupported_characteristic, "quadratic dual is not supported in characteristic 2");
  const int n = ring->nvars();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  QuadraticDual d(f, n);
  std::vector<Vector> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector v(n2, f.zero());
      v[i * n + j] = f.one();
      v[j * n + i] = f.neg(f.one());
      rel.push_back(std::move(v));
    }
  const auto half = f.inv(f.from_int(2));
  for (const auto& q : relations) {
    if (q.is_zero()) continue;
    if (!q.is_homogeneous() || q.total_degree() != 2)
      throw Error(ErrorCode::not_quadratic, "relation is not a quadratic form: " + q.to_string());
    Vector v(n2, f.zero());
    for (const auto& t : q.terms()) {
      std::vector<int> idx;
      for (int k = 0; k < n; ++k)
        for (int e = 0; e < t.monomial[k]; ++e) idx.push_back(k);
      if (idx[0] == idx[1]) {
        v[idx[0] * n + idx[0]] = f.add(v[idx[0] * n + idx[0]], t.coeff);
      } else {
        const auto c = f.mul(t.coeff, half);
        v[idx[0] * n + idx[1]] = f.add(v[idx[0] * n + idx[1]], c);
        v[idx[1] * n + idx[0]] = f.add(v[idx[1] * n + idx[0]], c);
      }
    }
    rel.push_back(std::move(v));
  }
  Matrix<K> rm(f, rel.size(), n2);
  for (std::size_t r = 0; r < rel.size(); ++r)
    for (std::size_t c = 0; c < n2; ++c) rm(r, c) = rel[r][c];
  d.perp2_ = Subspace<K>::from_matrix_rows(nullspace(rm));
  d.basis2_ = d.perp2_.free_columns();

  const std::size_t n3 = n2 * n;
  const auto& perp = d.perp2_.basis();
  Matrix<K> m3(f, 2 * perp.size() * n, n3);
  std::size_t row = 0;
  for (const auto& r : perp)
    for (int k = 0; k < n; ++k) {
      for (std::size_t ij = 0; ij < n2; ++ij) {
        if (f.is_zero(r[ij])) continue;
        m3(row, ij * n + k) = r[ij];
        m3(row + 1, k * n2 + ij) = r[ij];
      }
      row += 2;
    }
  d.rel3_ = Subspace<K>::from_matrix_rows(m3);
  d.basis3_ = d.rel3_.free_columns();
  return d;
}

template <Field K>
std::vector<std::size_t> QuadraticDual<K>::dims() const {
  return {static_cast<std::size_t>(n_), basis2_.size(), basis3_.size()};
}

template <Field K>
typename QuadraticDual<K>::Vector QuadraticDual<K>::reduce2(const Vector& tensor) const {
  const auto r = perp2_.reduce(tensor);
  Vector out;
  for (auto c : basis2_) out.push_back(r[c]);
  return out;
}

template <Field K>
typename QuadraticDual<K>::Vector QuadraticDual<K>::reduce3(const Vector& tensor) const {
  const auto r = rel3_.reduce(tensor);
  Vector out;
  for (auto c : basis3_) out.push_back(r[c]);
  return out;
}

template <Field K>
typename QuadraticDual<K>::Vector QuadraticDual<K>::multiply11(int i, int j) const {
  Vector t(static_cast<std::size_t>(n_) * n_, field_.zero());
  t[i * n_ + j] = field_.one();
  return reduce2(t);
}

template <Field K>
typename QuadraticDual<K>::Vector QuadraticDual<K>::multiply12(int i, const Vector& b) const {
  const std::size_t n2 = static_cast<std::size_t>(n_) * n_;
  Vector t(n2 * n_, field_.zero());
  for (std::size_t k = 0; k < basis2_.size(); ++k) t[i * n2 + basis2_[k]] = b[k];
  return reduce3(t);
}

template <Field K>
typename QuadraticDual<K>::Vector QuadraticDual<K>::multiply21(const Vector& b, int i) const {
  const std::size_t n2 = static_cast<std::size_t>(n_) * n_;
  Vector t(n2 * n_, field_.zero());
  for (std::size_t k = 0; k < basis2_.size(); ++k) t[basis2_[k] * n_ + i] = b[k];
  return reduce3(t);
}

template <Field K>
bool QuadraticDual<K>::check_associativity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        const auto l = multiply21(multiply11(i, j), k);
        const auto r = multiply12(i, multiply11(j, k));
        for (std::size_t c = 0; c < l.size(); ++c)
          if (!field_.equal(l[c], r[c])) return false;
      }
  return true;
}

template <Field K>
std::string QuadraticDual<K>::basis_label2(std::size_t idx) const {
  const auto t = basis2_.at(idx);
  return "t" + std::to_string(t / n_ + 1) + "*t" + std::to_string(t % n_ + 1);
}

template <Field K>
CenterResult<K> degree2_center(const QuadraticDual<K>& dual) {
  const K& f = dual.field();
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw Error(ErrorCode::unsupported_characteristic, "degree-2 center is not supported in characteristic " +
                                                           std::to_string(f.characteristic()));
  const int n = dual.nvars();
  const std::size_t d2 = dual.basis2().size(), d3 = dual.basis3().size();
  Matrix<K> m(f, n * d3, d2);
  for (std::size_t b = 0; b < d2; ++b) {
    std::vector<typename K::Element> e(d2, f.zero());
    e[b] = f.one();
    for (int k = 0; k < n; ++k) {
      const auto l = dual.multiply21(e, k), r = dual.multiply12(k, e);
      for (std::size_t c = 0; c < d3; ++c) m(k * d3 + c, b) = f.sub(l[c], r[c]);
    }
  }
  CenterResult<K> out;
  const auto ns = nullspace(m);
  for (std::size_t r = 0; r < ns.rows(); ++r) out.basis.push_back(ns.row(r));
  out.dim = out.basis.size();
  return out;
}

// ------------------------------------------------------------ resolutions

std::size_t BettiTable::at(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(beta.size()) || j < 0 || j >= static_cast<int>(beta[i].size())) return 0;
  return beta[i][j];
}

std::size_t BettiTable::total(int i) const {
  std::size_t t = 0;
  if (i >= 0 && i < static_cast<int>(beta.size()))
    for (auto x : beta[i]) t += x;
  return t;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < beta.size(); ++i) out.push_back(total(static_cast<int>(i)));
  return out;
}

std::string BettiTable::to_string() const {
  int rows = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta[i].size(); ++j)
      if (beta[i][j] && static_cast<int>(j) - static_cast<int>(i) + 1 > rows) rows = static_cast<int>(j - i) + 1;
  std::vector<std::size_t> width(beta.size(), 1);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    width[i] = std::max<std::size_t>(std::to_string(i).size(), std::to_string(total(static_cast<int>(i))).size());
    for (auto x : beta[i]) width[i] = std::max(width[i], std::to_string(x).size());
  }
  auto cell = [](const std::string& s, std::size_t w) { return std::string(w + 1 - s.size(), ' ') + s; };
  std::ostringstream os;
  const std::size_t label = std::max<std::size_t>(6, std::to_string(rows).size() + 1);
  os << std::string(label, ' ');
  for (std::size_t i = 0; i < beta.size(); ++i) os << cell(std::to_string(i), width[i]);
  os << "\n" << std::string(label - 6, ' ') << "total:";
  for (std::size_t i = 0; i < beta.size(); ++i) os << cell(std::to_string(total(static_cast<int>(i))), width[i]);
  os << "\n";
  for (int r = 0; r < rows; ++r) {
    const std::string lab = std::to_string(r) + ":";
    os << std::string(label - lab.size(), ' ') << lab;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const std::size_t v = at(static_cast<int>(i), static_cast<int>(i) + r);
      os << cell(v ? std::to_string(v) : ".", width[i]);
    }
    os << "\n";
  }
  if (!complete) os << "(incomplete: internal degree bound reached)\n";
  return os.str();
}

namespace {

// Graded free module over an artinian ring, with k-bases per internal degree
// made of cells (generator, basis monomial).
struct FreeModule {
  std::vector<int> deg;
  int max_degree = -1;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cells;  // [d]
  std::vector<std::vector<long>> start;                                    // [d][g]

  template <Field K>
  void build(const QuotientRing<K>& r) {
    max_degree = -1;
    for (int d : deg) max_degree = std::max(max_degree, d + r.top_degree());
    cells.assign(max_degree + 1, {});
    start.assign(max_degree + 1, std::vector<long>(deg.size(), -1));
    for (int d = 0; d <= max_degree; ++d)
      for (std::size_t g = 0; g < deg.size(); ++g) {
        const int e = d - deg[g];
        if (e < 0 || e > r.top_degree()) continue;
        start[d][g] = static_cast<long>(cells[d].size());
        for (std::size_t b = r.begin(e); b < r.end(e); ++b)
          cells[d].push_back({static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(b)});
      }
  }
  std::size_t size(int d) const { return d >= 0 && d <= max_degree ? cells[d].size() : 0; }
};

template <Field K>
using Sparse = std::vector<std::pair<std::size_t, typename K::Element>>;

}  // namespace

template <Field K>
BettiTable minimal_resolution(const RingIdeal<K>& j, int hd_bound, int internal_bound) {
  using Vector = std::vector<typename K::Element>;
  const auto& ring = j.ring();
  const QuotientRing<K>& r = *ring;
  const K& f = r.field();
  if (hd_bound < 0) throw Error(ErrorCode::bounds_too_small, "negative homological degree bound");
  for (const auto& g : j.minimal_generators())
    if (!g.is_homogeneous()) throw Error(ErrorCode::not_homogeneous, "resolution needs a homogeneous ideal");
  const int n = r.nvars();
  std::vector<Sparse<K>> vars(n);
  for (int k = 0; k < n; ++k) {
    const auto c = RingElement<K>::variable(ring, k).coordinates();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!f.is_zero(c[i])) vars[k].push_back({i, c[i]});
  }
  auto in_bound = [&](int d) { return internal_bound < 0 || d <= internal_bound; };

  BettiTable table;
  FreeModule cur;
  cur.deg = {0};
  cur.build(r);
  table.beta.push_back({1});
  if (hd_bound == 0) return table;

  // Kernel of F_0 -> R/J is J, degree by degree.
  std::vector<Subspace<K>> kernel;
  for (int d = 0; d <= cur.max_degree; ++d) {
    Subspace<K> s(f, cur.size(d));
    for (std::size_t i = 0; i < j.space().dim(); ++i) {
      const auto p = j.space().pivots()[i];
      if (r.degree_of(p) != d) continue;
      const auto& row = j.space().basis()[i];
      s.add(Vector(row.begin() + r.begin(d), row.begin() + r.end(d)));
    }
    kernel.push_back(std::move(s));
  }

  for (int i = 0; i < hd_bound; ++i) {
    // Minimal generators of the kernel: independent modulo m * kernel.
    FreeModule next;
    std::vector<Vector> images;  // in cur coordinates of degree next.deg[g]
    std::vector<std::size_t> row;
    for (int d = 0; d <= cur.max_degree; ++d) {
      if (!in_bound(d)) {
        if (kernel[d].dim()) table.complete = false;
        continue;
      }
      if (kernel[d].dim() == 0) continue;
      Subspace<K> w(f, cur.size(d));
      if (d > 0)
        for (const auto& v : kernel[d - 1].basis())
          for (int k = 0; k < n; ++k) {
            Vector out(cur.size(d), f.zero());
            bool nonzero = false;
            for (std::size_t c = 0; c < v.size(); ++c) {
              if (f.is_zero(v[c])) continue;
              const auto [g, b] = cur.cells[d - 1][c];
              for (const auto& [vi, vc] : vars[k])
                for (const auto& [idx, e] : r.product(vi, b)) {
                  const auto pos = cur.start[d][g] + (idx - r.begin(d - cur.deg[g]));
                  out[pos] = f.add(out[pos], f.mul(v[c], f.mul(vc, e)));
                  nonzero = true;
                }
            }
            if (nonzero) w.add(out);
          }
      for (const auto& v : kernel[d].basis())
        if (w.add(v)) {
          // Minimality: no unit coefficient on generators of the same degree.
          for (std::size_t g = 0; g < cur.deg.size(); ++g)
            if (cur.deg[g] == d && !f.is_zero(v[cur.start[d][g]]))
              throw Error(ErrorCode::internal_inconsistency, "resolution differential has a unit entry");
          next.deg.push_back(d);
          images.push_back(v);
          if (row.size() <= static_cast<std::size_t>(d)) row.resize(d + 1, 0);
          ++row[d];
        }
    }
    table.beta.push_back(row);
    if (i + 1 == hd_bound || next.deg.empty()) {
      if (next.deg.empty())
        while (static_cast<int>(table.beta.size()) <= hd_bound) table.beta.push_back({});
      break;
    }
    next.build(r);
    std::vector<Subspace<K>> next_kernel;
    for (int d = 0; d <= next.max_degree; ++d) {
      if (!in_bound(d)) {
        next_kernel.emplace_back(f, next.size(d));
        if (next.size(d)) table.complete = false;
        continue;
      }
      Matrix<K> m(f, cur.size(d), next.size(d));
      for (std::size_t c = 0; c < next.size(d); ++c) {
        const auto [g, b] = next.cells[d][c];
        const int gd = next.deg[g];
        const auto& img = images[g];
        for (std::size_t t = 0; t < img.size(); ++t) {
          if (f.is_zero(img[t])) continue;
          const auto [h, bb] = cur.cells[gd][t];
          for (const auto& [idx, e] : r.product(b, bb)) {
            const auto pos = cur.start[d][h] + (idx - r.begin(d - cur.deg[h]));
            m(pos, c) = f.add(m(pos, c), f.mul(img[t], e));
          }
        }
      }
      next_kernel.push_back(Subspace<K>::from_matrix_rows(nullspace(m)));
    }
    cur = std::move(next);
    kernel = std::move(next_kernel);
  }
  return table;
}

template <Field K>
BettiTable residue_field_resolution(const QuotientPtr<K>& ring, int hd_bound) {
  return minimal_resolution(RingIdeal<K>::maximal_power(ring, 1), hd_bound);
}

template <Field K>
bool is_koszul_up_to(const QuotientPtr<K>& ring, int n) {
  const auto t = residue_field_resolution(ring, n);
  for (int i = 0; i <= t.max_homological_degree(); ++i)
    for (std::size_t jj = 0; jj < t.beta[i].size(); ++jj)
      if (t.beta[i][jj] && static_cast<int>(jj) != i) return false;
  return true;
}

template <Field K>
std::vector<std::size_t> ambient_betti(const QuotientPtr<K>& ring) {
  const int n = ring->nvars();
  std::vector<RingElement<K>> vars;
  for (int k = 0; k < n; ++k) vars.push_back(RingElement<K>::variable(ring, k));
  KoszulComplex<K> e(ring, vars, false, std::vector<int>(n, 1));
  std::vector<std::size_t> out;
  for (int p = 0; p <= n; ++p) {
    std::size_t h = 0;
    for (int d = 0; d <= e.max_internal_degree(); ++d) h += cycles(e, p, d).dim() - boundaries(e, p, d).dim();
    out.push_back(h);
  }
  return out;
}

template <Field K>
bool is_complete_intersection(const QuotientPtr<K>& ring) {
  for (const auto& g : ring->presentation())
    if (!g.is_zero() && g.lowest_degree() < 2)
      throw Error(ErrorCode::non_minimal_presentation,
                  "presentation is not inside the square of the maximal ideal: " + g.to_string());
  return ambient_betti(ring)[1] == static_cast<std::size_t>(ring->nvars());
}

template <Field K>
bool quotient_is_complete_intersection(const RingIdeal<K>& j) {
  const auto s = quotient_by(j.ring(), j.minimal_generators());
  return ambient_betti(s)[1] == static_cast<std::size_t>(s->nvars());
}

std::string to_string(Embeddedness e) { return e == Embeddedness::not_embedded ? "not-embedded" : "inconclusive"; }

template <Field K>
EmbeddednessReport embeddedness_obstruction(const QuotientPtr<K>& ring, const QciCertificate<K>& cert,
                                            int koszul_bound) {
  if (!is_koszul_up_to(ring, koszul_bound))
    throw Error(ErrorCode::unsupported_mode,
                "ring is not Koszul up to homological degree " + std::to_string(koszul_bound));
  EmbeddednessReport rep;
  rep.koszul_bound = koszul_bound;
  rep.complexity = static_cast<int>(cert.nu_ideal) - cert.grade;
  const auto dual = QuadraticDual<K>::build(ring->polynomial_ring(), ring->presentation());
  rep.center_dim = degree2_center(dual).dim;
  rep.verdict = static_cast<int>(rep.center_dim) < rep.complexity ? Embeddedness::not_embedded
                                                                    : Embeddedness::inconclusive;
  return rep;
}

bool LoewyReport::all_hold() const {
  for (const auto& b : {bound2, bound3, bound4, bound5})
    if (b && !*b) return false;
  return bound1;
}

template <Field K>
LoewyReport loewy_check(const RingIdeal<K>& ideal) {
  const auto& ring = ideal.ring();
  LoewyReport rep;
  const int l = ring->loewy_length();
  rep.loewy_length = l;
  rep.nu_ideal = ideal.nu();
  rep.nu_maximal = RingIdeal<K>::maximal_power(ring, 1).nu();
  rep.nu_top_power = l >= 1 ? RingIdeal<K>::maximal_power(ring, l - 1).nu() : 0;
  const auto s = quotient_by(ring, ideal.minimal_generators());
  rep.quotient_complete_intersection = ambient_betti(s)[1] == static_cast<std::size_t>(s->nvars());
  rep.quotient_gorenstein = socle(s).dim() == 1;
  const auto m2 = RingIdeal<K>::maximal_power(ring, 2);
  rep.i_cap_m2_in_mi = ideal.m_times().space().contains(ideal.space().intersect(m2.space()));
  const long nu = static_cast<long>(rep.nu_ideal);
  rep.bound1 = nu <= l - 1;
  if (!rep.quotient_complete_intersection) rep.bound2 = nu <= l - 2;
  if (nu == l - 2 && rep.i_cap_m2_in_mi) {
    const auto hs = s->hilbert_series();
    const std::size_t emb = hs.size() > 1 ? hs[1] : 0;
    rep.bound3 = emb <= rep.nu_top_power;
  }
  if (rep.quotient_gorenstein && !rep.quotient_complete_intersection) {
    if (rep.i_cap_m2_in_mi) rep.bound4 = nu <= l - 3;
    rep.bound5 = l >= 4 && (l != 4 || nu == 1);
  }
  return rep;
}

#define QCI_INSTANTIATE(K)                                                                             \
  template class QuadraticDual<K>;                                                                    \
  template CenterResult<K> degree2_center<K>(const QuadraticDual<K>&);                                \
  template BettiTable minimal_resolution<K>(const RingIdeal<K>&, int, int);                           \
  template BettiTable residue_field_resolution<K>(const QuotientPtr<K>&, int);                        \
  template bool is_koszul_up_to<K>(const QuotientPtr<K>&, int);                                       \
  template std::vector<std::size_t> ambient_betti<K>(const QuotientPtr<K>&);                          \
  template bool is_complete_intersection<K>(const QuotientPtr<K>&);                                   \
  template bool quotient_is_complete_intersection<K>(const RingIdeal<K>&);                            \
  template EmbeddednessReport embeddedness_obstruction<K>(const QuotientPtr<K>&, const QciCertificate<K>&, \
                                                          int);                                       \
  template LoewyReport loewy_check<K>(const RingIdeal<K>&);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
