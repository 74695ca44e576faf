#include "qci/koszul.hpp"

#include <algorithm>
#include <bit>
#include <type_traits>

#include "qci/error.hpp"

namespace qci {

std::vector<std::uint32_t> subsets_of_size(int m, int p) {
  std::vector<std::uint32_t> out;
  if (p < 0 || p > m) return out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    out.push_back(mask);
    int k = p - 1;
    while (k >= 0 && idx[k] == m - p + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

int popcount(std::uint32_t x) { return std::popcount(x); }

// Sign of v_S ^ v_T relative to v_{S u T}.
int wedge_sign(std::uint32_t s, std::uint32_t t) {
  int inversions = 0;
  for (std::uint32_t rest = t; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += popcount(s >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

template <Field K>
void axpy(const K& f, std::vector<typename K::Element>& y, const typename K::Element& a,
          const std::vector<typename K::Element>& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
}

template <Field K>
RingElement<K> determinant(const std::vector<std::vector<RingElement<K>>>& a, const QuotientPtr<K>& ring) {
  const std::size_t n = a.size();
  if (n == 0) return RingElement<K>::one(ring);
  if (n == 1) return a[0][0];
  RingElement<K> det = RingElement<K>::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<RingElement<K>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RingElement<K>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    const RingElement<K> term = a[0][j] * determinant(minor, ring);
    det = j % 2 ? det - term : det + term;
  }
  return det;
}

}  // namespace

template <Field K>
KoszulComplex<K>::KoszulComplex(QuotientPtr<K> ring, std::vector<RingElement<K>> sequence, bool require_minimal,
                                std::vector<int> degrees)
    : ring_(std::move(ring)), seq_(std::move(sequence)) {
  const int m = length();
  if (m > max_variables) throw Error(ErrorCode::invalid_argument, "Koszul complex on more than 16 elements");
  if (!degrees.empty() && degrees.size() != seq_.size())
    throw Error(ErrorCode::invalid_argument, "one degree per Koszul sequence entry");
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    const auto& f = seq_[i];
    if (f.is_zero()) {
      if (require_minimal || degrees.empty())
        throw Error(ErrorCode::invalid_argument, "zero element in a Koszul sequence");
      degrees_.push_back(degrees[i]);
      continue;
    }
    if (f.is_unit()) throw Error(ErrorCode::invalid_argument, "unit element in a Koszul sequence");
    if (!f.is_homogeneous())
      throw Error(ErrorCode::not_homogeneous, "Koszul sequences must be homogeneous: " + f.to_string());
    degrees_.push_back(f.degree());
    if (!degrees.empty() && degrees[i] != f.degree())
      throw Error(ErrorCode::invalid_argument, "declared degree differs from the degree of " + f.to_string());
  }
  if (require_minimal) {
    const auto ideal = RingIdeal<K>::generated_by(ring_, seq_);
    if (ideal.nu() != seq_.size())
      throw Error(ErrorCode::not_minimal, "sequence of " + std::to_string(m) +
                                              " elements is not a minimal generating set (nu = " +
                                              std::to_string(ideal.nu()) + ")");
  }
  int sum = 0;
  for (int d : degrees_) sum += d;
  max_degree_ = ring_->top_degree() + sum;
  subsets_.resize(m + 1);
  cells_.assign(m + 1, std::vector<std::vector<Cell>>(max_degree_ + 1));
  for (int p = 0; p <= m; ++p) {
    subsets_[p] = subsets_of_size(m, p);
    for (auto s : subsets_[p]) {
      const int sd = subset_degree(s);
      for (std::size_t b = 0; b < ring_->dim(); ++b) cells_[p][sd + ring_->degree_of(b)].push_back({s, b});
    }
  }
}

template <Field K>
int KoszulComplex<K>::subset_degree(std::uint32_t s) const {
  int d = 0;
  for (int i = 0; i < length(); ++i)
    if (s >> i & 1u) d += degrees_[i];
  return d;
}

template <Field K>
Matrix<K> KoszulComplex<K>::boundary(int p, int d) const {
  const K& f = ring_->field();
  const auto& src = cells(p, d);
  if (p == 0 || d > max_degree_) return Matrix<K>(f, 0, src.size());
  const auto& dst = cells(p - 1, d);
  const std::size_t n = ring_->dim();
  // Row index keyed by (mask, monomial).
  std::vector<long> lookup((std::size_t(1) << length()) * n, -1);
  for (std::size_t r = 0; r < dst.size(); ++r) lookup[dst[r].subset * n + dst[r].monomial] = static_cast<long>(r);
  Matrix<K> m(f, dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto [s, b] = src[c];
    int k = 0;
    for (int i = 0; i < length(); ++i) {
      if (!(s >> i & 1u)) continue;
      const std::uint32_t t = s & ~(1u << i);
      const auto& fi = seq_[i].coordinates();
      for (std::size_t j = 0; j < n; ++j) {
        if (f.is_zero(fi[j])) continue;
        auto coeff = k % 2 ? f.neg(fi[j]) : fi[j];
        for (const auto& [idx, e] : ring_->product(j, b)) {
          const long r = lookup[t * n + idx];
          if (r < 0) throw Error(ErrorCode::internal_inconsistency, "Koszul boundary left its internal degree");
          m(r, c) = f.add(m(r, c), f.mul(coeff, e));
        }
      }
      ++k;
    }
  }
  return m;
}

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::zero_chain(int p) const {
  return Chain{p, std::vector<Vector>(subsets_[p].size(), ring_->zero_vector())};
}

namespace {

template <class V>
std::size_t subset_index(const V& subsets, std::uint32_t mask) {
  return static_cast<std::size_t>(std::lower_bound(subsets.begin(), subsets.end(), mask,
                                                   [](std::uint32_t a, std::uint32_t b) {
                                                     // lexicographic order on index tuples
                                                     while (a && b) {
                                                       const int ia = std::countr_zero(a), ib = std::countr_zero(b);
                                                       if (ia != ib) return ia < ib;
                                                       a &= a - 1;
                                                       b &= b - 1;
                                                     }
                                                     return false;
                                                   }) -
                                  subsets.begin());
}

}  // namespace

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::boundary(const Chain& c) const {
  if (c.p == 0) return zero_chain(0);
  Chain out = zero_chain(c.p - 1);
  const K& f = ring_->field();
  for (std::size_t si = 0; si < subsets_[c.p].size(); ++si) {
    const auto s = subsets_[c.p][si];
    if (is_zero_vector(f, c.components[si])) continue;
    int k = 0;
    for (int i = 0; i < length(); ++i) {
      if (!(s >> i & 1u)) continue;
      const auto t = s & ~(1u << i);
      auto prod = ring_->multiply(seq_[i].coordinates(), c.components[si]);
      axpy(f, out.components[subset_index(subsets_[c.p - 1], t)], k % 2 ? f.neg(f.one()) : f.one(), prod);
      ++k;
    }
  }
  return out;
}

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::wedge(const Chain& a, const Chain& b) const {
  if (a.p + b.p > length()) return Chain{a.p + b.p, {}};
  Chain out = zero_chain(a.p + b.p);
  const K& f = ring_->field();
  for (std::size_t i = 0; i < subsets_[a.p].size(); ++i) {
    if (is_zero_vector(f, a.components[i])) continue;
    for (std::size_t j = 0; j < subsets_[b.p].size(); ++j) {
      const auto s = subsets_[a.p][i], t = subsets_[b.p][j];
      if (s & t) continue;
      if (is_zero_vector(f, b.components[j])) continue;
      auto prod = ring_->multiply(a.components[i], b.components[j]);
      axpy(f, out.components[subset_index(subsets_[a.p + b.p], s | t)],
           wedge_sign(s, t) < 0 ? f.neg(f.one()) : f.one(), prod);
    }
  }
  return out;
}

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::multiply(const RingElement<K>& r, const Chain& c) const {
  Chain out = c;
  for (auto& comp : out.components) comp = ring_->multiply(r.coordinates(), comp);
  return out;
}

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::multiply_variable(int var, const Chain& c) const {
  Chain out = c;
  for (auto& comp : out.components) comp = ring_->multiply_variable(var, comp);
  return out;
}

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::add(const Chain& a, const Chain& b) const {
  Chain out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i)
    axpy(ring_->field(), out.components[i], ring_->field().one(), b.components[i]);
  return out;
}

template <Field K>
bool KoszulComplex<K>::is_zero(const Chain& c) const {
  for (const auto& comp : c.components)
    if (!is_zero_vector(ring_->field(), comp)) return false;
  return true;
}

template <Field K>
typename KoszulComplex<K>::Vector KoszulComplex<K>::project(const Chain& c, int d) const {
  Vector v;
  if (d < 0 || d > max_degree_) return v;
  for (const auto& cell : cells(c.p, d))
    v.push_back(c.components[subset_index(subsets_[c.p], cell.subset)][cell.monomial]);
  return v;
}

template <Field K>
typename KoszulComplex<K>::Chain KoszulComplex<K>::lift(int p, int d, const Vector& v) const {
  Chain c = zero_chain(p);
  const auto& cl = cells(p, d);
  for (std::size_t i = 0; i < cl.size(); ++i) c.components[subset_index(subsets_[p], cl[i].subset)][cl[i].monomial] = v[i];
  return c;
}

template <Field K>
RingElement<K> KoszulComplex<K>::coefficient(const Chain& c, int i) const {
  if (c.p != 1) throw Error(ErrorCode::invalid_argument, "coefficient of a chain that is not a 1-chain");
  return RingElement<K>(ring_, c.components[i]);
}

// ---------------------------------------------------------------- homology

std::size_t BidegreeTable::total_z(int p) const {
  std::size_t t = 0;
  for (auto x : z[p]) t += x;
  return t;
}

std::size_t BidegreeTable::total_b(int p) const {
  std::size_t t = 0;
  for (auto x : b[p]) t += x;
  return t;
}

std::size_t BidegreeTable::total_h(int p) const {
  std::size_t t = 0;
  for (auto x : h[p]) t += x;
  return t;
}

int BidegreeTable::euler_characteristic() const {
  long e = 0;
  for (std::size_t p = 0; p < h.size(); ++p) e += (p % 2 ? -1 : 1) * static_cast<long>(total_h(static_cast<int>(p)));
  return static_cast<int>(e);
}

template <Field K>
Subspace<K> cycles(const KoszulComplex<K>& e, int p, int d) {
  const K& f = e.ring()->field();
  const std::size_t n = e.cells(p, d).size();
  if (p == 0) return Subspace<K>::whole(f, n);
  return Subspace<K>::from_matrix_rows(nullspace(e.boundary(p, d)));
}

template <Field K>
Subspace<K> boundaries(const KoszulComplex<K>& e, int p, int d) {
  const K& f = e.ring()->field();
  const std::size_t n = e.cells(p, d).size();
  if (p >= e.length()) return Subspace<K>(f, n);
  return Subspace<K>::from_matrix_rows(e.boundary(p + 1, d).transpose());
}

template <Field K>
HomologyReport<K> homology_report(const KoszulComplex<K>& e) {
  HomologyReport<K> rep;
  const int m = e.length();
  const int top = e.max_internal_degree();
  rep.table.z.assign(m + 1, std::vector<std::size_t>(top + 1, 0));
  rep.table.b = rep.table.z;
  rep.table.h = rep.table.z;
  std::vector<Subspace<K>> z1;
  for (int p = 0; p <= m; ++p) {
    for (int d = 0; d <= top; ++d) {
      auto z = cycles(e, p, d);
      auto b = boundaries(e, p, d);
      rep.table.z[p][d] = z.dim();
      rep.table.b[p][d] = b.dim();
      rep.table.h[p][d] = z.dim() - b.dim();
      if (p == 1) {
        // Generators of H_1: cycles independent modulo B_1 + m Z_1.
        Subspace<K> w = b;
        if (d > 0)
          for (const auto& v : z1[d - 1].basis()) {
            const auto chain = e.lift(1, d - 1, v);
            for (int k = 0; k < e.ring()->nvars(); ++k) w.add(e.project(e.multiply_variable(k, chain), d));
          }
        for (const auto& v : z.basis())
          if (w.add(v)) {
            rep.h1_generators.push_back(e.lift(1, d, v));
            rep.h1_generator_degrees.push_back(d);
          }
        z1.push_back(std::move(z));
      }
    }
  }
  return rep;
}

template <Field K>
int grade(const KoszulComplex<K>& e, const HomologyReport<K>& report) {
  int maxp = 0;
  for (int p = 0; p <= e.length(); ++p)
    if (report.table.total_h(p) > 0) maxp = p;
  return e.length() - maxp;
}

template <Field K>
int grade(const RingIdeal<K>& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::invalid_argument, "grade of the zero ideal");
  if (ideal.is_whole()) throw Error(ErrorCode::invalid_argument, "grade of the unit ideal");
  KoszulComplex<K> e(ideal.ring(), ideal.minimal_generators());
  return grade(e, homology_report(e));
}

// ------------------------------------------------------------------- qci

template <Field K>
QciResult<K> qci_check(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& f) {
  using Chain = typename KoszulComplex<K>::Chain;
  QciResult<K> res;
  KoszulComplex<K> e(ring, f);
  res.report = homology_report(e);
  auto& cert = res.certificate;
  const int m = e.length();
  const auto ideal = RingIdeal<K>::generated_by(ring, f);
  const auto hs = ideal.quotient_hilbert();
  auto hs_at = [&](int d) -> std::size_t { return d >= 0 && d < static_cast<int>(hs.size()) ? hs[d] : 0; };
  cert.cycles = res.report.h1_generators;
  cert.cycle_degrees = res.report.h1_generator_degrees;
  cert.nu_ideal = static_cast<std::size_t>(m);
  cert.nu_h1 = cert.cycles.size();
  cert.grade = grade(e, res.report);
  const int r = static_cast<int>(cert.cycles.size());
  const int top = e.max_internal_degree();

  cert.entries_in_m = true;
  cert.a.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j) {
      cert.a[i].push_back(e.coefficient(cert.cycles[j], i));
      if (cert.a[i].back().is_unit()) cert.entries_in_m = false;
    }

  auto fail = [&](const std::string& why) {
    res.certified = false;
    res.refutation = why;
    return res;
  };

  // lambda_p for p = 1..m; p = 1 is the freeness of H_1.
  cert.lambda_bijective.assign(m + 1, false);
  cert.lambda_bijective[0] = true;
  for (int p = 1; p <= m; ++p) {
    std::vector<Chain> wedges;
    std::vector<int> wdeg;
    for (auto mask : subsets_of_size(r, p)) {
      Chain w;
      int deg = 0;
      bool first = true;
      for (int j = 0; j < r; ++j) {
        if (!(mask >> j & 1u)) continue;
        w = first ? cert.cycles[j] : e.wedge(w, cert.cycles[j]);
        deg += cert.cycle_degrees[j];
        first = false;
      }
      wedges.push_back(std::move(w));
      wdeg.push_back(deg);
    }
    bool ok = true;
    // The free module may predict classes above the top degree of the complex.
    int last = top;
    for (int w : wdeg) last = std::max(last, w + static_cast<int>(hs.size()) - 1);
    for (int d = 0; d <= last && ok; ++d) {
      std::size_t expected = 0;
      for (int w : wdeg) expected += hs_at(d - w);
      const std::size_t actual = d <= top ? res.report.table.h[p][d] : 0;
      if (actual != expected) {
        ok = false;
        res.refutation = (p == 1 ? "H_1 is not free over R/I" : "lambda_" + std::to_string(p) + " is not bijective") +
                         " at bidegree (" + std::to_string(p) + "," + std::to_string(d) + "): dim H = " +
                         std::to_string(actual) + ", expected " + std::to_string(expected);
        break;
      }
      if (expected == 0) continue;
      Subspace<K> image = boundaries(e, p, d);
      for (std::size_t w = 0; w < wedges.size(); ++w) {
        const int shift = d - wdeg[w];
        if (shift < 0 || shift > ring->top_degree()) continue;
        for (std::size_t b = ring->begin(shift); b < ring->end(shift); ++b) {
          auto unit = ring->zero_vector();
          unit[b] = ring->field().one();
          image.add(e.project(e.multiply(RingElement<K>(ring, unit), wedges[w]), d));
        }
      }
      if (image.dim() != res.report.table.z[p][d]) {
        ok = false;
        res.refutation = (p == 1 ? "H_1 is not generated by the chosen cycles" : "lambda_" + std::to_string(p) +
                                                                                     " is not surjective") +
                         " at bidegree (" + std::to_string(p) + "," + std::to_string(d) + ")";
      }
    }
    cert.lambda_bijective[p] = ok;
    if (p == 1) cert.h1_free = ok;
    if (!ok) return fail(res.refutation);
  }
  res.certified = true;

  if (r == m) {
    cert.delta = determinant(cert.a, ring);
    if (cert.grade == 0) {
      const auto& delta = *cert.delta;
      const auto delta_ideal = RingIdeal<K>::generated_by(ring, {delta});
      cert.delta_in_m_power = delta.is_zero() || delta.lowest_degree() >= m;
      const auto ann_i = annihilator(ideal);
      cert.annihilator_of_ideal_is_delta = ann_i == delta_ideal;
      const auto ann_delta = annihilator(delta);
      cert.annihilator_of_delta_is_ideal = ann_delta == ideal;
      std::size_t dim_s = 0;
      for (auto x : hs) dim_s += x;
      cert.h1_dimension_formula = res.report.table.total_h(1) == static_cast<std::size_t>(m) * dim_s;
      const Matrix<K> mul = ring->multiplication_matrix(delta.coordinates());
      const auto kernel = Subspace<K>::from_matrix_rows(nullspace(mul));
      const auto image = Subspace<K>::from_matrix_rows(mul.transpose());
      cert.multiplication_by_delta = kernel == ideal.space() && image == ann_i.space();
    }
  }
  return res;
}

// ------------------------------------------------------- two generators

namespace {

// k-linear matrix of an R-linear map R^cols -> R^rows given by ring entries.
template <Field K>
Matrix<K> linearize(const QuotientPtr<K>& ring, const std::vector<std::vector<RingElement<K>>>& entries) {
  const std::size_t n = ring->dim();
  const std::size_t rows = entries.size(), cols = entries.front().size();
  Matrix<K> out(ring->field(), rows * n, cols * n);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Matrix<K> block = ring->multiplication_matrix(entries[i][j].coordinates());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out(i * n + a, j * n + b) = block(a, b);
    }
  return out;
}

}  // namespace

template <Field K>
bool two_generated_criterion(const RingElement<K>& f1, const RingElement<K>& f2, const RingElement<K>& a,
                             const RingElement<K>& b, const RingElement<K>& c, const RingElement<K>& d) {
  const auto& ring = f1.ring();
  for (const auto* x : {&a, &b, &c, &d})
    if (x->is_unit()) throw Error(ErrorCode::invalid_argument, "entries a, b, c, d must lie in the maximal ideal");
  if (RingIdeal<K>::generated_by(ring, {f1, f2}).nu() != 2)
    throw Error(ErrorCode::not_minimal, "two-generated criterion needs nu(f1, f2) = 2");
  const auto zero = RingElement<K>::zero(ring);
  const auto d3 = linearize<K>(ring, {{-c, -d, a, b}, {f1, zero, f2, zero}, {zero, f1, zero, f2}});
  const auto d2 = linearize<K>(ring, {{-f2, a, b}, {f1, c, d}});
  const auto d1 = linearize<K>(ring, {{f1, f2}});
  const auto d0 = linearize<K>(ring, {{a * d - b * c}});
  const auto d1t = linearize<K>(ring, {{f1}, {f2}});
  if (!(d2 * d3).is_zero() || !(d1 * d2).is_zero() || !(d0 * d1).is_zero() || !(d1t * d0).is_zero()) return false;
  const std::size_t n = ring->dim();
  const std::size_t r3 = rank(d3), r2 = rank(d2), r1 = rank(d1), r0 = rank(d0), r1t = rank(d1t);
  return r3 == 3 * n - r2 && r2 == 2 * n - r1 && r1 == n - r0 && r0 == n - r1t;
}

// ------------------------------------------------------------ ezd search

template <Field K>
EzdSearchResult<K> ezd_search(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& ideal_gens,
                              const EzdOptions& options) {
  EzdSearchResult<K> res;
  const K& f = ring->field();
  if constexpr (std::is_same_v<K, RationalField>) {
    (void)ideal_gens;
    (void)options;
    throw Error(ErrorCode::unsupported_mode, "enumerative exact zero-divisor search needs a finite field");
  } else {
  const mpz_class q = f.order();
  const auto space = options.inside_ideal ? RingIdeal<K>::generated_by(ring, ideal_gens).space()
                                          : Subspace<K>::whole(f, ring->dim());
  for (int d = 1; d <= options.max_degree && d <= ring->top_degree(); ++d) {
    std::vector<std::vector<typename K::Element>> basis;
    for (std::size_t i = 0; i < space.dim(); ++i) {
      const auto piv = space.pivots()[i];
      if (ring->degree_of(piv) == d) basis.push_back(space.basis()[i]);
    }
    const std::size_t k = basis.size();
    if (k == 0) continue;
    mpz_class count;
    mpz_pow_ui(count.get_mpz_t(), q.get_mpz_t(), k);
    if (count > mpz_class(1) << 34)
      throw Error(ErrorCode::bounds_too_small, "exact zero-divisor search space in degree " + std::to_string(d) +
                                                   " is too large to enumerate");
    const std::uint64_t qq = q.get_ui();
    // Projective points: leading coordinate `lead` is 1, later ones free.
    for (std::size_t lead = 0; lead < k; ++lead) {
      std::uint64_t tail = 1;
      for (std::size_t t = lead + 1; t < k; ++t) tail *= qq;
      for (std::uint64_t code = 0; code < tail; ++code) {
        auto v = basis[lead];
        std::uint64_t rest = code;
        for (std::size_t t = lead + 1; t < k; ++t) {
          const auto c = f.element_at(rest % qq);
          rest /= qq;
          if (f.is_zero(c)) continue;
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, basis[t][i]));
        }
        ++res.candidates;
        RingElement<K> x(ring, std::move(v));
        if (auto y = is_exact_zero_divisor(x)) {
          res.pairs.push_back({x, *y});
          if (options.max_results && res.pairs.size() >= options.max_results) return res;
        }
      }
    }
  }
  return res;
  }
}

template <Field K>
SymbolicObstruction<K> ezd_symbolic(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& ideal_gens,
                                    int max_exponent) {
  const int n = ring->nvars();
  const int m = static_cast<int>(ideal_gens.size());
  for (const auto& g : ring->presentation())
    if (!g.is_zero() && (!g.is_homogeneous() || g.total_degree() != 2))
      throw Error(ErrorCode::not_quadratic, "symbolic obstruction needs a presentation by quadrics");
  for (const auto& g : ideal_gens)
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != 1)
      throw Error(ErrorCode::invalid_argument, "symbolic obstruction needs linear ideal generators");
  if (m + n > max_variables) throw Error(ErrorCode::too_many_variables, "too many parameters");
  std::vector<std::string> names;
  for (int i = 0; i < m + n; ++i) names.push_back(m + n <= 26 ? std::string(1, char('a' + i)) : "t" + std::to_string(i + 1));
  SymbolicObstruction<K> out;
  out.parameters = make_polynomial_ring(ring->field(), m + n, MonomialOrder::grevlex, names);
  const auto& S = out.parameters;
  const K& f = ring->field();
  const std::size_t b2 = ring->begin(2), e2 = ring->end(2);
  std::vector<std::vector<typename Polynomial<K>::Term>> terms(e2 - b2);
  for (int i = 0; i < m; ++i) {
    const auto F = ideal_gens[i].to_polynomial();
    for (int j = 0; j < n; ++j) {
      const auto coords = ring->coordinates(F * Polynomial<K>::variable(ring->polynomial_ring(), j));
      const Monomial ac = Monomial::variable(i) * Monomial::variable(m + j);
      for (std::size_t s = b2; s < e2; ++s)
        if (!f.is_zero(coords[s])) terms[s - b2].push_back({ac, coords[s]});
    }
  }
  for (auto& t : terms) {
    auto p = Polynomial<K>::from_terms(S, std::move(t));
    if (!p.is_zero()) out.expressions.push_back(std::move(p));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      out.product_ideal.push_back(Polynomial<K>::term(S, Monomial::variable(i) * Monomial::variable(m + j), f.one()));
  if (out.expressions.empty()) return out;
  const auto gb = buchberger(S, out.expressions);
  std::vector<Polynomial<K>> power = out.product_ideal;
  for (int e = 1; e <= max_exponent; ++e) {
    bool inside = true;
    for (const auto& g : power)
      if (!gb.contains(g)) {
        inside = false;
        break;
      }
    if (inside) {
      out.exponent = e;
      break;
    }
    // Next power: products with the generators, deduplicated by monomial.
    std::vector<Polynomial<K>> next;
    for (const auto& g : power)
      for (const auto& h : out.product_ideal) {
        auto p = g * h;
        bool dup = false;
        for (const auto& x : next) dup = dup || x == p;
        if (!dup) next.push_back(std::move(p));
      }
    power = std::move(next);
  }
  return out;
}

#define QCI_INSTANTIATE(K)                                                                          \
  template class KoszulComplex<K>;                                                                 \
  template HomologyReport<K> homology_report<K>(const KoszulComplex<K>&);                          \
  template Subspace<K> cycles<K>(const KoszulComplex<K>&, int, int);                               \
  template Subspace<K> boundaries<K>(const KoszulComplex<K>&, int, int);                           \
  template int grade<K>(const KoszulComplex<K>&, const HomologyReport<K>&);                        \
  template int grade<K>(const RingIdeal<K>&);                                                      \
  template QciResult<K> qci_check<K>(const QuotientPtr<K>&, const std::vector<RingElement<K>>&);   \
  template bool two_generated_criterion<K>(const RingElement<K>&, const RingElement<K>&,           \
                                           const RingElement<K>&, const RingElement<K>&,           \
                                           const RingElement<K>&, const RingElement<K>&);          \
  template EzdSearchResult<K> ezd_search<K>(const QuotientPtr<K>&, const std::vector<RingElement<K>>&, \
                                            const EzdOptions&);                                    \
  template SymbolicObstruction<K> ezd_symbolic<K>(const QuotientPtr<K>&,                           \
                                                  const std::vector<RingElement<K>>&, int);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
