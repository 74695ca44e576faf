#include "qci/groebner.hpp"

#include <algorithm>
#include <set>

#include "qci/error.hpp"

namespace qci {

namespace {

template <Field K>
const Polynomial<K>* find_reducer(const std::vector<Polynomial<K>>& basis, const Monomial& m) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

// Full reduction of f by `basis` (monic leading coefficients).
template <Field K>
Polynomial<K> reduce_full(Polynomial<K> p, const std::vector<Polynomial<K>>& basis) {
  const K& k = p.field();
  std::vector<typename Polynomial<K>::Term> rest;
  while (!p.is_zero()) {
    const auto& lt = p.terms().front();
    if (const auto* g = find_reducer(basis, lt.monomial)) {
      const auto c = k.mul(lt.coeff, k.inv(g->leading_coefficient()));
      p = p.sub_mul_term(c, lt.monomial / g->leading_monomial(), *g);
    } else {
      rest.push_back(lt);
      p = p - Polynomial<K>::term(p.ring(), lt.monomial, lt.coeff);
    }
  }
  return Polynomial<K>::from_terms(p.ring(), std::move(rest));
}

template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& a, const Polynomial<K>& b) {
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  const K& k = a.field();
  Polynomial<K> sa = a.mul_term(l / a.leading_monomial(), k.inv(a.leading_coefficient()));
  return sa.sub_mul_term(k.inv(b.leading_coefficient()), l / b.leading_monomial(), b);
}

struct Pair {
  std::size_t i, j;
  int degree;
};

}  // namespace

std::string to_string(GeneratorClass c) {
  switch (c) {
    case GeneratorClass::not_in_ideal: return "not-in-ideal";
    case GeneratorClass::minimal_generator: return "minimal-generator";
    case GeneratorClass::in_m_times_ideal: return "in-m-times-ideal";
  }
  return "unknown";
}

template <Field K>
GroebnerBasis<K>::GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> generators, BuchbergerStats stats)
    : ring_(std::move(ring)), gens_(std::move(generators)), stats_(std::move(stats)) {}

template <Field K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

template <Field K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& f) const {
  if (f.ring() != ring_ && !(*f.ring() == *ring_))
    throw Error(ErrorCode::ring_mismatch, "normal form across different rings");
  return reduce_full(f, gens_);
}

template <Field K>
bool GroebnerBasis<K>::is_standard(const Monomial& m) const {
  return find_reducer(gens_, m) == nullptr;
}

template <Field K>
std::vector<Monomial> GroebnerBasis<K>::standard_monomials(int degree) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(ring_->nvars(), degree, ring_->order()))
    if (is_standard(m)) out.push_back(m);
  return out;
}

template <Field K>
int GroebnerBasis<K>::infinite_ray() const {
  for (int v = 0; v < ring_->nvars(); ++v) {
    bool found = false;
    for (const auto& g : gens_) {
      const Monomial& m = g.leading_monomial();
      if (m.degree() == m[v]) {
        found = true;
        break;
      }
    }
    if (!found) return v;
  }
  return -1;
}

template <Field K>
bool GroebnerBasis<K>::is_unit_ideal() const {
  return gens_.size() == 1 && gens_.front().leading_monomial().is_one();
}

template <Field K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& input,
                            const BuchbergerOptions& options) {
  BuchbergerStats stats;
  std::vector<Polynomial<K>> basis;
  for (const auto& f : input) {
    if (f.ring() != ring && !(*f.ring() == *ring))
      throw Error(ErrorCode::ring_mismatch, "generators live in different rings");
    if (!f.is_zero()) basis.push_back(f.monic());
  }

  std::vector<Pair> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      pending.push_back({i, j, l.degree()});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  // (i, j) with i < j that are still pending.
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pending)
      if (p.i == a && p.j == b) return true;
    return false;
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    const Pair pr = *best;
    pending.erase(best);
    ++stats.pairs;
    const auto& a = basis[pr.i];
    const auto& b = basis[pr.j];
    if (a.size() == 1 && b.size() == 1) {
      ++stats.skipped_monomial;
      continue;
    }
    if (a.leading_monomial().coprime(b.leading_monomial())) {
      ++stats.skipped_coprime;
      continue;
    }
    if (options.chain_criterion) {
      const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].leading_monomial().divides(l)) continue;
        if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
      }
      if (chain) {
        ++stats.skipped_chain;
        continue;
      }
    }
    ++stats.reduced;
    stats.reduced_pairs.emplace_back(a.leading_monomial(), b.leading_monomial());
    Polynomial<K> s = reduce_full(s_polynomial(a, b), basis);
    if (s.is_zero()) {
      ++stats.reduced_to_zero;
      continue;
    }
    basis.push_back(s.monic());
    add_pairs(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by an
  // earlier-kept or another generator's leading monomial.
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& g = minimal[i];
    Polynomial<K> tail = g - Polynomial<K>::term(ring, g.leading_monomial(), g.leading_coefficient());
    minimal[i] = (Polynomial<K>::term(ring, g.leading_monomial(), g.leading_coefficient()) +
                  reduce_full(tail, others))
                     .monic();
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<K>& x, const Polynomial<K>& y) {
    return ring->compare(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  return GroebnerBasis<K>(ring, std::move(minimal), std::move(stats));
}

template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const BuchbergerOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::invalid_argument, "Groebner basis of an empty generator list");
  return buchberger(gens.front().ring(), gens, options);
}

template <Field K>
PrimaryResult is_irrelevant_primary(const std::vector<Polynomial<K>>& gens) {
  for (const auto& g : gens)
    if (!g.is_zero() && !g.is_homogeneous())
      throw Error(ErrorCode::not_homogeneous, "primary test needs homogeneous generators: " + g.to_string());
  const auto gb = buchberger(gens);
  PrimaryResult r;
  r.ray_variable = gb.infinite_ray();
  if (r.ray_variable >= 0) return r;
  r.primary = true;
  int top = -1;
  for (int d = 0;; ++d) {
    if (gb.standard_monomials(d).empty()) break;
    top = d;
  }
  r.witness_degree = top + 1;
  return r;
}

template <Field K>
GeneratorClass minimal_generator_test(const Polynomial<K>& g, const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) return g.is_zero() ? GeneratorClass::in_m_times_ideal : GeneratorClass::not_in_ideal;
  const auto& ring = gens.front().ring();
  if (!buchberger(ring, gens).contains(g)) return GeneratorClass::not_in_ideal;
  std::vector<Polynomial<K>> m_times;
  for (const auto& f : gens)
    for (int v = 0; v < ring->nvars(); ++v) m_times.push_back(Polynomial<K>::variable(ring, v) * f);
  return buchberger(ring, m_times).contains(g) ? GeneratorClass::in_m_times_ideal
                                               : GeneratorClass::minimal_generator;
}

template <Field K>
bool ideal_containment(const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b) {
  if (a.empty()) return true;
  const auto gb = buchberger(a.front().ring(), b);
  for (const auto& f : a)
    if (!gb.contains(f)) return false;
  return true;
}

#define QCI_INSTANTIATE(K)                                                                        \
  template class GroebnerBasis<K>;                                                               \
  template GroebnerBasis<K> buchberger<K>(const RingPtr<K>&, const std::vector<Polynomial<K>>&,  \
                                          const BuchbergerOptions&);                             \
  template GroebnerBasis<K> buchberger<K>(const std::vector<Polynomial<K>>&, const BuchbergerOptions&); \
  template PrimaryResult is_irrelevant_primary<K>(const std::vector<Polynomial<K>>&);            \
  template GeneratorClass minimal_generator_test<K>(const Polynomial<K>&,                        \
                                                    const std::vector<Polynomial<K>>&);          \
  template bool ideal_containment<K>(const std::vector<Polynomial<K>>&, const std::vector<Polynomial<K>>&);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
