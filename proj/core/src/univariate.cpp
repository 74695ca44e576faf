#include "qci/univariate.hpp"

#include <algorithm>
#include <type_traits>

#include "qci/error.hpp"

namespace qci {

template <Field K>
void upoly_trim(const K& f, UPoly<K>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <Field K>
UPoly<K> upoly_add(const K& f, const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  upoly_trim(f, r);
  return r;
}

template <Field K>
UPoly<K> upoly_sub(const K& f, const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  upoly_trim(f, r);
  return r;
}

template <Field K>
UPoly<K> upoly_mul(const K& f, const UPoly<K>& a, const UPoly<K>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<K> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  upoly_trim(f, r);
  return r;
}

template <Field K>
void upoly_divmod(const K& f, const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& q, UPoly<K>& r) {
  if (b.empty()) throw Error(ErrorCode::division_by_zero, "division by the zero polynomial");
  r = a;
  upoly_trim(f, r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, f.zero());
  const auto inv = f.inv(b.back());
  for (std::size_t k = r.size(); k-- >= b.size();) {
    if (f.is_zero(r[k])) continue;
    const auto c = f.mul(r[k], inv);
    const std::size_t shift = k + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
  }
  upoly_trim(f, r);
  upoly_trim(f, q);
}

template <Field K>
UPoly<K> upoly_mod(const K& f, const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> q, r;
  upoly_divmod(f, a, b, q, r);
  return r;
}

template <Field K>
UPoly<K> upoly_monic(const K& f, UPoly<K> a) {
  upoly_trim(f, a);
  if (a.empty()) return a;
  const auto inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

template <Field K>
UPoly<K> upoly_gcd(const K& f, UPoly<K> a, UPoly<K> b) {
  upoly_trim(f, a);
  upoly_trim(f, b);
  while (!b.empty()) {
    auto r = upoly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(f, a);
}

template <Field K>
UPoly<K> upoly_powmod(const K& f, UPoly<K> base, const mpz_class& e, const UPoly<K>& m) {
  UPoly<K> result{f.one()};
  result = upoly_mod(f, result, m);
  base = upoly_mod(f, base, m);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = upoly_mod(f, upoly_mul(f, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = upoly_mod(f, upoly_mul(f, result, base), m);
  }
  return result;
}

template <Field K>
typename K::Element upoly_eval(const K& f, const UPoly<K>& a, const typename K::Element& x) {
  auto r = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

namespace {

template <Field K>
typename K::Element random_element(const K& f, Rng& rng) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return static_cast<PrimeField::Element>(uniform_below(rng, f.prime()));
  } else if constexpr (std::is_same_v<K, ExtensionField>) {
    std::vector<std::uint32_t> c(f.degree());
    for (auto& x : c) x = static_cast<std::uint32_t>(uniform_below(rng, f.prime()));
    return f.from_polynomial(c);
  } else {
    throw Error(ErrorCode::unsupported_mode, "random elements need a finite field");
  }
}

template <Field K>
UPoly<K> derivative(const K& f, const UPoly<K>& a) {
  UPoly<K> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i)), a[i]));
  upoly_trim(f, d);
  return d;
}

template <Field K>
UPoly<K> quotient(const K& f, const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> q, r;
  upoly_divmod(f, a, b, q, r);
  return q;
}

template <Field K>
bool is_one(const UPoly<K>& a, const K& f) {
  return a.size() == 1 && f.equal(a[0], f.one());
}

// Square-free decomposition of a monic polynomial.
template <Field K>
void square_free(const K& f, const UPoly<K>& a, int mult, std::vector<std::pair<UPoly<K>, int>>& out) {
  if (upoly_degree<K>(a) < 1) return;
  UPoly<K> c = upoly_gcd(f, a, derivative(f, a));
  UPoly<K> w = quotient(f, a, c);
  int i = 1;
  while (!is_one(w, f)) {
    UPoly<K> y = upoly_gcd(f, w, c);
    UPoly<K> fac = quotient(f, w, y);
    if (!is_one(fac, f)) out.push_back({fac, i * mult});
    w = std::move(y);
    c = quotient(f, c, w);
    ++i;
  }
  if (!is_one(c, f)) {
    // c is a p-th power.
    const auto p = static_cast<std::size_t>(f.characteristic());
    UPoly<K> root;
    for (std::size_t k = 0; k < c.size(); k += p) root.push_back(frobenius_inverse(f, c[k]));
    square_free(f, root, mult * static_cast<int>(p), out);
  }
}

template <Field K>
void equal_degree(const K& f, const UPoly<K>& g, int d, const mpz_class& q, Rng& rng, std::vector<UPoly<K>>& out) {
  const int n = upoly_degree<K>(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const mpz_class e = (qd - 1) / 2;
  for (;;) {
    UPoly<K> a(n);
    for (auto& c : a) c = random_element(f, rng);
    upoly_trim(f, a);
    if (upoly_degree<K>(a) < 1) continue;
    auto b = upoly_sub(f, upoly_powmod(f, a, e, g), UPoly<K>{f.one()});
    auto h = upoly_gcd(f, g, b);
    const int hd = upoly_degree<K>(h);
    if (hd > 0 && hd < n) {
      equal_degree(f, h, d, q, rng, out);
      equal_degree(f, quotient(f, g, h), d, q, rng, out);
      return;
    }
  }
}

template <Field K>
void check_odd_finite(const K& f) {
  if (!f.is_finite()) throw Error(ErrorCode::unsupported_mode, "factorization needs a finite field");
  if (f.characteristic() == 2)
    throw Error(ErrorCode::unsupported_characteristic, "factorization is not supported in characteristic 2");
}

}  // namespace

template <Field K>
std::vector<UFactor<K>> upoly_factor(const K& f, const UPoly<K>& a, Rng& rng) {
  check_odd_finite(f);
  auto m = upoly_monic(f, a);
  if (m.empty()) throw Error(ErrorCode::invalid_argument, "cannot factor the zero polynomial");
  const mpz_class q = f.order();
  std::vector<std::pair<UPoly<K>, int>> sf;
  square_free(f, m, 1, sf);
  std::vector<UFactor<K>> out;
  const UPoly<K> x{f.zero(), f.one()};
  for (auto& [g0, mult] : sf) {
    UPoly<K> g = g0;
    UPoly<K> h = upoly_mod(f, x, g);
    for (int i = 1; upoly_degree<K>(g) >= 2 * i; ++i) {
      h = upoly_powmod(f, h, q, g);
      auto d = upoly_gcd(f, g, upoly_sub(f, h, x));
      if (!is_one(d, f)) {
        std::vector<UPoly<K>> parts;
        equal_degree(f, d, i, q, rng, parts);
        for (auto& p : parts) out.push_back({std::move(p), mult});
        g = quotient(f, g, d);
        h = upoly_mod(f, h, g);
      }
    }
    if (upoly_degree<K>(g) > 0) out.push_back({g, mult});
  }
  std::stable_sort(out.begin(), out.end(), [](const UFactor<K>& l, const UFactor<K>& r) {
    return l.factor.size() < r.factor.size();
  });
  return out;
}

template <Field K>
std::vector<typename K::Element> upoly_roots(const K& f, const UPoly<K>& a, Rng& rng) {
  check_odd_finite(f);
  auto m = upoly_monic(f, a);
  if (m.empty()) throw Error(ErrorCode::invalid_argument, "roots of the zero polynomial");
  std::vector<typename K::Element> roots;
  if (upoly_degree<K>(m) < 1) return roots;
  const UPoly<K> x{f.zero(), f.one()};
  auto g = upoly_gcd(f, m, upoly_sub(f, upoly_powmod(f, x, f.order(), m), x));
  if (upoly_degree<K>(g) < 1) return roots;
  std::vector<UPoly<K>> lin;
  equal_degree(f, g, 1, f.order(), rng, lin);
  for (const auto& l : lin) roots.push_back(f.neg(l[0]));
  return roots;
}

#define QCI_INSTANTIATE(K)                                                                              \
  template void upoly_trim<K>(const K&, UPoly<K>&);                                                    \
  template UPoly<K> upoly_add<K>(const K&, const UPoly<K>&, const UPoly<K>&);                          \
  template UPoly<K> upoly_sub<K>(const K&, const UPoly<K>&, const UPoly<K>&);                          \
  template UPoly<K> upoly_mul<K>(const K&, const UPoly<K>&, const UPoly<K>&);                          \
  template void upoly_divmod<K>(const K&, const UPoly<K>&, const UPoly<K>&, UPoly<K>&, UPoly<K>&);     \
  template UPoly<K> upoly_mod<K>(const K&, const UPoly<K>&, const UPoly<K>&);                          \
  template UPoly<K> upoly_monic<K>(const K&, UPoly<K>);                                                \
  template UPoly<K> upoly_gcd<K>(const K&, UPoly<K>, UPoly<K>);                                        \
  template UPoly<K> upoly_powmod<K>(const K&, UPoly<K>, const mpz_class&, const UPoly<K>&);            \
  template typename K::Element upoly_eval<K>(const K&, const UPoly<K>&, const typename K::Element&);   \
  template std::vector<UFactor<K>> upoly_factor<K>(const K&, const UPoly<K>&, Rng&);                   \
  template std::vector<typename K::Element> upoly_roots<K>(const K&, const UPoly<K>&, Rng&);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
