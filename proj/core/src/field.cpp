#include "qci/field.hpp"

#include <algorithm>
#include <sstream>

#include "qci/error.hpp"

namespace qci {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense F_p[t] helpers, lowest coefficient first.
using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, const PrimeField& fp) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = fp.inv(m.back());
  while (a.size() > dm) {
    const std::uint32_t factor = fp.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(factor, m[i]));
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, const PrimeField& fp) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
  }
  return poly_mod(std::move(r), m, fp);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& m, const PrimeField& fp) {
  Coeffs result{1};
  base = poly_mod(std::move(base), m, fp);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, fp);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, fp);
  }
  return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, const PrimeField& fp) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, fp);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, const PrimeField& fp) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = fp.sub(a[i], b[i]);
  trim(a);
  return a;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^i) mod m.
Coeffs frobenius_power_of_x(int i, const Coeffs& m, const PrimeField& fp) {
  Coeffs x = poly_mod(Coeffs{0, 1}, m, fp);
  for (int k = 0; k < i; ++k) x = poly_powmod(x, fp.prime(), m, fp);
  return x;
}

}  // namespace

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorCode::invalid_field, "F" + std::to_string(p) + ": modulus must be a prime below 2^31");
}

std::string PrimeField::name() const { return "F" + std::to_string(p_); }

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0)
    throw Error(ErrorCode::division_by_zero, "denominator of " + q.get_str() + " vanishes in " + name());
  return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in " + name());
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::string PrimeField::format(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

// ------------------------------------------------------------- RationalField

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in QQ");
  return 1 / a;
}

// ------------------------------------------------------------ ExtensionField

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, const PrimeField& fp) {
  Coeffs m = monic;
  trim(m);
  const int k = static_cast<int>(m.size()) - 1;
  if (k < 1 || m.back() != 1) return false;
  if (k == 1) return true;
  const Coeffs x{0, 1};
  if (poly_sub(frobenius_power_of_x(k, m, fp), x, fp).size() != 0) return false;
  for (int q : prime_divisors(k)) {
    Coeffs g = poly_gcd(m, poly_sub(frobenius_power_of_x(k / q, m, fp), x, fp), fp);
    if (g.size() != 1) return false;
  }
  return true;
}

ExtensionField::ExtensionField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : base_(p), modulus_(std::move(modulus)) {
  for (auto& c : modulus_) c %= p;
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw Error(ErrorCode::invalid_field, "extension modulus must be monic of positive degree");
  if (!is_irreducible_mod_p(modulus_, base_))
    throw Error(ErrorCode::invalid_field, "extension modulus is reducible over " + base_.name());
}

ExtensionField ExtensionField::random(std::uint32_t p, int degree, Rng& rng) {
  if (degree < 1) throw Error(ErrorCode::invalid_argument, "extension degree must be positive");
  PrimeField fp(p);
  std::vector<std::uint32_t> modulus(static_cast<std::size_t>(degree) + 1);
  for (;;) {
    for (int i = 0; i < degree; ++i) modulus[i] = static_cast<std::uint32_t>(uniform_below(rng, p));
    modulus[degree] = 1;
    if (is_irreducible_mod_p(modulus, fp)) return ExtensionField(p, modulus);
  }
}

mpz_class ExtensionField::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), base_.prime(), static_cast<unsigned long>(degree()));
  return q;
}

std::string ExtensionField::name() const {
  std::ostringstream out;
  out << "GF(" << base_.prime() << "^" << degree() << ")";
  return out.str();
}

ExtensionField::Element ExtensionField::generator() const { return from_polynomial({0, 1}); }

ExtensionField::Element ExtensionField::from_polynomial(const std::vector<std::uint32_t>& coeffs) const {
  Coeffs c = coeffs;
  for (auto& x : c) x %= base_.prime();
  c = poly_mod(std::move(c), modulus_, base_);
  c.resize(static_cast<std::size_t>(degree()), 0);
  return c;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
  const std::size_t k = a.size();
  std::vector<std::uint64_t> wide(2 * k, 0);
  const std::uint64_t p = base_.prime();
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) wide[i + j] = (wide[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (std::size_t top = 2 * k - 1; top >= k; --top) {
    const std::uint64_t c = wide[top];
    if (c == 0) continue;
    wide[top] = 0;
    const std::size_t shift = top - k;
    for (std::size_t i = 0; i < k; ++i)
      wide[shift + i] = (wide[shift + i] + (p - c) * modulus_[i]) % p;
  }
  Element r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(wide[i]);
  return r;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  // Extended Euclid in F_p[t]: find s with s*a = 1 mod modulus.
  Coeffs r0 = modulus_, r1 = a;
  trim(r1);
  if (r1.empty()) throw Error(ErrorCode::division_by_zero, "inverse of zero in " + name());
  Coeffs s0{}, s1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    Coeffs q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    Coeffs r = r0;
    const std::uint32_t lead_inv = base_.inv(r1.back());
    while (r.size() >= r1.size() && !r.empty()) {
      const std::uint32_t f = base_.mul(r.back(), lead_inv);
      const std::size_t shift = r.size() - r1.size();
      q[shift] = f;
      for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] = base_.sub(r[shift + i], base_.mul(f, r1[i]));
      trim(r);
    }
    // s = s0 - q*s1
    Coeffs qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = base_.add(qs[i + j], base_.mul(q[i], s1[j]));
    Coeffs s = poly_sub(s0, qs, base_);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant.
  const std::uint32_t c = base_.inv(r0[0]);
  for (auto& x : s0) x = base_.mul(x, c);
  return from_polynomial(s0);
}

bool ExtensionField::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

ExtensionField::Element ExtensionField::element_at(std::uint64_t index) const {
  Element e(static_cast<std::size_t>(degree()), 0);
  for (auto& c : e) {
    c = static_cast<std::uint32_t>(index % base_.prime());
    index /= base_.prime();
  }
  return e;
}

std::string ExtensionField::format(const Element& a) const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree() - 1; i >= 0; --i) {
    const std::uint32_t c = a[i];
    if (c == 0) continue;
    std::string coeff = base_.format(c);
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (!first || negative) out << (negative ? "-" : "+");
    if (i == 0) {
      out << coeff;
    } else {
      if (coeff != "1") out << coeff << "*";
      out << "a";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

// ------------------------------------------------------------ free helpers

template <Field K>
typename K::Element power(const K& field, typename K::Element a, const mpz_class& exponent) {
  typename K::Element result = field.one();
  const std::size_t bits = exponent == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = field.mul(result, result);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = field.mul(result, a);
  }
  return result;
}

template <Field K>
typename K::Element frobenius_inverse(const K& field, const typename K::Element& a) {
  if constexpr (std::same_as<K, ExtensionField>) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), field.prime(), static_cast<unsigned long>(field.degree() - 1));
    return power(field, a, e);
  } else {
    return a;
  }
}

template <Field K>
bool square_root(const K& field, const typename K::Element& a, typename K::Element& root) {
  if constexpr (std::same_as<K, RationalField>) {
    if (sgn(a) < 0) return false;
    mpz_class num, den;
    if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) return false;
    mpz_sqrt(num.get_mpz_t(), a.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), a.get_den_mpz_t());
    root = mpq_class(num, den);
    root.canonicalize();
    return true;
  } else {
    if (field.characteristic() == 2)
      throw Error(ErrorCode::unsupported_characteristic, "square roots in characteristic 2");
    if (field.is_zero(a)) {
      root = field.zero();
      return true;
    }
    const mpz_class q = field.order();
    const mpz_class half = (q - 1) / 2;
    if (!field.equal(power(field, a, half), field.one())) return false;
    // q - 1 = 2^s * t with t odd.
    mpz_class t = q - 1;
    unsigned s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
      t /= 2;
      ++s;
    }
    // Deterministic search for a non-residue.
    typename K::Element z = field.one();
    for (std::uint64_t i = 2;; ++i) {
      z = field.element_at(i);
      if (!field.is_zero(z) && !field.equal(power(field, z, half), field.one())) break;
    }
    typename K::Element c = power(field, z, t);
    typename K::Element x = power(field, a, (t + 1) / 2);
    typename K::Element b = power(field, a, t);
    unsigned m = s;
    while (!field.equal(b, field.one())) {
      unsigned i = 0;
      typename K::Element b2 = b;
      while (!field.equal(b2, field.one())) {
        b2 = field.mul(b2, b2);
        ++i;
      }
      typename K::Element g = c;
      for (unsigned j = 0; j + 1 < m - i; ++j) g = field.mul(g, g);
      x = field.mul(x, g);
      c = field.mul(g, g);
      b = field.mul(b, c);
      m = i;
    }
    root = x;
    return true;
  }
}

template <Field K>
std::string coefficient_string(const K& field, const typename K::Element& a) {
  std::string s = field.format(a);
  if (s.find_first_of("+-", 1) != std::string::npos || s.find('a') != std::string::npos) {
    if (s.find_first_of("+-", 1) != std::string::npos) return "(" + s + ")";
  }
  return s;
}

#define QCI_INSTANTIATE(K)                                                                       \
  template K::Element power<K>(const K&, K::Element, const mpz_class&);                         \
  template K::Element frobenius_inverse<K>(const K&, const K::Element&);                        \
  template bool square_root<K>(const K&, const K::Element&, K::Element&);                       \
  template std::string coefficient_string<K>(const K&, const K::Element&);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
