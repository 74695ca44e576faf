#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qci/random.hpp"

namespace qci {

// Coefficient fields. Every algorithm in the library is a template over a type
// satisfying `Field`; the three models below are explicitly instantiated.
template <class K>
concept Field = std::copyable<K> &&
    requires(const K& k, const typename K::Element& a, const typename K::Element& b,
             std::int64_t n, const mpq_class& q) {
      typename K::Element;
      { k.zero() } -> std::same_as<typename K::Element>;
      { k.one() } -> std::same_as<typename K::Element>;
      { k.from_int(n) } -> std::same_as<typename K::Element>;
      { k.from_rational(q) } -> std::same_as<typename K::Element>;
      { k.add(a, b) } -> std::same_as<typename K::Element>;
      { k.sub(a, b) } -> std::same_as<typename K::Element>;
      { k.mul(a, b) } -> std::same_as<typename K::Element>;
      { k.neg(a) } -> std::same_as<typename K::Element>;
      { k.inv(a) } -> std::same_as<typename K::Element>;
      { k.is_zero(a) } -> std::convertible_to<bool>;
      { k.equal(a, b) } -> std::convertible_to<bool>;
      { k.characteristic() } -> std::convertible_to<std::uint64_t>;
      { k.is_finite() } -> std::convertible_to<bool>;
      { k.name() } -> std::convertible_to<std::string>;
      { k.format(a) } -> std::convertible_to<std::string>;
    };

// Z/p for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_finite() const noexcept { return true; }
  mpz_class order() const { return mpz_class(p_); }
  std::string name() const;

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_rational(const mpq_class& q) const;

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  // Enumeration support for finite-field searches: index in [0, p).
  Element element_at(std::uint64_t index) const noexcept { return static_cast<Element>(index); }

  // Symmetric representative, e.g. 100 in F101 prints as -1.
  std::string format(Element a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  std::uint64_t characteristic() const noexcept { return 0; }
  bool is_finite() const noexcept { return false; }
  mpz_class order() const { return 0; }
  std::string name() const { return "QQ"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t n) const { return mpq_class(static_cast<long>(n)); }
  Element from_rational(const mpq_class& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string format(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

// GF(p^k) = F_p[a]/(m(a)) for a monic irreducible m of degree k >= 1.
// Elements are coefficient vectors of length k, lowest degree first.
class ExtensionField {
 public:
  using Element = std::vector<std::uint32_t>;

  // `modulus` is monic, lowest coefficient first; irreducibility is verified.
  ExtensionField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  // A random monic irreducible modulus of the given degree.
  static ExtensionField random(std::uint32_t p, int degree, Rng& rng);

  std::uint32_t prime() const noexcept { return base_.prime(); }
  const PrimeField& base() const noexcept { return base_; }
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return base_.prime(); }
  bool is_finite() const noexcept { return true; }
  mpz_class order() const;
  std::string name() const;

  Element zero() const { return Element(degree(), 0); }
  Element one() const {
    Element e(degree(), 0);
    e[0] = 1;
    return e;
  }
  // The class of the indeterminate `a`.
  Element generator() const;
  Element from_int(std::int64_t n) const {
    Element e(degree(), 0);
    e[0] = base_.from_int(n);
    return e;
  }
  Element from_base(PrimeField::Element c) const {
    Element e(degree(), 0);
    e[0] = c;
    return e;
  }
  Element from_rational(const mpq_class& q) const { return from_base(base_.from_rational(q)); }
  // Element from an F_p polynomial in `a` (reduced modulo the modulus).
  Element from_polynomial(const std::vector<std::uint32_t>& coeffs) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  // Base-p digits of `index` as coordinates; index in [0, p^k).
  Element element_at(std::uint64_t index) const;

  std::string format(const Element& a) const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) noexcept {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  PrimeField base_;
  std::vector<std::uint32_t> modulus_;
};

// Rabin's irreducibility test for a monic polynomial over F_p (lowest coefficient first).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, const PrimeField& fp);

// p-th power map applied (k - 1) times is the inverse of Frobenius on GF(p^k);
// used for square-free decomposition in characteristic p.
template <Field K>
typename K::Element frobenius_inverse(const K& field, const typename K::Element& a);

// Exponentiation by an arbitrary non-negative integer.
template <Field K>
typename K::Element power(const K& field, typename K::Element a, const mpz_class& exponent);

// Square root in a finite field of odd characteristic (Tonelli-Shanks). Returns
// false when `a` is a non-square. Over QQ, exact rational square roots only.
template <Field K>
bool square_root(const K& field, const typename K::Element& a, typename K::Element& root);

// `format`, parenthesized when the printed element is a sum (extension fields).
template <Field K>
std::string coefficient_string(const K& field, const typename K::Element& a);

}  // namespace qci
