#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qci/field.hpp"
#include "qci/linalg.hpp"
#include "qci/monomial.hpp"

namespace qci {

// k[x1..xn] with a fixed monomial order. Variables are x1..xn internally;
// `names` only affects parsing and printing.
template <Field K>
class PolynomialRing {
 public:
  PolynomialRing(K field, int nvars, MonomialOrder order = MonomialOrder::grevlex,
                 std::vector<std::string> names = {});

  const K& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Index of a variable name (alias or xi), or -1.
  int variable_index(std::string_view name) const;

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return qci::compare(a, b, order_, nvars_);
  }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.order_ == b.order_;
  }

 private:
  K field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

template <Field K>
using RingPtr = std::shared_ptr<const PolynomialRing<K>>;

template <Field K>
RingPtr<K> make_polynomial_ring(K field, int nvars, MonomialOrder order = MonomialOrder::grevlex,
                                std::vector<std::string> names = {}) {
  return std::make_shared<const PolynomialRing<K>>(std::move(field), nvars, order, std::move(names));
}

template <Field K>
class Polynomial {
 public:
  using Element = typename K::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
  };

  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}
  static Polynomial constant(RingPtr<K> ring, const Element& c);
  static Polynomial variable(RingPtr<K> ring, int index);
  static Polynomial term(RingPtr<K> ring, const Monomial& m, const Element& c);
  // Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> terms);

  const RingPtr<K>& ring() const noexcept { return ring_; }
  const K& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Leading data; precondition: nonzero.
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Element& leading_coefficient() const { return terms_.front().coeff; }

  int total_degree() const;
  int lowest_degree() const;
  bool is_homogeneous() const;
  Element coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Element& c) const;
  Polynomial mul_term(const Monomial& m, const Element& c) const;
  Polynomial power(unsigned e) const;
  // this - c*m*o, the division-algorithm step.
  Polynomial sub_mul_term(const Element& c, const Monomial& m, const Polynomial& o) const;
  Polynomial monic() const;
  Polynomial homogeneous_component(int degree) const;
  // Substitute xi -> images[i].
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff))
        return false;
    return true;
  }

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr<K> ring_;
  std::vector<Term> terms_;  // strictly descending in the ring's order
};

// Matrix of second partials of a quadratic form.
template <Field K>
Matrix<K> hessian(const Polynomial<K>& f);

// Quadratic form with the given symmetric Hessian (inverse of `hessian`).
template <Field K>
Polynomial<K> quadric_from_hessian(const RingPtr<K>& ring, const Matrix<K>& h);

// Lowest-degree nonzero homogeneous component.
template <Field K>
Polynomial<K> initial_form(const Polynomial<K>& h);

// Linear form sum c_i x_i.
template <Field K>
Polynomial<K> linear_form(const RingPtr<K>& ring, const std::vector<typename K::Element>& coeffs);

// Coefficients of a linear form.
template <Field K>
std::vector<typename K::Element> linear_coefficients(const Polynomial<K>& l);

// Parse `text` (rational coefficients, + - * ^ and parentheses). `line` and
// `column` locate the first character for error messages.
template <Field K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text, int line = 1, int column = 1);

// Map a polynomial into another ring coefficient-wise.
template <Field K, Field L, class F>
Polynomial<L> map_coefficients(const Polynomial<K>& p, const RingPtr<L>& target, F&& convert) {
  std::vector<typename Polynomial<L>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.monomial, convert(t.coeff)});
  return Polynomial<L>::from_terms(target, std::move(terms));
}

}  // namespace qci
