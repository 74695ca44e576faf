#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qci/groebner.hpp"
#include "qci/linalg.hpp"

namespace qci {

template <Field K>
class QuotientRing;

template <Field K>
using QuotientPtr = std::shared_ptr<const QuotientRing<K>>;

// Graded artinian quotient P/a as a finite-dimensional algebra. Coordinates
// are taken in the standard monomial basis, ordered by ascending degree and
// descending monomial order within a degree.
template <Field K>
class QuotientRing {
 public:
  using Element = typename K::Element;
  using Vector = std::vector<Element>;
  using Sparse = std::vector<std::pair<std::size_t, Element>>;

  // Throws non_artinian (naming a staircase ray) or not_homogeneous.
  static QuotientPtr<K> build(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens);
  static QuotientPtr<K> build(const std::vector<Polynomial<K>>& gens);
  static QuotientPtr<K> from_basis(GroebnerBasis<K> gb, std::vector<Polynomial<K>> presentation);

  const RingPtr<K>& polynomial_ring() const noexcept { return gb_.ring(); }
  const K& field() const noexcept { return gb_.ring()->field(); }
  int nvars() const noexcept { return gb_.ring()->nvars(); }
  const GroebnerBasis<K>& groebner_basis() const noexcept { return gb_; }
  // The generators the ring was built from.
  const std::vector<Polynomial<K>>& presentation() const noexcept { return presentation_; }

  std::size_t dim() const noexcept { return basis_.size(); }
  int top_degree() const noexcept { return static_cast<int>(offsets_.size()) - 2; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  int degree_of(std::size_t index) const noexcept { return basis_[index].degree(); }
  // Coordinates of degree d occupy [begin(d), end(d)).
  std::size_t begin(int d) const noexcept;
  std::size_t end(int d) const noexcept;
  std::vector<std::size_t> hilbert_series() const;
  int loewy_length() const noexcept { return top_degree() + 1; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  Vector zero_vector() const { return Vector(dim(), field().zero()); }
  Vector coordinates(const Polynomial<K>& f) const;
  Polynomial<K> to_polynomial(const Vector& v) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector multiply_variable(int var, const Vector& a) const;
  // Product of basis monomials i and j.
  const Sparse& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  // Matrix of multiplication by a: column j is a * b_j.
  Matrix<K> multiplication_matrix(const Vector& a) const;

 private:
  QuotientRing(GroebnerBasis<K> gb, std::vector<Polynomial<K>> presentation);

  GroebnerBasis<K> gb_;
  std::vector<Polynomial<K>> presentation_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> offsets_;  // offsets_[d] = begin(d)
  std::vector<std::vector<Sparse>> var_columns_;  // [var][j] = x_var * b_j
  std::vector<Sparse> table_;
};

template <Field K>
class RingElement {
 public:
  using Element = typename K::Element;
  using Vector = std::vector<Element>;

  RingElement(QuotientPtr<K> ring, Vector coords);
  static RingElement zero(QuotientPtr<K> ring);
  static RingElement one(QuotientPtr<K> ring);
  static RingElement variable(QuotientPtr<K> ring, int var);
  static RingElement from_polynomial(QuotientPtr<K> ring, const Polynomial<K>& f);
  static RingElement parse(QuotientPtr<K> ring, std::string_view text);

  const QuotientPtr<K>& ring() const noexcept { return ring_; }
  const Vector& coordinates() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;
  // Lowest degree with a nonzero component; -1 for zero.
  int lowest_degree() const;
  int degree() const;  // precondition: homogeneous and nonzero
  Polynomial<K> to_polynomial() const { return ring_->to_polynomial(coords_); }
  std::string to_string() const { return to_polynomial().to_string(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement scale(const Element& c) const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      if (!a.ring_->field().equal(a.coords_[i], b.coords_[i])) return false;
    return true;
  }

 private:
  QuotientPtr<K> ring_;
  Vector coords_;
};

// An ideal of a quotient ring as a subspace of coordinates closed under
// multiplication by the variables.
template <Field K>
class RingIdeal {
 public:
  using Vector = std::vector<typename K::Element>;

  RingIdeal(QuotientPtr<K> ring, Subspace<K> space);
  static RingIdeal generated_by(QuotientPtr<K> ring, const std::vector<RingElement<K>>& gens);
  static RingIdeal zero(QuotientPtr<K> ring);
  static RingIdeal whole(QuotientPtr<K> ring);
  // m^k, the span of coordinates of degree >= k.
  static RingIdeal maximal_power(QuotientPtr<K> ring, int k);

  const QuotientPtr<K>& ring() const noexcept { return ring_; }
  const Subspace<K>& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool is_zero() const noexcept { return space_.dim() == 0; }
  bool is_whole() const noexcept { return space_.dim() == ring_->dim(); }
  bool contains(const RingElement<K>& x) const { return space_.contains(x.coordinates()); }
  bool contains(const RingIdeal& o) const { return space_.contains(o.space_); }
  // Pivot counts per degree (Hilbert function for homogeneous ideals).
  std::vector<std::size_t> hilbert_function() const;
  // Hilbert function of R / this.
  std::vector<std::size_t> quotient_hilbert() const;

  RingIdeal m_times() const;
  RingIdeal operator+(const RingIdeal& o) const;
  RingIdeal operator*(const RingIdeal& o) const;
  RingIdeal power(int k) const;
  // Greedy choice of rref rows independent modulo m*J, lowest degree first.
  std::vector<RingElement<K>> minimal_generators() const;
  std::size_t nu() const;

  friend bool operator==(const RingIdeal& a, const RingIdeal& b) { return a.space_ == b.space_; }

 private:
  QuotientPtr<K> ring_;
  Subspace<K> space_;
};

// (J : L) = {r : r L subset of J}.
template <Field K>
RingIdeal<K> colon_ideal(const RingIdeal<K>& j, const RingIdeal<K>& l);

template <Field K>
RingIdeal<K> annihilator(const RingElement<K>& x);

template <Field K>
RingIdeal<K> annihilator(const RingIdeal<K>& l);

template <Field K>
RingIdeal<K> socle(const QuotientPtr<K>& ring);

template <Field K>
std::size_t min_gens_nu(const RingIdeal<K>& j) {
  return j.nu();
}

// Complementary zero-divisor y with (0:x) = (y) and (0:y) = (x), if x is an
// exact zero-divisor. Throws invalid_argument for zero or unit x.
template <Field K>
std::optional<RingElement<K>> is_exact_zero_divisor(const RingElement<K>& x);

// Quotient ring P/(a + lifts of gens).
template <Field K>
QuotientPtr<K> quotient_by(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& gens);

}  // namespace qci
