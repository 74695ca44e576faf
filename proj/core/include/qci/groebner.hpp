#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qci/polynomial.hpp"

namespace qci {

struct BuchbergerOptions {
  // Gebauer-Moeller style chain criterion on top of the monomial-pair and
  // coprime-leading-term criteria, which are always applied.
  bool chain_criterion = true;
};

struct BuchbergerStats {
  std::size_t pairs = 0;
  std::size_t skipped_monomial = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t reduced = 0;
  std::size_t reduced_to_zero = 0;
  // Leading monomials of the pairs whose S-polynomial was reduced, in order.
  std::vector<std::pair<Monomial, Monomial>> reduced_pairs;
};

template <Field K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> generators, BuchbergerStats stats);

  const RingPtr<K>& ring() const noexcept { return ring_; }
  // Reduced, monic, sorted by ascending leading monomial.
  const std::vector<Polynomial<K>>& generators() const noexcept { return gens_; }
  const BuchbergerStats& stats() const noexcept { return stats_; }
  std::vector<Monomial> leading_monomials() const;

  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }
  bool is_standard(const Monomial& m) const;
  std::vector<Monomial> standard_monomials(int degree) const;
  // First variable with no pure power among the leading monomials, or -1
  // when the staircase is finite.
  int infinite_ray() const;
  bool is_unit_ideal() const;

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  BuchbergerStats stats_;
};

// Reduced Groebner basis. Pairs are processed by the normal strategy (least
// lcm degree, then pair index). Zero inputs are ignored; `ring` fixes the
// ambient ring when every input is zero.
template <Field K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                            const BuchbergerOptions& options = {});

template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const BuchbergerOptions& options = {});

struct PrimaryResult {
  bool primary = false;
  // Least N with every degree-N monomial in the ideal.
  std::optional<int> witness_degree;
  // A variable whose powers all avoid the ideal, when not primary.
  int ray_variable = -1;
};

// Whether a homogeneous ideal is primary to (x1..xn).
template <Field K>
PrimaryResult is_irrelevant_primary(const std::vector<Polynomial<K>>& gens);

enum class GeneratorClass { not_in_ideal, minimal_generator, in_m_times_ideal };
std::string to_string(GeneratorClass c);

template <Field K>
GeneratorClass minimal_generator_test(const Polynomial<K>& g, const std::vector<Polynomial<K>>& gens);

// True iff every element of `a` lies in the ideal generated by `b`.
template <Field K>
bool ideal_containment(const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b);

}  // namespace qci
