#pragma once

#include <string>
#include <vector>

#include "qci/quotient.hpp"

namespace qci {

// The five-variable ring B = k[x1..x5]/c and the ideal I = (f1, f2) used as
// the running regression example.
inline const std::vector<std::string>& example_b_relations() {
  static const std::vector<std::string> rel = {"x1^2-x2*x3", "x2^2-x3*x5", "x3^2-x1*x4", "x4^2",
                                               "x5^2",       "x3*x4",      "x2*x5",      "x4*x5"};
  return rel;
}

inline const std::vector<std::string>& example_b_ideal() {
  static const std::vector<std::string> gens = {"x1+x2+x4", "x2+x3+x5"};
  return gens;
}

// Entries a, b, c, d of the cycles a v1 + c v2 and b v1 + d v2 on (f1, f2).
inline const std::vector<std::string>& example_b_cycle_entries() {
  static const std::vector<std::string> abcd = {"x1-x2", "x4", "-x3+x4+2*x5", "x2-x3-x4"};
  return abcd;
}

// Coefficient conditions in k[a..g] for (a f1 + b f2)(c x1 + ... + g x5) to
// vanish in B, as derived by hand.
inline const std::vector<std::string>& example_b_symbolic_expressions() {
  static const std::vector<std::string> e = {"a*c + b*d + a*e + b*e", "a*d + b*d + b*e + b*g", "a*c + b*e + a*f",
                                             "a*c + b*c + a*d",       "b*c + a*e",             "b*c + a*g",
                                             "a*d + a*f + b*f"};
  return e;
}

template <Field K>
struct ExampleB {
  RingPtr<K> polynomials;
  std::vector<Polynomial<K>> relations;
  QuotientPtr<K> ring;
  RingElement<K> f1, f2;
};

template <Field K>
ExampleB<K> make_example_b(const K& field, MonomialOrder order = MonomialOrder::grevlex) {
  auto P = make_polynomial_ring(field, 5, order);
  std::vector<Polynomial<K>> rel;
  for (const auto& s : example_b_relations()) rel.push_back(parse_polynomial(P, s));
  auto B = QuotientRing<K>::build(P, rel);
  auto f1 = RingElement<K>::parse(B, example_b_ideal()[0]);
  auto f2 = RingElement<K>::parse(B, example_b_ideal()[1]);
  return {P, rel, B, f1, f2};
}

// k[x1..xn]/(x1^2, ..., xn^2).
template <Field K>
QuotientPtr<K> make_square_ci(const K& field, int n) {
  auto P = make_polynomial_ring(field, n);
  std::vector<Polynomial<K>> rel;
  for (int i = 0; i < n; ++i) rel.push_back(Polynomial<K>::variable(P, i).power(2));
  return QuotientRing<K>::build(P, rel);
}

// k[x1..xn]/(gens) from strings.
template <Field K>
QuotientPtr<K> make_quotient(const K& field, int n, const std::vector<std::string>& gens,
                             MonomialOrder order = MonomialOrder::grevlex) {
  auto P = make_polynomial_ring(field, n, order);
  std::vector<Polynomial<K>> rel;
  for (const auto& s : gens) rel.push_back(parse_polynomial(P, s));
  return QuotientRing<K>::build(P, rel);
}

}  // namespace qci
