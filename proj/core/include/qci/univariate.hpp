#pragma once

#include <vector>

#include <gmpxx.h>

#include "qci/field.hpp"

namespace qci {

// Dense univariate polynomials over a field, lowest coefficient first; the
// zero polynomial is empty.
template <Field K>
using UPoly = std::vector<typename K::Element>;

template <Field K>
void upoly_trim(const K& f, UPoly<K>& a);

template <Field K>
int upoly_degree(const UPoly<K>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <Field K>
UPoly<K> upoly_add(const K& f, const UPoly<K>& a, const UPoly<K>& b);
template <Field K>
UPoly<K> upoly_sub(const K& f, const UPoly<K>& a, const UPoly<K>& b);
template <Field K>
UPoly<K> upoly_mul(const K& f, const UPoly<K>& a, const UPoly<K>& b);
// a = q b + r with deg r < deg b; throws division_by_zero for b = 0.
template <Field K>
void upoly_divmod(const K& f, const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& q, UPoly<K>& r);
template <Field K>
UPoly<K> upoly_mod(const K& f, const UPoly<K>& a, const UPoly<K>& b);
template <Field K>
UPoly<K> upoly_monic(const K& f, UPoly<K> a);
// Monic gcd.
template <Field K>
UPoly<K> upoly_gcd(const K& f, UPoly<K> a, UPoly<K> b);
template <Field K>
UPoly<K> upoly_powmod(const K& f, UPoly<K> base, const mpz_class& e, const UPoly<K>& m);
template <Field K>
typename K::Element upoly_eval(const K& f, const UPoly<K>& a, const typename K::Element& x);

// Factorization over a finite field of odd characteristic: monic irreducible
// factors with multiplicities, sorted by degree.
template <Field K>
struct UFactor {
  UPoly<K> factor;
  int multiplicity;
};

template <Field K>
std::vector<UFactor<K>> upoly_factor(const K& f, const UPoly<K>& a, Rng& rng);

// Distinct roots in the field.
template <Field K>
std::vector<typename K::Element> upoly_roots(const K& f, const UPoly<K>& a, Rng& rng);

}  // namespace qci
