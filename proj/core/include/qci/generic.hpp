#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qci/groebner.hpp"
#include "qci/koszul.hpp"

namespace qci {

template <Field K>
struct QuadricSequence {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> forms;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

// n random quadratic forms in n variables, coefficients uniform over F_p in
// the order of monomials_of_degree(n, 2), drawn from derived_stream(seed, trial).
// Throws unsupported_characteristic for p = 2.
QuadricSequence<PrimeField> sample_quadrics(int n, const PrimeField& field, std::uint64_t seed,
                                            std::uint64_t trial = 0);
// Same, drawing from a caller-owned stream.
QuadricSequence<PrimeField> sample_quadrics(int n, const PrimeField& field, Rng& rng);

// n forms in n variables are a regular sequence iff every monomial of degree
// N = sum(d_i) - n + 1 is a combination of the multiples m f_j.
template <Field K>
bool is_regular_sequence(const std::vector<Polynomial<K>>& forms);

// Absolute irreducibility of a quadratic form: hessian rank >= 3.
template <Field K>
bool quadric_irreducible(const Polynomial<K>& f);

// Symmetric matrix sum_h w_h hessian(f_h) of linear forms in `w`.
template <Field K>
std::vector<std::vector<Polynomial<K>>> pencil_matrix(const std::vector<Polynomial<K>>& forms, const RingPtr<K>& w);

// Distinct nonzero 3x3 minors of a square matrix of polynomials.
template <Field K>
std::vector<Polynomial<K>> minors3(const std::vector<std::vector<Polynomial<K>>>& m);

enum class PencilMode { exact, enumerate };

template <Field K>
struct PencilResult {
  // Some b != 0 (over the algebraic closure in exact mode) has rank sum b_h hessian(f_h) <= 2.
  bool exists = false;
  std::optional<std::vector<typename K::Element>> witness;
  std::optional<PrimaryResult> x_test;  // exact mode
  std::size_t candidates = 0;           // enumerate mode
};

template <Field K>
PencilResult<K> pencil_reducible_search(const std::vector<Polynomial<K>>& forms, PencilMode mode);

template <Field K>
struct LinearFactorization {
  std::optional<std::pair<Polynomial<K>, Polynomial<K>>> factors;  // q = l1 * l2
  bool extension_needed = false;
};

// Throws not_quadratic for a form of hessian rank >= 3 (or a non-quadric),
// unsupported_characteristic in characteristic 2.
template <Field K>
LinearFactorization<K> factor_rank2_quadric(const Polynomial<K>& q);

// Coefficient-wise image of an F_p polynomial in an extension of F_p.
Polynomial<ExtensionField> lift_to_extension(const Polynomial<PrimeField>& p, const RingPtr<ExtensionField>& target);

template <Field K>
struct ExactPairWitness {
  std::vector<Polynomial<K>> presentation;  // forms with one generator replaced by the pencil element
  std::size_t replaced = 0;
  Polynomial<K> pencil_element;
  Polynomial<K> l1, l2;
  QuotientPtr<K> ring;
  RingElement<K> x, y;
};

// Replaces a generator by q = sum b_h f_h, factors q = l1 l2 and verifies that
// the images form an exact pair. Throws unsupported_mode when q only factors
// over an extension, and internal_inconsistency when verification fails.
template <Field K>
ExactPairWitness<K> build_exact_pair(const std::vector<Polynomial<K>>& forms, const std::vector<typename K::Element>& b);

// A point b of the rank <= 2 locus of the pencil over a finite extension of F_p,
// found by solving the 3x3 minors (shape lemma after a random change of
// coordinates). The extension has even degree so that the pencil element splits.
struct ExtensionPencilPoint {
  ExtensionField field;
  std::vector<ExtensionField::Element> b;
  int residue_degree = 0;  // degree over F_p of the field generated by b
};

std::optional<ExtensionPencilPoint> pencil_point_over_extension(const std::vector<Polynomial<PrimeField>>& forms,
                                                                Rng& rng, int attempts = 8);

// Linear exact zero-divisors of a graded ring over F_p. In a complete
// intersection of quadrics the partner of a linear exact zero-divisor is
// linear, so candidates l need l y = 0 for some linear y. They are sieved by
// determinants of random compressions of multiplication by l from R_1 to R_2,
// then checked exactly.
struct LinearSieveResult {
  std::size_t candidates = 0;  // projective points of R_1
  std::size_t survivors = 0;   // points with singular compressed multiplication
  std::size_t kernel_hits = 0; // survivors with a linear annihilator
  std::vector<ExactPair<PrimeField>> pairs;
};

LinearSieveResult linear_exact_zero_divisors(const QuotientPtr<PrimeField>& ring, Rng& rng,
                                             std::size_t max_results = 0);

// W_n: w_{ij} = w_{i+j-3} for 4 <= i + j <= n + 3 and 0 otherwise (1-based).
template <Field K>
std::vector<std::vector<Polynomial<K>>> witness_matrix(const RingPtr<K>& w, int n);
// Quadrics f_h in x_1..x_n with hessian(f_h) the coefficient matrix of w_h in W_n.
template <Field K>
std::vector<Polynomial<K>> witness_quadrics(const RingPtr<K>& x, int n);
// Whether the 3x3 minors of W_n generate an ideal primary to (w).
template <Field K>
bool witness_matrix_check(const K& field, int n);

struct ExperimentOptions {
  // Degree-1 exact zero-divisor search for n >= 5.
  bool linear_search = true;
  // Exact X-test on the 3x3 minors of the pencil.
  bool x_test = true;
  int max_resamples = 1000;
};

struct TrialRecord {
  std::uint64_t index = 0;
  int discards = 0;
  std::vector<std::string> forms;
  bool regular = false;
  std::optional<bool> x_test_reducible;  // reducible pencil element over the closure
  std::optional<int> x_test_witness_degree;
  std::string witness_field;             // field of b and of the pair
  std::vector<std::string> witness;      // b
  std::optional<std::string> pencil_element, x, y;
  bool pair_verified = false;
  std::size_t linear_candidates = 0;
  std::size_t linear_survivors = 0;
  std::size_t exact_zero_divisors = 0;
  std::string note;
};

struct ExperimentReport {
  int n = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  std::size_t regular = 0;
  std::size_t discards = 0;
  std::size_t pairs_verified = 0;
  std::size_t trials_with_exact_zero_divisor = 0;
  // Trials at n >= 5 where an exact zero-divisor or reducible pencil was found.
  std::size_t anomalies = 0;
};

ExperimentReport run_experiment(int n, std::uint32_t p, std::size_t trials, std::uint64_t seed,
                                const ExperimentOptions& options = {});

}  // namespace qci
