#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qci/quotient.hpp"

namespace qci {

// Subsets of {0..m-1} of size p, in lexicographic order, as bitmasks.
std::vector<std::uint32_t> subsets_of_size(int m, int p);

// Koszul complex E on a homogeneous sequence f_1..f_m of a graded artinian
// ring, with deg v_i = deg f_i so that differentials preserve internal degree.
template <Field K>
class KoszulComplex {
 public:
  using Vector = std::vector<typename K::Element>;

  // A chain in E_p: one ring coordinate vector per p-subset.
  struct Chain {
    int p = 0;
    std::vector<Vector> components;  // indexed like subsets_of_size(m, p)
  };

  struct Cell {
    std::uint32_t subset;
    std::size_t monomial;
  };

  // Throws not_minimal when the sequence is not a minimal generating set of
  // the ideal it generates (unless `require_minimal` is false), and
  // invalid_argument for unit or inhomogeneous entries. Zero entries are
  // allowed only without the minimality requirement, and then take their
  // degree from `degrees`.
  KoszulComplex(QuotientPtr<K> ring, std::vector<RingElement<K>> sequence, bool require_minimal = true,
                std::vector<int> degrees = {});

  const QuotientPtr<K>& ring() const noexcept { return ring_; }
  const std::vector<RingElement<K>>& sequence() const noexcept { return seq_; }
  int length() const noexcept { return static_cast<int>(seq_.size()); }
  int max_internal_degree() const noexcept { return max_degree_; }
  const std::vector<std::uint32_t>& subsets(int p) const { return subsets_[p]; }
  int subset_degree(std::uint32_t s) const;

  // Basis of E_p in internal degree d.
  const std::vector<Cell>& cells(int p, int d) const { return cells_[p][d]; }
  // Matrix of d_p : E_{p,d} -> E_{p-1,d}.
  Matrix<K> boundary(int p, int d) const;

  Chain zero_chain(int p) const;
  Chain boundary(const Chain& c) const;
  Chain wedge(const Chain& a, const Chain& b) const;
  Chain multiply(const RingElement<K>& r, const Chain& c) const;
  Chain multiply_variable(int var, const Chain& c) const;
  Chain add(const Chain& a, const Chain& b) const;
  bool is_zero(const Chain& c) const;
  // Coordinates in cells(p, d) of the degree-d part of c, and back.
  Vector project(const Chain& c, int d) const;
  Chain lift(int p, int d, const Vector& v) const;
  // Coefficient of v_i in a 1-chain.
  RingElement<K> coefficient(const Chain& c, int i) const;

 private:
  QuotientPtr<K> ring_;
  std::vector<RingElement<K>> seq_;
  std::vector<int> degrees_;
  int max_degree_ = 0;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::vector<std::vector<std::vector<Cell>>> cells_;  // [p][d]
};

struct BidegreeTable {
  // [p][d] dimensions.
  std::vector<std::vector<std::size_t>> z, b, h;
  std::size_t total_z(int p) const;
  std::size_t total_b(int p) const;
  std::size_t total_h(int p) const;
  int euler_characteristic() const;
};

template <Field K>
struct HomologyReport {
  BidegreeTable table;
  // Cycles whose classes minimally generate H_1, lowest degree first.
  std::vector<typename KoszulComplex<K>::Chain> h1_generators;
  std::vector<int> h1_generator_degrees;
};

template <Field K>
HomologyReport<K> homology_report(const KoszulComplex<K>& e);

// Z_p and B_p in internal degree d, as subspaces of the cells(p, d) coordinates.
template <Field K>
Subspace<K> cycles(const KoszulComplex<K>& e, int p, int d);
template <Field K>
Subspace<K> boundaries(const KoszulComplex<K>& e, int p, int d);

// grade = m - max{p : H_p != 0}.
template <Field K>
int grade(const KoszulComplex<K>& e, const HomologyReport<K>& report);

// Grade of an ideal through the Koszul complex on its minimal generators.
template <Field K>
int grade(const RingIdeal<K>& ideal);

template <Field K>
struct QciCertificate {
  std::vector<typename KoszulComplex<K>::Chain> cycles;
  std::vector<int> cycle_degrees;
  // a[i][j] = coefficient of v_i in z_j.
  std::vector<std::vector<RingElement<K>>> a;
  std::optional<RingElement<K>> delta;
  int grade = 0;
  std::size_t nu_ideal = 0;
  std::size_t nu_h1 = 0;
  // Degree-wise dimension of H_p against the Hilbert function of the
  // exterior power of the free module on the chosen cycles.
  std::vector<bool> lambda_bijective;
  bool h1_free = false;
  bool entries_in_m = false;
  // Conditions checked when grade is zero.
  std::optional<bool> delta_in_m_power;   // delta in m^n
  std::optional<bool> annihilator_of_ideal_is_delta;  // (0:I) = (delta)
  std::optional<bool> annihilator_of_delta_is_ideal;  // (0:delta) = I
  std::optional<bool> h1_dimension_formula;  // dim H_1 = nu(I) dim R/I
  std::optional<bool> multiplication_by_delta;  // kernel I, image (0:I)
};

template <Field K>
struct QciResult {
  bool certified = false;
  // Name of the first failed check and its bidegree, when refuted.
  std::string refutation;
  HomologyReport<K> report;
  QciCertificate<K> certificate;
};

template <Field K>
QciResult<K> qci_check(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& f);

// Exactness of R^4 -> R^3 -> R^2 -> R -> R -> R^2 built from (f1, f2) and
// a, b, c, d, at its four interior spots.
template <Field K>
bool two_generated_criterion(const RingElement<K>& f1, const RingElement<K>& f2, const RingElement<K>& a,
                             const RingElement<K>& b, const RingElement<K>& c, const RingElement<K>& d);

// Exact zero-divisor search.
struct EzdOptions {
  bool inside_ideal = false;
  int max_degree = 1;
  std::size_t max_results = 0;  // 0 = unlimited
};

template <Field K>
struct ExactPair {
  RingElement<K> x;
  RingElement<K> y;
};

template <Field K>
struct EzdSearchResult {
  std::vector<ExactPair<K>> pairs;
  std::size_t candidates = 0;
};

// Enumerates normalized homogeneous candidates over a finite field. With
// `inside_ideal`, candidates range over the ideal generated by `ideal_gens`.
template <Field K>
EzdSearchResult<K> ezd_search(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& ideal_gens,
                              const EzdOptions& options);

// Factorization obstruction: products (sum a_i F_i)(sum c_j X_j) of a linear
// form from the ideal and an arbitrary linear form, over the presentation
// of the ring. Requires a presentation generated in degree 2 and linear
// ideal generators.
template <Field K>
struct SymbolicObstruction {
  RingPtr<K> parameters;                    // k[a, b, ...]
  std::vector<Polynomial<K>> expressions;   // vanish iff the product lies in the presentation ideal
  std::vector<Polynomial<K>> product_ideal; // (a..)(c..)
  std::optional<int> exponent;              // least e with (product ideal)^e inside the expressions
};

template <Field K>
SymbolicObstruction<K> ezd_symbolic(const QuotientPtr<K>& ring, const std::vector<RingElement<K>>& ideal_gens,
                                    int max_exponent = 3);

}  // namespace qci
