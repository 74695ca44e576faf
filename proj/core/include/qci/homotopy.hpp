#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qci/koszul.hpp"

namespace qci {

// Power series known exactly up to (excluding) z^precision.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::vector<mpq_class> coeffs, int precision);
  // A polynomial, padded with zeros up to the precision.
  static PowerSeries polynomial(const std::vector<long>& coeffs, int precision);

  int precision() const noexcept { return precision_; }
  const mpq_class& operator[](int i) const;
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
  // Integer coefficients; throws malformed_series on a non-integer.
  std::vector<long> integers() const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  // Throws malformed_series when the constant term vanishes.
  PowerSeries inverse() const;
  // f(-z).
  PowerSeries alternate() const;
  PowerSeries truncate(int precision) const;
  std::string to_string() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.precision_ == b.precision_ && a.c_ == b.c_;
  }

 private:
  std::vector<mpq_class> c_;
  int precision_ = 0;
};

// 1 / H(-z) to the given precision.
PowerSeries poincare_from_koszul(const PowerSeries& hilbert, int precision);

// Integers e_1..e_m with P = prod_{i odd} (1 + z^i)^{e_i} / prod_{i even} (1 - z^i)^{e_i}
// modulo z^{m+1}.
std::vector<long> deviations(const PowerSeries& p, int m);
// Inverse of `deviations`.
PowerSeries series_from_deviations(const std::vector<long>& eps, int precision);

// Quadratic dual T(V*)/(R^perp) of a commutative quadratic algebra
// k[x1..xn]/(q_1..q_r), kept up to degree 3. Tensors t_i t_j and t_i t_j t_k
// are indexed by i*n + j and (i*n + j)*n + k.
template <Field K>
class QuadraticDual {
 public:
  using Vector = std::vector<typename K::Element>;

  // Throws not_quadratic for a relation that is not a quadratic form and
  // unsupported_characteristic in characteristic 2.
  static QuadraticDual build(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& relations);

  int nvars() const noexcept { return n_; }
  const K& field() const noexcept { return field_; }
  // (dim A^!_1, dim A^!_2, dim A^!_3).
  std::vector<std::size_t> dims() const;
  // Orthogonal complement of the relations inside V* (x) V*.
  const Subspace<K>& relations_perp() const noexcept { return perp2_; }
  const Subspace<K>& degree3_relations() const noexcept { return rel3_; }
  // Tensors whose classes form bases of A^!_2 and A^!_3.
  const std::vector<std::size_t>& basis2() const noexcept { return basis2_; }
  const std::vector<std::size_t>& basis3() const noexcept { return basis3_; }

  // Coordinates of the class of a tensor in A^!_2 or A^!_3.
  Vector reduce2(const Vector& tensor) const;
  Vector reduce3(const Vector& tensor) const;
  // Products of classes, all in basis coordinates.
  Vector multiply11(int i, int j) const;
  Vector multiply12(int i, const Vector& b) const;
  Vector multiply21(const Vector& b, int i) const;
  // (t_i t_j) t_k = t_i (t_j t_k) for all i, j, k.
  bool check_associativity() const;
  std::string basis_label2(std::size_t idx) const;

 private:
  QuadraticDual(K field, int n) : field_(std::move(field)), n_(n), perp2_(field_, 0), rel3_(field_, 0) {}

  K field_;
  int n_;
  Subspace<K> perp2_;
  Subspace<K> rel3_;
  std::vector<std::size_t> basis2_, basis3_;
};

template <Field K>
struct CenterResult {
  std::size_t dim = 0;
  // Basis of the commutant in A^!_2 coordinates.
  std::vector<std::vector<typename K::Element>> basis;
};

// {z in A^!_2 : z t = t z in A^!_3 for every t in A^!_1}. Throws
// unsupported_characteristic in characteristic 2 or 3.
template <Field K>
CenterResult<K> degree2_center(const QuadraticDual<K>& dual);

struct BettiTable {
  // beta[i][j]: homological degree i, internal degree j.
  std::vector<std::vector<std::size_t>> beta;
  // False when the internal degree bound cut the computation short.
  bool complete = true;

  std::size_t at(int i, int j) const;
  std::size_t total(int i) const;
  std::vector<std::size_t> totals() const;
  int max_homological_degree() const { return static_cast<int>(beta.size()) - 1; }
  // Macaulay-style table: columns are homological degrees, row r holds beta[i][i + r].
  std::string to_string() const;
};

// Graded minimal free resolution of R/J over R for a homogeneous ideal J, up
// to homological degree `hd_bound`. Internal degrees above `internal_bound`
// (when >= 0) are skipped and the table is marked incomplete.
template <Field K>
BettiTable minimal_resolution(const RingIdeal<K>& j, int hd_bound, int internal_bound = -1);

// Resolution of the residue field.
template <Field K>
BettiTable residue_field_resolution(const QuotientPtr<K>& ring, int hd_bound);

// Linear resolution of k up to homological degree n.
template <Field K>
bool is_koszul_up_to(const QuotientPtr<K>& ring, int n = 5);

// Dimensions of Koszul homology on the images of the variables, that is the
// betti numbers of R over its ambient polynomial ring.
template <Field K>
std::vector<std::size_t> ambient_betti(const QuotientPtr<K>& ring);

// Throws non_minimal_presentation unless the presentation lies in m^2.
template <Field K>
bool is_complete_intersection(const QuotientPtr<K>& ring);

// Whether R/J is a complete intersection, read off beta_1 = n of the Koszul
// homology of R/J on all n variables; no minimality of the presentation is
// needed since a redundant linear variable adds one to both sides.
template <Field K>
bool quotient_is_complete_intersection(const RingIdeal<K>& j);

enum class Embeddedness { not_embedded, inconclusive };
std::string to_string(Embeddedness e);

struct EmbeddednessReport {
  Embeddedness verdict = Embeddedness::inconclusive;
  int complexity = 0;       // nu(I) - grade
  std::size_t center_dim = 0;
  int koszul_bound = 0;
};

// Throws unsupported_mode when R is not Koszul up to `koszul_bound`.
template <Field K>
EmbeddednessReport embeddedness_obstruction(const QuotientPtr<K>& ring, const QciCertificate<K>& cert,
                                            int koszul_bound = 4);

// Bounds on nu(I) against the Loewy length for a q.c.i. ideal I.
struct LoewyReport {
  int loewy_length = 0;
  std::size_t nu_ideal = 0;
  std::size_t nu_maximal = 0;
  std::size_t nu_top_power = 0;           // nu(m^{l-1})
  bool quotient_complete_intersection = false;
  bool quotient_gorenstein = false;
  bool i_cap_m2_in_mi = false;            // I n m^2 inside m I
  bool bound1 = false;                    // nu(I) <= l - 1
  std::optional<bool> bound2;             // nu(I) <= l - 2 when R/I is not a c.i.
  std::optional<bool> bound3;             // nu(m/I) <= nu(m^{l-1})
  std::optional<bool> bound4;             // nu(I) <= l - 3
  std::optional<bool> bound5;             // l >= 4, and nu(I) = 1 when l = 4
  bool all_hold() const;
};

template <Field K>
LoewyReport loewy_check(const RingIdeal<K>& ideal);

}  // namespace qci
