#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qci/field.hpp"

namespace qci {

// Dense row-major matrix over an exact field.
template <Field K>
class Matrix {
 public:
  using Element = typename K::Element;

  Matrix(const K& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const K& field, std::size_t n);
  static Matrix from_rows(const K& field, std::size_t cols, const std::vector<std::vector<Element>>& rows);

  const K& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const;
  std::vector<Element> column(std::size_t j) const;
  void append_row(const std::vector<Element>& r);

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  // M * v.
  std::vector<Element> apply(const std::vector<Element>& v) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  std::string to_string() const;

 private:
  K field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

// In-place reduced row echelon form. Returns the pivot columns; zero rows are
// dropped so that afterwards rows() equals the rank.
template <Field K>
std::vector<std::size_t> rref(Matrix<K>& m);

template <Field K>
std::size_t rank(Matrix<K> m);

// Basis (as rows) of {v : M v = 0}.
template <Field K>
Matrix<K> nullspace(const Matrix<K>& m);

template <Field K>
typename K::Element determinant(Matrix<K> m);

// Inverse of a square matrix; throws division_by_zero when singular.
template <Field K>
Matrix<K> inverse(const Matrix<K>& m);

// A linear subspace of K^n kept as a reduced row echelon basis. Pivots sit in
// the leftmost nonzero column of each basis row.
template <Field K>
class Subspace {
 public:
  using Element = typename K::Element;
  using Vector = std::vector<Element>;

  Subspace(const K& field, std::size_t ambient);
  static Subspace span(const K& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(const K& field, std::size_t ambient);
  static Subspace from_matrix_rows(const Matrix<K>& m);

  const K& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Returns true when `v` enlarged the space.
  bool add(const Vector& v);
  void add_all(const Subspace& o);
  // Residue of `v` after clearing pivot columns; zero iff v is in the space.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  // Columns that are not pivots: coordinates of the quotient K^n / this.
  std::vector<std::size_t> free_columns() const;
  Matrix<K> as_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  K field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

template <Field K>
bool is_zero_vector(const K& field, const std::vector<typename K::Element>& v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

}  // namespace qci
