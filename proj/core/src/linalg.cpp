#include "qci/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "qci/error.hpp"

namespace qci {

template <Field K>
Matrix<K>::Matrix(const K& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

template <Field K>
Matrix<K> Matrix<K>::identity(const K& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <Field K>
Matrix<K> Matrix<K>::from_rows(const K& field, std::size_t cols, const std::vector<std::vector<Element>>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

template <Field K>
std::vector<typename K::Element> Matrix<K>::row(std::size_t i) const {
  return std::vector<Element>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <Field K>
std::vector<typename K::Element> Matrix<K>::column(std::size_t j) const {
  std::vector<Element> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

template <Field K>
void Matrix<K>::append_row(const std::vector<Element>& r) {
  if (r.size() != cols_) throw Error(ErrorCode::invalid_argument, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

template <Field K>
Matrix<K> Matrix<K>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::invalid_argument, "matrix shape mismatch in product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Element& a = (*this)(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
    }
  return r;
}

template <Field K>
Matrix<K> Matrix<K>::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

template <Field K>
std::vector<typename K::Element> Matrix<K>::apply(const std::vector<Element>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::invalid_argument, "vector length mismatch");
  std::vector<Element> r(rows_, field_.zero());
  for (std::size_t j = 0; j < cols_; ++j) {
    if (field_.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) r[i] = field_.add(r[i], field_.mul((*this)(i, j), v[j]));
  }
  return r;
}

template <Field K>
bool Matrix<K>::is_zero() const {
  return is_zero_vector(field_, data_);
}

template <Field K>
std::string Matrix<K>::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << field_.format((*this)(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

template <Field K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  const K& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(m(r, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<K> trimmed(f, 0, m.cols());
  for (std::size_t i = 0; i < r; ++i) trimmed.append_row(m.row(i));
  m = std::move(trimmed);
  return pivots;
}

template <Field K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

template <Field K>
Matrix<K> nullspace(const Matrix<K>& m) {
  const K& f = m.field();
  Matrix<K> r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<K> out(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    out.append_row(v);
  }
  return out;
}

template <Field K>
typename K::Element determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::invalid_argument, "determinant of a non-square matrix");
  const K& f = m.field();
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(m(p, c))) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

template <Field K>
Matrix<K> inverse(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::invalid_argument, "inverse of a non-square matrix");
  const K& f = m.field();
  Matrix<K> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::division_by_zero, "matrix is singular");
  Matrix<K> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ------------------------------------------------------------------ Subspace

template <Field K>
Subspace<K>::Subspace(const K& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

template <Field K>
Subspace<K> Subspace<K>::span(const K& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  Matrix<K> m(field, 0, ambient);
  for (const auto& v : vectors) m.append_row(v);
  return from_matrix_rows(m);
}

template <Field K>
Subspace<K> Subspace<K>::whole(const K& field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient, field.zero());
    v[i] = field.one();
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

template <Field K>
Subspace<K> Subspace<K>::from_matrix_rows(const Matrix<K>& m) {
  Subspace s(m.field(), m.cols());
  Matrix<K> r = m;
  s.pivots_ = rref(r);
  for (std::size_t i = 0; i < r.rows(); ++i) s.basis_.push_back(r.row(i));
  return s;
}

template <Field K>
typename Subspace<K>::Vector Subspace<K>::reduce(Vector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (field_.is_zero(v[p])) continue;
    const auto factor = v[p];
    const Vector& b = basis_[i];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!field_.is_zero(b[j])) v[j] = field_.sub(v[j], field_.mul(factor, b[j]));
  }
  return v;
}

template <Field K>
bool Subspace<K>::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && field_.is_zero(r[p])) ++p;
  if (p == ambient_) return false;
  const auto inv = field_.inv(r[p]);
  for (std::size_t j = p; j < ambient_; ++j) r[j] = field_.mul(r[j], inv);
  for (auto& b : basis_) {
    if (field_.is_zero(b[p])) continue;
    const auto factor = b[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!field_.is_zero(r[j])) b[j] = field_.sub(b[j], field_.mul(factor, r[j]));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

template <Field K>
void Subspace<K>::add_all(const Subspace& o) {
  for (const auto& v : o.basis_) add(v);
}

template <Field K>
bool Subspace<K>::contains(const Vector& v) const {
  return is_zero_vector(field_, reduce(v));
}

template <Field K>
bool Subspace<K>::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

template <Field K>
Subspace<K> Subspace<K>::sum(const Subspace& o) const {
  Subspace s = *this;
  s.add_all(o);
  return s;
}

template <Field K>
Subspace<K> Subspace<K>::intersect(const Subspace& o) const {
  // Solve sum_i a_i u_i = sum_j b_j w_j.
  const std::size_t a = dim(), b = o.dim();
  Matrix<K> m(field_, ambient_, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, a + j) = field_.neg(o.basis_[j][r]);
  const Matrix<K> ns = nullspace(m);
  Subspace out(field_, ambient_);
  for (std::size_t k = 0; k < ns.rows(); ++k) {
    Vector v(ambient_, field_.zero());
    for (std::size_t i = 0; i < a; ++i) {
      const auto c = ns(k, i);
      if (field_.is_zero(c)) continue;
      for (std::size_t r = 0; r < ambient_; ++r) v[r] = field_.add(v[r], field_.mul(c, basis_[i][r]));
    }
    out.add(v);
  }
  return out;
}

template <Field K>
std::vector<std::size_t> Subspace<K>::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

template <Field K>
Matrix<K> Subspace<K>::as_matrix() const {
  return Matrix<K>::from_rows(field_, ambient_, basis_);
}

#define QCI_INSTANTIATE(K)                                         \
  template class Matrix<K>;                                        \
  template class Subspace<K>;                                      \
  template std::vector<std::size_t> rref<K>(Matrix<K>&);           \
  template std::size_t rank<K>(Matrix<K>);                         \
  template Matrix<K> nullspace<K>(const Matrix<K>&);               \
  template K::Element determinant<K>(Matrix<K>);                   \
  template Matrix<K> inverse<K>(const Matrix<K>&);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
