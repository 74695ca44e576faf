#include "qci/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "qci/error.hpp"

namespace qci {

template <Field K>
PolynomialRing<K>::PolynomialRing(K field, int nvars, MonomialOrder order, std::vector<std::string> names)
    : field_(std::move(field)), nvars_(nvars), order_(order), names_(std::move(names)) {
  if (nvars < 0 || nvars > max_variables)
    throw Error(ErrorCode::too_many_variables,
                std::to_string(nvars) + " variables requested, at most 16 are supported");
  if (names_.empty())
    for (int i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != nvars)
    throw Error(ErrorCode::invalid_argument, "variable name count does not match the ring");
}

template <Field K>
int PolynomialRing<K>::variable_index(std::string_view name) const {
  for (int i = 0; i < nvars_; ++i)
    if (names_[i] == name) return i;
  if (name.size() > 1 && name[0] == 'x') {
    int v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
      v = v * 10 + (name[i] - '0');
      if (v > nvars_) return -1;
    }
    if (v >= 1 && v <= nvars_) return v - 1;
  }
  return -1;
}

// ---------------------------------------------------------------- Polynomial

template <Field K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const Element& c) {
  return term(std::move(ring), Monomial{}, c);
}

template <Field K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, int index) {
  const auto one = ring->field().one();
  return term(std::move(ring), Monomial::variable(index), one);
}

template <Field K>
Polynomial<K> Polynomial<K>::term(RingPtr<K> ring, const Monomial& m, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::from_terms(RingPtr<K> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& R = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = R.field().add(p.terms_.back().coeff, t.coeff);
      if (R.field().is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!R.field().is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <Field K>
void Polynomial<K>::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw Error(ErrorCode::ring_mismatch, "polynomials live in different rings");
}

template <Field K>
int Polynomial<K>::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

template <Field K>
int Polynomial<K>::lowest_degree() const {
  int d = -1;
  for (const auto& t : terms_)
    if (d < 0 || t.monomial.degree() < d) d = t.monomial.degree();
  return d;
}

template <Field K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

template <Field K>
typename K::Element Polynomial<K>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return field().zero();
}

template <Field K>
Polynomial<K> Polynomial<K>::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto& R = *ring_;
  const K& f = R.field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = R.compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!f.is_zero(s)) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <Field K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

template <Field K>
Polynomial<K> Polynomial<K>::operator-(const Polynomial& o) const {
  return *this + (-o);
}

template <Field K>
Polynomial<K> Polynomial<K>::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.monomial * b.monomial, field().mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

template <Field K>
Polynomial<K> Polynomial<K>::scale(const Element& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
  return r;
}

template <Field K>
Polynomial<K> Polynomial<K>::mul_term(const Monomial& m, const Element& c) const {
  // Multiplying by a monomial preserves the order of terms.
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
  return r;
}

template <Field K>
Polynomial<K> Polynomial<K>::power(unsigned e) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <Field K>
Polynomial<K> Polynomial<K>::sub_mul_term(const Element& c, const Monomial& m, const Polynomial& o) const {
  const auto& R = *ring_;
  const K& f = R.field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    const Monomial mj = o.terms_[j].monomial * m;
    const int cmp = i == terms_.size() ? -1 : R.compare(terms_[i].monomial, mj);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({mj, f.neg(f.mul(c, o.terms_[j].coeff))});
      ++j;
    } else {
      auto s = f.sub(terms_[i].coeff, f.mul(c, o.terms_[j].coeff));
      if (!f.is_zero(s)) r.terms_.push_back({mj, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <Field K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(leading_coefficient()));
}

template <Field K>
Polynomial<K> Polynomial<K>::homogeneous_component(int degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) r.terms_.push_back(t);
  return r;
}

template <Field K>
Polynomial<K> Polynomial<K>::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) < ring_->nvars())
    throw Error(ErrorCode::invalid_argument, "substitution needs one image per variable");
  const RingPtr<K>& target = images.empty() ? ring_ : images.front().ring();
  Polynomial r(target);
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coeff);
    for (int i = 0; i < ring_->nvars(); ++i)
      if (t.monomial[i]) m = m * images[i].power(t.monomial[i]);
    r += m;
  }
  return r;
}

template <Field K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const K& f = field();
  for (const auto& t : terms_) {
    std::string c = coefficient_string(f, t.coeff);
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.monomial.to_string(ring_->names());
    }
  }
  return out;
}

// ------------------------------------------------------------ free functions

template <Field K>
Matrix<K> hessian(const Polynomial<K>& f) {
  const K& k = f.field();
  if (k.characteristic() == 2)
    throw Error(ErrorCode::unsupported_characteristic, "Hessian matrices need characteristic other than 2");
  const int n = f.ring()->nvars();
  Matrix<K> h(k, n, n);
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != 2)
      throw Error(ErrorCode::not_quadratic, "Hessian requires a quadratic form, got " + f.to_string());
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (t.monomial[v] == 2) i = j = v;
      else if (t.monomial[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      h(i, i) = k.add(t.coeff, t.coeff);
    } else {
      h(i, j) = t.coeff;
      h(j, i) = t.coeff;
    }
  }
  return h;
}

template <Field K>
Polynomial<K> quadric_from_hessian(const RingPtr<K>& ring, const Matrix<K>& h) {
  const K& k = ring->field();
  const auto half = k.inv(k.from_int(2));
  std::vector<typename Polynomial<K>::Term> terms;
  const int n = ring->nvars();
  for (int i = 0; i < n; ++i) {
    terms.push_back({Monomial::variable(i, 2), k.mul(h(i, i), half)});
    for (int j = i + 1; j < n; ++j) terms.push_back({Monomial::variable(i) * Monomial::variable(j), h(i, j)});
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <Field K>
Polynomial<K> initial_form(const Polynomial<K>& h) {
  if (h.is_zero()) throw Error(ErrorCode::invalid_argument, "initial form of the zero polynomial");
  return h.homogeneous_component(h.lowest_degree());
}

template <Field K>
Polynomial<K> linear_form(const RingPtr<K>& ring, const std::vector<typename K::Element>& coeffs) {
  std::vector<typename Polynomial<K>::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.push_back({Monomial::variable(static_cast<int>(i)), coeffs[i]});
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <Field K>
std::vector<typename K::Element> linear_coefficients(const Polynomial<K>& l) {
  std::vector<typename K::Element> c(l.ring()->nvars(), l.field().zero());
  for (const auto& t : l.terms()) {
    if (t.monomial.degree() != 1) throw Error(ErrorCode::invalid_argument, "not a linear form: " + l.to_string());
    c[t.monomial.last_variable()] = t.coeff;
  }
  return c;
}

namespace {

template <Field K>
class Parser {
 public:
  Parser(const RingPtr<K>& ring, std::string_view text, int line, int column)
      : ring_(ring), text_(text), line_(line), column_(column) {}

  Polynomial<K> run() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial<K> p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = line_, col = column_;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> expr() {
    Polynomial<K> acc(ring_);
    bool first = true;
    for (;;) {
      skip();
      bool negative = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negative = true;
      } else if (!first) {
        break;
      }
      Polynomial<K> t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        mpz_class d = integer();
        if (d == 0) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scale(ring_->field().from_rational(mpq_class(1, 1) / mpq_class(d)));
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> power() {
    Polynomial<K> base = atom();
    if (accept('^')) {
      skip();
      mpz_class e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.power(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<K> atom() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = integer();
      return Polynomial<K>::constant(ring_, ring_->field().from_rational(mpq_class(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const int idx = ring_->variable_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial<K>::variable(ring_, idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr<K>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

}  // namespace

template <Field K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text, int line, int column) {
  return Parser<K>(ring, text, line, column).run();
}

#define QCI_INSTANTIATE(K)                                                                       \
  template class PolynomialRing<K>;                                                             \
  template class Polynomial<K>;                                                                 \
  template Matrix<K> hessian<K>(const Polynomial<K>&);                                          \
  template Polynomial<K> quadric_from_hessian<K>(const RingPtr<K>&, const Matrix<K>&);          \
  template Polynomial<K> initial_form<K>(const Polynomial<K>&);                                 \
  template Polynomial<K> linear_form<K>(const RingPtr<K>&, const std::vector<K::Element>&);     \
  template std::vector<K::Element> linear_coefficients<K>(const Polynomial<K>&);                \
  template Polynomial<K> parse_polynomial<K>(const RingPtr<K>&, std::string_view, int, int);

QCI_INSTANTIATE(PrimeField)
QCI_INSTANTIATE(RationalField)
QCI_INSTANTIATE(ExtensionField)

#undef QCI_INSTANTIATE

}  // namespace qci
