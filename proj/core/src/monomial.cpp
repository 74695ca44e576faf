#include "qci/monomial.hpp"

#include <algorithm>

#include "qci/error.hpp"

namespace qci {

std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  throw Error(ErrorCode::invalid_argument, "unknown monomial order '" + name + "'");
}

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(max_variables))
    throw Error(ErrorCode::too_many_variables, "at most 16 variables are supported");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (e < 0 || e > 0xffff) throw Error(ErrorCode::invalid_argument, "exponent out of range");
  degree_ += e - exp_[i];
  exp_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < max_variables; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + o.exp_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < max_variables; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree_ > o.degree_) return false;
  for (int i = 0; i < max_variables; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < max_variables; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept { return (support() & o.support()) == 0; }

int Monomial::last_variable() const noexcept {
  for (int i = max_variables - 1; i >= 0; --i)
    if (exp_[i]) return i;
  return -1;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t s = 0;
  for (int i = 0; i < max_variables; ++i)
    if (exp_[i]) s |= 1u << i;
  return s;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!exp_[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
  }
  return out;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order, int nvars) noexcept {
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = nvars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < nvars; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

void fill(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    fill(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, MonomialOrder order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  fill(nvars, 0, degree, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, order, nvars) > 0;
  });
  return out;
}

}  // namespace qci
