#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qci {

inline constexpr int max_variables = 16;

enum class MonomialOrder { grevlex, lex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& name);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(int index, int power = 1);

  int operator[](int i) const noexcept { return exp_[i]; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(int i, int e);

  Monomial operator*(const Monomial& o) const;
  // Precondition: divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept;
  // Highest variable index with nonzero exponent, or -1.
  int last_variable() const noexcept;
  // Support as a bitmask of variable indices.
  std::uint32_t support() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::array<std::uint16_t, max_variables> exp_{};
  int degree_ = 0;
};

// Three-way comparison under `order` with x1 > x2 > ... > xn.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order, int nvars) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// All monomials of degree d in n variables, descending in `order`.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, MonomialOrder order);

}  // namespace qci
