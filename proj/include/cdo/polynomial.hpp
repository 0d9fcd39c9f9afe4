#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdo/rational.hpp"

namespace cdo {

inline constexpr int kMaxVars = 16;
/// Slots 0..kParamSlots-1 hold level parameters; coordinate rings use the rest.
inline constexpr int kParamSlots = 4;

using Exponents = std::array<std::uint8_t, kMaxVars>;

/// Names used when printing and parsing. Slot i is names[i]; missing
/// entries fall back to the default parameter names t, u, v, w, y4, y5, ...
using VariableNames = std::vector<std::string>;

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);
  template <std::integral I>
  Polynomial(I c) : Polynomial(Rational(c)) {}

  static Polynomial variable(int slot);
  static Polynomial term(const Exponents& e, const Rational& c);
  /// The level parameter t (slot 0).
  static Polynomial t() { return variable(0); }

  static Polynomial parse(std::string_view text, const VariableNames& names = {});

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;
  int degree() const;
  /// True when only slots below `limit` appear.
  bool uses_only_slots_below(int limit) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);
  /// this += c * o and this += a * b, without temporaries.
  void add_scaled(const Polynomial& o, const Rational& c);
  void add_product(const Polynomial& a, const Polynomial& b);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
  Polynomial operator-() const;
  Polynomial operator+() const { return *this; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial derivative(int slot) const;
  /// Replaces the listed slots by rational values.
  Polynomial evaluate(const std::vector<std::pair<int, Rational>>& values) const;
  /// Coefficient of a monomial in the parameter slots, as a polynomial in the
  /// remaining slots.
  std::map<Exponents, Polynomial> split_by_slots_below(int limit) const;

  std::string str(const VariableNames& names = {}) const;

 private:
  Terms terms_;
};

using Scalar = Polynomial;

std::string default_variable_name(int slot);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace cdo
