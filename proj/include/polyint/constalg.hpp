#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyint/rational.hpp"

namespace polyint {

// A generator of the graded constant algebra.
//
// Zeta(n) is canonical only for odd n >= 3 and LiHalf(n) only for n >= 4; the
// other values are accepted as raw input and rewritten by reduce(). Named
// constants are new transcendentals introduced by the solver (n = weight,
// k = ordinal within that weight). EulerGamma only lives inside series
// expansions and must cancel before anything is finalized.
struct Symbol {
  enum class Kind : std::uint8_t { Log2, Pi, Zeta, LiHalf, Named, EulerGamma };

  Kind kind = Kind::Log2;
  std::int16_t n = 0;
  std::int16_t k = 0;

  int weight() const;

  static Symbol log2() { return {Kind::Log2, 0, 0}; }
  static Symbol pi() { return {Kind::Pi, 0, 0}; }
  static Symbol zeta(int n) { return {Kind::Zeta, static_cast<std::int16_t>(n), 0}; }
  static Symbol li_half(int n) { return {Kind::LiHalf, static_cast<std::int16_t>(n), 0}; }
  static Symbol named(int weight, int ordinal) {
    return {Kind::Named, static_cast<std::int16_t>(weight), static_cast<std::int16_t>(ordinal)};
  }
  static Symbol euler_gamma() { return {Kind::EulerGamma, 0, 0}; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

std::string to_string(const Symbol& s);

// Product of symbols with positive multiplicities, kept sorted by symbol.
class Monomial {
 public:
  using Factor = std::pair<Symbol, int>;

  Monomial() = default;
  explicit Monomial(Symbol s, int power = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int weight() const;
  int power_of(const Symbol& s) const;

  // Multiplies in s^power; power may be negative as long as the result is
  // still a monomial.
  Monomial times(const Symbol& s, int power) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

std::string to_string(const Monomial& m);

// Exact Q-linear combination of monomials. No zero coefficients are stored.
class ConstExpr {
 public:
  using Terms = std::map<Monomial, Rational>;

  ConstExpr() = default;
  ConstExpr(const Rational& q);  // NOLINT(google-explicit-constructor)
  ConstExpr(int q) : ConstExpr(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  ConstExpr(const Monomial& m, const Rational& q = 1);

  static ConstExpr symbol(const Symbol& s, int power = 1) { return ConstExpr(Monomial(s, power)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Rational value when the expression has no symbols at all.
  std::optional<Rational> as_rational() const;

  // Weight shared by every monomial; nullopt when mixed. Zero has no weight.
  std::optional<int> homogeneous_weight() const;

  bool contains(const Symbol& s) const;

  void add(const Monomial& m, const Rational& q);
  // this += x * q
  void add_scaled(const ConstExpr& x, const Rational& q);

  ConstExpr& operator+=(const ConstExpr& x);
  ConstExpr& operator-=(const ConstExpr& x);
  ConstExpr& operator*=(const Rational& q);

  friend ConstExpr operator+(ConstExpr x, const ConstExpr& y) { return x += y; }
  friend ConstExpr operator-(ConstExpr x, const ConstExpr& y) { return x -= y; }
  friend ConstExpr operator-(ConstExpr x) { return x *= Rational(-1); }
  friend ConstExpr operator*(ConstExpr x, const Rational& q) { return x *= q; }
  friend ConstExpr operator*(const Rational& q, ConstExpr x) { return x *= q; }
  // Bilinear monomial merge without reduction; see mul().
  friend ConstExpr operator*(const ConstExpr& x, const ConstExpr& y);

  friend bool operator==(const ConstExpr&, const ConstExpr&) = default;

  // Multiplies every monomial by pi^delta; throws InternalError if some
  // monomial would get a negative power of pi.
  ConstExpr shift_pi(int delta) const;

 private:
  Terms terms_;
};

// Rewrites zeta at even arguments as rational multiples of pi powers and
// Li_n(1/2) for n <= 3 through the classical identities. Idempotent.
ConstExpr reduce(const ConstExpr& x);

// Algebra multiplication: monomial merge followed by reduce.
ConstExpr mul(const ConstExpr& x, const ConstExpr& y);

ConstExpr power(const ConstExpr& x, int exponent);

// Reduced values of zeta(n), n >= 2, and Li_n(1/2), n >= 1.
ConstExpr zeta_value(int n);
ConstExpr li_half_value(int n);

// Every monomial of exact weight w over the pool, in a deterministic order.
std::vector<Monomial> monomials_of_weight(int w, std::span<const Symbol> pool);

// Throws InternalError naming the first monomial that contains EulerGamma.
void assert_gamma_free(const ConstExpr& x);

// True when every monomial carries an even power of pi.
bool has_only_even_pi(const ConstExpr& x);

// Canonical text: "q1*m1 + q2*m2 - ...", coefficients as p or p/q, monomials
// as Sym^k factors joined by '*'. parse_const_expr is the exact inverse.
std::string to_string(const ConstExpr& x);
ConstExpr parse_const_expr(std::string_view text);
Symbol parse_symbol(std::string_view text);

}  // namespace polyint
