#pragma once

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "polyint/constalg.hpp"
#include "polyint/index.hpp"
#include "polyint/rational.hpp"

namespace polyint {

// log2^log2 * pi^pi * log^e1(1-x) * log^e2(x) * log^e3(1+x)
struct LogMonomial {
  int log2 = 0;
  int pi = 0;
  int e1 = 0;
  int e2 = 0;
  int e3 = 0;

  int weight() const { return log2 + pi + e1 + e2 + e3; }
  friend auto operator<=>(const LogMonomial&, const LogMonomial&) = default;
};

// Polynomial in log 2, pi and the three integrand logarithms with rational
// coefficients; the numerator of every formal integrand.
class LogPoly {
 public:
  using Terms = std::map<LogMonomial, Rational>;

  LogPoly() = default;
  LogPoly(const Rational& q);  // NOLINT(google-explicit-constructor)
  LogPoly(const LogMonomial& m, const Rational& q = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LogMonomial& m, const Rational& q);
  LogPoly& operator+=(const LogPoly& x);
  LogPoly& operator-=(const LogPoly& x);
  LogPoly& operator*=(const Rational& q);

  friend LogPoly operator+(LogPoly x, const LogPoly& y) { return x += y; }
  friend LogPoly operator-(LogPoly x, const LogPoly& y) { return x -= y; }
  friend LogPoly operator*(LogPoly x, const Rational& q) { return x *= q; }
  friend LogPoly operator*(const Rational& q, LogPoly x) { return x *= q; }
  friend LogPoly operator*(const LogPoly& x, const LogPoly& y);
  friend bool operator==(const LogPoly&, const LogPoly&) = default;

 private:
  Terms terms_;
};

LogPoly power(const LogPoly& x, int exponent);

// q0 log 2 + qpi pi + q1 log(1-x) + q2 log(x) + q3 log(1+x)
struct LinearLog {
  Rational log2 = 0;
  Rational pi = 0;
  Rational l1 = 0;
  Rational l2 = 0;
  Rational l3 = 0;

  LogPoly poly() const;

  static LinearLog log_one_minus_x() { return {0, 0, 1, 0, 0}; }
  static LinearLog log_x() { return {0, 0, 0, 1, 0}; }
  static LinearLog log_one_plus_x() { return {0, 0, 0, 0, 1}; }
  static LinearLog log_two() { return {1, 0, 0, 0, 0}; }

  // The images of log(1-x), log(x), log(1+x) under x = (1-u)/(1+u), written
  // in terms of logarithms of u.
  static LinearLog log_two_u_over_one_plus_u() { return {1, 0, 0, 1, -1}; }
  static LinearLog log_one_minus_u_over_one_plus_u() { return {0, 0, 1, 0, -1}; }
  static LinearLog log_two_over_one_plus_u() { return {1, 0, 0, 0, -1}; }
};

// Multinomial expansion of a product of powers of linear log forms.
LogPoly expand_product(std::span<const std::pair<LinearLog, int>> factors);

// Complex-valued integrand numerator: real + i * imag.
struct ComplexLogSum {
  LogPoly real;
  LogPoly imag;

  ComplexLogSum& operator+=(const ComplexLogSum& x);
  ComplexLogSum& operator*=(const Rational& q);
  friend ComplexLogSum operator*(const ComplexLogSum& x, const ComplexLogSum& y);
};

// linear + i * imag_pi * pi
ComplexLogSum complex_log(const LinearLog& linear, const Rational& imag_pi);
ComplexLogSum power(const ComplexLogSum& x, int exponent);

// Denominators that occur before partial fractions are applied.
enum class RawDenominator : std::uint8_t {
  OneMinusX,
  X,
  OnePlusX,
  XOneMinusX,
  XOnePlusX,
  OneMinusXOnePlusX,
  None,
};

struct LogTerm {
  Rational coeff = 1;
  int log2pow = 0;
  int pipow = 0;
  int e1 = 0;
  int e2 = 0;
  int e3 = 0;
  RawDenominator denom = RawDenominator::OnePlusX;
};

std::vector<LogTerm> to_terms(const LogPoly& numerator, RawDenominator denom);

// 1/(x(1-x)) = 1/x + 1/(1-x); 1/(x(1+x)) = 1/x - 1/(1+x);
// 1/((1-x)(1+x)) = (1/(1-x) + 1/(1+x))/2
std::vector<LogTerm> split_partial_fractions(std::span<const LogTerm> terms);

// Formal sum  c_0 + sum_I c_I * I  with constant-algebra coefficients. Used
// both for expansions ("integral equals form") and relation precursors
// ("form equals zero").
class LinearForm {
 public:
  using Integrals = std::map<IntegralIndex, ConstExpr>;

  LinearForm() = default;
  LinearForm(const ConstExpr& constant) : constant_(constant) {}  // NOLINT(google-explicit-constructor)
  LinearForm(const IntegralIndex& idx, const ConstExpr& coeff = 1);

  const Integrals& integrals() const { return integrals_; }
  const ConstExpr& constant() const { return constant_; }
  bool is_zero() const { return integrals_.empty() && constant_.is_zero(); }

  void add(const IntegralIndex& idx, const ConstExpr& coeff);
  void add_constant(const ConstExpr& c) { constant_ += c; }

  LinearForm& operator+=(const LinearForm& x);
  LinearForm& operator-=(const LinearForm& x);
  LinearForm& operator*=(const Rational& q);

  friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
  friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
  friend LinearForm operator*(LinearForm x, const Rational& q) { return x *= q; }
  friend LinearForm operator*(const Rational& q, LinearForm x) { return x *= q; }
  friend LinearForm operator*(const ConstExpr& c, const LinearForm& x);
  friend LinearForm operator*(const LinearForm& x, const ConstExpr& c) { return c * x; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  LinearForm shift_pi(int delta) const;

 private:
  Integrals integrals_;
  ConstExpr constant_;
};

// Integral over [0,1] of numerator / denom, split into atomic denominators.
// Throws InternalError when a resulting integral diverges.
LinearForm integrate(const LogPoly& numerator, RawDenominator denom);

// Elementary evaluations.
// integral of log^n(1-x)/(1+x) = (-1)^n n! Li_{n+1}(1/2), n >= 0
ConstExpr log_one_minus_over_one_plus_value(int n);
// integral of log^n(1+x)/x, n >= 1
ConstExpr log_one_plus_over_x_value(int n);
// integral of log^n(1+x)/(1+x) = log^(n+1) 2 / (n+1)
ConstExpr log_one_plus_over_one_plus_value(int n);

// Rewrites the integral through x = (1-u)/(1+u). Only d = 2, or d = 0 with
// b >= 1, are admissible. The returned form equals the integral.
LinearForm fractional_substitute(const IntegralIndex& idx);

enum class Part : std::uint8_t { Real, Imag };

// Sum of the four real-axis pieces of the semicircle contour integral of
// log^p(1+z) log^q(1-z) log^r(z) / (z(1-z)), q, r >= 1. The returned form
// equals zero; the imaginary part is divided by pi.
LinearForm expand_contour(int p, int q, int r, Part part);

// Double-integral identity with log^(2n)((1-y)/(1-x)), n >= 1, as a form
// equal to zero (weight 2n+2).
LinearForm expand_mi1(int n);

// Double-integral identity with (n+1) log^n((1-y)/(1+x)) log(1-x), n >= 1, as
// a form equal to zero (weight n+3).
LinearForm expand_mi2(int n);

// Result of the x -> x^2 substitution: form + aux_coeff * aux = 0.
struct SquareReplacement {
  LinearForm form;
  Rational aux_coeff = 0;
  AuxHalfIntegral aux;
};

// kind 1: sum_k C(a,k) i_{k,b,a-k,1} = 2^-(b+1) i_{a,b,0,1}      (a >= 1)
// kind 2: sum_k C(a,k) i_{k,b,a-k,0} = 2^-(b+1) (i_{a,b,0,0} + aux(b, a))  (b >= 1)
SquareReplacement square_replace(int kind, int a, int b);

}  // namespace polyint
