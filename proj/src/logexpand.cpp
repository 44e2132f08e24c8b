#include "polyint/logexpand.hpp"

#include "polyint/error.hpp"

namespace polyint {

LogPoly::LogPoly(const Rational& q) {
  if (q != 0) terms_.emplace(LogMonomial{}, q);
}

LogPoly::LogPoly(const LogMonomial& m, const Rational& q) {
  if (q != 0) terms_.emplace(m, q);
}

void LogPoly::add(const LogMonomial& m, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

LogPoly& LogPoly::operator+=(const LogPoly& x) {
  for (const auto& [m, q] : x.terms_) add(m, q);
  return *this;
}

LogPoly& LogPoly::operator-=(const LogPoly& x) {
  for (const auto& [m, q] : x.terms_) add(m, -q);
  return *this;
}

LogPoly& LogPoly::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

LogPoly operator*(const LogPoly& x, const LogPoly& y) {
  LogPoly r;
  for (const auto& [mx, qx] : x.terms_)
    for (const auto& [my, qy] : y.terms_)
      r.add({mx.log2 + my.log2, mx.pi + my.pi, mx.e1 + my.e1, mx.e2 + my.e2, mx.e3 + my.e3}, qx * qy);
  return r;
}

LogPoly power(const LogPoly& x, int exponent) {
  if (exponent < 0) throw PreconditionError("negative power of a log polynomial");
  LogPoly r(1);
  for (int i = 0; i < exponent; ++i) r = r * x;
  return r;
}

LogPoly LinearLog::poly() const {
  LogPoly p;
  p.add({1, 0, 0, 0, 0}, log2);
  p.add({0, 1, 0, 0, 0}, pi);
  p.add({0, 0, 1, 0, 0}, l1);
  p.add({0, 0, 0, 1, 0}, l2);
  p.add({0, 0, 0, 0, 1}, l3);
  return p;
}

LogPoly expand_product(std::span<const std::pair<LinearLog, int>> factors) {
  LogPoly r(1);
  for (const auto& [form, p] : factors) r = r * power(form.poly(), p);
  return r;
}

ComplexLogSum& ComplexLogSum::operator+=(const ComplexLogSum& x) {
  real += x.real;
  imag += x.imag;
  return *this;
}

ComplexLogSum& ComplexLogSum::operator*=(const Rational& q) {
  real *= q;
  imag *= q;
  return *this;
}

ComplexLogSum operator*(const ComplexLogSum& x, const ComplexLogSum& y) {
  return {x.real * y.real - x.imag * y.imag, x.real * y.imag + x.imag * y.real};
}

ComplexLogSum complex_log(const LinearLog& linear, const Rational& imag_pi) {
  return {linear.poly(), LogPoly(LogMonomial{0, 1, 0, 0, 0}, imag_pi)};
}

ComplexLogSum power(const ComplexLogSum& x, int exponent) {
  if (exponent < 0) throw PreconditionError("negative power of a complex log sum");
  ComplexLogSum r{LogPoly(1), LogPoly()};
  for (int i = 0; i < exponent; ++i) r = r * x;
  return r;
}

std::vector<LogTerm> to_terms(const LogPoly& numerator, RawDenominator denom) {
  std::vector<LogTerm> out;
  out.reserve(numerator.terms().size());
  for (const auto& [m, q] : numerator.terms()) out.push_back({q, m.log2, m.pi, m.e1, m.e2, m.e3, denom});
  return out;
}

std::vector<LogTerm> split_partial_fractions(std::span<const LogTerm> terms) {
  std::vector<LogTerm> out;
  out.reserve(terms.size() * 2);
  auto with = [](LogTerm t, RawDenominator d, const Rational& scale) {
    t.denom = d;
    t.coeff *= scale;
    return t;
  };
  for (const auto& t : terms) {
    switch (t.denom) {
      case RawDenominator::XOneMinusX:
        out.push_back(with(t, RawDenominator::X, 1));
        out.push_back(with(t, RawDenominator::OneMinusX, 1));
        break;
      case RawDenominator::XOnePlusX:
        out.push_back(with(t, RawDenominator::X, 1));
        out.push_back(with(t, RawDenominator::OnePlusX, -1));
        break;
      case RawDenominator::OneMinusXOnePlusX:
        out.push_back(with(t, RawDenominator::OneMinusX, Rational(1, 2)));
        out.push_back(with(t, RawDenominator::OnePlusX, Rational(1, 2)));
        break;
      default: out.push_back(t);
    }
  }
  return out;
}

LinearForm::LinearForm(const IntegralIndex& idx, const ConstExpr& coeff) { add(idx, coeff); }

void LinearForm::add(const IntegralIndex& idx, const ConstExpr& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = integrals_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) integrals_.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& x) {
  for (const auto& [idx, c] : x.integrals_) add(idx, c);
  constant_ += x.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& x) {
  for (const auto& [idx, c] : x.integrals_) add(idx, -c);
  constant_ -= x.constant_;
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& q) {
  if (q == 0) {
    integrals_.clear();
    constant_ = ConstExpr();
    return *this;
  }
  for (auto& [idx, c] : integrals_) c *= q;
  constant_ *= q;
  return *this;
}

LinearForm operator*(const ConstExpr& c, const LinearForm& x) {
  LinearForm r;
  if (c.is_zero()) return r;
  for (const auto& [idx, coeff] : x.integrals_) r.add(idx, c * coeff);
  r.constant_ = c * x.constant_;
  return r;
}

LinearForm LinearForm::shift_pi(int delta) const {
  LinearForm r;
  for (const auto& [idx, c] : integrals_) r.integrals_.emplace(idx, c.shift_pi(delta));
  r.constant_ = constant_.shift_pi(delta);
  return r;
}

LinearForm integrate(const LogPoly& numerator, RawDenominator denom) {
  if (denom == RawDenominator::None) throw PreconditionError("integrand without denominator");
  const auto terms = split_partial_fractions(to_terms(numerator, denom));
  LinearForm form;
  for (const auto& t : terms) {
    const IntegralIndex idx{t.e1, t.e2, t.e3, static_cast<Denominator>(static_cast<int>(t.denom))};
    if (!idx.convergent())
      throw InternalError("expansion produced divergent integral " + format_name(idx));
    Monomial m;
    m = m.times(Symbol::log2(), t.log2pow).times(Symbol::pi(), t.pipow);
    form.add(idx, ConstExpr(m, t.coeff));
  }
  return form;
}

ConstExpr log_one_minus_over_one_plus_value(int n) {
  if (n < 0) throw PreconditionError("exponent must be >= 0");
  Rational q(factorial(n));
  if (n % 2) q = -q;
  return q * li_half_value(n + 1);
}

ConstExpr log_one_plus_over_x_value(int n) {
  if (n < 1) throw PreconditionError("exponent must be >= 1");
  const int N = n + 1;
  const ConstExpr l = ConstExpr::symbol(Symbol::log2());
  ConstExpr r = Rational(1, N) * power(l, N);
  r += Rational(factorial(N - 1)) * zeta_value(N);
  for (int k = 0; k < N; ++k)
    r -= Rational(binomial(N - 1, k) * factorial(k)) * mul(power(l, N - 1 - k), li_half_value(k + 1));
  return reduce(r);
}

ConstExpr log_one_plus_over_one_plus_value(int n) {
  if (n < 0) throw PreconditionError("exponent must be >= 0");
  return ConstExpr(Monomial(Symbol::log2(), n + 1), Rational(1, n + 1));
}

LinearForm fractional_substitute(const IntegralIndex& idx) {
  if (idx.d == Denominator::X)
    throw PreconditionError("fractional substitution is not applied to integrals over x");
  if (idx.d == Denominator::OneMinusX && idx.b < 1)
    throw PreconditionError("fractional substitution over 1-x needs b >= 1");
  const std::pair<LinearLog, int> factors[] = {
      {LinearLog::log_two_u_over_one_plus_u(), idx.a},
      {LinearLog::log_one_minus_u_over_one_plus_u(), idx.b},
      {LinearLog::log_two_over_one_plus_u(), idx.c},
  };
  const LogPoly numerator = expand_product(factors);
  // dx/(1+x) = -du/(1+u); dx/(1-x) = -du/(u(1+u)); the sign cancels the
  // reversed orientation of the u-interval.
  return integrate(numerator, idx.d == Denominator::OnePlusX ? RawDenominator::OnePlusX : RawDenominator::XOnePlusX);
}

LinearForm expand_contour(int p, int q, int r, Part part) {
  if (p < 0 || q < 1 || r < 1) throw PreconditionError("contour expansion needs p >= 0 and q, r >= 1");
  const LinearLog L1 = LinearLog::log_one_minus_x();
  const LinearLog L2 = LinearLog::log_x();
  const LinearLog L3 = LinearLog::log_one_plus_x();
  const LinearLog L3m2{0, 0, 0, -1, 1};
  const LinearLog L1m2{0, 0, 1, -1, 0};
  const LinearLog mL2{0, 0, 0, -1, 0};

  auto c = [](const LinearLog& l, int imag_pi = 0) { return complex_log(l, imag_pi); };

  struct Piece {
    ComplexLogSum numerator;
    RawDenominator denom;
  };
  std::vector<Piece> pieces;
  // [0, 1]
  pieces.push_back({power(c(L3), p) * power(c(L1), q) * power(c(L2), r), RawDenominator::XOneMinusX});
  // [1, oo) mapped by x -> 1/x
  {
    ComplexLogSum n = power(c(L3m2), p) * power(c(L1m2, -1), q) * power(c(L2), r);
    n *= Rational(r % 2 ? 1 : -1);
    pieces.push_back({n, RawDenominator::OneMinusX});
  }
  // [-1, 0] mapped by x -> -x
  {
    ComplexLogSum n = power(c(L1), p) * power(c(L3), q) * power(c(L2, 1), r);
    n *= Rational(-1);
    pieces.push_back({n, RawDenominator::XOnePlusX});
  }
  // (-oo, -1] mapped by x -> -1/x
  {
    ComplexLogSum n = power(c(L1m2, 1), p) * power(c(L3m2), q) * power(c(mL2, 1), r);
    n *= Rational(-1);
    pieces.push_back({n, RawDenominator::OnePlusX});
  }

  LinearForm form;
  for (const auto& piece : pieces)
    form += integrate(part == Part::Real ? piece.numerator.real : piece.numerator.imag, piece.denom);
  return part == Part::Real ? form : form.shift_pi(-1);
}

LinearForm expand_mi1(int n) {
  if (n < 1) throw PreconditionError("MI1 needs n >= 1");
  const int e = 2 * n;
  ConstExpr lhs;
  for (int k = 0; k <= e; ++k) {
    Rational coeff(binomial(e, k));
    if (k % 2) coeff = -coeff;
    lhs += coeff * mul(log_one_minus_over_one_plus_value(k), log_one_minus_over_one_plus_value(e - k));
  }
  LinearForm form(lhs);
  form.add(make_index(e, 0, 1, 1), Rational(-2));
  form.add(make_index(e + 1, 0, 0, 2), Rational(-2, e + 1));
  return form;
}

LinearForm expand_mi2(int n) {
  if (n < 1) throw PreconditionError("MI2 needs n >= 1");
  LinearForm form;
  for (int k = 0; k <= n; ++k) {
    Rational coeff = Rational(binomial(n, k)) * (n + 1);
    if (k % 2) coeff = -coeff;
    form.add(make_index(1, 0, k, 2), coeff * log_one_minus_over_one_plus_value(n - k));
  }
  const LinearLog L1 = LinearLog::log_one_minus_x();
  const LinearLog half_one_plus{-1, 0, 0, 0, 1};          // log((1+u)/2)
  const LinearLog half_one_plus_over_u{-1, 0, 0, -1, 1};  // log((1+u)/(2u))
  using F = std::pair<LinearLog, int>;
  const std::vector<F> t1{{half_one_plus, n + 1}, {L1, 1}};
  const std::vector<F> t2{{half_one_plus, n}, {half_one_plus_over_u, 1}, {L1, 1}};
  const std::vector<F> t3{{L1, 2}, {half_one_plus, n}};
  const std::vector<F> t4{{L1, n + 1}, {half_one_plus_over_u, 1}};
  const std::vector<F> t5{{L1, n + 2}};
  LinearForm rhs = integrate(expand_product(t1), RawDenominator::X);
  rhs -= Rational(n + 1) * integrate(expand_product(t2), RawDenominator::OnePlusX);
  rhs += Rational(n + 1, 2) * integrate(expand_product(t3), RawDenominator::OnePlusX);
  rhs += integrate(expand_product(t4), RawDenominator::X);
  rhs -= Rational(1, n + 2) * integrate(expand_product(t5), RawDenominator::XOnePlusX);
  form -= rhs;
  return form;
}

SquareReplacement square_replace(int kind, int a, int b) {
  SquareReplacement out;
  const Rational half_power = power(Rational(1, 2), b + 1);
  if (kind == 1) {
    if (a < 1 || b < 0) throw PreconditionError("square replacement over x needs a >= 1, b >= 0");
    for (int k = 0; k <= a; ++k) out.form.add(make_index(k, b, a - k, 1), Rational(binomial(a, k)));
    out.form.add(make_index(a, b, 0, 1), Rational(-half_power));
    return out;
  }
  if (kind == 2) {
    if (a < 0 || b < 1) throw PreconditionError("square replacement over 1-x needs a >= 0, b >= 1");
    for (int k = 0; k <= a; ++k) out.form.add(make_index(k, b, a - k, 0), Rational(binomial(a, k)));
    out.form.add(make_index(a, b, 0, 0), Rational(Rational(-half_power)));
    out.aux_coeff = -half_power;
    out.aux = AuxHalfIntegral{b, a};
    return out;
  }
  throw PreconditionError("square replacement kind must be 1 or 2");
}

}  // namespace polyint
