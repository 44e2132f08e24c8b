#include "polyint/numverify.hpp"

#include <cmath>

#include "polyint/error.hpp"

namespace polyint {

namespace {

constexpr int kMaxLevels = 14;

Real constant_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real constant_euler() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

}  // namespace

PrecisionContext::PrecisionContext(int digits) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionContext::~PrecisionContext() { Real::default_precision(saved_); }

int working_digits(int digits) { return (3 * digits + 1) / 2 + 10; }

Real zeta_cvz(int n) {
  if (n < 2) throw PreconditionError("zeta needs n >= 2");
  const int digits = static_cast<int>(Real::default_precision());
  const int terms = static_cast<int>(std::ceil(1.31 * digits)) + 5;
  Real e = boost::multiprecision::pow(3 + boost::multiprecision::sqrt(Real(8)), terms);
  e = (e + 1 / e) / 2;
  Real b = -1;
  Real c = -e;
  Real s = 0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    s += c / boost::multiprecision::pow(Real(k + 1), n);
    b = b * Real(k + terms) * Real(k - terms) / (Real(2 * k + 1) / 2 * Real(k + 1));
  }
  const Real eta = s / e;
  return eta / (1 - boost::multiprecision::pow(Real(2), 1 - n));
}

Real li_half_series(int n) {
  if (n < 1) throw PreconditionError("Li_n(1/2) needs n >= 1");
  const int digits = static_cast<int>(Real::default_precision());
  const int terms = static_cast<int>(std::ceil(digits * 3.33)) + 10;
  Real s = 0;
  Real p = 1;
  for (int k = 1; k <= terms; ++k) {
    p /= 2;
    s += p / boost::multiprecision::pow(Real(k), n);
  }
  return s;
}

NumericEvaluator::NumericEvaluator(int digits) : digits_(digits), working_(working_digits(digits)) {
  if (digits < 5 || digits > 2000) throw PreconditionError("precision out of range");
  PrecisionContext ctx(working_);
  // wide enough for the x^(1/2) endpoint decay of the auxiliary integrals
  tmax_ = boost::multiprecision::asinh(Real(2 * (working_ + 10)) * boost::multiprecision::log(Real(10)) / constant_pi());
  tmax_ += Real(1) / 4;
}

bool NumericEvaluator::negligible(const Real& x, const Real& scale) const {
  PrecisionContext ctx(working_);
  const Real s = boost::multiprecision::abs(scale);
  return boost::multiprecision::abs(x) <= pow10(-digits_) * (s > 1 ? s : Real(1));
}

const NumericEvaluator::Level& NumericEvaluator::level(int k) {
  while (static_cast<int>(levels_.size()) <= k) {
    const int lk = static_cast<int>(levels_.size());
    Level lev;
    lev.h = boost::multiprecision::pow(Real(2), -lk);
    const Real pi = constant_pi();
    // level 0 uses every multiple of h, later levels only the odd ones
    const int step = lk == 0 ? 1 : 2;
    const long count = static_cast<long>(boost::multiprecision::floor(tmax_ / lev.h).convert_to<double>());
    for (long j = lk == 0 ? 0 : 1; j <= count; j += step) {
      for (int sign : {1, -1}) {
        if (j == 0 && sign < 0) continue;
        const Real t = lev.h * Real(sign * j);
        const Real s = pi * boost::multiprecision::sinh(t);
        const Real q = boost::multiprecision::exp(-boost::multiprecision::abs(s));
        const Real lq = boost::multiprecision::log1p(q);
        Node nd;
        if (s >= 0) {
          nd.x = 1 / (1 + q);
          nd.xc = q / (1 + q);
          nd.l2 = -lq;
          nd.l1 = -s - lq;
        } else {
          nd.x = q / (1 + q);
          nd.xc = 1 / (1 + q);
          nd.l2 = s - lq;
          nd.l1 = -lq;
        }
        nd.l3 = boost::multiprecision::log1p(nd.x);
        nd.weight = pi * boost::multiprecision::cosh(t);
        lev.nodes.push_back(std::move(nd));
      }
    }
    levels_.push_back(std::move(lev));
  }
  return levels_[static_cast<std::size_t>(k)];
}

const Real& NumericEvaluator::node_power(std::vector<Real>& cache, const Real& base, int e) {
  if (cache.empty()) cache.emplace_back(1);
  while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
  return cache[static_cast<std::size_t>(e)];
}

Real NumericEvaluator::integrate(int e1, int e2, int e3, Den den) {
  const Real tol = pow10(-(digits_ + 10));
  Real prev = 0;
  Real total = 0;
  for (int k = 0; k < kMaxLevels; ++k) {
    level(k);
    Level& lev = levels_[static_cast<std::size_t>(k)];
    Real sum = 0;
    for (Node& nd : lev.nodes) {
      Real f = nd.weight;
      switch (den) {
        case Den::OneMinusX: f *= nd.x; break;                 // x(1-x)/(1-x)
        case Den::X: f *= nd.xc; break;                        // x(1-x)/x
        case Den::OnePlusX: f *= nd.x * nd.xc / (1 + nd.x); break;
        case Den::HalfOneMinusX: f *= boost::multiprecision::exp(nd.l2 / 2); break;  // x^(1/2)
      }
      if (e1) f *= node_power(nd.p1, nd.l1, e1);
      if (e2) f *= node_power(nd.p2, nd.l2, e2);
      if (e3) f *= node_power(nd.p3, nd.l3, e3);
      sum += f;
    }
    if (k == 0)
      total = sum * lev.h;
    else
      total = total / 2 + sum * lev.h;
    if (k >= 3 && boost::multiprecision::abs(total - prev) <= tol * (1 + boost::multiprecision::abs(total))) {
      last_levels_ = k + 1;
      return total;
    }
    prev = total;
  }
  throw ResourceLimit("tanh-sinh quadrature did not converge");
}

Real NumericEvaluator::quad(const IntegralIndex& idx) {
  if (!idx.convergent()) throw PreconditionError("divergent integral " + format_name(idx));
  if (auto it = integrals_.find(idx); it != integrals_.end()) return it->second;
  PrecisionContext ctx(working_);
  Den den = Den::OneMinusX;
  if (idx.d == Denominator::X) den = Den::X;
  if (idx.d == Denominator::OnePlusX) den = Den::OnePlusX;
  Real v = integrate(idx.a, idx.b, idx.c, den);
  integrals_.emplace(idx, v);
  return v;
}

Real NumericEvaluator::quad(const AuxHalfIntegral& aux) {
  if (aux.n < 1 || aux.m < 0) throw PreconditionError("divergent auxiliary integral");
  if (auto it = aux_.find(aux); it != aux_.end()) return it->second;
  PrecisionContext ctx(working_);
  Real v = integrate(aux.m, aux.n, 0, Den::HalfOneMinusX);
  aux_.emplace(aux, v);
  return v;
}

void NumericEvaluator::bind(const Symbol& named, const IntegralIndex& definition) {
  if (named.kind != Symbol::Kind::Named) throw PreconditionError("only named constants can be bound");
  named_[named] = definition;
  symbols_.erase(named);
}

Real NumericEvaluator::eval(const Symbol& s) {
  if (auto it = symbols_.find(s); it != symbols_.end()) return it->second;
  PrecisionContext ctx(working_);
  Real v;
  switch (s.kind) {
    case Symbol::Kind::Log2: v = boost::multiprecision::log(Real(2)); break;
    case Symbol::Kind::Pi: v = constant_pi(); break;
    case Symbol::Kind::Zeta: v = zeta_cvz(s.n); break;
    case Symbol::Kind::LiHalf: v = li_half_series(s.n); break;
    case Symbol::Kind::EulerGamma: v = constant_euler(); break;
    case Symbol::Kind::Named: {
      auto it = named_.find(s);
      if (it == named_.end()) throw PreconditionError("unbound constant " + to_string(s));
      v = quad(it->second);
      break;
    }
  }
  symbols_.emplace(s, v);
  return v;
}

Real NumericEvaluator::eval(const ConstExpr& x) {
  PrecisionContext ctx(working_);
  Real total = 0;
  for (const auto& [m, q] : x.terms()) {
    Real t = Real(q.get_num().get_str()) / Real(q.get_den().get_str());
    for (const auto& [s, p] : m.factors()) t *= boost::multiprecision::pow(eval(s), p);
    total += t;
  }
  return total;
}

Real NumericEvaluator::eval(const LinearForm& f) {
  PrecisionContext ctx(working_);
  Real total = eval(f.constant());
  for (const auto& [idx, c] : f.integrals()) total += eval(c) * quad(idx);
  return total;
}

NumericEvaluator::Check NumericEvaluator::check_closed_form(const IntegralIndex& idx, const ConstExpr& value) {
  PrecisionContext ctx(working_);
  Check c;
  c.numeric = quad(idx);
  c.closed = eval(value);
  c.diff = c.numeric - c.closed;
  c.ok = negligible(c.diff, c.numeric);
  return c;
}

std::string NumericEvaluator::to_decimal(const Real& x, int digits) const {
  PrecisionContext ctx(working_);
  return x.str(digits > 0 ? digits : digits_, std::ios_base::fmtflags(0));
}

}  // namespace polyint
