#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "polyint/constalg.hpp"
#include "polyint/error.hpp"
#include "polyint/logexpand.hpp"
#include "polyint/rational.hpp"

namespace polyint {

// Dense layout of all exponent vectors of total degree <= order in up to
// three variables, graded by degree. Shared between series of the same shape.
class SeriesLayout {
 public:
  static constexpr int kMaxVars = 3;
  using Exponent = std::array<int, kMaxVars>;

  SeriesLayout(int nvars, int order);

  static std::shared_ptr<const SeriesLayout> make(int nvars, int order) {
    return std::make_shared<const SeriesLayout>(nvars, order);
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  std::size_t size() const { return exponents_.size(); }
  const Exponent& exponent(std::size_t i) const { return exponents_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  // Positions of the exponents of total degree exactly d.
  std::pair<std::size_t, std::size_t> degree_range(int d) const { return {starts_[d], starts_[d + 1]}; }
  // Position of e, or -1 when e exceeds the truncation order.
  long find(const Exponent& e) const;

 private:
  int nvars_;
  int order_;
  std::vector<Exponent> exponents_;
  std::vector<int> degrees_;
  std::vector<std::size_t> starts_;
  std::vector<long> lookup_;
};

// Truncated power series in nvars variables with coefficients in Coeff.
// Coeff must default-construct to zero and support +=, scaling by Rational
// and is_zero(); products require a matching operator*.
template <class Coeff>
class MultiSeries {
 public:
  using Exponent = SeriesLayout::Exponent;

  explicit MultiSeries(std::shared_ptr<const SeriesLayout> layout)
      : layout_(std::move(layout)), coeffs_(layout_->size()) {}

  const std::shared_ptr<const SeriesLayout>& layout() const { return layout_; }
  int order() const { return layout_->order(); }

  Coeff& operator[](std::size_t i) { return coeffs_[i]; }
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }

  // Coefficient at e; zero when e lies beyond the truncation order.
  Coeff at(const Exponent& e) const {
    const long i = layout_->find(e);
    return i < 0 ? Coeff() : coeffs_[static_cast<std::size_t>(i)];
  }
  void set(const Exponent& e, Coeff c) {
    const long i = layout_->find(e);
    if (i >= 0) coeffs_[static_cast<std::size_t>(i)] = std::move(c);
  }

  bool constant_term_is_zero() const { return coeffs_[0].is_zero(); }

  MultiSeries& operator+=(const MultiSeries& x) {
    check_same(x);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += x.coeffs_[i];
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& x) {
    check_same(x);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += x.coeffs_[i] * Rational(-1);
    return *this;
  }
  MultiSeries& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  friend MultiSeries operator+(MultiSeries x, const MultiSeries& y) { return x += y; }
  friend MultiSeries operator-(MultiSeries x, const MultiSeries& y) { return x -= y; }
  friend MultiSeries operator*(MultiSeries x, const Rational& q) { return x *= q; }
  friend MultiSeries operator*(const Rational& q, MultiSeries x) { return x *= q; }

  void check_same(const MultiSeries& x) const { check_layouts(*layout_, *x.layout_); }

  template <class Other>
  void check_same(const MultiSeries<Other>& x) const {
    check_layouts(*layout_, *x.layout());
  }

 private:
  static void check_layouts(const SeriesLayout& a, const SeriesLayout& b) {
    if (a.nvars() != b.nvars() || a.order() != b.order())
      throw PreconditionError("series with different variables or truncation order");
  }

  std::shared_ptr<const SeriesLayout> layout_;
  std::vector<Coeff> coeffs_;
};

// Truncated product; only output coefficients of total degree >= min_degree
// are computed (the others are left zero).
template <class A, class B>
auto multiply(const MultiSeries<A>& x, const MultiSeries<B>& y, int min_degree = 0)
    -> MultiSeries<decltype(std::declval<const A&>() * std::declval<const B&>())> {
  using C = decltype(std::declval<const A&>() * std::declval<const B&>());
  x.check_same(y);
  const auto& layout = *x.layout();
  MultiSeries<C> r(x.layout());
  const int nv = layout.nvars();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (x[i].is_zero()) continue;
    const auto& ei = layout.exponent(i);
    const int di = layout.degree(i);
    const int lo = std::max(0, min_degree - di);
    for (int dj = lo; di + dj <= layout.order(); ++dj) {
      const auto [begin, end] = layout.degree_range(dj);
      for (std::size_t j = begin; j < end; ++j) {
        if (y[j].is_zero()) continue;
        const auto& ej = layout.exponent(j);
        SeriesLayout::Exponent e{};
        for (int v = 0; v < nv; ++v) e[v] = ei[v] + ej[v];
        r[static_cast<std::size_t>(layout.find(e))] += x[i] * y[j];
      }
    }
  }
  return r;
}

template <class A, class B>
auto operator*(const MultiSeries<A>& x, const MultiSeries<B>& y) {
  return multiply(x, y);
}

// exp(s) for s with zero constant term, via the degree recurrence
// n E_n = sum_{k=1..n} k S_k E_{n-k} on homogeneous parts.
template <class Coeff>
MultiSeries<Coeff> exp_series(const MultiSeries<Coeff>& s) {
  if (!s.constant_term_is_zero()) throw PreconditionError("exp_series needs a zero constant term");
  const auto& layout = *s.layout();
  const int nv = layout.nvars();
  MultiSeries<Coeff> e(s.layout());
  e[0] = Coeff(Rational(1));
  for (int n = 1; n <= layout.order(); ++n) {
    const auto [begin, end] = layout.degree_range(n);
    for (std::size_t t = begin; t < end; ++t) {
      const auto& et = layout.exponent(t);
      Coeff acc;
      // f ranges over exponents with 1 <= |f| and f <= et componentwise
      for (std::size_t f = 1; f < layout.size() && layout.degree(f) <= n; ++f) {
        if (s[f].is_zero()) continue;
        const auto& ef = layout.exponent(f);
        SeriesLayout::Exponent rest{};
        bool fits = true;
        for (int v = 0; v < nv; ++v) {
          rest[v] = et[v] - ef[v];
          if (rest[v] < 0) fits = false;
        }
        if (!fits) continue;
        const auto& er = e[static_cast<std::size_t>(layout.find(rest))];
        if (er.is_zero()) continue;
        acc += (s[f] * er) * Rational(layout.degree(f));
      }
      acc *= Rational(1, n);
      e[t] = std::move(acc);
    }
  }
  return e;
}

// s^k by repeated truncated multiplication.
template <class Coeff>
MultiSeries<Coeff> power(const MultiSeries<Coeff>& s, int k) {
  MultiSeries<Coeff> r(s.layout());
  r[0] = Coeff(Rational(1));
  for (int i = 0; i < k; ++i) r = multiply(r, s);
  return r;
}

// log(1 + s) for s with zero constant term.
template <class Coeff>
MultiSeries<Coeff> log1p_series(const MultiSeries<Coeff>& s) {
  if (!s.constant_term_is_zero()) throw PreconditionError("log1p_series needs a zero constant term");
  MultiSeries<Coeff> r(s.layout());
  MultiSeries<Coeff> p = s;
  for (int j = 1; j <= s.order(); ++j) {
    r += p * Rational(j % 2 ? 1 : -1, j);
    p = multiply(p, s);
  }
  return r;
}

using ConstSeries = MultiSeries<ConstExpr>;

// Linear series sum_v coeffs[v] * x_v.
ConstSeries linear_series(const std::shared_ptr<const SeriesLayout>& layout, const std::vector<Rational>& coeffs);

// Series of f(z) = sum_k c_k z^k composed with z (zero constant term);
// c[0] must be zero.
ConstSeries compose(const std::vector<ConstExpr>& c, const ConstSeries& z);

// log Gamma(1 + z) = -gamma z + sum_{k>=2} (-1)^k zeta(k)/k z^k.
ConstSeries loggamma_at_1(const ConstSeries& z);

// log Gamma(1/2 + z) without its constant log(pi)/2, which cancels in every
// ratio formed here: -gamma z - 2 z log 2 + sum (-1)^k zeta(k)(2^k-1)/k z^k.
ConstSeries loggamma_at_half(const ConstSeries& z);

// sin(pi z) and sin(pi z)/z.
ConstSeries sin_pi(const ConstSeries& z);
ConstSeries sinc_pi(const ConstSeries& z);

enum class BetaPoint : std::uint8_t { ZeroOne, HalfZero };

// n! m! times the coefficient of a^n (b-1)^m (ZeroOne, m >= 1) or of
// (a-1/2)^n b^m (HalfZero, n >= 1) in the beta function B(a, b). ZeroOne
// yields i_{m,n,0,1}; HalfZero yields the auxiliary integral (n, m).
ConstExpr beta_expansion_coeff(BetaPoint point, int n, int m);

// Value of i_{a,b,0,0} = i_{b,a,0,1} by the x <-> 1-x symmetry (b >= 1).
ConstExpr beta_value_one_minus(int a, int b);

// Relation at weight w = m+n+r from the coefficient of
// (a-1)^m (b-1)^n (c-2)^r of the 2F1 connection identity at z = -1,
// divided by pi. The form equals zero.
LinearForm hyp2f1_relation(int m, int n, int r);

struct Hyp2f1Relation {
  std::array<int, 3> mnr;
  LinearForm form;
};

// All relations of weight w from one expansion of the identity.
std::vector<Hyp2f1Relation> hyp2f1_relations(int w);

// The identity's series (before division by pi) at total order w: every
// coefficient must vanish. Exposed for the low-order consistency tests.
MultiSeries<LinearForm> hyp2f1_identity_series(int order, int min_degree = 0);

}  // namespace polyint
