#include <doctest.h>

#include <random>

#include "polyint/numverify.hpp"
#include "polyint/series.hpp"

using namespace polyint;

namespace {

ConstExpr E(const char* s) { return parse_const_expr(s); }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("layout is graded and complete") {
    SeriesLayout l(3, 4);
    CHECK(l.size() == 35);
    for (int d = 0; d <= 4; ++d) {
      const auto [b, e] = l.degree_range(d);
      for (std::size_t i = b; i < e; ++i) {
        CHECK(l.degree(i) == d);
        CHECK(l.find(l.exponent(i)) == static_cast<long>(i));
      }
    }
    CHECK(l.find({5, 0, 0}) == -1);
    CHECK(l.find({2, 2, 1}) == -1);
    CHECK(SeriesLayout(1, 6).size() == 7);
    CHECK(SeriesLayout(2, 3).size() == 10);
  }

  TEST_CASE("truncated products") {
    auto l = SeriesLayout::make(1, 3);
    ConstSeries a = linear_series(l, {1});
    ConstSeries b = linear_series(l, {-1});
    a[0] = ConstExpr(1);
    b[0] = ConstExpr(1);
    const ConstSeries p = a * b;
    CHECK(p.at({0, 0, 0}) == ConstExpr(1));
    CHECK(p.at({1, 0, 0}).is_zero());
    CHECK(p.at({2, 0, 0}) == ConstExpr(-1));
    CHECK(p.at({3, 0, 0}).is_zero());

    auto l2 = SeriesLayout::make(2, 1);
    const ConstSeries xy = linear_series(l2, {1, 0}) * linear_series(l2, {0, 1});
    for (std::size_t i = 0; i < l2->size(); ++i) CHECK(xy[i].is_zero());

    CHECK_THROWS_AS(linear_series(l, {1}) + linear_series(l2, {1, 1}), PreconditionError);
  }

  TEST_CASE("exp of a variable") {
    auto l = SeriesLayout::make(1, 6);
    const ConstSeries e = exp_series(linear_series(l, {1}));
    for (int k = 0; k <= 6; ++k) CHECK(e.at({k, 0, 0}) == ConstExpr(Rational(1) / Rational(factorial(k))));
    ConstSeries s = linear_series(l, {1});
    s[0] = ConstExpr(1);
    CHECK_THROWS_AS(exp_series(s), PreconditionError);
  }

  TEST_CASE("exp inverts log1p on random series") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    auto l = SeriesLayout::make(2, 5);
    for (int trial = 0; trial < 5; ++trial) {
      ConstSeries s(l);
      for (std::size_t i = 1; i < l->size(); ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        s[i] = ConstExpr(q);
      }
      const ConstSeries r = exp_series(log1p_series(s));
      CHECK(r[0] == ConstExpr(1));
      for (std::size_t i = 1; i < l->size(); ++i) CHECK(r[i] == s[i]);
    }
  }

  TEST_CASE("power agrees with repeated products") {
    auto l = SeriesLayout::make(2, 4);
    ConstSeries s = linear_series(l, {2, -1});
    s[0] = ConstExpr(1);
    const ConstSeries p = power(s, 3);
    CHECK(p.at({1, 0, 0}) == ConstExpr(6));
    CHECK(p.at({1, 1, 0}) == ConstExpr(-12));
    CHECK(p.at({0, 3, 0}) == ConstExpr(-1));
    CHECK(p.at({2, 2, 0}).is_zero());
  }

  TEST_CASE("log gamma coefficients") {
    auto l = SeriesLayout::make(1, 4);
    const ConstSeries z = linear_series(l, {1});
    const ConstSeries g1 = loggamma_at_1(z);
    CHECK(g1.at({1, 0, 0}) == -ConstExpr::symbol(Symbol::euler_gamma()));
    CHECK(g1.at({2, 0, 0}) == E("1/12*Pi^2"));
    CHECK(g1.at({3, 0, 0}) == E("-1/3*Zeta[3]"));
    CHECK(g1.at({4, 0, 0}) == E("1/360*Pi^4"));

    const ConstSeries gh = loggamma_at_half(z);
    CHECK(gh.at({1, 0, 0}) == -ConstExpr::symbol(Symbol::euler_gamma()) - E("2*Log2"));
    CHECK(gh.at({2, 0, 0}) == E("1/4*Pi^2"));
    CHECK(gh.at({3, 0, 0}) == E("-7/3*Zeta[3]"));

    // Gamma(1+z) Gamma(1-z) = pi z / sin(pi z): the odd parts cancel
    const ConstSeries both = loggamma_at_1(z) + loggamma_at_1(linear_series(l, {-1}));
    CHECK(both.at({1, 0, 0}).is_zero());
    CHECK(both.at({3, 0, 0}).is_zero());
    CHECK(both.at({2, 0, 0}) == E("1/6*Pi^2"));
  }

  TEST_CASE("sine series") {
    auto l = SeriesLayout::make(1, 5);
    const ConstSeries z = linear_series(l, {1});
    const ConstSeries s = sin_pi(z);
    CHECK(s.at({0, 0, 0}).is_zero());
    CHECK(s.at({1, 0, 0}) == E("Pi"));
    CHECK(s.at({3, 0, 0}) == E("-1/6*Pi^3"));
    CHECK(s.at({5, 0, 0}) == E("1/120*Pi^5"));
    const ConstSeries c = sinc_pi(z);
    CHECK(c.at({0, 0, 0}) == E("Pi"));
    CHECK(c.at({1, 0, 0}).is_zero());
    CHECK(c.at({2, 0, 0}) == E("-1/6*Pi^3"));
  }

  TEST_CASE("beta coefficients at (0,1)") {
    CHECK(beta_expansion_coeff(BetaPoint::ZeroOne, 0, 1) == E("-1/6*Pi^2"));
    CHECK(beta_expansion_coeff(BetaPoint::ZeroOne, 1, 1) == E("Zeta[3]"));
    CHECK(beta_expansion_coeff(BetaPoint::ZeroOne, 0, 2) == E("2*Zeta[3]"));
    CHECK(beta_value_one_minus(0, 1) == E("-1/6*Pi^2"));
    CHECK(beta_expansion_coeff(BetaPoint::HalfZero, 1, 0) == E("-1/2*Pi^2"));
  }

  TEST_CASE("beta coefficients are gamma free, homogeneous and match quadrature") {
    NumericEvaluator ev(40);
    for (int w = 2; w <= 8; ++w) {
      for (int m = 1; m < w; ++m) {
        const int n = w - 1 - m;
        const ConstExpr v = beta_expansion_coeff(BetaPoint::ZeroOne, n, m);
        INFO("ZeroOne " << n << "," << m);
        CHECK_FALSE(v.contains(Symbol::euler_gamma()));
        CHECK(v.homogeneous_weight() == w);
        if (w <= 7) CHECK(ev.check_closed_form(make_index(m, n, 0, 1), v).ok);
      }
      for (int n = 1; n < w; ++n) {
        const int m = w - 1 - n;
        const ConstExpr v = beta_expansion_coeff(BetaPoint::HalfZero, n, m);
        INFO("HalfZero " << n << "," << m);
        CHECK_FALSE(v.contains(Symbol::euler_gamma()));
        CHECK(v.homogeneous_weight() == w);
        if (w <= 6) CHECK(ev.negligible(ev.eval(v) - ev.quad(AuxHalfIntegral{n, m}), 1));
      }
    }
  }

  TEST_CASE("the 2F1 identity vanishes at order zero") {
    const auto s = hyp2f1_identity_series(1);
    CHECK(s[0].is_zero());
  }

  TEST_CASE("2F1 relations are homogeneous and numerically zero") {
    NumericEvaluator ev(40);
    for (int w = 3; w <= 5; ++w) {
      for (const auto& r : hyp2f1_relations(w)) {
        INFO(r.mnr[0] << r.mnr[1] << r.mnr[2]);
        CHECK(r.mnr[0] + r.mnr[1] + r.mnr[2] == w);
        for (const auto& [i, c] : r.form.integrals()) {
          CHECK(i.convergent());
          CHECK_FALSE(c.contains(Symbol::euler_gamma()));
        }
        CHECK(ev.negligible(ev.eval(r.form), 1));
      }
    }
    for (const auto& r : hyp2f1_relations(4))
      CHECK(hyp2f1_relation(r.mnr[0], r.mnr[1], r.mnr[2]) == r.form);
  }
}
