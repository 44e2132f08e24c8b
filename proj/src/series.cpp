#include "polyint/series.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace polyint {

SeriesLayout::SeriesLayout(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 1 || nvars > kMaxVars) throw PreconditionError("series supports 1 to 3 variables");
  if (order < 0) throw PreconditionError("negative truncation order");
  starts_.push_back(0);
  for (int d = 0; d <= order; ++d) {
    // exponents of degree d, lexicographically decreasing in the first variable
    Exponent e{};
    if (nvars == 1) {
      e[0] = d;
      exponents_.push_back(e);
    } else if (nvars == 2) {
      for (int i = d; i >= 0; --i) exponents_.push_back({i, d - i, 0});
    } else {
      for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) exponents_.push_back({i, j, d - i - j});
    }
    degrees_.resize(exponents_.size(), d);
    starts_.push_back(exponents_.size());
  }
  const std::size_t side = static_cast<std::size_t>(order) + 1;
  std::size_t cells = 1;
  for (int v = 0; v < nvars; ++v) cells *= side;
  lookup_.assign(cells, -1);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    std::size_t key = 0;
    for (int v = 0; v < nvars; ++v) key = key * side + static_cast<std::size_t>(exponents_[i][v]);
    lookup_[key] = static_cast<long>(i);
  }
}

long SeriesLayout::find(const Exponent& e) const {
  const std::size_t side = static_cast<std::size_t>(order_) + 1;
  std::size_t key = 0;
  int total = 0;
  for (int v = 0; v < nvars_; ++v) {
    if (e[v] < 0) return -1;
    total += e[v];
    key = key * side + static_cast<std::size_t>(e[v]);
  }
  if (total > order_) return -1;
  for (int v = nvars_; v < kMaxVars; ++v)
    if (e[v] != 0) return -1;
  return lookup_[key];
}

ConstSeries linear_series(const std::shared_ptr<const SeriesLayout>& layout, const std::vector<Rational>& coeffs) {
  ConstSeries s(layout);
  if (layout->order() == 0) return s;
  for (int v = 0; v < layout->nvars() && v < static_cast<int>(coeffs.size()); ++v) {
    SeriesLayout::Exponent e{};
    e[v] = 1;
    s.set(e, ConstExpr(coeffs[v]));
  }
  return s;
}

ConstSeries compose(const std::vector<ConstExpr>& c, const ConstSeries& z) {
  if (!z.constant_term_is_zero()) throw PreconditionError("compose needs a zero constant term");
  ConstSeries r(z.layout());
  if (!c.empty()) r[0] = c[0];
  ConstSeries p = z;
  for (std::size_t k = 1; k < c.size() && static_cast<int>(k) <= z.order(); ++k) {
    if (!c[k].is_zero()) {
      for (std::size_t i = 0; i < p.layout()->size(); ++i)
        if (!p[i].is_zero()) r[i] += c[k] * p[i];
    }
    if (static_cast<int>(k) < z.order()) p = multiply(p, z);
  }
  return r;
}

namespace {

std::vector<ConstExpr> loggamma1_coeffs(int order) {
  std::vector<ConstExpr> c(static_cast<std::size_t>(order) + 1);
  if (order >= 1) c[1] = -ConstExpr::symbol(Symbol::euler_gamma());
  for (int k = 2; k <= order; ++k) c[k] = zeta_value(k) * Rational(k % 2 ? -1 : 1, k);
  return c;
}

ConstExpr pi_power_over_factorial(int k) {
  return ConstExpr(Monomial(Symbol::pi(), k), Rational(1) / Rational(factorial(k)));
}

}  // namespace

ConstSeries loggamma_at_1(const ConstSeries& z) { return compose(loggamma1_coeffs(z.order()), z); }

ConstSeries loggamma_at_half(const ConstSeries& z) {
  const int order = z.order();
  std::vector<ConstExpr> c(static_cast<std::size_t>(order) + 1);
  if (order >= 1)
    c[1] = -ConstExpr::symbol(Symbol::euler_gamma()) - ConstExpr::symbol(Symbol::log2()) * Rational(2);
  for (int k = 2; k <= order; ++k) {
    const Rational two_k = power(Rational(2), k);
    c[k] = zeta_value(k) * (Rational(k % 2 ? -1 : 1, k) * (two_k - 1));
  }
  return compose(c, z);
}

ConstSeries sin_pi(const ConstSeries& z) {
  std::vector<ConstExpr> c(static_cast<std::size_t>(z.order()) + 1);
  for (int k = 1; k <= z.order(); k += 2) c[k] = pi_power_over_factorial(k) * Rational((k / 2) % 2 ? -1 : 1);
  return compose(c, z);
}

ConstSeries sinc_pi(const ConstSeries& z) {
  std::vector<ConstExpr> c(static_cast<std::size_t>(z.order()) + 1);
  for (int k = 0; k <= z.order(); k += 2) c[k] = pi_power_over_factorial(k + 1) * Rational((k / 2) % 2 ? -1 : 1);
  return compose(c, z);
}

namespace {

void reduce_all(ConstSeries& s) {
  for (std::size_t i = 0; i < s.layout()->size(); ++i) s[i] = reduce(s[i]);
}

ConstSeries beta_generating(BetaPoint point, int order) {
  auto layout = SeriesLayout::make(2, order);
  const auto x = linear_series(layout, {1, 0});
  const auto y = linear_series(layout, {0, 1});
  const auto xy = linear_series(layout, {1, 1});
  ConstSeries g(layout);
  if (point == BetaPoint::ZeroOne) {
    // alpha B(alpha, 1 + t) = Gamma(1+alpha) Gamma(1+t) / Gamma(1+alpha+t)
    g = exp_series(loggamma_at_1(x) + loggamma_at_1(y) - loggamma_at_1(xy));
  } else {
    // beta B(1/2 + s, beta) = Gamma(1+beta) Gamma(1/2+s) / Gamma(1/2+s+beta)
    g = exp_series(loggamma_at_1(y) + loggamma_at_half(x) - loggamma_at_half(xy));
  }
  reduce_all(g);
  for (std::size_t i = 0; i < layout->size(); ++i) assert_gamma_free(g[i]);
  return g;
}

const ConstSeries& cached_beta(BetaPoint point, int order) {
  static std::mutex mutex;
  static std::map<std::pair<BetaPoint, int>, ConstSeries> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({point, order});
  if (it == cache.end()) it = cache.emplace(std::pair{point, order}, beta_generating(point, order)).first;
  return it->second;
}

}  // namespace

ConstExpr beta_expansion_coeff(BetaPoint point, int n, int m) {
  if (n < 0 || m < 0) throw PreconditionError("negative beta expansion order");
  const Rational scale = Rational(factorial(n)) * Rational(factorial(m));
  if (point == BetaPoint::ZeroOne) {
    if (m < 1) throw PreconditionError("beta expansion at (0,1) needs m >= 1");
    const auto& g = cached_beta(point, n + m + 1);
    return g.at({n + 1, m, 0}) * scale;
  }
  if (n < 1) throw PreconditionError("beta expansion at (1/2,0) needs n >= 1");
  const auto& g = cached_beta(point, n + m + 1);
  return g.at({n, m + 1, 0}) * scale;
}

ConstExpr beta_value_one_minus(int a, int b) { return beta_expansion_coeff(BetaPoint::ZeroOne, a, b); }

namespace {

// Coefficient series of the three integrals in the identity; variables
// (alpha, beta, gamma) = (a-1, b-1, c-2).
//   exp(sum_v x_v * f_v) / den  has coefficient  prod_v f_v^e_v / e_v!
LogPoly exp_coeff(const std::array<LinearLog, 3>& f, const SeriesLayout::Exponent& e) {
  std::vector<std::pair<LinearLog, int>> factors;
  Rational scale = 1;
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    factors.emplace_back(f[v], e[v]);
    scale /= Rational(factorial(e[v]));
  }
  return expand_product(factors) * scale;
}

MultiSeries<LinearForm> j1_series(const std::shared_ptr<const SeriesLayout>& layout) {
  // x^beta (1-x)^(gamma-beta) (1+x)^(-alpha) / (1+x)
  const std::array<LinearLog, 3> f{LinearLog{0, 0, 0, 0, -1}, LinearLog{0, 0, -1, 1, 0}, LinearLog{0, 0, 1, 0, 0}};
  MultiSeries<LinearForm> s(layout);
  for (std::size_t i = 0; i < layout->size(); ++i)
    s[i] = integrate(exp_coeff(f, layout->exponent(i)), RawDenominator::OnePlusX);
  return s;
}

// x^(p-gamma) [(E - 1)/x - E/(1+x)],  E = (1-x)^(gamma-q) (1+x)^(-p)
// where (p, q) = (alpha, beta), or swapped when swap is set.
MultiSeries<LinearForm> j23_series(const std::shared_ptr<const SeriesLayout>& layout, bool swap) {
  const LinearLog fp{0, 0, 0, 1, -1};
  const LinearLog fq{0, 0, -1, 0, 0};
  const LinearLog fg{0, 0, 1, -1, 0};
  const std::array<LinearLog, 3> f = swap ? std::array{fq, fp, fg} : std::array{fp, fq, fg};
  // x^(p-gamma) alone
  const std::array<LinearLog, 3> g = swap ? std::array{LinearLog{}, LinearLog::log_x(), LinearLog{0, 0, 0, -1, 0}}
                                          : std::array{LinearLog::log_x(), LinearLog{}, LinearLog{0, 0, 0, -1, 0}};
  MultiSeries<LinearForm> s(layout);
  for (std::size_t i = 0; i < layout->size(); ++i) {
    const auto& e = layout->exponent(i);
    const LogPoly full = exp_coeff(f, e);
    const LogPoly bare = exp_coeff(g, e);
    s[i] = integrate(full - bare, RawDenominator::X) - integrate(full, RawDenominator::OnePlusX);
  }
  return s;
}

}  // namespace

MultiSeries<LinearForm> hyp2f1_identity_series(int order, int min_degree) {
  // Each coefficient of degree D has weight D + 1 and a factor of pi.
  auto layout = SeriesLayout::make(3, order);
  const auto al = linear_series(layout, {1, 0, 0});
  const auto be = linear_series(layout, {0, 1, 0});
  const auto u = linear_series(layout, {-1, 0, 1});   // gamma - alpha
  const auto v = linear_series(layout, {0, -1, 1});   // gamma - beta
  const auto bma = linear_series(layout, {-1, 1, 0});  // beta - alpha
  const auto bmg = linear_series(layout, {0, 1, -1});  // beta - gamma

  // Gamma(1+gamma-beta) Gamma(1+beta) / (Gamma(1+alpha) Gamma(1+gamma-alpha))
  ConstSeries ratio_j3 = exp_series(loggamma_at_1(v) + loggamma_at_1(be) - loggamma_at_1(al) - loggamma_at_1(u));
  // Gamma(1+beta) / (Gamma(1+beta-gamma) Gamma(1+alpha) Gamma(1+gamma-alpha))
  ConstSeries ratio_pi =
      exp_series(loggamma_at_1(be) - loggamma_at_1(bmg) - loggamma_at_1(al) - loggamma_at_1(u));
  reduce_all(ratio_j3);
  reduce_all(ratio_pi);
  for (std::size_t i = 0; i < layout->size(); ++i) {
    assert_gamma_free(ratio_j3[i]);
    assert_gamma_free(ratio_pi[i]);
  }

  const ConstSeries s1 = sin_pi(bma);
  const ConstSeries s2 = sin_pi(u);
  ConstSeries s3 = multiply(sin_pi(v), ratio_j3);
  reduce_all(s3);

  // sin pi(b-a) J1 + sin(pi u) J2 - sin(pi v) R J3 - sinc(u) + pi Gamma-ratio = 0
  MultiSeries<LinearForm> total = multiply(s1, j1_series(layout), min_degree);
  total += multiply(s2, j23_series(layout, false), min_degree);
  total -= multiply(s3, j23_series(layout, true), min_degree);
  ConstSeries consts = ConstSeries(layout) - sinc_pi(u);
  for (std::size_t i = 0; i < layout->size(); ++i)
    consts[i] += ConstExpr(Monomial(Symbol::pi())) * ratio_pi[i];
  for (std::size_t i = 0; i < layout->size(); ++i) {
    if (layout->degree(static_cast<std::size_t>(i)) < min_degree) continue;
    total[i].add_constant(reduce(consts[i]));
  }
  return total;
}

namespace {

LinearForm reduced(const LinearForm& f) {
  LinearForm r(reduce(f.constant()));
  for (const auto& [idx, c] : f.integrals()) r.add(idx, reduce(c));
  return r;
}

}  // namespace

LinearForm hyp2f1_relation(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0) throw PreconditionError("negative 2F1 expansion order");
  const int w = m + n + r;
  const auto series = hyp2f1_identity_series(w, w);
  return reduced(series.at({m, n, r})).shift_pi(-1);
}

std::vector<Hyp2f1Relation> hyp2f1_relations(int w) {
  if (w < 1) throw PreconditionError("2F1 relations need w >= 1");
  const auto series = hyp2f1_identity_series(w, w);
  std::vector<Hyp2f1Relation> out;
  const auto& layout = *series.layout();
  const auto [begin, end] = layout.degree_range(w);
  for (std::size_t i = begin; i < end; ++i) {
    LinearForm f = reduced(series[i]);
    if (f.is_zero()) continue;
    const auto& e = layout.exponent(i);
    out.push_back({{e[0], e[1], e[2]}, f.shift_pi(-1)});
  }
  return out;
}

}  // namespace polyint
