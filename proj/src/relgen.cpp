#include "polyint/relgen.hpp"

#include <array>

#include "polyint/error.hpp"
#include "polyint/series.hpp"

namespace polyint {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::IBP: return "IBP";
    case Method::FT: return "FT";
    case Method::GP: return "GP";
    case Method::SR: return "SR";
    case Method::CI: return "CI";
    case Method::MI: return "MI";
    case Method::HYP2F1: return "2F1";
    case Method::Seed: return "SEED";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::IBP, Method::FT, Method::GP, Method::SR, Method::CI, Method::MI, Method::HYP2F1,
                   Method::Seed})
    if (method_name(m) == name) return m;
  throw ParseError("unknown method '" + std::string(name) + "'");
}

std::optional<Relation> make_relation(const LinearForm& zero_form, int weight, Method method, std::string origin) {
  Relation r;
  r.method = method;
  r.weight = weight;
  r.origin = std::move(origin);
  LinearForm rest(-reduce(zero_form.constant()));
  if (auto cw = rest.constant().homogeneous_weight(); cw && *cw != weight)
    throw InternalError(r.origin + ": constant term of weight " + std::to_string(*cw));
  for (const auto& [idx, raw] : zero_form.integrals()) {
    const ConstExpr c = reduce(raw);
    if (c.is_zero()) continue;
    if (idx.weight() == weight) {
      auto q = c.as_rational();
      if (!q) throw InternalError(r.origin + ": non-rational coefficient of " + format_name(idx));
      r.lhs.emplace(idx, *q);
      continue;
    }
    auto cw = c.homogeneous_weight();
    if (idx.weight() > weight || !cw || *cw + idx.weight() != weight)
      throw InternalError(r.origin + ": inhomogeneous term in " + format_name(idx));
    rest.add(idx, -c);
  }
  if (r.lhs.empty()) return std::nullopt;
  r.rhs = std::move(rest);
  return r;
}

namespace {

void push(std::vector<Relation>& out, const LinearForm& f, int w, Method m, std::string origin) {
  if (auto r = make_relation(f, w, m, std::move(origin))) out.push_back(std::move(*r));
}

std::string join(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

// Adds coeff * i_{a,b,c,d}; returns false when the integral diverges.
bool add_term(LinearForm& f, int a, int b, int c, int d, const Rational& coeff) {
  if (coeff == 0) return true;
  const IntegralIndex idx = make_index(a, b, c, d);
  if (!idx.convergent()) return false;
  f.add(idx, coeff);
  return true;
}

}  // namespace

std::vector<Relation> gen_ibp(int w) {
  if (w < 2) throw PreconditionError("IBP needs w >= 2");
  std::vector<Relation> out;
  for (int a = 0; a < w; ++a) {
    for (int b = 0; a + b < w; ++b) {
      const int c = w - 1 - a - b;
      const std::string tag = join({a, b, c});
      {
        // (a+1) f(a,b,c;1-x) = b f(a+1,b-1,c;x) + c f(a+1,b,c-1;1+x)
        LinearForm f;
        bool ok = add_term(f, a, b, c, 0, a + 1);
        ok = ok && add_term(f, a + 1, b - 1, c, 1, -b);
        ok = ok && add_term(f, a + 1, b, c - 1, 2, -c);
        if (ok) push(out, f, w, Method::IBP, "IBP[1;" + tag + "]");
      }
      {
        // (b+1) f(a,b,c;x) = a f(a-1,b+1,c;1-x) - c f(a,b+1,c-1;1+x)
        LinearForm f;
        bool ok = add_term(f, a, b, c, 1, b + 1);
        ok = ok && add_term(f, a - 1, b + 1, c, 0, -a);
        ok = ok && add_term(f, a, b + 1, c - 1, 2, c);
        if (ok) push(out, f, w, Method::IBP, "IBP[2;" + tag + "]");
      }
      {
        // (c+1) f(a,b,c;1+x) = a f(a-1,b,c+1;1-x) - b f(a,b-1,c+1;x), plus
        // the boundary value log^(c+1) 2 when a = b = 0
        LinearForm f;
        bool ok = add_term(f, a, b, c, 2, c + 1);
        ok = ok && add_term(f, a - 1, b, c + 1, 0, -a);
        ok = ok && add_term(f, a, b - 1, c + 1, 1, b);
        if (a == 0 && b == 0) f.add_constant(-ConstExpr::symbol(Symbol::log2(), c + 1));
        if (ok) push(out, f, w, Method::IBP, "IBP[3;" + tag + "]");
      }
    }
  }
  return out;
}

std::vector<Relation> gen_fractional(int w) {
  std::vector<Relation> out;
  for (const auto& idx : enumerate_convergent(w)) {
    if (!(idx.d == Denominator::OnePlusX || (idx.d == Denominator::OneMinusX && idx.b >= 1))) continue;
    LinearForm f = fractional_substitute(idx);
    f.add(idx, -1);
    push(out, f, w, Method::FT, "FT[" + format_name(idx) + "]");
  }
  return out;
}

std::vector<Relation> gen_explicit(int w) {
  if (w < 2) throw PreconditionError("explicit evaluations need w >= 2");
  std::vector<Relation> out;
  auto emit = [&](const IntegralIndex& idx, const ConstExpr& value) {
    LinearForm f(idx);
    f.add_constant(-value);
    push(out, f, w, Method::GP, "GP[" + format_name(idx) + "]");
  };
  emit(make_index(w - 1, 0, 0, 2), log_one_minus_over_one_plus_value(w - 1));
  emit(make_index(0, 0, w - 1, 1), log_one_plus_over_x_value(w - 1));
  for (int m = 1; m < w; ++m) emit(make_index(m, w - 1 - m, 0, 1), beta_expansion_coeff(BetaPoint::ZeroOne, w - 1 - m, m));
  for (int b = 1; b < w; ++b) emit(make_index(w - 1 - b, b, 0, 0), beta_value_one_minus(w - 1 - b, b));
  return out;
}

std::vector<Relation> gen_square(int w) {
  std::vector<Relation> out;
  for (int b = 0; b <= w - 2; ++b) {
    const auto sr = square_replace(1, w - 1 - b, b);
    push(out, sr.form, w, Method::SR, "SR[1;" + join({w - 1 - b, b}) + "]");
  }
  for (int b = 1; b <= w - 1; ++b) {
    auto sr = square_replace(2, w - 1 - b, b);
    sr.form.add_constant(beta_expansion_coeff(BetaPoint::HalfZero, sr.aux.n, sr.aux.m) * sr.aux_coeff);
    push(out, sr.form, w, Method::SR, "SR[2;" + join({w - 1 - b, b}) + "]");
  }
  return out;
}

std::vector<Relation> gen_contour(int w) {
  std::vector<Relation> out;
  for (Part part : {Part::Real, Part::Imag}) {
    const int total = part == Part::Real ? w - 1 : w;
    const std::string tag = part == Part::Real ? "Re;" : "Im;";
    for (int p = 0; p <= total - 2; ++p) {
      for (int q = 1; p + q <= total - 1; ++q) {
        const int r = total - p - q;
        push(out, expand_contour(p, q, r, part), w, Method::CI, "CI[" + tag + join({p, q, r}) + "]");
      }
    }
  }
  return out;
}

std::vector<Relation> gen_multiint(int w, const GeneratorOptions& opts) {
  std::vector<Relation> out;
  if (opts.mi1 && w >= 4 && w % 2 == 0) push(out, expand_mi1((w - 2) / 2), w, Method::MI, "MI1[" + join({(w - 2) / 2}) + "]");
  if (opts.mi2 && w >= 4) push(out, expand_mi2(w - 3), w, Method::MI, "MI2[" + join({w - 3}) + "]");
  return out;
}

std::vector<Relation> gen_2f1(int w) {
  std::vector<Relation> out;
  for (auto& h : hyp2f1_relations(w))
    push(out, h.form, w, Method::HYP2F1, "2F1[" + join({h.mnr[0], h.mnr[1], h.mnr[2]}) + "]");
  return out;
}

std::vector<Relation> generate(int w, Method m, const GeneratorOptions& opts) {
  if (w < 2) throw PreconditionError("relations need w >= 2");
  switch (m) {
    case Method::IBP: return gen_ibp(w);
    case Method::FT: return gen_fractional(w);
    case Method::GP: return gen_explicit(w);
    case Method::SR: return gen_square(w);
    case Method::CI: return gen_contour(w);
    case Method::MI: return gen_multiint(w, opts);
    case Method::HYP2F1: return gen_2f1(w);
    case Method::Seed: break;
  }
  throw PreconditionError("no generator for method " + std::string(method_name(m)));
}

Real relation_residual(const Relation& r, NumericEvaluator& ev) {
  PrecisionContext ctx(ev.working());
  Real lhs = 0;
  for (const auto& [idx, q] : r.lhs) lhs += ev.eval(ConstExpr(q)) * ev.quad(idx);
  return lhs - ev.eval(r.rhs);
}

bool verify_relation(const Relation& r, NumericEvaluator& ev) {
  PrecisionContext ctx(ev.working());
  Real scale = 0;
  for (const auto& [idx, q] : r.lhs) scale += boost::multiprecision::abs(ev.eval(ConstExpr(q)) * ev.quad(idx));
  return ev.negligible(relation_residual(r, ev), scale);
}

namespace {

std::string coeff_times(const ConstExpr& c, const std::string& name, bool& first) {
  std::string s;
  std::string body;
  bool negative = false;
  if (auto q = c.as_rational()) {
    negative = *q < 0;
    const Rational a = negative ? Rational(-*q) : *q;
    body = a == 1 ? name : to_string(a) + "*" + name;
  } else {
    body = "(" + to_string(c) + ")*" + name;
  }
  if (first)
    s = negative ? "-" + body : body;
  else
    s = (negative ? " - " : " + ") + body;
  first = false;
  return s;
}

}  // namespace

std::string to_string(const LinearForm& f) {
  std::string s;
  bool first = true;
  for (const auto& [idx, c] : f.integrals()) s += coeff_times(c, format_name(idx), first);
  if (!f.constant().is_zero()) {
    std::string k = to_string(f.constant());
    if (first)
      s = k;
    else if (k.front() == '-')
      s += " - " + k.substr(1);
    else
      s += " + " + k;
    first = false;
  }
  return first ? "0" : s;
}

std::string to_string(const Relation& r) {
  LinearForm lhs;
  for (const auto& [idx, q] : r.lhs) lhs.add(idx, ConstExpr(q));
  return std::string(method_name(r.method)) + " | " + to_string(lhs) + " = " + to_string(r.rhs);
}

}  // namespace polyint
