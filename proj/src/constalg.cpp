#include "polyint/constalg.hpp"

#include <algorithm>
#include <cctype>

#include "polyint/error.hpp"

namespace polyint {

int Symbol::weight() const {
  switch (kind) {
    case Kind::Log2:
    case Kind::Pi:
    case Kind::EulerGamma: return 1;
    case Kind::Zeta:
    case Kind::LiHalf:
    case Kind::Named: return n;
  }
  return 0;
}

std::string to_string(const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::Log2: return "Log2";
    case Symbol::Kind::Pi: return "Pi";
    case Symbol::Kind::Zeta: return "Zeta[" + std::to_string(s.n) + "]";
    case Symbol::Kind::LiHalf: return "LiHalf[" + std::to_string(s.n) + "]";
    case Symbol::Kind::EulerGamma: return "EulerGamma";
    case Symbol::Kind::Named:
      switch (s.n) {
        case 6: return "F" + std::to_string(s.k);
        case 7: return "G" + std::to_string(s.k);
        case 8: return "H" + std::to_string(s.k);
        default: return "U[" + std::to_string(s.n) + "," + std::to_string(s.k) + "]";
      }
  }
  return "?";
}

Monomial::Monomial(Symbol s, int power) {
  if (power < 0) throw PreconditionError("negative power in monomial");
  if (power > 0) factors_.emplace_back(s, power);
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& [s, p] : factors_) w += s.weight() * p;
  return w;
}

int Monomial::power_of(const Symbol& s) const {
  for (const auto& [t, p] : factors_)
    if (t == s) return p;
  return 0;
}

Monomial Monomial::times(const Symbol& s, int power) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), s,
                             [](const Factor& f, const Symbol& t) { return f.first < t; });
  if (it != r.factors_.end() && it->first == s) {
    it->second += power;
    if (it->second < 0) throw InternalError("monomial power became negative");
    if (it->second == 0) r.factors_.erase(it);
  } else if (power > 0) {
    r.factors_.insert(it, {s, power});
  } else if (power < 0) {
    throw InternalError("monomial power became negative");
  }
  return r;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial r;
  r.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() || j != y.factors_.end()) {
    if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == x.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (const auto& [sym, p] : m.factors()) {
    if (!s.empty()) s += '*';
    s += to_string(sym);
    if (p != 1) s += "^" + std::to_string(p);
  }
  return s;
}

ConstExpr::ConstExpr(const Rational& q) {
  if (q != 0) terms_.emplace(Monomial(), q);
}

ConstExpr::ConstExpr(const Monomial& m, const Rational& q) {
  if (q != 0) terms_.emplace(m, q);
}

std::optional<Rational> ConstExpr::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<int> ConstExpr::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [m, q] : terms_) {
    const int mw = m.weight();
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

bool ConstExpr::contains(const Symbol& s) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.power_of(s) > 0; });
}

void ConstExpr::add(const Monomial& m, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

void ConstExpr::add_scaled(const ConstExpr& x, const Rational& q) {
  if (q == 0) return;
  Rational t;
  for (const auto& [m, c] : x.terms_) {
    t = c * q;
    add(m, t);
  }
}

ConstExpr& ConstExpr::operator+=(const ConstExpr& x) {
  for (const auto& [m, c] : x.terms_) add(m, c);
  return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& x) {
  for (const auto& [m, c] : x.terms_) add(m, -c);
  return *this;
}

ConstExpr& ConstExpr::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

ConstExpr operator*(const ConstExpr& x, const ConstExpr& y) {
  ConstExpr r;
  Rational t;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      t = cx * cy;
      r.add(mx * my, t);
    }
  return r;
}

ConstExpr ConstExpr::shift_pi(int delta) const {
  ConstExpr r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.times(Symbol::pi(), delta), c);
  return r;
}

namespace {

bool is_raw(const Symbol& s) {
  if (s.kind == Symbol::Kind::Zeta) return s.n % 2 == 0 || s.n < 3;
  if (s.kind == Symbol::Kind::LiHalf) return s.n <= 3;
  return false;
}

ConstExpr expand_raw(const Symbol& s) {
  if (s.kind == Symbol::Kind::Zeta) {
    if (s.n < 2) throw PreconditionError("zeta(" + std::to_string(s.n) + ") is not defined here");
    const int n = s.n;
    // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)
    Rational q = bernoulli(n) * power(Rational(2), n) / (Rational(2) * Rational(factorial(n)));
    if ((n / 2) % 2 == 0) q = -q;
    q.canonicalize();
    return ConstExpr(Monomial(Symbol::pi(), n), q);
  }
  const ConstExpr l = ConstExpr::symbol(Symbol::log2());
  const ConstExpr p = ConstExpr::symbol(Symbol::pi());
  switch (s.n) {
    case 1: return l;
    case 2: return Rational(1, 12) * (p * p) - Rational(1, 2) * (l * l);
    case 3:
      return Rational(7, 8) * ConstExpr::symbol(Symbol::zeta(3)) - Rational(1, 12) * (p * p * l) +
             Rational(1, 6) * (l * l * l);
    default: throw PreconditionError("Li_n(1/2) needs n >= 1");
  }
}

}  // namespace

ConstExpr reduce(const ConstExpr& x) {
  ConstExpr r;
  for (const auto& [m, c] : x.terms()) {
    Monomial kept;
    ConstExpr factor(1);
    for (const auto& [s, p] : m.factors()) {
      if (is_raw(s)) {
        const ConstExpr e = expand_raw(s);
        for (int i = 0; i < p; ++i) factor = factor * e;
      } else {
        kept = kept.times(s, p);
      }
    }
    for (const auto& [fm, fc] : factor.terms()) r.add(kept * fm, c * fc);
  }
  return r;
}

ConstExpr mul(const ConstExpr& x, const ConstExpr& y) { return reduce(x * y); }

ConstExpr power(const ConstExpr& x, int exponent) {
  if (exponent < 0) throw PreconditionError("negative power of a constant expression");
  ConstExpr r(1);
  for (int i = 0; i < exponent; ++i) r = r * x;
  return r;
}

ConstExpr zeta_value(int n) { return reduce(ConstExpr::symbol(Symbol::zeta(n))); }
ConstExpr li_half_value(int n) { return reduce(ConstExpr::symbol(Symbol::li_half(n))); }

std::vector<Monomial> monomials_of_weight(int w, std::span<const Symbol> pool) {
  if (w < 0) throw PreconditionError("negative weight");
  std::vector<Symbol> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> out;
  // depth-first over the pool: choose a multiplicity for each symbol in turn
  auto rec = [&](auto&& self, std::size_t i, int remaining, const Monomial& acc) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    if (i == sorted.size()) return;
    const int sw = sorted[i].weight();
    for (int p = 0; p * sw <= remaining; ++p) self(self, i + 1, remaining - p * sw, acc.times(sorted[i], p));
  };
  rec(rec, 0, w, Monomial());
  return out;
}

void assert_gamma_free(const ConstExpr& x) {
  for (const auto& [m, c] : x.terms())
    if (m.power_of(Symbol::euler_gamma()) > 0)
      throw InternalError("Euler gamma survived in monomial " + to_string(m) + " (series expansion bug)");
}

bool has_only_even_pi(const ConstExpr& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& t) { return t.first.power_of(Symbol::pi()) % 2 == 0; });
}

std::string to_string(const ConstExpr& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += to_string(m);
    }
  }
  return s;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ConstExpr parse_expr() {
    ConstExpr r;
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
      skip_ws();
    }
    if (peek() == '0' && pos_ + 1 >= text_.size()) {
      ++pos_;
      return r;
    }
    while (true) {
      auto [m, q] = parse_term();
      r.add(m, q * sign);
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sign = op == '-' ? -1 : 1;
      skip_ws();
    }
    return r;
  }

  Symbol parse_symbol_only() {
    skip_ws();
    Symbol s = parse_symbol();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after symbol");
    return s;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial m;
    Rational q = 1;
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        q *= parse_number();
      } else {
        const Symbol s = parse_symbol();
        int p = 1;
        if (peek() == '^') {
          ++pos_;
          p = parse_int();
          if (p < 1) fail("powers must be positive");
        }
        m = m.times(s, p);
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, q};
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 4) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<int> parse_brackets() {
    if (peek() != '[') fail("expected '['");
    ++pos_;
    std::vector<int> args{parse_int()};
    while (peek() == ',') {
      ++pos_;
      args.push_back(parse_int());
    }
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    return args;
  }

  Symbol parse_symbol() {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a symbol");
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);
    if (id == "Log2") return Symbol::log2();
    if (id == "Pi") return Symbol::pi();
    if (id == "EulerGamma") return Symbol::euler_gamma();
    if (id == "Zeta" || id == "LiHalf") {
      const auto args = parse_brackets();
      if (args.size() != 1) fail("expected one argument");
      return id == "Zeta" ? Symbol::zeta(args[0]) : Symbol::li_half(args[0]);
    }
    if (id == "U") {
      const auto args = parse_brackets();
      if (args.size() != 2 || args[1] < 1) fail("expected U[weight,ordinal]");
      return Symbol::named(args[0], args[1]);
    }
    if (id.size() >= 2 && (id[0] == 'F' || id[0] == 'G' || id[0] == 'H') &&
        std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      const int w = id[0] == 'F' ? 6 : id[0] == 'G' ? 7 : 8;
      const int k = std::stoi(std::string(id.substr(1)));
      if (k < 1) fail("constant ordinals start at 1");
      return Symbol::named(w, k);
    }
    fail("unknown symbol '" + std::string(id) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstExpr parse_const_expr(std::string_view text) { return ExprParser(text).parse_expr(); }

Symbol parse_symbol(std::string_view text) { return ExprParser(text).parse_symbol_only(); }

}  // namespace polyint
