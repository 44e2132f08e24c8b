#include "polyint/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "polyint/error.hpp"

namespace polyint {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json" || name == "structured") return Format::Json;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void check_entry(const IntegralIndex& idx, const ConstExpr& v) {
  if (v.is_zero()) return;
  const auto w = v.homogeneous_weight();
  if (!w || *w != idx.weight()) throw ParseError("value of " + format_name(idx) + " has the wrong weight");
}

}  // namespace

void write_table(std::ostream& os, const ClosedFormTable& table, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["max_weight"] = table.max_weight();
    j["constants"] = nlohmann::ordered_json::array();
    for (const auto& [s, idx] : table.named())
      j["constants"].push_back({{"name", to_string(s)}, {"weight", s.weight()}, {"integral", format_name(idx)}});
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [idx, v] : table.values()) values[format_name(idx)] = to_string(v);
    j["values"] = std::move(values);
    os << j.dump(1) << '\n';
    return;
  }
  os << "# weights 1.." << table.max_weight() << '\n';
  for (const auto& [s, idx] : table.named()) os << to_string(s) << " := " << format_name(idx) << '\n';
  for (const auto& [idx, v] : table.values()) os << format_name(idx) << " = " << to_string(v) << '\n';
}

ClosedFormTable read_table(std::istream& is, Format format) {
  ClosedFormTable t;
  if (format == Format::Json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(is);
      for (const auto& c : j.at("constants")) {
        const Symbol s = parse_symbol(c.at("name").get<std::string>());
        if (s.kind != Symbol::Kind::Named) throw ParseError("constant entry is not a named constant");
        t.define(s, parse_name(c.at("integral").get<std::string>()));
      }
      for (const auto& [name, v] : j.at("values").items()) {
        const IntegralIndex idx = parse_name(name);
        ConstExpr e = parse_const_expr(v.get<std::string>());
        check_entry(idx, e);
        t.set(idx, std::move(e));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed table: ") + e.what());
    }
    return t;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    try {
      if (auto p = s.find(":="); p != std::string::npos) {
        const Symbol sym = parse_symbol(trim(std::string_view(s).substr(0, p)));
        if (sym.kind != Symbol::Kind::Named) throw ParseError("not a named constant");
        t.define(sym, parse_name(trim(std::string_view(s).substr(p + 2))));
      } else if (auto q = s.find('='); q != std::string::npos) {
        const IntegralIndex idx = parse_name(trim(std::string_view(s).substr(0, q)));
        ConstExpr e = parse_const_expr(trim(std::string_view(s).substr(q + 1)));
        check_entry(idx, e);
        t.set(idx, std::move(e));
      } else {
        throw ParseError("expected 'name = value'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return t;
}

std::string residual_combination(const std::vector<std::pair<IntegralIndex, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, q] : terms) {
    const bool negative = q < 0;
    const Rational a = negative ? Rational(-q) : q;
    const std::string name = format_name(idx);
    const Integer& p = a.get_num();
    const Integer& d = a.get_den();
    std::string body;
    bool compound = false;
    if (d == 1) {
      body = p == 1 ? name : p.get_str() + " " + name;
    } else {
      body = p == 1 ? name + "/" + d.get_str() : "(" + p.get_str() + " " + name + ")/" + d.get_str();
      compound = true;
    }
    if (first)
      out = negative ? (compound ? "-(" + body + ")" : "-" + body) : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::vector<std::string> residual_lines(int w, const SolveOptions& opts) {
  std::vector<std::string> lines;
  for (const auto& m : reduce_modulo_lower(w, opts))
    lines.push_back(format_name(m.integral) + ", " + residual_combination(m.combination));
  return lines;
}

void write_rank_report(std::ostream& os, const WeightSolution& s) {
  os << "w=" << s.weight << ':';
  for (const auto& r : s.ranks) os << ' ' << r.cumulative_rank;
  os << " | " << s.integrals;
}

}  // namespace polyint
