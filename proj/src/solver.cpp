#include "polyint/solver.hpp"

#include <algorithm>

#include "polyint/error.hpp"

namespace polyint {

ClosedFormTable ClosedFormTable::seed(int max_weight) {
  if (max_weight < 1 || max_weight > 2) throw PreconditionError("seed tables exist for weights 1 and 2");
  ClosedFormTable t;
  t.set(make_index(0, 0, 0, 2), ConstExpr::symbol(Symbol::log2()));
  if (max_weight == 2) {
    t.set(parse_name("i0100"), parse_const_expr("-1/6*Pi^2"));
    t.set(parse_name("i0011"), parse_const_expr("1/12*Pi^2"));
    t.set(parse_name("i1001"), parse_const_expr("-1/6*Pi^2"));
    t.set(parse_name("i1002"), parse_const_expr("-1/12*Pi^2 + 1/2*Log2^2"));
    t.set(parse_name("i0012"), parse_const_expr("1/2*Log2^2"));
    t.set(parse_name("i0102"), parse_const_expr("-1/12*Pi^2"));
  }
  return t;
}

const ConstExpr& ClosedFormTable::value(const IntegralIndex& idx) const {
  auto it = values_.find(idx);
  if (it == values_.end()) throw PreconditionError("no closed form for " + format_name(idx));
  return it->second;
}

void ClosedFormTable::set(const IntegralIndex& idx, ConstExpr value) { values_[idx] = std::move(value); }

void ClosedFormTable::define(const Symbol& named, const IntegralIndex& idx) { named_[named] = idx; }

int ClosedFormTable::max_weight() const {
  int w = 0;
  for (const auto& [idx, v] : values_) w = std::max(w, idx.weight());
  return w;
}

ConstExpr ClosedFormTable::substitute(const LinearForm& f) const {
  ConstExpr r = reduce(f.constant());
  for (const auto& [idx, c] : f.integrals()) r += mul(c, value(idx));
  return reduce(r);
}

std::vector<IntegralIndex> preferred_constants(int w) {
  switch (w) {
    case 6: return {make_index(0, 4, 1, 2)};
    case 7: return {make_index(0, 4, 2, 2), make_index(1, 4, 1, 0)};
    case 8: return {make_index(0, 6, 1, 2), make_index(0, 3, 4, 1), make_index(2, 4, 1, 2)};
    default: return {};
  }
}

namespace {

// Rows are keyed by column priority: smaller key = eliminated first.
struct Row {
  std::map<int, Rational> cols;
  ConstExpr rhs;
  bool has_rhs = false;
};

class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : pivots_(ncols) {}

  // Returns true when the row raised the rank.
  bool insert(Row row, const std::string& origin) {
    for (auto it = row.cols.begin(); it != row.cols.end();) {
      const int col = it->first;
      const auto& piv = pivots_[static_cast<std::size_t>(col)];
      if (!piv) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      for (const auto& [c, q] : piv->cols) {
        auto [jt, fresh] = row.cols.try_emplace(c, 0);
        jt->second -= f * q;
        if (jt->second == 0) row.cols.erase(jt);
      }
      if (row.has_rhs) row.rhs.add_scaled(piv->rhs, -f);
      it = row.cols.upper_bound(col);
    }
    if (row.cols.empty()) {
      if (row.has_rhs && !reduce(row.rhs).is_zero())
        throw InconsistentSystem(origin + " reduces to 0 = " + to_string(reduce(row.rhs)));
      return false;
    }
    const auto [lead, q] = *row.cols.begin();
    const Rational inv = 1 / q;
    for (auto& [c, v] : row.cols) v *= inv;
    if (row.has_rhs) row.rhs *= inv;
    pivots_[static_cast<std::size_t>(lead)] = std::move(row);
    ++rank_;
    return true;
  }

  std::size_t rank() const { return rank_; }
  const std::optional<Row>& pivot(int col) const { return pivots_[static_cast<std::size_t>(col)]; }

 private:
  std::vector<std::optional<Row>> pivots_;
  std::size_t rank_ = 0;
};

struct Columns {
  std::vector<IntegralIndex> by_key;  // priority order
  std::map<IntegralIndex, int> key;
};

Columns order_columns(int w, PivotPolicy policy) {
  Columns c;
  auto all = enumerate_convergent(w);
  if (policy != PivotPolicy::LexEarliest) std::reverse(all.begin(), all.end());
  if (policy == PivotPolicy::Preferred) {
    const auto pref = preferred_constants(w);
    std::stable_partition(all.begin(), all.end(),
                          [&](const IntegralIndex& i) { return std::find(pref.begin(), pref.end(), i) == pref.end(); });
    // the preferred ones end in their customary order
    std::sort(all.end() - static_cast<long>(pref.size()), all.end(), [&](const IntegralIndex& x, const IntegralIndex& y) {
      return std::find(pref.begin(), pref.end(), x) > std::find(pref.begin(), pref.end(), y);
    });
  }
  c.by_key = all;
  for (std::size_t i = 0; i < all.size(); ++i) c.key.emplace(all[i], static_cast<int>(i));
  return c;
}

WeightSolution run(int w, const ClosedFormTable* table, const SolveOptions& opts, Echelon& ech, const Columns& cols) {
  WeightSolution sol;
  sol.weight = w;
  sol.integrals = cols.by_key.size();
  const std::vector<Method> methods =
      opts.methods.empty() ? std::vector<Method>(std::begin(kMethods), std::end(kMethods)) : opts.methods;
  for (Method m : methods) {
    const auto rels = generate(w, m, opts.generators);
    for (const auto& r : rels) {
      Row row;
      for (const auto& [idx, q] : r.lhs) row.cols.emplace(cols.key.at(idx), q);
      if (table) {
        row.rhs = table->substitute(r.rhs);
        row.has_rhs = true;
      }
      ech.insert(std::move(row), r.origin);
    }
    sol.ranks.push_back({m, rels.size(), ech.rank()});
  }
  sol.rank = ech.rank();
  return sol;
}

}  // namespace

WeightSolution rank_weight(int w, const SolveOptions& opts) {
  const Columns cols = order_columns(w, opts.pivot);
  Echelon ech(cols.by_key.size());
  return run(w, nullptr, opts, ech, cols);
}

WeightSolution solve_weight(int w, ClosedFormTable& table, const SolveOptions& opts) {
  if (w < 2) throw PreconditionError("solve_weight needs w >= 2");
  if (table.max_weight() < w - 1) throw PreconditionError("closed forms of lower weights are missing");
  const Columns cols = order_columns(w, opts.pivot);
  Echelon ech(cols.by_key.size());
  WeightSolution sol = run(w, &table, opts, ech, cols);

  // free columns become named constants: the customary ones first, then the
  // rest in enumeration order
  std::vector<IntegralIndex> free_cols;
  for (const auto& idx : enumerate_convergent(w))
    if (!ech.pivot(cols.key.at(idx))) free_cols.push_back(idx);
  std::vector<IntegralIndex> ordered;
  for (const auto& p : preferred_constants(w))
    if (std::find(free_cols.begin(), free_cols.end(), p) != free_cols.end()) ordered.push_back(p);
  for (const auto& idx : free_cols)
    if (std::find(ordered.begin(), ordered.end(), idx) == ordered.end()) ordered.push_back(idx);
  int ordinal = 0;
  for (const auto& idx : ordered) {
    const Symbol s = Symbol::named(w, ++ordinal);
    sol.new_constants.emplace_back(s, idx);
    sol.values[idx] = ConstExpr::symbol(s);
  }

  // every other column of a pivot row has a larger key, so solve from the
  // back of the priority order
  for (int k = static_cast<int>(cols.by_key.size()) - 1; k >= 0; --k) {
    const auto& piv = ech.pivot(k);
    if (!piv) continue;
    ConstExpr v = piv->rhs;
    for (const auto& [c, q] : piv->cols) {
      if (c == k) continue;
      v.add_scaled(sol.values.at(cols.by_key[static_cast<std::size_t>(c)]), -q);
    }
    sol.values[cols.by_key[static_cast<std::size_t>(k)]] = reduce(v);
  }

  for (const auto& [s, idx] : sol.new_constants) table.define(s, idx);
  for (const auto& [idx, v] : sol.values) table.set(idx, v);
  return sol;
}

std::vector<ModularReduction> reduce_modulo_lower(int w, const SolveOptions& opts) {
  const Columns cols = order_columns(w, opts.pivot);
  Echelon ech(cols.by_key.size());
  run(w, nullptr, opts, ech, cols);
  std::map<int, std::map<int, Rational>> expr;
  for (int k = static_cast<int>(cols.by_key.size()) - 1; k >= 0; --k) {
    const auto& piv = ech.pivot(k);
    if (!piv) {
      expr[k][k] = 1;
      continue;
    }
    std::map<int, Rational> v;
    for (const auto& [c, q] : piv->cols) {
      if (c == k) continue;
      for (const auto& [f, r] : expr.at(c)) {
        auto [it, fresh] = v.try_emplace(f, 0);
        it->second -= q * r;
        if (it->second == 0) v.erase(it);
      }
    }
    expr[k] = std::move(v);
  }
  std::vector<ModularReduction> out;
  for (const auto& idx : enumerate_convergent(w)) {
    const int k = cols.key.at(idx);
    if (!ech.pivot(k)) continue;
    ModularReduction m{idx, {}};
    for (const auto& [f, r] : expr.at(k)) m.combination.emplace_back(cols.by_key[static_cast<std::size_t>(f)], r);
    std::sort(m.combination.begin(), m.combination.end());
    out.push_back(std::move(m));
  }
  return out;
}

ConstExpr symbolic_residual(const Relation& r, const ClosedFormTable& table) {
  ConstExpr x = -table.substitute(r.rhs);
  for (const auto& [idx, q] : r.lhs) x.add_scaled(table.value(idx), q);
  return reduce(x);
}

int basis_dimension(int w, std::size_t new_constants) {
  if (w == 3) return 1;
  return static_cast<int>(new_constants) + (w % 2 == 0 ? 1 : 2);
}

}  // namespace polyint
