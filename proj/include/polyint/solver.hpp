#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polyint/constalg.hpp"
#include "polyint/index.hpp"
#include "polyint/relgen.hpp"

namespace polyint {

// Closed forms of every integral solved so far, and the definitions of the
// named constants that appear in them.
class ClosedFormTable {
 public:
  // Known values through max_weight: log 2 for i0002, the only convergent
  // integral of weight 1, and the six classical weight-2 evaluations.
  static ClosedFormTable seed(int max_weight = 2);

  bool contains(const IntegralIndex& idx) const { return values_.contains(idx); }
  const ConstExpr& value(const IntegralIndex& idx) const;
  void set(const IntegralIndex& idx, ConstExpr value);
  void define(const Symbol& named, const IntegralIndex& idx);

  const std::map<IntegralIndex, ConstExpr>& values() const { return values_; }
  const std::map<Symbol, IntegralIndex>& named() const { return named_; }
  int max_weight() const;

  // Replaces every integral of the form by its closed form.
  ConstExpr substitute(const LinearForm& f) const;

  friend bool operator==(const ClosedFormTable&, const ClosedFormTable&) = default;

 private:
  std::map<IntegralIndex, ConstExpr> values_;
  std::map<Symbol, IntegralIndex> named_;
};

enum class PivotPolicy : std::uint8_t {
  // lexicographically latest column first, keeping the customary defining
  // integrals of the new constants at weights 6-8 for last
  Preferred,
  LexLatest,
  LexEarliest,
};

struct SolveOptions {
  GeneratorOptions generators;
  PivotPolicy pivot = PivotPolicy::Preferred;
  // Methods to use; empty means all of kMethods.
  std::vector<Method> methods;
};

struct MethodRank {
  Method method;
  std::size_t relations = 0;
  std::size_t cumulative_rank = 0;
};

struct WeightSolution {
  int weight = 0;
  std::size_t integrals = 0;
  std::vector<MethodRank> ranks;
  std::size_t rank = 0;
  std::vector<std::pair<Symbol, IntegralIndex>> new_constants;
  std::map<IntegralIndex, ConstExpr> values;
};

// The defining integrals of the customary new constants at weight w.
std::vector<IntegralIndex> preferred_constants(int w);

// Ranks only; needs no closed forms of lower weights.
WeightSolution rank_weight(int w, const SolveOptions& opts = {});

// Solves weight w given closed forms for all lower weights; adds the new
// closed forms and constants to the table. Throws InconsistentSystem when a
// relation reduces to 0 = nonzero constant.
WeightSolution solve_weight(int w, ClosedFormTable& table, const SolveOptions& opts = {});

// A weight-w integral as a rational combination of the free integrals of
// its weight, modulo lower-weight integrals and constants.
struct ModularReduction {
  IntegralIndex integral;
  std::vector<std::pair<IntegralIndex, Rational>> combination;
};

// One entry per integral that is not free under the pivot policy.
std::vector<ModularReduction> reduce_modulo_lower(int w, const SolveOptions& opts = {});

// Sum lhs - rhs of a relation after replacing every integral by its closed
// form; zero for a correct table.
ConstExpr symbolic_residual(const Relation& r, const ClosedFormTable& table);

// Number of new constants required at weight w; Table 2 dimension count.
int basis_dimension(int w, std::size_t new_constants);

}  // namespace polyint
