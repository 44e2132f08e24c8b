#include "polyint/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "polyint/error.hpp"

namespace polyint {

std::vector<std::size_t> verification_sample(std::size_t count, int w, const PipelineOptions& opts) {
  std::vector<std::size_t> all(count);
  std::iota(all.begin(), all.end(), 0);
  if (opts.verify == VerifyMode::None) return {};
  if (opts.verify == VerifyMode::Strict || w <= opts.strict_through) return all;
  const auto take = static_cast<std::size_t>(std::ceil(opts.sample_fraction * static_cast<double>(count)));
  std::mt19937 rng(opts.sample_seed + static_cast<std::uint32_t>(w));
  // Fisher-Yates with an explicit engine draw per step
  for (std::size_t i = count; i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(all[i - 1], all[j]);
  }
  all.resize(std::min(take, count));
  std::sort(all.begin(), all.end());
  return all;
}

void bind_constants(const ClosedFormTable& table, NumericEvaluator& ev) {
  for (const auto& [s, idx] : table.named()) ev.bind(s, idx);
}

std::size_t verify_closed_forms(const ClosedFormTable& table, int w, NumericEvaluator& ev) {
  std::size_t n = 0;
  for (const auto& idx : enumerate_convergent(w)) {
    const auto c = ev.check_closed_form(idx, table.value(idx));
    if (!c.ok)
      throw VerificationFailure("closed form of " + format_name(idx) + " is off by " + ev.to_decimal(c.diff, 6));
    ++n;
  }
  return n;
}

PipelineResult run_pipeline(const PipelineOptions& opts, ClosedFormTable start, const Logger& log) {
  if (opts.max_weight < 2) throw PreconditionError("max weight must be at least 2");
  PipelineResult result{std::move(start), {}};
  NumericEvaluator ev(opts.digits);
  bind_constants(result.table, ev);
  for (int w = result.table.max_weight() + 1; w <= opts.max_weight; ++w) {
    WeightReport rep;
    rep.solution = solve_weight(w, result.table, opts.solve);
    bind_constants(result.table, ev);

    std::vector<Relation> rels;
    const std::vector<Method> methods =
        opts.solve.methods.empty() ? std::vector<Method>(std::begin(kMethods), std::end(kMethods)) : opts.solve.methods;
    for (Method m : methods) {
      auto r = generate(w, m, opts.solve.generators);
      std::move(r.begin(), r.end(), std::back_inserter(rels));
    }
    rep.relations = rels.size();
    for (const auto& r : rels) {
      if (!symbolic_residual(r, result.table).is_zero())
        throw VerificationFailure(r.origin + ": solved table does not satisfy the relation");
      ++rep.symbolic_checked;
    }
    if (opts.verify != VerifyMode::None) {
      for (std::size_t i : verification_sample(rels.size(), w, opts)) {
        if (!verify_relation(rels[i], ev))
          throw VerificationFailure(rels[i].origin + ": numeric residual " +
                                    ev.to_decimal(relation_residual(rels[i], ev), 6));
        ++rep.relations_verified;
      }
      rep.closed_forms_verified = verify_closed_forms(result.table, w, ev);
    }
    if (log) {
      std::string msg = "weight " + std::to_string(w) + ": rank " + std::to_string(rep.solution.rank) + "/" +
                        std::to_string(rep.solution.integrals) + ", " +
                        std::to_string(rep.solution.new_constants.size()) + " new constants, " +
                        std::to_string(rep.relations_verified) + "/" + std::to_string(rep.relations) +
                        " relations verified numerically";
      log(msg);
    }
    result.weights.push_back(std::move(rep));
  }
  return result;
}

}  // namespace polyint
