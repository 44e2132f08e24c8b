#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyint/numverify.hpp"
#include "polyint/solver.hpp"

namespace polyint {

enum class VerifyMode : std::uint8_t {
  None,
  // every relation through strict_through, a fixed-seed sample above
  Sampled,
  Strict,
};

struct PipelineOptions {
  int max_weight = 8;
  int digits = 40;
  SolveOptions solve;
  VerifyMode verify = VerifyMode::Sampled;
  int strict_through = 6;
  double sample_fraction = 0.25;
  std::uint32_t sample_seed = 20240607;
};

struct WeightReport {
  WeightSolution solution;
  std::size_t relations = 0;
  std::size_t relations_verified = 0;
  std::size_t closed_forms_verified = 0;
  std::size_t symbolic_checked = 0;
};

struct PipelineResult {
  ClosedFormTable table;
  std::vector<WeightReport> weights;
};

using Logger = std::function<void(const std::string&)>;

// Relations of weight w chosen for numeric verification: all of them, or a
// deterministic sample.
std::vector<std::size_t> verification_sample(std::size_t count, int w, const PipelineOptions& opts);

// Solves weights start.max_weight()+1 .. max_weight, verifying as requested.
// Throws VerificationFailure on a failed numeric or symbolic check.
PipelineResult run_pipeline(const PipelineOptions& opts, ClosedFormTable start = ClosedFormTable::seed(),
                            const Logger& log = {});

// Numeric check of every closed form of weight w in the table.
std::size_t verify_closed_forms(const ClosedFormTable& table, int w, NumericEvaluator& ev);

void bind_constants(const ClosedFormTable& table, NumericEvaluator& ev);

}  // namespace polyint
