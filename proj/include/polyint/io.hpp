#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyint/solver.hpp"

namespace polyint {

enum class Format : std::uint8_t { Text, Json };

Format parse_format(std::string_view name);

// Text: "# weights <lo>..<hi>", one "Name := iXXXX" line per named constant,
// then one "iXXXX = expr" line per integral in enumeration order.
// Json: {"constants": [{"name", "integral"}], "values": {"iXXXX": "expr"}}.
void write_table(std::ostream& os, const ClosedFormTable& table, Format format);
ClosedFormTable read_table(std::istream& is, Format format);

// Integral i expressed through the other integrals of its weight modulo all
// lower-weight integrals and constants, one line per non-basis integral:
//   i4452, -((3 i8322)/7) - (3 i8412)/14 - i9222/7 + ...
std::vector<std::string> residual_lines(int w, const SolveOptions& opts);

// Coefficient-times-name in the residual notation.
std::string residual_combination(const std::vector<std::pair<IntegralIndex, Rational>>& terms);

void write_rank_report(std::ostream& os, const WeightSolution& s);

}  // namespace polyint
