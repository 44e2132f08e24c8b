// One line per acceptance criterion; exit status 0 only when every gating
// criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "polyint/io.hpp"
#include "polyint/pipeline.hpp"

using namespace polyint;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, bool gating, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok && gating) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << (gating ? "" : " (extended, not gating)") << ": "
            << title << " [" << timing << "]";
  if (!o.detail.empty()) std::cout << " - " << o.detail;
  std::cout << std::endl;
}

std::vector<Relation> all_relations(int w, const GeneratorOptions& g = {}) {
  std::vector<Relation> out;
  for (Method m : kMethods) {
    if (w < 3 && m == Method::HYP2F1) continue;
    auto rs = generate(w, m, g);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

const Real kTolerance("1e-30");

bool small(const Real& x) { return boost::multiprecision::abs(x) < kTolerance; }

// Numeric value minus closed form, at 40 digits.
Real closed_form_residual(NumericEvaluator& ev, const IntegralIndex& idx, const ConstExpr& value) {
  return ev.check_closed_form(idx, value).diff;
}

std::string export_text(const ClosedFormTable& t) {
  std::ostringstream os;
  write_table(os, t, Format::Text);
  return os.str();
}

std::string export_json(const ClosedFormTable& t) {
  std::ostringstream os;
  write_table(os, t, Format::Json);
  return os.str();
}

}  // namespace

int main() {
  NumericEvaluator ev(40);
  PrecisionContext pc(ev.working());

  PipelineOptions opts;
  opts.max_weight = 8;
  opts.verify = VerifyMode::None;
  const PipelineResult run = run_pipeline(opts);
  const ClosedFormTable& table = run.table;
  bind_constants(table, ev);

  report(1, "enumeration counts for w = 1..20 and the six weight-2 integrals", true, [] {
    const auto t0 = std::chrono::steady_clock::now();
    for (int w = 1; w <= 20; ++w) {
      const auto v = enumerate_convergent(w);
      const std::set<IntegralIndex> distinct(v.begin(), v.end());
      if (v.size() != static_cast<std::size_t>((3 * w * w + w - 2) / 2) || distinct.size() != v.size())
        return Outcome{false, "w=" + std::to_string(w)};
    }
    std::set<IntegralIndex> two;
    for (const auto& idx : enumerate_convergent(2)) two.insert(idx);
    std::set<IntegralIndex> expected;
    for (const auto& [name, value] : golden::kWeight2) expected.insert(parse_name(name));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return Outcome{two == expected && secs < 1.0, ""};
  });

  report(2, "weight-2 seeds verify by quadrature below 1e-30", true, [&] {
    Real worst = 0;
    for (const auto& [name, value] : golden::kWeight2) {
      const Real r = abs(closed_form_residual(ev, parse_name(name), parse_const_expr(value)));
      if (r > worst) worst = r;
    }
    return Outcome{small(worst), "max residual " + ev.to_decimal(worst, 3)};
  });

  report(3, "weights 3-5 solved without new constants; printed examples exact", true, [&] {
    std::size_t named = 0;
    for (const auto& rep : run.weights)
      if (rep.solution.weight <= 5) named += rep.solution.new_constants.size() + (rep.solution.integrals - rep.solution.rank);
    bool ok = named == 0;
    for (int w = 3; w <= 5; ++w)
      for (const auto& idx : enumerate_convergent(w)) ok = ok && table.contains(idx);
    Real worst = 0;
    for (const char* name : {"i1012", "i1111", "i1031"}) {
      for (const auto& [n, v] : golden::kClosedForms) {
        if (std::string(n) != name) continue;
        const ConstExpr want = reduce(parse_const_expr(v));
        ok = ok && table.value(parse_name(n)) == want;
        const Real r = abs(closed_form_residual(ev, parse_name(n), want));
        if (r > worst) worst = r;
      }
    }
    return Outcome{ok && small(worst), "max residual " + ev.to_decimal(worst, 3)};
  });

  auto rank_rows = [](int lo, int hi) {
    std::string bad;
    for (const auto& row : golden::kRanks) {
      if (row.w < lo || row.w > hi) continue;
      const WeightSolution s = rank_weight(row.w);
      bool same = s.integrals == static_cast<std::size_t>(row.total) && s.ranks.size() == 7;
      for (int k = 0; same && k < 7; ++k) same = s.ranks[k].cumulative_rank == static_cast<std::size_t>(row.ranks[k]);
      if (!same) bad += " w=" + std::to_string(row.w);
    }
    return Outcome{bad.empty(), bad.empty() ? "" : "mismatch at" + bad};
  };
  report(4, "Table 1 rows 3-8", true, [&] { return rank_rows(3, 8); });
  report(4, "Table 1 rows 9-10", false, [&] { return rank_rows(9, 10); });

  report(5, "new constants 1, 2, 3 at weights 6, 7, 8; F1 to 15 digits", true, [&] {
    std::string names;
    bool ok = true;
    const std::size_t want[] = {1, 2, 3};
    for (const auto& rep : run.weights) {
      if (rep.solution.weight < 6) continue;
      ok = ok && rep.solution.new_constants.size() == want[rep.solution.weight - 6];
      for (const auto& [s, idx] : rep.solution.new_constants) names += " " + to_string(s) + "=" + format_name(idx);
    }
    const Real f1 = ev.eval(parse_symbol("F1"));
    ok = ok && abs(f1 - Real("0.633579571034807")) < Real("5e-16");
    return Outcome{ok, "F1 = " + ev.to_decimal(f1, 16) + ";" + names};
  });

  report(6, "weight-8 i2231 evaluation, also without the second double integral relation", true, [&] {
    const ConstExpr want = reduce(parse_const_expr(golden::kClosedForms[8].second));
    bool ok = std::string(golden::kClosedForms[8].first) == "i2231" && table.value(parse_name("i2231")) == want;
    const Real r = abs(closed_form_residual(ev, parse_name("i2231"), want));
    PipelineOptions no_mi2 = opts;
    no_mi2.solve.generators.mi2 = false;
    const PipelineResult alt = run_pipeline(no_mi2);
    const bool alt_ok = alt.table.value(parse_name("i2231")) == want;
    return Outcome{ok && alt_ok && small(r),
                   "residual " + ev.to_decimal(r, 3) + (alt_ok ? ", same without MI2" : ", differs without MI2")};
  });

  auto dims = [](int lo, int hi) {
    std::string got;
    bool ok = true;
    for (int w = lo; w <= hi; ++w) {
      const WeightSolution s = rank_weight(w);
      const int d = basis_dimension(w, s.integrals - s.rank);
      got += (got.empty() ? "" : " ") + std::to_string(d);
      ok = ok && d == golden::kDimensions[w - 3];
    }
    return Outcome{ok, got};
  };
  report(7, "Table 2 for w = 3..8", true, [&] { return dims(3, 8); });
  report(7, "Table 2 for w = 9..10", false, [&] { return dims(9, 10); });

  report(8, "relations verify numerically (all for w <= 6, 25% sample at 7-8) and symbolically", true, [&] {
    PipelineOptions sampled = opts;
    sampled.verify = VerifyMode::Sampled;
    std::size_t checked = 0, total = 0, symbolic = 0;
    Real worst = 0;
    std::string first_bad;
    for (int w = 2; w <= 8; ++w) {
      const auto rels = all_relations(w);
      total += rels.size();
      for (std::size_t i : verification_sample(rels.size(), w, sampled)) {
        const Real r = abs(relation_residual(rels[i], ev));
        if (r > worst) worst = r;
        if (!small(r) && first_bad.empty()) first_bad = rels[i].origin;
        ++checked;
      }
      for (const auto& r : rels) {
        if (!symbolic_residual(r, table).is_zero() && first_bad.empty()) first_bad = r.origin + " (symbolic)";
        ++symbolic;
      }
    }
    return Outcome{first_bad.empty() && small(worst),
                   std::to_string(checked) + "/" + std::to_string(total) + " numeric, " + std::to_string(symbolic) +
                       " symbolic, max residual " + ev.to_decimal(worst, 3) +
                       (first_bad.empty() ? "" : ", first failure " + first_bad)};
  });

  report(9, "conjectured family members verify numerically; n = 0 is -pi^4/240", true, [&] {
    Real worst = 0;
    bool ok = true;
    for (const auto& [name, value] : golden::kConjectured) {
      const ConstExpr want = reduce(parse_const_expr(value));
      const Real r = abs(closed_form_residual(ev, parse_name(name), want));
      if (r > worst) worst = r;
      ok = ok && table.value(parse_name(name)) == want;
    }
    return Outcome{ok && small(worst), "max residual " + ev.to_decimal(worst, 3)};
  });

  report(10, "two runs through weight 8 export byte-identical tables", true, [&] {
    const PipelineResult again = run_pipeline(opts);
    const bool ok = export_text(again.table) == export_text(table) && export_json(again.table) == export_json(table);
    return Outcome{ok, std::to_string(export_text(table).size()) + " bytes"};
  });

  return failures == 0 ? 0 : 1;
}
