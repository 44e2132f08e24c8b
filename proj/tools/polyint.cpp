#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyint/error.hpp"
#include "polyint/io.hpp"
#include "polyint/pipeline.hpp"

using namespace polyint;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kInconsistent = 3, kVerification = 4, kResource = 5 };

struct RunConfig {
  int max_weight = 8;
  int digits = 40;
  std::vector<std::string> methods;
  bool strict_verify = false;
  bool no_verify = false;
  bool no_mi1 = false;
  bool no_mi2 = false;
  std::string pivot = "preferred";
  std::string format = "text";
  std::string table_file;
  std::string output_file;
  bool quiet = false;
};

PivotPolicy parse_pivot(const std::string& s) {
  if (s == "preferred") return PivotPolicy::Preferred;
  if (s == "lex-latest") return PivotPolicy::LexLatest;
  if (s == "lex-earliest") return PivotPolicy::LexEarliest;
  throw ParseError("unknown pivot policy '" + s + "'");
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions o;
  o.pivot = parse_pivot(cfg.pivot);
  o.generators.mi1 = !cfg.no_mi1;
  o.generators.mi2 = !cfg.no_mi2;
  for (const auto& m : cfg.methods) o.methods.push_back(parse_method(m));
  return o;
}

PipelineOptions pipeline_options(const RunConfig& cfg, int max_weight) {
  PipelineOptions p;
  p.max_weight = max_weight;
  p.digits = cfg.digits;
  p.solve = solve_options(cfg);
  p.verify = cfg.no_verify ? VerifyMode::None : cfg.strict_verify ? VerifyMode::Strict : VerifyMode::Sampled;
  return p;
}

Logger logger(const RunConfig& cfg) {
  if (cfg.quiet) return {};
  return [](const std::string& s) { std::cerr << s << '\n'; };
}

ClosedFormTable load_table(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_table(in, format);
}

// Table from --table, or solved (without numeric checks) through weight w.
ClosedFormTable table_through(const RunConfig& cfg, int w, bool verify) {
  const Format f = parse_format(cfg.format);
  if (!cfg.table_file.empty()) {
    ClosedFormTable t = load_table(cfg.table_file, f);
    if (t.max_weight() >= w) return t;
    auto opts = pipeline_options(cfg, w);
    if (!verify) opts.verify = VerifyMode::None;
    return run_pipeline(opts, std::move(t), logger(cfg)).table;
  }
  if (w <= 2) return ClosedFormTable::seed();
  auto opts = pipeline_options(cfg, w);
  if (!verify) opts.verify = VerifyMode::None;
  return run_pipeline(opts, ClosedFormTable::seed(), logger(cfg)).table;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_file);
  if (!out) throw ParseError("cannot write " + cfg.output_file);
  out << text;
}

void check_weight(int w, int lo = 1) {
  if (w < lo || w > 40) throw PreconditionError("weight out of range");
}

int cmd_count(int w) {
  check_weight(w);
  std::cout << convergent_count(w) << '\n';
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, int w) {
  check_weight(w);
  const auto all = enumerate_convergent(w);
  if (parse_format(cfg.format) == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& i : all) j.push_back(format_name(i));
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& i : all) std::cout << format_name(i) << '\n';
  }
  return kOk;
}

int cmd_relations(const RunConfig& cfg, int w, const std::string& method, bool check) {
  check_weight(w, 2);
  const auto opts = solve_options(cfg);
  std::vector<Method> methods;
  if (method.empty())
    methods.assign(std::begin(kMethods), std::end(kMethods));
  else
    methods.push_back(parse_method(method));
  std::optional<NumericEvaluator> ev;
  if (check) ev.emplace(cfg.digits);
  bool failed = false;
  nlohmann::json j = nlohmann::json::array();
  for (Method m : methods) {
    for (const auto& r : generate(w, m, opts.generators)) {
      std::string line = to_string(r);
      std::string residual;
      if (ev) {
        residual = ev->to_decimal(relation_residual(r, *ev), 3);
        if (!verify_relation(r, *ev)) failed = true;
      }
      if (parse_format(cfg.format) == Format::Json) {
        nlohmann::json e{{"method", method_name(r.method)}, {"origin", r.origin}, {"relation", line}};
        if (ev) e["residual"] = residual;
        j.push_back(std::move(e));
      } else {
        std::cout << line;
        if (ev) std::cout << "    # " << r.origin << " residual " << residual;
        std::cout << '\n';
      }
    }
  }
  if (parse_format(cfg.format) == Format::Json) std::cout << j.dump(1) << '\n';
  return failed ? kVerification : kOk;
}

int cmd_solve(const RunConfig& cfg) {
  check_weight(cfg.max_weight, 2);
  const Format f = parse_format(cfg.format);
  ClosedFormTable start = cfg.table_file.empty() ? ClosedFormTable::seed() : load_table(cfg.table_file, f);
  const auto result = run_pipeline(pipeline_options(cfg, cfg.max_weight), std::move(start), logger(cfg));
  for (const auto& w : result.weights) {
    write_rank_report(std::cout, w.solution);
    std::cout << "  new:";
    for (const auto& [s, idx] : w.solution.new_constants) std::cout << ' ' << to_string(s) << '=' << format_name(idx);
    std::cout << '\n';
  }
  if (!cfg.output_file.empty()) {
    std::ostringstream os;
    write_table(os, result.table, f);
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_closed_form(const RunConfig& cfg, const std::string& name) {
  const IntegralIndex idx = parse_name(name);
  const ClosedFormTable t = table_through(cfg, idx.weight(), false);
  const ConstExpr& v = t.value(idx);
  if (parse_format(cfg.format) == Format::Json) {
    nlohmann::json j{{"integral", name}, {"value", to_string(v)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_string(v) << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, int w) {
  check_weight(w, 1);
  const ClosedFormTable t = table_through(cfg, w, false);
  NumericEvaluator ev(cfg.digits);
  bind_constants(t, ev);
  bool failed = false;
  for (const auto& idx : enumerate_convergent(w)) {
    const auto c = ev.check_closed_form(idx, t.value(idx));
    std::cout << format_name(idx) << "  " << ev.to_decimal(c.numeric, cfg.digits) << "  residual "
              << ev.to_decimal(abs(c.diff), 3) << (c.ok ? "" : "  FAIL") << '\n';
    failed = failed || !c.ok;
  }
  std::size_t bad = 0;
  std::size_t total = 0;
  if (w >= 2) {
    const auto opts = solve_options(cfg);
    for (Method m : kMethods) {
      for (const auto& r : generate(w, m, opts.generators)) {
        ++total;
        if (!verify_relation(r, ev)) {
          ++bad;
          std::cout << "relation " << r.origin << " FAIL\n";
        }
      }
    }
  }
  std::cout << "relations: " << total - bad << "/" << total << " verified at " << cfg.digits << " digits\n";
  return failed || bad ? kVerification : kOk;
}

int cmd_table1(const RunConfig& cfg) {
  check_weight(cfg.max_weight, 3);
  const auto opts = solve_options(cfg);
  nlohmann::json j = nlohmann::json::array();
  if (parse_format(cfg.format) == Format::Text) std::cout << "w   IBP FT GP SR CI MI 2F1 | Total\n";
  for (int w = 3; w <= cfg.max_weight; ++w) {
    const auto s = rank_weight(w, opts);
    if (parse_format(cfg.format) == Format::Json) {
      nlohmann::json ranks = nlohmann::json::array();
      for (const auto& r : s.ranks) ranks.push_back(r.cumulative_rank);
      j.push_back({{"weight", w}, {"ranks", ranks}, {"total", s.integrals}});
    } else {
      std::cout << w << (w < 10 ? "   " : "  ");
      for (std::size_t i = 0; i < s.ranks.size(); ++i) std::cout << (i ? " " : "") << s.ranks[i].cumulative_rank;
      std::cout << " | " << s.integrals << '\n';
    }
  }
  if (parse_format(cfg.format) == Format::Json) std::cout << j.dump(1) << '\n';
  return kOk;
}

int cmd_table2(const RunConfig& cfg) {
  check_weight(cfg.max_weight, 3);
  const auto opts = solve_options(cfg);
  std::vector<int> dims;
  for (int w = 3; w <= cfg.max_weight; ++w) {
    const auto s = rank_weight(w, opts);
    dims.push_back(basis_dimension(w, s.integrals - s.rank));
  }
  if (parse_format(cfg.format) == Format::Json) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < dims.size(); ++i) j[std::to_string(i + 3)] = dims[i];
    std::cout << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) std::cout << (i ? " " : "") << dims[i];
    std::cout << '\n';
  }
  return kOk;
}

int cmd_export(const RunConfig& cfg, const std::string& style, int from) {
  if (style == "residual") {
    check_weight(cfg.max_weight, 3);
    SolveOptions opts = solve_options(cfg);
    if (cfg.pivot == "preferred") opts.pivot = PivotPolicy::LexEarliest;
    std::ostringstream os;
    for (int w = std::max(from, 3); w <= cfg.max_weight; ++w) {
      os << "# weight " << w << '\n';
      for (const auto& line : residual_lines(w, opts)) os << line << '\n';
    }
    emit(cfg, os.str());
    return kOk;
  }
  if (style != "table") throw ParseError("unknown export style '" + style + "'");
  const ClosedFormTable t = table_through(cfg, cfg.max_weight, true);
  std::ostringstream os;
  write_table(os, t, parse_format(cfg.format));
  emit(cfg, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, relate and evaluate polylogarithmic integrals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI or TOML file with run settings");
  RunConfig cfg;
  app.add_option("--max-weight,-w", cfg.max_weight, "Highest weight to process")->envname("POLYINT_MAX_WEIGHT");
  app.add_option("--digits,-d", cfg.digits, "Target decimal digits for numeric checks")
      ->envname("POLYINT_DIGITS")
      ->check(CLI::Range(20, 2000));
  app.add_option("--methods", cfg.methods, "Relation families to use (IBP FT GP SR CI MI 2F1)")->delimiter(',');
  app.add_flag("--strict-verify", cfg.strict_verify, "Verify every relation numerically")->envname("POLYINT_STRICT");
  app.add_flag("--no-verify", cfg.no_verify, "Skip numeric verification");
  app.add_flag("--no-mi1", cfg.no_mi1, "Drop the even-power double integral relation");
  app.add_flag("--no-mi2", cfg.no_mi2, "Drop the mixed double integral relation");
  app.add_option("--pivot", cfg.pivot, "Pivot policy: preferred, lex-latest, lex-earliest")->envname("POLYINT_PIVOT");
  app.add_option("--format,-f", cfg.format, "Output format: text or json")->envname("POLYINT_FORMAT");
  app.add_option("--table", cfg.table_file, "Closed-form table to start from");
  app.add_option("--output,-o", cfg.output_file, "Write the table or export here");
  app.add_flag("--quiet,-q", cfg.quiet, "No progress messages");

  int weight = 0;
  std::string name;
  std::string method;
  std::string style = "table";
  int from = 3;
  bool check = false;

  auto* count = app.add_subcommand("count", "Number of convergent integrals of a weight");
  count->add_option("weight", weight)->required();
  auto* enumerate = app.add_subcommand("enumerate", "List the convergent integrals of a weight");
  enumerate->add_option("weight", weight)->required();
  auto* relations = app.add_subcommand("relations", "Print the generated relations of a weight");
  relations->add_option("weight", weight)->required();
  relations->add_option("--method,-m", method, "Only this family");
  relations->add_flag("--check", check, "Evaluate each relation numerically");
  auto* solve = app.add_subcommand("solve", "Solve all weights up to --max-weight");
  auto* closed = app.add_subcommand("closed-form", "Closed form of one integral, e.g. i2231");
  closed->add_option("name", name)->required();
  auto* verify = app.add_subcommand("verify", "Check the closed forms and relations of one weight numerically");
  verify->add_option("weight", weight)->required();
  auto* table1 = app.add_subcommand("table1", "Cumulative ranks per relation family");
  auto* table2 = app.add_subcommand("table2", "Upper bounds for the number of new constants per weight");
  auto* exp = app.add_subcommand("export", "Write the closed-form table or residual combinations");
  exp->add_option("--style", style, "table or residual");
  exp->add_option("--from", from, "First weight of a residual export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*count) return cmd_count(weight);
    if (*enumerate) return cmd_enumerate(cfg, weight);
    if (*relations) return cmd_relations(cfg, weight, method, check);
    if (*solve) return cmd_solve(cfg);
    if (*closed) return cmd_closed_form(cfg, name);
    if (*verify) return cmd_verify(cfg, weight);
    if (*table1) return cmd_table1(cfg);
    if (*table2) return cmd_table2(cfg);
    if (*exp) return cmd_export(cfg, style, from);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const InconsistentSystem& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
