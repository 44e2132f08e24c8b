#include <doctest.h>

#include <sstream>

#include "polyint/error.hpp"
#include "polyint/io.hpp"

using namespace polyint;

namespace {

const ClosedFormTable& table7() {
  static const ClosedFormTable t = [] {
    ClosedFormTable t = ClosedFormTable::seed();
    for (int w = 3; w <= 7; ++w) solve_weight(w, t);
    return t;
  }();
  return t;
}

ClosedFormTable round_trip(const ClosedFormTable& t, Format f) {
  std::stringstream ss;
  write_table(ss, t, f);
  return read_table(ss, f);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("format names") {
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("json") == Format::Json);
    CHECK_THROWS_AS(parse_format("xml"), ParseError);
  }

  TEST_CASE("tables round trip") {
    CHECK(round_trip(table7(), Format::Text) == table7());
    CHECK(round_trip(table7(), Format::Json) == table7());
    CHECK(round_trip(ClosedFormTable::seed(), Format::Text) == ClosedFormTable::seed());
  }

  TEST_CASE("text layout") {
    std::stringstream ss;
    write_table(ss, table7(), Format::Text);
    const std::string s = ss.str();
    CHECK(s.rfind("# weights 1..7\n", 0) == 0);
    CHECK(s.find("F1 := i0412\n") != std::string::npos);
    CHECK(s.find("i0100 = -1/6*Pi^2\n") != std::string::npos);
  }

  TEST_CASE("malformed tables") {
    const char* bad[] = {
        "i0100 -1/6*Pi^2\n",
        "i0100 = -1/6*Pi^\n",
        "i0100 = Pi^3\n",
        "i0101 = 0\n",
        "Log2 := i0412\n",
        "F1 := i04\n",
    };
    for (const char* text : bad) {
      INFO(text);
      std::istringstream is(text);
      CHECK_THROWS_AS(read_table(is, Format::Text), ParseError);
    }
    std::istringstream js("{\"values\": [1, 2");
    CHECK_THROWS_AS(read_table(js, Format::Json), ParseError);
    std::istringstream js2(R"({"max_weight": 2, "constants": [], "values": {"i0100": "Zeta[3]"}})");
    CHECK_THROWS_AS(read_table(js2, Format::Json), ParseError);
  }

  TEST_CASE("residual notation") {
    using T = std::vector<std::pair<IntegralIndex, Rational>>;
    CHECK(residual_combination(T{{parse_name("i8322"), Rational(-3, 7)},
                                 {parse_name("i8412"), Rational(-3, 14)},
                                 {parse_name("i9222"), Rational(-1, 7)}}) ==
          "-((3 i8322)/7) - (3 i8412)/14 - i9222/7");
    CHECK(residual_combination(T{{parse_name("i0412"), 1}, {parse_name("i0422"), -2}}) == "i0412 - 2 i0422");
    CHECK(residual_combination(T{{parse_name("i0412"), Rational(5, 2)}}) == "(5 i0412)/2");
    CHECK(residual_combination(T{}) == "0");
  }

  TEST_CASE("residual lines at weight 6") {
    const auto lines = residual_lines(6, {.pivot = PivotPolicy::LexEarliest});
    CHECK(lines.size() == 55);
    for (const auto& l : lines) CHECK(l.find(", ") != std::string::npos);
  }

  TEST_CASE("rank report line") {
    std::ostringstream os;
    write_rank_report(os, rank_weight(6));
    CHECK(os.str() == "w=6: 21 38 45 53 55 55 55 | 56");
  }
}
