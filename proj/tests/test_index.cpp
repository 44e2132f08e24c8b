#include <doctest.h>

#include <set>

#include "polyint/error.hpp"
#include "polyint/index.hpp"

using namespace polyint;

TEST_SUITE("index") {
  TEST_CASE("weight") {
    CHECK(make_index(0, 1, 0, 0).weight() == 2);
    CHECK(make_index(0, 0, 0, 2).weight() == 1);
    CHECK(make_index(2, 2, 3, 1).weight() == 8);
  }

  TEST_CASE("convergence predicate") {
    CHECK(make_index(0, 1, 0, 0).convergent());
    CHECK_FALSE(make_index(3, 0, 2, 0).convergent());
    CHECK_FALSE(make_index(0, 4, 0, 1).convergent());
    CHECK(make_index(0, 4, 1, 1).convergent());
    CHECK(make_index(0, 0, 0, 2).convergent());
  }

  TEST_CASE("counts match brute force for w = 1..20") {
    for (int w = 1; w <= 20; ++w) {
      std::size_t brute = 0;
      for (int a = 0; a < w; ++a)
        for (int b = 0; a + b < w; ++b)
          for (int d = 0; d < 3; ++d) {
            const int c = w - 1 - a - b;
            const bool ok = d == 0 ? b >= 1 : d == 1 ? (a >= 1 || c >= 1) : true;
            brute += ok;
          }
      const auto all = enumerate_convergent(w);
      CHECK(all.size() == brute);
      CHECK(all.size() == static_cast<std::size_t>((3 * w * w + w - 2) / 2));
      CHECK(convergent_count(w) == all.size());
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& i : all) {
        CHECK(i.convergent());
        CHECK(i.weight() == w);
      }
    }
  }

  TEST_CASE("weight 2 is the classical list of six") {
    const auto all = enumerate_convergent(2);
    const std::set<IntegralIndex> got(all.begin(), all.end());
    const std::set<IntegralIndex> want{make_index(0, 1, 0, 0), make_index(0, 0, 1, 1), make_index(1, 0, 0, 1),
                                       make_index(0, 0, 1, 2), make_index(0, 1, 0, 2), make_index(1, 0, 0, 2)};
    CHECK(got == want);
    CHECK(enumerate_convergent(1) == std::vector<IntegralIndex>{make_index(0, 0, 0, 2)});
  }

  TEST_CASE("names") {
    CHECK(format_name(make_index(4, 4, 5, 2)) == "i4452");
    CHECK(format_name(make_index(10, 2, 1, 2)) == "iA212");
    CHECK(parse_name("i0100") == make_index(0, 1, 0, 0));
    CHECK(parse_name("iC102") == make_index(12, 1, 0, 2));
    for (int w = 1; w <= 20; ++w)
      for (const auto& i : enumerate_convergent(w)) REQUIRE(parse_name(format_name(i)) == i);
  }

  TEST_CASE("malformed names are rejected") {
    for (const char* bad : {"", "i", "i010", "i01000", "j0100", "i0103", "i01-0", "i0001", "i0100 "})
      CHECK_THROWS_AS(parse_name(bad), ParseError);
  }
}
