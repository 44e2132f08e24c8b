#include <doctest.h>

#include <algorithm>

#include "golden.hpp"
#include "polyint/error.hpp"
#include "polyint/relgen.hpp"
#include "polyint/solver.hpp"

using namespace polyint;

namespace {

const Relation* find_origin(const std::vector<Relation>& rs, std::string_view origin) {
  for (const auto& r : rs)
    if (r.origin == origin) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("relgen") {
  TEST_CASE("method names round trip") {
    for (Method m : kMethods) CHECK(parse_method(method_name(m)) == m);
    CHECK(method_name(Method::HYP2F1) == "2F1");
    CHECK_THROWS_AS(parse_method("XYZ"), ParseError);
  }

  TEST_CASE("integration by parts example 2 i1100 = i2001") {
    const auto rs = gen_ibp(3);
    const Relation* r = find_origin(rs, "IBP[1;1,1,0]");
    REQUIRE(r);
    CHECK(r->lhs.size() == 2);
    CHECK(r->lhs.at(parse_name("i1100")) == 2);
    CHECK(r->lhs.at(parse_name("i2001")) == -1);
    CHECK(r->rhs.is_zero());
  }

  TEST_CASE("integration by parts boundary term") {
    const auto rs = gen_ibp(4);
    const Relation* r = find_origin(rs, "IBP[3;0,0,3]");
    REQUIRE(r);
    CHECK(r->lhs.at(parse_name("i0032")) == 4);
    CHECK(r->rhs == LinearForm(parse_const_expr("Log2^4")));
  }

  TEST_CASE("relations never mention divergent integrals and are homogeneous") {
    for (int w = 3; w <= 8; ++w) {
      for (Method m : kMethods) {
        for (const auto& r : generate(w, m)) {
          CHECK(r.weight == w);
          CHECK(r.method == m);
          CHECK_FALSE(r.lhs.empty());
          for (const auto& [i, q] : r.lhs) {
            CHECK(i.convergent());
            CHECK(i.weight() == w);
            CHECK(q != 0);
          }
          for (const auto& [i, c] : r.rhs.integrals()) {
            CHECK(i.convergent());
            CHECK(i.weight() < w);
            CHECK(c.homogeneous_weight() == w - i.weight());
          }
          if (!r.rhs.constant().is_zero()) CHECK(r.rhs.constant().homogeneous_weight() == w);
          CHECK_FALSE(r.rhs.constant().contains(Symbol::euler_gamma()));
        }
      }
    }
  }

  TEST_CASE("every relation through weight 5 holds numerically") {
    NumericEvaluator ev(40);
    for (int w = 2; w <= 5; ++w) {
      for (Method m : kMethods) {
        if (w < 3 && m == Method::HYP2F1) continue;
        for (const auto& r : generate(w, m)) {
          INFO(to_string(r));
          CHECK(verify_relation(r, ev));
        }
      }
    }
  }

  TEST_CASE("a corrupted relation fails verification") {
    NumericEvaluator ev(40);
    PrecisionContext pc(ev.working());
    auto rs = gen_fractional(4);
    REQUIRE_FALSE(rs.empty());
    Relation r = rs.front();
    r.lhs.begin()->second += Rational(1, 1000);
    CHECK_FALSE(verify_relation(r, ev));
    CHECK(abs(relation_residual(r, ev)) > Real("1e-5"));
  }

  TEST_CASE("fractional transformation of i0212") {
    const auto rs = gen_fractional(4);
    const Relation* r = find_origin(rs, "FT[i0212]");
    REQUIRE(r);
    // -i0212 - i0032 + 2 i1022 - i2012 = -log2 (i0022 - 2 i1012 + i2002)
    CHECK(r->lhs.size() == 4);
    CHECK(r->lhs.at(parse_name("i0212")) == -1);
    CHECK(r->lhs.at(parse_name("i0032")) == -1);
    CHECK(r->lhs.at(parse_name("i1022")) == 2);
    CHECK(r->lhs.at(parse_name("i2012")) == -1);
    LinearForm rhs;
    rhs.add(parse_name("i0022"), parse_const_expr("-Log2"));
    rhs.add(parse_name("i1012"), parse_const_expr("2*Log2"));
    rhs.add(parse_name("i2002"), parse_const_expr("-Log2"));
    CHECK(r->rhs == rhs);
  }

  TEST_CASE("explicit evaluations at weight 2 reproduce the classical values") {
    const auto rs = gen_explicit(2);
    ClosedFormTable t = ClosedFormTable::seed(2);
    for (const auto& r : rs) {
      REQUIRE(r.lhs.size() == 1);
      const auto& [idx, q] = *r.lhs.begin();
      CHECK(t.value(idx) * q == r.rhs.constant());
    }
  }

  TEST_CASE("square replacement at weight 4") {
    const auto rs = gen_square(4);
    const Relation* r = find_origin(rs, "SR[1;3,0]");
    REQUIRE(r);
    CHECK(r->lhs.at(parse_name("i0031")) == 1);
    CHECK(r->lhs.at(parse_name("i1021")) == 3);
    CHECK(r->lhs.at(parse_name("i2011")) == 3);
    CHECK(r->lhs.at(parse_name("i3001")) == Rational(1, 2));
    CHECK(r->rhs.is_zero());
  }

  TEST_CASE("double integral relations exist exactly where expected") {
    CHECK(gen_multiint(3).empty());
    CHECK(gen_multiint(4).size() == 2);
    CHECK(gen_multiint(5).size() == 1);
    CHECK(gen_multiint(6).size() == 2);
    CHECK(gen_multiint(6, {.mi1 = false, .mi2 = true}).size() == 1);
    CHECK(gen_multiint(6, {.mi1 = false, .mi2 = false}).empty());
  }

  TEST_CASE("LiHalf[4]*Zeta[3] enters weight 7 only through the double integral and 2F1 families") {
    ClosedFormTable t = ClosedFormTable::seed();
    for (int w = 3; w <= 6; ++w) solve_weight(w, t);
    const Monomial target = Monomial(Symbol::li_half(4)) * Monomial(Symbol::zeta(3));
    bool from_mi2 = false;
    for (Method m : kMethods) {
      for (const auto& r : generate(7, m)) {
        if (!t.substitute(r.rhs).terms().contains(target)) continue;
        INFO(r.origin);
        CHECK((m == Method::MI || m == Method::HYP2F1));
        from_mi2 = from_mi2 || r.origin == "MI2[4]";
      }
    }
    CHECK(from_mi2);
  }

  TEST_CASE("text rendering") {
    const auto rs = gen_ibp(3);
    const Relation* r = find_origin(rs, "IBP[1;1,1,0]");
    REQUIRE(r);
    CHECK(to_string(*r) == "IBP | 2*i1100 - i2001 = 0");
    const auto two = gen_ibp(2);
    const Relation* b = find_origin(two, "IBP[3;0,0,1]");
    REQUIRE(b);
    CHECK(to_string(*b) == "IBP | 2*i0012 = Log2^2");
    CHECK(to_string(LinearForm()) == "0");
  }

  TEST_CASE("make_relation rejects inhomogeneous forms") {
    LinearForm f(parse_name("i0100"));
    f.add_constant(parse_const_expr("Pi^3"));
    CHECK_THROWS_AS(make_relation(f, 2, Method::Seed, "bad"), InternalError);
    LinearForm g(parse_name("i0100"), parse_const_expr("Log2"));
    CHECK_THROWS_AS(make_relation(g, 2, Method::Seed, "bad"), InternalError);
    CHECK_FALSE(make_relation(LinearForm(parse_const_expr("Pi^2 - Pi^2")), 2, Method::Seed, "empty"));
  }

  TEST_CASE("per-family cumulative ranks match the published table through weight 10") {
    for (const auto& row : golden::kRanks) {
      if (row.w > 10) break;
      const WeightSolution s = rank_weight(row.w);
      INFO("w = " << row.w);
      CHECK(s.integrals == static_cast<std::size_t>(row.total));
      REQUIRE(s.ranks.size() == 7);
      for (int k = 0; k < 7; ++k) CHECK(s.ranks[k].cumulative_rank == static_cast<std::size_t>(row.ranks[k]));
    }
  }
}
