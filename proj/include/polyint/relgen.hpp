#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyint/index.hpp"
#include "polyint/logexpand.hpp"
#include "polyint/numverify.hpp"
#include "polyint/rational.hpp"

namespace polyint {


enum class Method : std::uint8_t { IBP, FT, GP, SR, CI, MI, HYP2F1, Seed };

// The seven generator families in the order the solver consumes them.
inline constexpr Method kMethods[] = {Method::IBP, Method::FT, Method::GP, Method::SR,
                                      Method::CI,  Method::MI, Method::HYP2F1};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

// sum_I lhs[I] * I = rhs, where lhs holds only integrals of the relation's
// weight and rhs is a combination of constants and lower-weight integrals.
struct Relation {
  std::map<IntegralIndex, Rational> lhs;
  LinearForm rhs;
  Method method = Method::IBP;
  int weight = 0;
  std::string origin;
};

// Splits a form that equals zero into a relation. Returns nullopt when no
// weight-w integral survives. Throws InternalError on inhomogeneous input or
// non-rational coefficients of weight-w integrals.
std::optional<Relation> make_relation(const LinearForm& zero_form, int weight, Method method, std::string origin);

struct GeneratorOptions {
  bool mi1 = true;
  bool mi2 = true;
};

std::vector<Relation> gen_ibp(int w);
std::vector<Relation> gen_fractional(int w);
std::vector<Relation> gen_explicit(int w);
std::vector<Relation> gen_square(int w);
std::vector<Relation> gen_contour(int w);
std::vector<Relation> gen_multiint(int w, const GeneratorOptions& opts = {});
std::vector<Relation> gen_2f1(int w);

std::vector<Relation> generate(int w, Method m, const GeneratorOptions& opts = {});

// Left side minus right side, evaluated numerically.
Real relation_residual(const Relation& r, NumericEvaluator& ev);
bool verify_relation(const Relation& r, NumericEvaluator& ev);

// "METHOD | lhs = rhs" with integrals as i-names and constants in the
// canonical constant syntax.
std::string to_string(const Relation& r);
std::string to_string(const LinearForm& f);

}  // namespace polyint
