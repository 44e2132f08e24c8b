#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyint {

// Denominator of a polylogarithm integral; the numeric tag is the last digit
// of the integral's name.
enum class Denominator : std::uint8_t { OneMinusX = 0, X = 1, OnePlusX = 2 };

// The integral of log^a(1-x) log^b(x) log^c(1+x) / denominator over [0,1].
// Divergent combinations are representable; convergent() tells them apart.
struct IntegralIndex {
  int a = 0;
  int b = 0;
  int c = 0;
  Denominator d = Denominator::OnePlusX;

  constexpr int weight() const { return 1 + a + b + c; }

  constexpr bool convergent() const {
    if (a < 0 || b < 0 || c < 0) return false;
    switch (d) {
      case Denominator::OneMinusX: return b >= 1;
      case Denominator::X: return a >= 1 || c >= 1;
      case Denominator::OnePlusX: return true;
    }
    return false;
  }

  friend constexpr auto operator<=>(const IntegralIndex&, const IntegralIndex&) = default;
};

constexpr IntegralIndex make_index(int a, int b, int c, int d) {
  return IntegralIndex{a, b, c, static_cast<Denominator>(d)};
}

inline int weight(const IntegralIndex& idx) { return idx.weight(); }

// Number of convergent integrals of weight w: (3w^2 + w - 2) / 2.
std::size_t convergent_count(int w);

// All convergent integrals of weight w, lexicographic on (a, b, c, d).
std::vector<IntegralIndex> enumerate_convergent(int w);

// "i" followed by a, b, c, d as base-36 digits (0-9 then A-Z).
std::string format_name(const IntegralIndex& idx);

// Inverse of format_name; rejects malformed text and divergent integrals.
IntegralIndex parse_name(std::string_view name);

// x^(-1/2) log^n(x) log^m(1-x) / (1-x) over [0,1], n >= 1. Produced by the
// square-replacement substitution and evaluated through the beta function
// at (1/2, 0).
struct AuxHalfIntegral {
  int n = 1;
  int m = 0;

  constexpr int weight() const { return 1 + n + m; }
  friend constexpr auto operator<=>(const AuxHalfIntegral&, const AuxHalfIntegral&) = default;
};

}  // namespace polyint
