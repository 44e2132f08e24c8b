#include "polyint/index.hpp"

#include "polyint/error.hpp"

namespace polyint {

namespace {

char base36_digit(int v) {
  if (v < 0 || v > 35) throw PreconditionError("exponent " + std::to_string(v) + " has no base-36 digit");
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + (v - 10));
}

int base36_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  return -1;
}

}  // namespace

std::size_t convergent_count(int w) {
  if (w < 1) throw PreconditionError("weight must be >= 1");
  return static_cast<std::size_t>((3 * w * w + w - 2) / 2);
}

std::vector<IntegralIndex> enumerate_convergent(int w) {
  if (w < 1) throw PreconditionError("weight must be >= 1");
  std::vector<IntegralIndex> out;
  out.reserve(convergent_count(w));
  for (int a = 0; a < w; ++a)
    for (int b = 0; a + b < w; ++b) {
      const int c = w - 1 - a - b;
      for (int d = 0; d < 3; ++d) {
        const auto idx = make_index(a, b, c, d);
        if (idx.convergent()) out.push_back(idx);
      }
    }
  return out;
}

std::string format_name(const IntegralIndex& idx) {
  std::string s = "i";
  s += base36_digit(idx.a);
  s += base36_digit(idx.b);
  s += base36_digit(idx.c);
  s += base36_digit(static_cast<int>(idx.d));
  return s;
}

IntegralIndex parse_name(std::string_view name) {
  if (name.size() != 5 || name[0] != 'i')
    throw ParseError("integral name '" + std::string(name) + "' is not of the form iABCD");
  int v[4];
  for (int k = 0; k < 4; ++k) {
    v[k] = base36_value(name[k + 1]);
    if (v[k] < 0) throw ParseError("bad digit in integral name '" + std::string(name) + "'");
  }
  if (v[3] > 2) throw ParseError("denominator digit must be 0, 1 or 2 in '" + std::string(name) + "'");
  const auto idx = make_index(v[0], v[1], v[2], v[3]);
  if (!idx.convergent()) throw ParseError("integral '" + std::string(name) + "' diverges");
  return idx;
}

}  // namespace polyint
