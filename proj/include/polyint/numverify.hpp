#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "polyint/constalg.hpp"
#include "polyint/index.hpp"
#include "polyint/logexpand.hpp"

namespace polyint {

using Real = boost::multiprecision::mpfr_float;

// Sets the default mpfr precision (in decimal digits) for its lifetime.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits);
  ~PrecisionContext();
  PrecisionContext(const PrecisionContext&) = delete;
  PrecisionContext& operator=(const PrecisionContext&) = delete;

 private:
  unsigned saved_;
};

// Working precision used for a target of `digits` correct digits.
int working_digits(int digits);

// zeta(n), n >= 2, through the accelerated alternating series of the eta
// function; evaluated at the current default precision.
Real zeta_cvz(int n);
// Li_n(1/2) by its defining series.
Real li_half_series(int n);

// Tanh-sinh quadrature on (0,1) for log^e1(1-x) log^e2(x) log^e3(1+x) / den,
// plus evaluation of constant expressions and linear forms.
class NumericEvaluator {
 public:
  explicit NumericEvaluator(int digits = 40);

  int digits() const { return digits_; }
  int working() const { return working_; }

  Real quad(const IntegralIndex& idx);
  Real quad(const AuxHalfIntegral& aux);

  Real eval(const Symbol& s);
  Real eval(const ConstExpr& x);
  Real eval(const LinearForm& f);

  // Named constants are defined as the value of an integral.
  void bind(const Symbol& named, const IntegralIndex& definition);
  bool is_bound(const Symbol& named) const { return named_.contains(named); }

  // |x| <= 10^-digits * max(1, |scale|)
  bool negligible(const Real& x, const Real& scale) const;

  struct Check {
    bool ok = false;
    Real numeric;
    Real closed;
    Real diff;
  };
  Check check_closed_form(const IntegralIndex& idx, const ConstExpr& value);

  std::string to_decimal(const Real& x, int digits = 0) const;

  // Number of tanh-sinh levels used by the last quadrature.
  int last_levels() const { return last_levels_; }

 private:
  struct Node {
    Real weight;  // pi cosh(t); dx/dt = weight x (1-x)
    Real x;
    Real xc;      // 1 - x
    Real l1, l2, l3;
    std::vector<Real> p1, p2, p3;  // powers of l1, l2, l3
  };
  struct Level {
    Real h;
    std::vector<Node> nodes;
  };

  const Level& level(int k);
  static const Real& node_power(std::vector<Real>& cache, const Real& base, int e);

  enum class Den { OneMinusX, X, OnePlusX, HalfOneMinusX };
  Real integrate(int e1, int e2, int e3, Den den);

  int digits_;
  int working_;
  Real tmax_;
  std::vector<Level> levels_;
  std::map<IntegralIndex, Real> integrals_;
  std::map<AuxHalfIntegral, Real> aux_;
  std::map<Symbol, Real> symbols_;
  std::map<Symbol, IntegralIndex> named_;
  int last_levels_ = 0;
};

}  // namespace polyint
