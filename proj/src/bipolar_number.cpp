#include "bnses/bipolar_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bnses {
namespace {

void check_component(const char* name, double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {  // also rejects NaN
    std::ostringstream msg;
    msg << "component " << name << " = " << value << " outside [" << lo
        << ", " << hi << "]";
    throw Error(ErrorCategory::domain, msg.str());
  }
}

double checked_exponent(double lambda) {
  if (!std::isfinite(lambda) || !(lambda > 0.0)) {
    throw Error(ErrorCategory::domain,
                "exponent must be a finite real > 0");
  }
  return lambda;
}

// The arithmetic formulas are closed on the component intervals; rounding
// can still leave a result an ulp outside, so snap it back before
// reconstructing.
BipolarNumber snapped(double tp, double ip, double fp, double tn, double in,
                      double fn) {
  auto pos = [](double x) { return std::clamp(x, 0.0, 1.0); };
  auto neg = [](double x) { return std::clamp(x, -1.0, 0.0); };
  return {pos(tp), pos(ip), pos(fp), neg(tn), neg(in), neg(fn)};
}

Ordering compare_tier(double x, double y, double tolerance) {
  if (std::abs(x - y) <= tolerance) return Ordering::equal;
  return x > y ? Ordering::greater : Ordering::less;
}

}  // namespace

const char* to_string(Ordering ordering) noexcept {
  switch (ordering) {
    case Ordering::less: return "LESS";
    case Ordering::equal: return "EQUAL";
    case Ordering::greater: return "GREATER";
  }
  return "UNKNOWN";
}

// +0.0 normalizes any negative zero so equal values serialize identically.
BipolarNumber::BipolarNumber(double t_pos, double i_pos, double f_pos,
                             double t_neg, double i_neg, double f_neg)
    : t_pos_(t_pos + 0.0),
      i_pos_(i_pos + 0.0),
      f_pos_(f_pos + 0.0),
      t_neg_(t_neg + 0.0),
      i_neg_(i_neg + 0.0),
      f_neg_(f_neg + 0.0) {
  check_component("t_pos", t_pos, 0.0, 1.0);
  check_component("i_pos", i_pos, 0.0, 1.0);
  check_component("f_pos", f_pos, 0.0, 1.0);
  check_component("t_neg", t_neg, -1.0, 0.0);
  check_component("i_neg", i_neg, -1.0, 0.0);
  check_component("f_neg", f_neg, -1.0, 0.0);
}

bool approx_equal(const BipolarNumber& a, const BipolarNumber& b,
                  double tolerance) {
  return std::abs(a.t_pos() - b.t_pos()) <= tolerance &&
         std::abs(a.i_pos() - b.i_pos()) <= tolerance &&
         std::abs(a.f_pos() - b.f_pos()) <= tolerance &&
         std::abs(a.t_neg() - b.t_neg()) <= tolerance &&
         std::abs(a.i_neg() - b.i_neg()) <= tolerance &&
         std::abs(a.f_neg() - b.f_neg()) <= tolerance;
}

BipolarNumber scale(double lambda, const BipolarNumber& a) {
  const double k = checked_exponent(lambda);
  return snapped(1.0 - std::pow(1.0 - a.t_pos(), k),
                 std::pow(a.i_pos(), k),
                 std::pow(a.f_pos(), k),
                 -std::pow(-a.t_neg(), k),
                 -std::pow(-a.i_neg(), k),
                 -(1.0 - std::pow(1.0 - (-a.f_neg()), k)));
}

BipolarNumber power(const BipolarNumber& a, double lambda) {
  const double k = checked_exponent(lambda);
  return snapped(std::pow(a.t_pos(), k),
                 1.0 - std::pow(1.0 - a.i_pos(), k),
                 1.0 - std::pow(1.0 - a.f_pos(), k),
                 -(1.0 - std::pow(1.0 - (-a.t_neg()), k)),
                 -std::pow(-a.i_neg(), k),
                 -std::pow(-a.f_neg(), k));
}

BipolarNumber add(const BipolarNumber& a, const BipolarNumber& b) {
  return snapped(a.t_pos() + b.t_pos() - a.t_pos() * b.t_pos(),
                 a.i_pos() * b.i_pos(),
                 a.f_pos() * b.f_pos(),
                 -(a.t_neg() * b.t_neg()),
                 -(-a.i_neg() - b.i_neg() - a.i_neg() * b.i_neg()),
                 -(-a.f_neg() - b.f_neg() - a.f_neg() * b.f_neg()));
}

BipolarNumber multiply(const BipolarNumber& a, const BipolarNumber& b) {
  return snapped(a.t_pos() * b.t_pos(),
                 a.i_pos() + b.i_pos() - a.i_pos() * b.i_pos(),
                 a.f_pos() + b.f_pos() - a.f_pos() * b.f_pos(),
                 -(-a.t_neg() - b.t_neg() - a.t_neg() * b.t_neg()),
                 -(a.i_neg() * b.i_neg()),
                 -(a.f_neg() * b.f_neg()));
}

double score(const BipolarNumber& a) {
  return (a.t_pos() + (1.0 - a.i_pos()) + (1.0 - a.f_pos()) +
          (1.0 + a.t_neg()) - a.i_neg() - a.f_neg()) /
         6.0;
}

double accuracy(const BipolarNumber& a) {
  return a.t_pos() - a.f_pos() + a.t_neg() - a.f_neg();
}

double certainty(const BipolarNumber& a) { return a.t_pos() - a.f_neg(); }

Ordering compare(const BipolarNumber& a, const BipolarNumber& b,
                 double tolerance) {
  if (auto o = compare_tier(score(a), score(b), tolerance);
      o != Ordering::equal) {
    return o;
  }
  if (auto o = compare_tier(accuracy(a), accuracy(b), tolerance);
      o != Ordering::equal) {
    return o;
  }
  return compare_tier(certainty(a), certainty(b), tolerance);
}

}  // namespace bnses
