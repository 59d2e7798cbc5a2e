#pragma once

#include "bnses/error.hpp"

namespace bnses {

/// Absolute tolerance used by default for every approximate comparison in
/// the library.
inline constexpr double default_tolerance = 1e-9;

/// Outcome of the lexicographic (score, accuracy, certainty) comparison.
enum class Ordering { less, equal, greater };

const char* to_string(Ordering ordering) noexcept;

/// A six-component bipolar membership value: positive truth, indeterminacy
/// and falsity degrees in [0, 1], and their negative counterparts in [-1, 0].
///
/// Instances are immutable and every operation on them is a pure function,
/// so values can be shared freely across threads.
class BipolarNumber {
 public:
  /// The all-zero value.
  BipolarNumber() = default;

  /// Throws Error{domain} if any component lies outside its interval.
  BipolarNumber(double t_pos, double i_pos, double f_pos,
                double t_neg, double i_neg, double f_neg);

  double t_pos() const noexcept { return t_pos_; }
  double i_pos() const noexcept { return i_pos_; }
  double f_pos() const noexcept { return f_pos_; }
  double t_neg() const noexcept { return t_neg_; }
  double i_neg() const noexcept { return i_neg_; }
  double f_neg() const noexcept { return f_neg_; }

  bool operator==(const BipolarNumber&) const = default;

 private:
  double t_pos_ = 0.0;
  double i_pos_ = 0.0;
  double f_pos_ = 0.0;
  double t_neg_ = 0.0;
  double i_neg_ = 0.0;
  double f_neg_ = 0.0;
};

/// True when every component of a and b agrees within `tolerance`.
bool approx_equal(const BipolarNumber& a, const BipolarNumber& b,
                  double tolerance = default_tolerance);

/// Multiplies a by a positive scalar in the bipolar algebra.
/// Throws Error{domain} unless lambda is finite and > 0.
BipolarNumber scale(double lambda, const BipolarNumber& a);

/// Raises a to a positive power in the bipolar algebra.
/// Throws Error{domain} unless lambda is finite and > 0.
BipolarNumber power(const BipolarNumber& a, double lambda);

BipolarNumber add(const BipolarNumber& a, const BipolarNumber& b);
BipolarNumber multiply(const BipolarNumber& a, const BipolarNumber& b);

double score(const BipolarNumber& a);      ///< in [0, 1]
double accuracy(const BipolarNumber& a);   ///< in [-2, 2]
double certainty(const BipolarNumber& a);  ///< in [0, 2]

/// Lexicographic comparison on (score, accuracy, certainty). Ties at each
/// tier are decided with |x - y| <= tolerance.
Ordering compare(const BipolarNumber& a, const BipolarNumber& b,
                 double tolerance = default_tolerance);

}  // namespace bnses
