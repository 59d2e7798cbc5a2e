#pragma once

#include <string>
#include <vector>

#include "bnses/dataset.hpp"

namespace bnses {

struct RankedAlternative {
  std::string element;
  double agree_score = 0.0;
  double disagree_score = 0.0;
  double final_score = 0.0;  ///< agree_score - disagree_score
  int rank = 0;              ///< 1-based position after all tie-breaks

  bool operator==(const RankedAlternative&) const = default;
};

/// Alternatives sorted best-first, covering the dataset universe exactly
/// once. Order: final score descending, then summed accuracy, then summed
/// certainty, then element id ascending.
struct Ranking {
  std::vector<RankedAlternative> alternatives;

  bool operator==(const Ranking&) const = default;
};

/// Score-sum ranking over a dataset. Every value an element receives in an
/// agreeing record adds its score to the element's agree side; disagreeing
/// records feed the disagree side; elements absent from all records keep
/// both sums at zero. Tie-break sums (accuracy, certainty) use the same
/// agree-minus-disagree polarity. Summation runs over records in canonical
/// key order, so the result is independent of input ordering.
///
/// Throws Error{validation} on an empty universe or an invalid dataset.
Ranking rank(const Dataset& dataset);

/// The (score, accuracy, certainty) comparison, re-exported for callers that
/// work at the decision layer.
inline Ordering compare_values(const BipolarNumber& a, const BipolarNumber& b,
                               double tolerance = default_tolerance) {
  return compare(a, b, tolerance);
}

}  // namespace bnses
