#include "bnses/decision.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace bnses {

Ranking rank(const Dataset& dataset) {
  validate_dataset(dataset);
  if (dataset.universe.empty()) {
    throw Error(ErrorCategory::validation, "cannot rank an empty universe");
  }

  struct Sums {
    double agree = 0.0;
    double disagree = 0.0;
    double accuracy = 0.0;
    double certainty = 0.0;
  };
  std::map<std::string, Sums> sums;
  for (const auto& element : dataset.universe) sums[element];

  // Fixed summation order: records in canonical key order, elements sorted.
  for (const auto& [key, elements] : dataset.set.entries()) {
    const bool agreeing = key.opinion == Opinion::agree;
    const double sign = agreeing ? 1.0 : -1.0;
    for (const auto& [element, value] : elements) {
      auto& s = sums.at(element);
      (agreeing ? s.agree : s.disagree) += score(value);
      s.accuracy += sign * accuracy(value);
      s.certainty += sign * certainty(value);
    }
  }

  std::vector<std::pair<std::string, Sums>> rows(sums.begin(), sums.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const double fa = a.second.agree - a.second.disagree;
    const double fb = b.second.agree - b.second.disagree;
    if (fa != fb) return fa > fb;
    if (a.second.accuracy != b.second.accuracy) {
      return a.second.accuracy > b.second.accuracy;
    }
    if (a.second.certainty != b.second.certainty) {
      return a.second.certainty > b.second.certainty;
    }
    return a.first < b.first;
  });

  Ranking ranking;
  ranking.alternatives.reserve(rows.size());
  int position = 1;
  for (auto& [element, s] : rows) {
    ranking.alternatives.push_back({std::move(element), s.agree, s.disagree,
                                    s.agree - s.disagree, position++});
  }
  return ranking;
}

}  // namespace bnses
