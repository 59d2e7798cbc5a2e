#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bnses/soft_expert_set.hpp"

namespace bnses {

struct Ranking;

/// A universe plus declared experts/parameters and one soft expert set; the
/// unit of file ingestion and ranking.
struct Dataset {
  std::vector<std::string> universe;
  std::vector<std::string> experts;
  std::vector<std::string> parameters;
  SoftExpertSet set;

  bool operator==(const Dataset&) const = default;
};

/// Checks the dataset invariants: ids unique and nonempty within each list,
/// every record referencing only declared ids. Throws Error{validation} on
/// the first violation. (Duplicate assessment keys cannot be represented.)
void validate_dataset(const Dataset& dataset);

/// Parses the canonical dataset document (see README for the format).
/// Throws Error{parse} with line/column on malformed text and
/// Error{validation} naming the offending record and component otherwise.
Dataset parse(std::string_view text);

/// Canonical serialization: records in canonical key order, elements sorted,
/// numbers in shortest round-trip decimal form. parse(serialize(d)) == d.
std::string serialize(const Dataset& dataset);

/// Comma-separated ranking table: header row, then one row per alternative
/// with rank, element id and the three scores at fixed six decimals.
std::string export_ranking(const Ranking& ranking);

/// Structural equality with `tolerance` on the stored numbers.
bool equals(const Dataset& a, const Dataset& b,
            double tolerance = default_tolerance);

}  // namespace bnses
