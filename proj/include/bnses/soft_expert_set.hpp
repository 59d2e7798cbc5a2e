#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bnses/bipolar_number.hpp"

namespace bnses {

/// A named decision parameter together with its logical negation flag, so a
/// parameter set and its NOT set share one key space.
struct ParameterLiteral {
  std::string name;
  bool negated = false;

  auto operator<=>(const ParameterLiteral&) const = default;
};

/// Flips the negation flag; the name is unchanged. Involutive.
ParameterLiteral negate_parameter(ParameterLiteral p);

enum class Opinion { disagree = 0, agree = 1 };

/// One assessment slot: which parameter, which expert, agree or disagree.
/// Keys order canonically by (parameter name, negated, expert, opinion with
/// disagree before agree).
struct AssessmentKey {
  ParameterLiteral parameter;
  std::string expert;
  Opinion opinion = Opinion::agree;

  auto operator<=>(const AssessmentKey&) const = default;
};

/// A finite family of per-element bipolar values indexed by assessment keys.
///
/// The support is the set of (key, element) pairs that actually store a
/// value; absent pairs are genuinely absent, never materialized as zeros.
/// Iteration follows the canonical key and element order. Instances are
/// immutable after construction and all operations on them are pure.
class SoftExpertSet {
 public:
  using ElementMap = std::map<std::string, BipolarNumber>;
  using EntryMap = std::map<AssessmentKey, ElementMap>;

  SoftExpertSet() = default;

  /// Keys with empty element maps are normalized away.
  explicit SoftExpertSet(EntryMap entries);

  const EntryMap& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Number of stored (key, element) pairs.
  std::size_t support_size() const noexcept;

  /// Value stored at (key, element), or nullptr when the pair is absent.
  const BipolarNumber* find(const AssessmentKey& key,
                            const std::string& element) const;

  bool operator==(const SoftExpertSet&) const = default;

 private:
  EntryMap entries_;
};

// Value-level maps underlying the set operations. Exposed so their algebraic
// laws can be checked directly.
BipolarNumber complement_value(const BipolarNumber& v);
BipolarNumber union_value(const BipolarNumber& a, const BipolarNumber& b);
BipolarNumber intersection_value(const BipolarNumber& a,
                                 const BipolarNumber& b);

/// True iff support(g) is contained in support(h) and at every shared pair
/// g's value is componentwise dominated by h's (within `tolerance` slack):
/// t_pos, i_pos no larger; f_pos no smaller; t_neg, i_neg no smaller;
/// f_neg no larger.
bool is_subset(const SoftExpertSet& g, const SoftExpertSet& h,
               double tolerance = default_tolerance);

/// True iff both sets have identical support and all components agree
/// within `tolerance`.
bool equals(const SoftExpertSet& g, const SoftExpertSet& h,
            double tolerance = default_tolerance);

/// Moves every key (e, x, o) to (not e, x, o) and swaps value components
/// t_pos with f_pos and t_neg with f_neg. Involutive.
SoftExpertSet complement(const SoftExpertSet& h);

/// The all-zero set over keys x universe.
SoftExpertSet make_null(const std::vector<AssessmentKey>& keys,
                        const std::vector<std::string>& universe);

/// True iff every stored component is zero within `tolerance`; vacuously
/// true for empty support.
bool is_null(const SoftExpertSet& h, double tolerance = default_tolerance);

SoftExpertSet restrict_agree(const SoftExpertSet& h);
SoftExpertSet restrict_disagree(const SoftExpertSet& h);

/// Union: shared (key, element) pairs combine with union_value (max truth,
/// averaged indeterminacy, min falsity on the positive side and mirrored on
/// the negative side); pairs present in only one operand copy through.
SoftExpertSet set_union(const SoftExpertSet& h, const SoftExpertSet& g);

/// Intersection: keeps exactly the (key, element) pairs present in both
/// operands, combined with intersection_value.
SoftExpertSet set_intersection(const SoftExpertSet& h, const SoftExpertSet& g);

}  // namespace bnses
