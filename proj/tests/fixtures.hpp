// Shared worked-example data used by the unit and acceptance suites.
#pragma once

#include <string>
#include <vector>

#include "bnses/dataset.hpp"
#include "bnses/soft_expert_set.hpp"

namespace fixtures {

using bnses::AssessmentKey;
using bnses::BipolarNumber;
using bnses::Dataset;
using bnses::Opinion;
using bnses::SoftExpertSet;

inline AssessmentKey ak(std::string parameter, std::string expert,
                        int opinion, bool negated = false) {
  return {{std::move(parameter), negated}, std::move(expert),
          opinion == 1 ? Opinion::agree : Opinion::disagree};
}

// Twelve assessments of three notebooks by three experts against two
// parameters; the running example behind the restriction and ranking tests.
inline SoftExpertSet notebooks_set() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 1)] = {
      {"u1", {0.3, 0.5, 0.7, -0.2, -0.3, -0.4}},
      {"u3", {0.5, 0.6, 0.3, -0.3, -0.4, -0.1}}};
  entries[ak("e1", "q", 1)] = {
      {"u2", {0.8, 0.2, 0.3, -0.1, -0.3, -0.5}},
      {"u3", {0.9, 0.5, 0.7, -0.4, -0.1, -0.2}}};
  entries[ak("e1", "r", 1)] = {
      {"u1", {0.4, 0.7, 0.6, -0.6, -0.2, -0.4}}};
  entries[ak("e2", "p", 1)] = {
      {"u1", {0.4, 0.2, 0.3, -0.2, -0.3, -0.1}},
      {"u2", {0.7, 0.1, 0.3, -0.3, -0.2, -0.5}}};
  entries[ak("e2", "q", 1)] = {
      {"u3", {0.3, 0.4, 0.2, -0.5, -0.1, -0.4}}};
  entries[ak("e2", "r", 1)] = {
      {"u2", {0.3, 0.4, 0.9, -0.4, -0.3, -0.1}}};
  entries[ak("e1", "p", 0)] = {
      {"u2", {0.5, 0.2, 0.3, -0.5, -0.2, -0.3}}};
  entries[ak("e1", "q", 0)] = {
      {"u1", {0.6, 0.3, 0.5, -0.4, -0.2, -0.6}}};
  entries[ak("e1", "r", 0)] = {
      {"u2", {0.7, 0.6, 0.4, -0.3, -0.4, -0.5}},
      {"u3", {0.9, 0.5, 0.7, -0.2, -0.3, -0.5}}};
  entries[ak("e2", "p", 0)] = {
      {"u3", {0.7, 0.9, 0.6, -0.2, -0.3, -0.4}}};
  entries[ak("e2", "q", 0)] = {
      {"u1", {0.7, 0.3, 0.6, -0.3, -0.2, -0.4}},
      {"u2", {0.6, 0.2, 0.5, -0.3, -0.1, -0.4}}};
  entries[ak("e2", "r", 0)] = {
      {"u1", {0.6, 0.2, 0.5, -0.5, -0.3, -0.2}},
      {"u3", {0.7, 0.2, 0.8, -0.6, -0.2, -0.1}}};
  return SoftExpertSet(std::move(entries));
}

inline Dataset notebooks_dataset() {
  return {{"u1", "u2", "u3"}, {"p", "q", "r"}, {"e1", "e2"}, notebooks_set()};
}

// The agreeing half of notebooks_set, transcribed independently.
inline SoftExpertSet notebooks_agree_part() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 1)] = {
      {"u1", {0.3, 0.5, 0.7, -0.2, -0.3, -0.4}},
      {"u3", {0.5, 0.6, 0.3, -0.3, -0.4, -0.1}}};
  entries[ak("e1", "q", 1)] = {
      {"u2", {0.8, 0.2, 0.3, -0.1, -0.3, -0.5}},
      {"u3", {0.9, 0.5, 0.7, -0.4, -0.1, -0.2}}};
  entries[ak("e1", "r", 1)] = {
      {"u1", {0.4, 0.7, 0.6, -0.6, -0.2, -0.4}}};
  entries[ak("e2", "p", 1)] = {
      {"u1", {0.4, 0.2, 0.3, -0.2, -0.3, -0.1}},
      {"u2", {0.7, 0.1, 0.3, -0.3, -0.2, -0.5}}};
  entries[ak("e2", "q", 1)] = {
      {"u3", {0.3, 0.4, 0.2, -0.5, -0.1, -0.4}}};
  entries[ak("e2", "r", 1)] = {
      {"u2", {0.3, 0.4, 0.9, -0.4, -0.3, -0.1}}};
  return SoftExpertSet(std::move(entries));
}

// The disagreeing half of notebooks_set, transcribed independently.
inline SoftExpertSet notebooks_disagree_part() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 0)] = {
      {"u2", {0.5, 0.2, 0.3, -0.5, -0.2, -0.3}}};
  entries[ak("e1", "q", 0)] = {
      {"u1", {0.6, 0.3, 0.5, -0.4, -0.2, -0.6}}};
  entries[ak("e1", "r", 0)] = {
      {"u2", {0.7, 0.6, 0.4, -0.3, -0.4, -0.5}},
      {"u3", {0.9, 0.5, 0.7, -0.2, -0.3, -0.5}}};
  entries[ak("e2", "p", 0)] = {
      {"u3", {0.7, 0.9, 0.6, -0.2, -0.3, -0.4}}};
  entries[ak("e2", "q", 0)] = {
      {"u1", {0.7, 0.3, 0.6, -0.3, -0.2, -0.4}},
      {"u2", {0.6, 0.2, 0.5, -0.3, -0.1, -0.4}}};
  entries[ak("e2", "r", 0)] = {
      {"u1", {0.6, 0.2, 0.5, -0.5, -0.3, -0.2}},
      {"u3", {0.7, 0.2, 0.8, -0.6, -0.2, -0.1}}};
  return SoftExpertSet(std::move(entries));
}

// Superset/subset pair: products priced by three experts.
inline SoftExpertSet products_superset() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 1)] = {
      {"u1", {0.3, 0.5, 0.6, -0.2, -0.3, -0.4}},
      {"u2", {0.5, 0.2, 0.3, -0.4, -0.2, -0.5}}};
  entries[ak("e2", "p", 0)] = {
      {"u2", {0.2, 0.4, 0.7, -0.5, -0.4, -0.3}}};
  entries[ak("e1", "q", 1)] = {
      {"u1", {0.6, 0.3, 0.5, -0.6, -0.2, -0.5}},
      {"u2", {0.6, 0.2, 0.3, -0.5, -0.4, -0.3}}};
  entries[ak("e1", "r", 0)] = {
      {"u1", {0.2, 0.7, 0.3, -0.4, -0.3, -0.5}}};
  entries[ak("e2", "r", 1)] = {
      {"u2", {0.3, 0.4, 0.9, -0.3, -0.2, -0.4}},
      {"u3", {0.7, 0.2, 0.8, -0.5, -0.3, -0.6}}};
  return SoftExpertSet(std::move(entries));
}

inline SoftExpertSet products_subset() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 1)] = {
      {"u1", {0.3, 0.5, 0.7, -0.2, -0.3, -0.6}},
      {"u2", {0.5, 0.2, 0.3, -0.1, -0.2, -0.7}}};
  entries[ak("e2", "p", 0)] = {
      {"u2", {0.2, 0.4, 0.7, -0.2, -0.4, -0.5}}};
  entries[ak("e1", "q", 1)] = {
      {"u1", {0.6, 0.3, 0.5, -0.1, -0.2, -0.8}},
      {"u2", {0.6, 0.2, 0.3, -0.3, -0.1, -0.4}}};
  return SoftExpertSet(std::move(entries));
}

// Overlap pair exercising combine, copy-through and drop behaviour.
inline SoftExpertSet overlap_h() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 1)] = {
      {"u1", {0.2, 0.5, 0.8, -0.4, -0.3, -0.5}},
      {"u3", {0.2, 0.6, 0.5, -0.2, -0.1, -0.4}}};
  entries[ak("e1", "q", 1)] = {
      {"u1", {0.5, 0.3, 0.6, -0.2, -0.1, -0.3}},
      {"u2", {0.8, 0.2, 0.3, -0.2, -0.3, -0.1}}};
  return SoftExpertSet(std::move(entries));
}

inline SoftExpertSet overlap_g() {
  SoftExpertSet::EntryMap entries;
  entries[ak("e1", "p", 1)] = {
      {"u1", {0.1, 0.6, 0.2, -0.3, -0.1, -0.4}},
      {"u2", {0.4, 0.5, 0.8, -0.1, -0.3, -0.5}}};
  return SoftExpertSet(std::move(entries));
}

// Handbag layout of the all-zero set: two experts agree on u1/u2, both
// disagree slots cover u3 only.
inline std::vector<AssessmentKey> handbag_agree_keys() {
  return {ak("e1", "p", 1), ak("e1", "q", 1)};
}

inline std::vector<AssessmentKey> handbag_disagree_keys() {
  return {ak("e1", "p", 0), ak("e1", "q", 0)};
}

inline SoftExpertSet handbag_null_set() {
  SoftExpertSet::EntryMap entries;
  const BipolarNumber zero;
  for (const auto& key : handbag_agree_keys()) {
    entries[key] = {{"u1", zero}, {"u2", zero}};
  }
  for (const auto& key : handbag_disagree_keys()) {
    entries[key] = {{"u3", zero}};
  }
  return SoftExpertSet(std::move(entries));
}

}  // namespace fixtures
