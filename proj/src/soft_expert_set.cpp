#include "bnses/soft_expert_set.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace bnses {

ParameterLiteral negate_parameter(ParameterLiteral p) {
  p.negated = !p.negated;
  return p;
}

SoftExpertSet::SoftExpertSet(EntryMap entries) : entries_(std::move(entries)) {
  std::erase_if(entries_,
                [](const auto& entry) { return entry.second.empty(); });
}

std::size_t SoftExpertSet::support_size() const noexcept {
  std::size_t n = 0;
  for (const auto& [key, elements] : entries_) n += elements.size();
  return n;
}

const BipolarNumber* SoftExpertSet::find(const AssessmentKey& key,
                                         const std::string& element) const {
  const auto entry = entries_.find(key);
  if (entry == entries_.end()) return nullptr;
  const auto value = entry->second.find(element);
  return value == entry->second.end() ? nullptr : &value->second;
}

BipolarNumber complement_value(const BipolarNumber& v) {
  return {v.f_pos(), v.i_pos(), v.t_pos(), v.f_neg(), v.i_neg(), v.t_neg()};
}

BipolarNumber union_value(const BipolarNumber& a, const BipolarNumber& b) {
  return {std::max(a.t_pos(), b.t_pos()),
          (a.i_pos() + b.i_pos()) / 2.0,
          std::min(a.f_pos(), b.f_pos()),
          std::min(a.t_neg(), b.t_neg()),
          (a.i_neg() + b.i_neg()) / 2.0,
          std::max(a.f_neg(), b.f_neg())};
}

BipolarNumber intersection_value(const BipolarNumber& a,
                                 const BipolarNumber& b) {
  return {std::min(a.t_pos(), b.t_pos()),
          (a.i_pos() + b.i_pos()) / 2.0,
          std::max(a.f_pos(), b.f_pos()),
          std::max(a.t_neg(), b.t_neg()),
          (a.i_neg() + b.i_neg()) / 2.0,
          std::min(a.f_neg(), b.f_neg())};
}

namespace {

// g's value dominated by h's in the subset order, with tolerance slack.
bool value_below(const BipolarNumber& g, const BipolarNumber& h, double tol) {
  return g.t_pos() <= h.t_pos() + tol && g.i_pos() <= h.i_pos() + tol &&
         g.f_pos() >= h.f_pos() - tol && g.t_neg() >= h.t_neg() - tol &&
         g.i_neg() >= h.i_neg() - tol && g.f_neg() <= h.f_neg() + tol;
}

}  // namespace

bool is_subset(const SoftExpertSet& g, const SoftExpertSet& h,
               double tolerance) {
  for (const auto& [key, g_elements] : g.entries()) {
    const auto h_entry = h.entries().find(key);
    if (h_entry == h.entries().end()) return false;
    for (const auto& [element, g_value] : g_elements) {
      const auto h_value = h_entry->second.find(element);
      if (h_value == h_entry->second.end()) return false;
      if (!value_below(g_value, h_value->second, tolerance)) return false;
    }
  }
  return true;
}

bool equals(const SoftExpertSet& g, const SoftExpertSet& h, double tolerance) {
  if (g.entries().size() != h.entries().size()) return false;
  auto hit = h.entries().begin();
  for (const auto& [key, g_elements] : g.entries()) {
    if (key != hit->first || g_elements.size() != hit->second.size()) {
      return false;
    }
    auto hval = hit->second.begin();
    for (const auto& [element, g_value] : g_elements) {
      if (element != hval->first ||
          !approx_equal(g_value, hval->second, tolerance)) {
        return false;
      }
      ++hval;
    }
    ++hit;
  }
  return true;
}

SoftExpertSet complement(const SoftExpertSet& h) {
  SoftExpertSet::EntryMap out;
  for (const auto& [key, elements] : h.entries()) {
    SoftExpertSet::ElementMap mapped;
    for (const auto& [element, value] : elements) {
      mapped.emplace(element, complement_value(value));
    }
    out.emplace(
        AssessmentKey{negate_parameter(key.parameter), key.expert,
                      key.opinion},
        std::move(mapped));
  }
  return SoftExpertSet(std::move(out));
}

SoftExpertSet make_null(const std::vector<AssessmentKey>& keys,
                        const std::vector<std::string>& universe) {
  SoftExpertSet::EntryMap out;
  for (const auto& key : keys) {
    auto& elements = out[key];
    for (const auto& element : universe) {
      elements.emplace(element, BipolarNumber{});
    }
  }
  return SoftExpertSet(std::move(out));
}

bool is_null(const SoftExpertSet& h, double tolerance) {
  const BipolarNumber zero;
  for (const auto& [key, elements] : h.entries()) {
    for (const auto& [element, value] : elements) {
      if (!approx_equal(value, zero, tolerance)) return false;
    }
  }
  return true;
}

namespace {

SoftExpertSet filter_by_opinion(const SoftExpertSet& h, Opinion opinion) {
  SoftExpertSet::EntryMap out;
  for (const auto& [key, elements] : h.entries()) {
    if (key.opinion == opinion) out.emplace(key, elements);
  }
  return SoftExpertSet(std::move(out));
}

}  // namespace

SoftExpertSet restrict_agree(const SoftExpertSet& h) {
  return filter_by_opinion(h, Opinion::agree);
}

SoftExpertSet restrict_disagree(const SoftExpertSet& h) {
  return filter_by_opinion(h, Opinion::disagree);
}

SoftExpertSet set_union(const SoftExpertSet& h, const SoftExpertSet& g) {
  SoftExpertSet::EntryMap out = h.entries();
  for (const auto& [key, g_elements] : g.entries()) {
    auto& merged = out[key];
    for (const auto& [element, g_value] : g_elements) {
      auto [it, inserted] = merged.emplace(element, g_value);
      if (!inserted) it->second = union_value(it->second, g_value);
    }
  }
  return SoftExpertSet(std::move(out));
}

SoftExpertSet set_intersection(const SoftExpertSet& h,
                               const SoftExpertSet& g) {
  SoftExpertSet::EntryMap out;
  for (const auto& [key, h_elements] : h.entries()) {
    const auto g_entry = g.entries().find(key);
    if (g_entry == g.entries().end()) continue;
    SoftExpertSet::ElementMap shared;
    for (const auto& [element, h_value] : h_elements) {
      const auto g_value = g_entry->second.find(element);
      if (g_value == g_entry->second.end()) continue;
      shared.emplace(element, intersection_value(h_value, g_value->second));
    }
    if (!shared.empty()) out.emplace(key, std::move(shared));
  }
  return SoftExpertSet(std::move(out));
}

}  // namespace bnses
