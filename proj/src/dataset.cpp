#include "bnses/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "bnses/decision.hpp"

namespace bnses {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_validation(const std::string& message) {
  throw Error(ErrorCategory::validation, message);
}

// "[json.exception.parse_error.101] parse error at line 2, column 3: ..."
// -> "parse error at line 2, column 3: ..."
std::string strip_exception_tag(const char* what) {
  std::string message = what;
  if (message.starts_with("[")) {
    if (const auto end = message.find("] "); end != std::string::npos) {
      message.erase(0, end + 2);
    }
  }
  return message;
}

void check_id_list(const json& doc, const char* field,
                   std::vector<std::string>& out) {
  const auto it = doc.find(field);
  if (it == doc.end()) {
    fail_validation(std::string("missing top-level field '") + field + "'");
  }
  if (!it->is_array()) {
    fail_validation(std::string("'") + field + "' must be an array of strings");
  }
  std::set<std::string> seen;
  std::size_t index = 0;
  for (const auto& item : *it) {
    std::ostringstream at;
    at << field << "[" << index << "]";
    if (!item.is_string()) fail_validation(at.str() + ": id must be a string");
    const auto id = item.get<std::string>();
    if (id.empty()) fail_validation(at.str() + ": id must be nonempty");
    if (!seen.insert(id).second) {
      fail_validation(at.str() + ": duplicate id '" + id + "'");
    }
    out.push_back(id);
    ++index;
  }
}

struct ComponentRange {
  const char* name;
  double lo;
  double hi;
};

constexpr ComponentRange component_ranges[6] = {
    {"t_pos", 0.0, 1.0}, {"i_pos", 0.0, 1.0}, {"f_pos", 0.0, 1.0},
    {"t_neg", -1.0, 0.0}, {"i_neg", -1.0, 0.0}, {"f_neg", -1.0, 0.0},
};

BipolarNumber parse_value(const json& array, const std::string& where) {
  if (!array.is_array() || array.size() != 6) {
    fail_validation(where + ": value must be an array of six numbers " +
                    "[t_pos, i_pos, f_pos, t_neg, i_neg, f_neg]");
  }
  double components[6];
  for (int i = 0; i < 6; ++i) {
    const auto& item = array[static_cast<std::size_t>(i)];
    if (!item.is_number()) {
      fail_validation(where + ": component " + component_ranges[i].name +
                      " must be a number");
    }
    components[i] = item.get<double>();
    const auto& range = component_ranges[i];
    if (!(components[i] >= range.lo && components[i] <= range.hi)) {
      std::ostringstream msg;
      msg << where << ": component " << range.name << " = " << components[i]
          << " outside [" << range.lo << ", " << range.hi << "]";
      fail_validation(msg.str());
    }
  }
  return {components[0], components[1], components[2],
          components[3], components[4], components[5]};
}

std::string describe_key(const AssessmentKey& key) {
  std::ostringstream out;
  out << "(parameter '" << (key.parameter.negated ? "not " : "")
      << key.parameter.name << "', expert '" << key.expert << "', opinion "
      << (key.opinion == Opinion::agree ? 1 : 0) << ")";
  return out.str();
}

// Fixed six-decimal rendering; +0.0 keeps negative zero out of the output.
std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x + 0.0);
  return buf;
}

}  // namespace

void validate_dataset(const Dataset& dataset) {
  const auto check_list = [](const std::vector<std::string>& ids,
                             const char* field) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (id.empty()) {
        fail_validation(std::string("empty id in '") + field + "'");
      }
      if (!seen.insert(id).second) {
        fail_validation("duplicate id '" + id + "' in '" + field + "'");
      }
    }
    return seen;
  };
  const auto universe = check_list(dataset.universe, "universe");
  const auto experts = check_list(dataset.experts, "experts");
  const auto parameters = check_list(dataset.parameters, "parameters");

  for (const auto& [key, elements] : dataset.set.entries()) {
    const auto where = describe_key(key);
    if (!parameters.contains(key.parameter.name)) {
      fail_validation("record " + where + ": undeclared parameter '" +
                      key.parameter.name + "'");
    }
    if (!experts.contains(key.expert)) {
      fail_validation("record " + where + ": undeclared expert '" +
                      key.expert + "'");
    }
    for (const auto& [element, value] : elements) {
      if (!universe.contains(element)) {
        fail_validation("record " + where + ": undeclared element '" +
                        element + "'");
      }
    }
  }
}

Dataset parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCategory::parse, strip_exception_tag(e.what()));
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::parse, strip_exception_tag(e.what()));
  }

  if (!doc.is_object()) {
    fail_validation("top-level document must be an object");
  }
  for (const auto& [field, unused] : doc.items()) {
    if (field != "universe" && field != "experts" && field != "parameters" &&
        field != "records") {
      fail_validation("unknown top-level field '" + field + "'");
    }
  }

  Dataset dataset;
  check_id_list(doc, "universe", dataset.universe);
  check_id_list(doc, "experts", dataset.experts);
  check_id_list(doc, "parameters", dataset.parameters);

  const auto records = doc.find("records");
  if (records == doc.end()) fail_validation("missing top-level field 'records'");
  if (!records->is_array()) fail_validation("'records' must be an array");

  const std::set<std::string> universe(dataset.universe.begin(),
                                       dataset.universe.end());
  const std::set<std::string> experts(dataset.experts.begin(),
                                      dataset.experts.end());
  const std::set<std::string> parameters(dataset.parameters.begin(),
                                         dataset.parameters.end());

  SoftExpertSet::EntryMap entries;
  std::size_t index = 0;
  for (const auto& record : *records) {
    std::ostringstream at_stream;
    at_stream << "records[" << index++ << "]";
    const auto at = at_stream.str();

    if (!record.is_object()) fail_validation(at + ": record must be an object");
    for (const auto& [field, unused] : record.items()) {
      if (field != "parameter" && field != "negated" && field != "expert" &&
          field != "opinion" && field != "values") {
        fail_validation(at + ": unknown field '" + field + "'");
      }
    }

    const auto require = [&](const char* field) -> const json& {
      const auto it = record.find(field);
      if (it == record.end()) {
        fail_validation(at + ": missing field '" + field + "'");
      }
      return *it;
    };

    const auto& parameter = require("parameter");
    if (!parameter.is_string()) {
      fail_validation(at + ": 'parameter' must be a string");
    }
    AssessmentKey key;
    key.parameter.name = parameter.get<std::string>();
    if (!parameters.contains(key.parameter.name)) {
      fail_validation(at + ": undeclared parameter '" + key.parameter.name +
                      "'");
    }

    if (const auto negated = record.find("negated"); negated != record.end()) {
      if (!negated->is_boolean()) {
        fail_validation(at + ": 'negated' must be a boolean");
      }
      key.parameter.negated = negated->get<bool>();
    }

    const auto& expert = require("expert");
    if (!expert.is_string()) fail_validation(at + ": 'expert' must be a string");
    key.expert = expert.get<std::string>();
    if (!experts.contains(key.expert)) {
      fail_validation(at + ": undeclared expert '" + key.expert + "'");
    }

    const auto& opinion = require("opinion");
    if (!opinion.is_number_integer() ||
        (opinion.get<std::int64_t>() != 0 && opinion.get<std::int64_t>() != 1)) {
      fail_validation(at + ": 'opinion' must be 1 (agree) or 0 (disagree)");
    }
    key.opinion =
        opinion.get<std::int64_t>() == 1 ? Opinion::agree : Opinion::disagree;

    const auto& values = require("values");
    if (!values.is_object()) {
      fail_validation(at + ": 'values' must be an object keyed by element id");
    }

    SoftExpertSet::ElementMap elements;
    for (const auto& [element, value] : values.items()) {
      if (!universe.contains(element)) {
        fail_validation(at + ": undeclared element '" + element + "'");
      }
      elements.emplace(element,
                       parse_value(value, at + ".values." + element));
    }

    if (!entries.emplace(key, std::move(elements)).second) {
      fail_validation(at + ": duplicate assessment key " + describe_key(key));
    }
  }

  dataset.set = SoftExpertSet(std::move(entries));
  return dataset;
}

std::string serialize(const Dataset& dataset) {
  ordered_json doc;
  doc["universe"] = dataset.universe;
  doc["experts"] = dataset.experts;
  doc["parameters"] = dataset.parameters;

  auto& records = doc["records"] = ordered_json::array();
  for (const auto& [key, elements] : dataset.set.entries()) {
    ordered_json record;
    record["parameter"] = key.parameter.name;
    record["negated"] = key.parameter.negated;
    record["expert"] = key.expert;
    record["opinion"] = key.opinion == Opinion::agree ? 1 : 0;
    auto& values = record["values"] = ordered_json::object();
    for (const auto& [element, v] : elements) {
      values[element] = {v.t_pos(), v.i_pos(), v.f_pos(),
                         v.t_neg(), v.i_neg(), v.f_neg()};
    }
    records.push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

std::string export_ranking(const Ranking& ranking) {
  std::string out = "rank,element,agree_score,disagree_score,final_score\n";
  for (const auto& alt : ranking.alternatives) {
    out += std::to_string(alt.rank);
    out += ',';
    out += alt.element;
    out += ',';
    out += fixed6(alt.agree_score);
    out += ',';
    out += fixed6(alt.disagree_score);
    out += ',';
    out += fixed6(alt.final_score);
    out += '\n';
  }
  return out;
}

bool equals(const Dataset& a, const Dataset& b, double tolerance) {
  return a.universe == b.universe && a.experts == b.experts &&
         a.parameters == b.parameters && equals(a.set, b.set, tolerance);
}

}  // namespace bnses
