#include "bnses/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "bnses/dataset.hpp"
#include "bnses/decision.hpp"

namespace bnses::cli {
namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCategory::io, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCategory::io, "failed to read '" + path + "'");
  }
  return std::move(buffer).str();
}

Dataset load(const std::string& path) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::io) throw;
    throw Error(e.category(), path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCategory::io,
                "cannot open '" + output_path + "' for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw Error(ErrorCategory::io, "failed to write '" + output_path + "'");
  }
}

// "t_pos,i_pos,f_pos,t_neg,i_neg,f_neg" with decimal literals.
BipolarNumber parse_value_literal(const std::string& literal) {
  const auto fail = [&]() -> BipolarNumber {
    throw Error(ErrorCategory::domain,
                "malformed value literal '" + literal +
                    "': expected six comma-separated reals");
  };
  double components[6];
  std::string_view rest = literal;
  for (int i = 0; i < 6; ++i) {
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    const auto end =
        std::from_chars(rest.data(), rest.data() + rest.size(), components[i]);
    if (end.ec != std::errc{}) return fail();
    rest.remove_prefix(static_cast<std::size_t>(end.ptr - rest.data()));
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (i < 5) {
      if (rest.empty() || rest.front() != ',') return fail();
      rest.remove_prefix(1);
    }
  }
  if (!rest.empty()) return fail();
  return {components[0], components[1], components[2],
          components[3], components[4], components[5]};
}

std::vector<std::string> merged_sorted(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  std::set<std::string> ids(a.begin(), a.end());
  ids.insert(b.begin(), b.end());
  return {ids.begin(), ids.end()};
}

// Declarations of a combined dataset are order-independent, so both operand
// orders serialize to identical bytes.
Dataset combined(const Dataset& a, const Dataset& b, SoftExpertSet set) {
  Dataset out;
  out.universe = merged_sorted(a.universe, b.universe);
  out.experts = merged_sorted(a.experts, b.experts);
  out.parameters = merged_sorted(a.parameters, b.parameters);
  out.set = std::move(set);
  return out;
}

std::string score_table(const Dataset& dataset) {
  std::ostringstream out;
  out << "parameter,negated,expert,opinion,element,score\n";
  char buf[32];
  for (const auto& [key, elements] : dataset.set.entries()) {
    for (const auto& [element, value] : elements) {
      std::snprintf(buf, sizeof buf, "%.6f", score(value));
      out << key.parameter.name << ','
          << (key.parameter.negated ? "true" : "false") << ',' << key.expert
          << ',' << (key.opinion == Opinion::agree ? 1 : 0) << ',' << element
          << ',' << buf << '\n';
    }
  }
  return std::move(out).str();
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::parse:
    case ErrorCategory::validation: return 1;
    case ErrorCategory::domain: return 2;
    case ErrorCategory::io: return 3;
  }
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"bipolar neutrosophic soft expert set toolkit", "bnses"};
  app.require_subcommand(1);
  app.fallthrough();

  double tolerance = default_tolerance;
  app.add_option("--tolerance", tolerance,
                 "absolute tolerance for approximate comparisons")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string input;
  std::string second_input;
  std::string output;
  std::function<void()> action;

  const auto add_output_option = [&output](CLI::App* cmd) {
    cmd->add_option("-o,--output", output,
                    "write the result here instead of standard output");
  };
  const auto one_input = [&input](CLI::App* cmd, const char* what) {
    cmd->add_option("file", input, what)->required();
  };

  auto* validate_cmd =
      app.add_subcommand("validate", "check a dataset file and exit");
  one_input(validate_cmd, "dataset file");
  validate_cmd->callback([&] {
    action = [&] { load(input); };
  });

  auto* complement_cmd = app.add_subcommand(
      "complement", "complement of a dataset's soft expert set");
  one_input(complement_cmd, "dataset file");
  add_output_option(complement_cmd);
  complement_cmd->callback([&] {
    action = [&] {
      Dataset dataset = load(input);
      dataset.set = complement(dataset.set);
      emit(serialize(dataset), output, out);
    };
  });

  auto* union_cmd = app.add_subcommand("union", "union of two datasets");
  union_cmd->add_option("first", input, "first dataset file")->required();
  union_cmd->add_option("second", second_input, "second dataset file")
      ->required();
  add_output_option(union_cmd);
  union_cmd->callback([&] {
    action = [&] {
      const Dataset a = load(input);
      const Dataset b = load(second_input);
      emit(serialize(combined(a, b, set_union(a.set, b.set))), output, out);
    };
  });

  auto* intersect_cmd =
      app.add_subcommand("intersect", "intersection of two datasets");
  intersect_cmd->add_option("first", input, "first dataset file")->required();
  intersect_cmd->add_option("second", second_input, "second dataset file")
      ->required();
  add_output_option(intersect_cmd);
  intersect_cmd->callback([&] {
    action = [&] {
      const Dataset a = load(input);
      const Dataset b = load(second_input);
      emit(serialize(combined(a, b, set_intersection(a.set, b.set))), output,
           out);
    };
  });

  auto* agree_cmd =
      app.add_subcommand("agree", "keep only agreeing records");
  one_input(agree_cmd, "dataset file");
  add_output_option(agree_cmd);
  agree_cmd->callback([&] {
    action = [&] {
      Dataset dataset = load(input);
      dataset.set = restrict_agree(dataset.set);
      emit(serialize(dataset), output, out);
    };
  });

  auto* disagree_cmd =
      app.add_subcommand("disagree", "keep only disagreeing records");
  one_input(disagree_cmd, "dataset file");
  add_output_option(disagree_cmd);
  disagree_cmd->callback([&] {
    action = [&] {
      Dataset dataset = load(input);
      dataset.set = restrict_disagree(dataset.set);
      emit(serialize(dataset), output, out);
    };
  });

  auto* score_cmd = app.add_subcommand(
      "score", "per-record per-element score table for a dataset");
  one_input(score_cmd, "dataset file");
  add_output_option(score_cmd);
  score_cmd->callback([&] {
    action = [&] { emit(score_table(load(input)), output, out); };
  });

  auto* compare_cmd = app.add_subcommand(
      "compare", "compare two value literals such as \"0.3,0.5,0.7,-0.2,-0.3,-0.4\"");
  compare_cmd->add_option("first", input, "first value literal")->required();
  compare_cmd->add_option("second", second_input, "second value literal")
      ->required();
  compare_cmd->callback([&] {
    action = [&] {
      const auto ordering = compare(parse_value_literal(input),
                                    parse_value_literal(second_input),
                                    tolerance);
      out << to_string(ordering) << '\n';
    };
  });

  auto* rank_cmd = app.add_subcommand(
      "rank", "rank the universe of a dataset by aggregated scores");
  one_input(rank_cmd, "dataset file");
  add_output_option(rank_cmd);
  rank_cmd->callback([&] {
    action = [&] { emit(export_ranking(rank(load(input))), output, out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
  } catch (const Error& e) {
    err << "error (" << to_string(e.category()) << "): " << e.what() << '\n';
    return exit_code(e.category());
  }
  return 0;
}

}  // namespace bnses::cli
