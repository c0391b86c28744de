#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weyl27::cli {

enum class Command { group, enumerate, classify, pairs, invariants, export_gap, verify };
enum class Format { json, csv, text };

struct RunConfig {
  Command command = Command::verify;
  std::optional<std::string> output_path;
  Format format = Format::text;
  int workers = 1;
  std::optional<int> n_filter;
  /// group: JSON file with six root vectors replacing the built-in basis.
  std::optional<std::string> roots_path;
  /// invariants: explicit arrangements (1-based) instead of all orbit reps.
  std::vector<std::vector<int>> sets;
  /// Defaults to default_expectations_path().
  std::optional<std::string> expectations_path;
};

/// Throws std::invalid_argument on a bad name.
Format parse_format(const std::string& name);
/// "1,2,3,4,21" -> {1,2,3,4,21}; "" -> {}.
std::vector<int> parse_index_list(const std::string& text);

int default_workers();

/// Each command writes its report to cfg.output_path when set, else to out,
/// and diagnostics to err. The return value is the process exit status.
int cmd_group(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_pairs(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export_gap(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace weyl27::cli
