#pragma once

// The proccat command line: check, scale validate, dump.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "proccat/laws.hpp"

namespace proccat {

enum class ReportFormat { Human, Machine };

struct RunConfig {
  std::optional<std::string> scale;  // a finite(...) expression; the grid's scales otherwise
  std::string grid_path;             // empty: built-in grid
  std::vector<std::string> suites;   // empty: all
  std::uint64_t cap = kExhaustiveLimit;
  Mutation mutation = Mutation::None;
  std::optional<std::string> out_dir;
  ReportFormat format = ReportFormat::Human;
  bool timing = false;
};

/// One JSON object per line with keys suite, instance, verdict, witness,
/// millis, detail, in that order.
std::string machine_line(const LawReport& r);
/// "[pass] suite | instance", with witness lines for failures.
std::string human_lines(const LawReport& r);

/// 0 all pass, 1 any failure or error, 3 cap exceeded without failures.
int exit_code(const std::vector<LawReport>& reports);

/// Entry point; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace proccat
