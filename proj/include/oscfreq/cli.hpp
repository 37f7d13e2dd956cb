#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oscfreq/numerics.hpp"

namespace oscfreq::cli {

struct RunConfig {
  std::string command;  // freq, period, sweep, table, compare
  std::optional<std::string> preset;
  std::optional<std::string> spec_file;
  std::optional<double> lambda;
  std::optional<double> epsilon;
  std::optional<double> amplitude;
  std::optional<double> a_start;
  std::optional<double> a_end;
  std::optional<int> points;
  bool log_spaced = false;
  std::vector<std::string> methods;
  std::optional<double> k;
  std::optional<double> rel_tol;
  std::optional<std::string> output;
  std::optional<std::string> format;  // csv or text
};

/// Parses argv into a RunConfig. Returns std::nullopt after printing help or a
/// usage error; exit_code is set accordingly.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code);

/// Executes a config. Output goes to `out` or, with --output, to a file
/// written through a temporary and renamed into place. Returns 0 on success
/// and 1 after printing a diagnostic to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oscfreq::cli
