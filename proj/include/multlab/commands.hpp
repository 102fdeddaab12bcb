#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multlab/errors.hpp"
#include "multlab/problem.hpp"

namespace multlab {

inline constexpr int kReportSchema = 1;

const std::vector<std::string>& command_names();

struct RunOptions {
  /// Overrides the field of the problem file.
  std::optional<std::string> field;
  /// Echoed into the report.
  std::uint64_t seed = 0;
  /// Adds wall-clock time (breaks byte-identical reports).
  bool timing = false;
};

struct Report {
  nlohmann::ordered_json doc;
  /// 0, or 4 when a checked property fails without an exception.
  int exit_code = 0;
};

Report run(const std::string& command, const ProblemFile& problem, const RunOptions& options = {});

/// Report for a run that raised `error`.
nlohmann::ordered_json error_report(const std::string& command, const Error& error);

/// Plain-text rendering of a report.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace multlab
