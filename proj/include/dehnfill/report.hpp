#pragma once

// JSON command reports and CSV figure files emitted by the command line tool.

#include <string>
#include <vector>

#include <json.hpp>

#include "dehnfill/certificates.hpp"

namespace dehn {

struct Check {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  /// pass = |computed - expected| <= tolerance
  static Check near(std::string name, double computed, double expected, double tolerance);
  /// pass = computed >= expected - tolerance
  static Check at_least(std::string name, double computed, double expected, double tolerance);

  friend bool operator==(const Check&, const Check&) = default;
};

enum class Status { ok, error };

struct CommandReport {
  std::string command;
  Status status = Status::ok;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<Check> checks;

  bool all_checks_pass() const noexcept;
};

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const CommandReport& r);
void from_json(const nlohmann::json& j, CommandReport& r);

/// FillingCertificate with its field names; absent optionals become null.
nlohmann::json certificate_json(const FillingCertificate& cert);

/// Shortest decimal that round-trips (at least 17 significant digits when needed).
std::string format_number(double v);

/// Header row of column names, then one row per sample; LF line endings.
std::string figure_csv(const FigureTable& table);

/// Writes figure_csv(table) to path. Throws Error if the file cannot be written.
void render_figure_csv(const FigureTable& table, const std::string& path);

}  // namespace dehn
