#include "dehnfill/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "dehnfill/errors.hpp"

namespace dehn {

using nlohmann::json;

Check Check::near(std::string name, double computed, double expected, double tolerance) {
  return {std::move(name), computed, expected, tolerance, std::abs(computed - expected) <= tolerance};
}

Check Check::at_least(std::string name, double computed, double expected, double tolerance) {
  return {std::move(name), computed, expected, tolerance, computed >= expected - tolerance};
}

bool CommandReport::all_checks_pass() const noexcept {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json interval(const std::optional<Interval>& i) {
  if (!i) return nullptr;
  return json{{"lo", number(i->lo)}, {"hi", number(i->hi)}};
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

}  // namespace

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name},
           {"computed", number(c.computed)},
           {"expected", number(c.expected)},
           {"tolerance", number(c.tolerance)},
           {"pass", c.pass}};
}

void from_json(const json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.computed = number_from(j.at("computed"));
  c.expected = number_from(j.at("expected"));
  c.tolerance = number_from(j.at("tolerance"));
  c.pass = j.at("pass").get<bool>();
}

void to_json(json& j, const CommandReport& r) {
  j = json{{"command", r.command},
           {"status", r.status == Status::ok ? "ok" : "error"},
           {"payload", r.payload},
           {"checks", r.checks}};
}

void from_json(const json& j, CommandReport& r) {
  r.command = j.at("command").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  if (status != "ok" && status != "error") throw DomainError("unknown report status '" + status + "'");
  r.status = status == "ok" ? Status::ok : Status::error;
  r.payload = j.at("payload");
  r.checks = j.at("checks").get<std::vector<Check>>();
}

json certificate_json(const FillingCertificate& cert) {
  json per_cusp = json::array();
  for (double l : cert.per_cusp_lhat) per_cusp.push_back(number(l));
  return json{{"per_cusp_lhat", per_cusp},
              {"combined_lhat", number(cert.combined_lhat)},
              {"certified", cert.certified},
              {"margin", number(cert.margin)},
              {"tube_radius_floor", optional_number(cert.tube_radius_floor)},
              {"volume_drop", interval(cert.volume_drop)},
              {"visual_area", interval(cert.visual_area)},
              {"core_length_hi", optional_number(cert.core_length_hi)},
              {"z_hat", optional_number(cert.z_hat)},
              {"z_tilde", optional_number(cert.z_tilde)}};
}

std::string format_number(double v) {
  char buf[64];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (digits == 17 || std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string figure_csv(const FigureTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

void render_figure_csv(const FigureTable& table, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  const std::string text = figure_csv(table);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) throw Error("failed writing '" + path + "'");
}

}  // namespace dehn
