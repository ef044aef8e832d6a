#include "fpp/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace fpp {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::PaperTrusted: return "PAPER-TRUSTED";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

nlohmann::ordered_json to_json(const Config& c) {
  return {{"precision", c.precision},
          {"tolerance", c.tolerance},
          {"seed", c.seed},
          {"max_radius", c.max_radius},
          {"max_factor_exponent", c.max_factor_exponent},
          {"samples", c.samples}};
}

std::size_t Report::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == s;
  return n;
}

nlohmann::ordered_json Report::to_json() const {
  using nlohmann::ordered_json;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream stamp;
  stamp << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");

  ordered_json timings = ordered_json::object();
  for (const auto& c : checks_) timings[c.id] = c.seconds;

  ordered_json checks = ordered_json::array();
  for (const auto& c : checks_)
    checks.push_back({{"id", c.id}, {"statement", c.statement}, {"status", to_string(c.status)}, {"witness", c.witness}});

  ordered_json out;
  out["schema"] = kReportSchema;
  out["header"] = {{"generated_at", stamp.str()}, {"wall_time_seconds", wall_seconds_}, {"timings", timings}};
  out["command"] = command_;
  out["config"] = fpp::to_json(config_);
  out["conventions"] = conventions_;
  out["summary"] = {{"total", checks_.size()},
                    {"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"paper_trusted", count(CheckStatus::PaperTrusted)},
                    {"skipped", count(CheckStatus::Skipped)}};
  out["checks"] = checks;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << std::left << std::setw(14) << to_string(c.status) << std::setw(32) << c.id << " " << c.statement << "\n";
    if (c.status == CheckStatus::Fail && c.witness.contains("failures"))
      for (const auto& f : c.witness["failures"]) os << "    - " << f.get<std::string>() << "\n";
  }
  os << checks_.size() << " checks: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail) << " fail, "
     << count(CheckStatus::PaperTrusted) << " paper-trusted, " << count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

}  // namespace fpp
