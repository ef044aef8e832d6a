#pragma once

// Check records and the versioned JSON report (schema "fpp-report/1").
// Everything outside the "header" object is byte-stable across runs.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fpp {

inline constexpr const char* kReportSchema = "fpp-report/1";

enum class CheckStatus { Pass, Fail, PaperTrusted, Skipped };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  double seconds = 0;
};

struct Config {
  int precision = 64;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int max_radius = 3;
  int max_factor_exponent = 3;
  int samples = 100;
};

nlohmann::ordered_json to_json(const Config& c);

class Report {
 public:
  Report(std::string command, Config config) : command_(std::move(command)), config_(config) {}

  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  void set_conventions(nlohmann::ordered_json c) { conventions_ = std::move(c); }
  void set_wall_time(double seconds) { wall_seconds_ = seconds; }

  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::size_t count(CheckStatus s) const;
  std::size_t failures() const { return count(CheckStatus::Fail); }

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  Config config_;
  nlohmann::ordered_json conventions_ = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks_;
  double wall_seconds_ = 0;
};

}  // namespace fpp
