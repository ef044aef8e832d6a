#pragma once

// Verification runs behind the `verify` and `building` commands.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fpp/lattice_group.hpp"
#include "fpp/levels.hpp"
#include "fpp/report.hpp"

namespace fpp {

/// Lazily computed shared data (Sylow subgroup, similitude lists) for one
/// configuration. Not thread-safe.
class Workspace {
 public:
  explicit Workspace(Config config) : config_(config) {}

  const Config& config() const { return config_; }
  const SylowP& sylow();
  const std::vector<Similitude>& similitudes(std::int64_t factor);
  /// Lists for the factors 2^k, k <= max_exponent.
  std::map<std::int64_t, std::vector<Similitude>> similitude_lists(int max_exponent);

 private:
  Config config_;
  std::unique_ptr<SylowP> sylow_;
  std::map<std::int64_t, std::vector<Similitude>> lists_;
};

/// Ids of every check `verify` knows, in run order.
std::vector<std::string> verify_check_ids();

/// Runs the checks whose id starts with `filter` (all when empty).
Report run_verify(Workspace& ws, const std::string& filter = "");

/// Ball sizes, transitivity and stabilizers for the given radius, using the
/// similitude factors in `factors` (all 2^k, k <= max_factor_exponent, when empty).
Report run_building(Workspace& ws, int radius, const std::vector<std::int64_t>& factors = {});

/// Conventions a reader needs to reproduce the numbers: the 2-adic root for
/// lambda, the null-space basis, the Sylow generators.
nlohmann::ordered_json conventions(Workspace& ws);

}  // namespace fpp
