// Command-line front end. Links only the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpp/fpp.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct SessionDeleter {
  void operator()(fpp_session* s) const { fpp_session_destroy(s); }
};
struct ReportDeleter {
  void operator()(fpp_report* r) const { fpp_report_destroy(r); }
};
using Session = std::unique_ptr<fpp_session, SessionDeleter>;
using Report = std::unique_ptr<fpp_report, ReportDeleter>;

int error(fpp_status s) {
  std::cerr << "fpp: " << fpp_status_string(s) << ": " << fpp_last_error() << "\n";
  return kExitError;
}

int emit(fpp_report* report, const std::string& json_path) {
  const char* text = nullptr;
  if (auto s = fpp_report_text(report, &text); s != FPP_OK) return error(s);
  std::cout << text;
  if (!json_path.empty()) {
    const char* json = nullptr;
    if (auto s = fpp_report_json(report, &json); s != FPP_OK) return error(s);
    if (json_path == "-") {
      std::cout << json;
    } else {
      std::ofstream os(json_path, std::ios::binary);
      os << json;
      if (!os) {
        std::cerr << "fpp: cannot write " << json_path << "\n";
        return kExitError;
      }
    }
  }
  return fpp_report_failures(report) == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the division algebra over Q(sqrt(-7)), its lattice group and the building of PGL_3(Q_2)"};
  app.set_version_flag("--version", std::string(fpp_version()));
  app.require_subcommand(1);
  app.fallthrough();

  fpp_config config = fpp_config_default();
  std::string json_path;
  app.add_option("--precision", config.precision, "Starting 2-adic precision in bits")
      ->check(CLI::Range(8, 1024))
      ->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Float tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for sampling and the Sylow subgroup")->capture_default_str();
  app.add_option("--max-radius", config.max_radius, "Largest building radius accepted")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  app.add_option("--max-factor-exponent", config.max_factor_exponent, "Use similitude factors 2^k, k <= this")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  app.add_option("--samples", config.samples, "Random samples per property check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--json", json_path, "Also write the JSON report to this path ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "Run the checks");
  std::string filter;
  verify->add_option("--filter", filter, "Only checks whose id starts with this prefix");

  auto* building = app.add_subcommand("building", "Ball sizes and transitivity around the standard vertex");
  int radius = 1;
  std::vector<std::int64_t> factors;
  building->add_option("--radius", radius, "Ball radius")->check(CLI::NonNegativeNumber)->capture_default_str();
  building->add_option("--factors", factors, "Similitude factors to use (powers of 2)")->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "Write all similitudes with a given factor");
  std::int64_t factor = 1;
  std::string output;
  enumerate->add_option("--factor", factor, "Similitude factor (a power of 2)")->capture_default_str();
  enumerate->add_option("--output,-o", output, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  fpp_session* raw = nullptr;
  if (auto s = fpp_session_create(&config, &raw); s != FPP_OK) return error(s);
  Session session(raw);

  if (*verify) {
    fpp_report* r = nullptr;
    if (auto s = fpp_verify(session.get(), filter.c_str(), &r); s != FPP_OK) return error(s);
    return emit(Report(r).get(), json_path);
  }
  if (*building) {
    fpp_report* r = nullptr;
    if (auto s = fpp_building(session.get(), radius, factors.data(), factors.size(), &r); s != FPP_OK) return error(s);
    return emit(Report(r).get(), json_path);
  }
  std::size_t count = 0;
  if (auto s = fpp_enumerate(session.get(), factor, output.c_str(), &count); s != FPP_OK) return error(s);
  std::cout << "wrote " << count << " similitudes with factor " << factor << " to " << output << "\n";
  return 0;
}
