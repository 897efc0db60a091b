// Command-line front end: compute the coefficient tables, cross-check the
// independent routes and compare against the golden files.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "schoen/commands.hpp"
#include "schoen/errors.hpp"
#include "schoen/golden.hpp"

namespace {

using schoen::cli::ExitCode;
using schoen::cli::OutputFormat;

constexpr int kInternalError = 70;

void add_format_option(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficient tables and mirror check for the Schoen threefold"};
  app.require_subcommand(1);

  std::string format = "human";
  std::size_t order = schoen::cli::kDefaultOrder;

  auto* amodel_cmd = app.add_subcommand("amodel", "c_n and a_n tables");
  std::string route_name = "jacobi";
  amodel_cmd->add_option("--order", order, "Highest n")->capture_default_str();
  amodel_cmd->add_option("--route", route_name, "How c_n is computed")
      ->check(CLI::IsMember({"jacobi", "lattice", "both"}))
      ->capture_default_str();
  add_format_option(amodel_cmd, format);

  auto* bmodel_cmd = app.add_subcommand("bmodel", "b_n table");
  bmodel_cmd->add_option("--order", order, "Highest n")->capture_default_str();
  add_format_option(bmodel_cmd, format);

  auto* verify_cmd = app.add_subcommand("verify", "a_n = b_n and golden-file comparison");
  std::optional<std::string> golden_dir;
  bool regenerate = false;
  verify_cmd->add_option("--order", order, "Highest n")->capture_default_str();
  verify_cmd->add_option("--golden-dir", golden_dir,
                         std::string("Golden file directory (default: $") + schoen::golden::kDirEnv + ")");
  verify_cmd->add_flag("--regenerate-golden", regenerate, "Rewrite the golden files and print a diff");
  add_format_option(verify_cmd, format);

  auto* pf_cmd = app.add_subcommand("pf-check", "Picard-Fuchs annihilation of the fundamental period");
  unsigned degree = 6;
  std::optional<std::string> flip;
  pf_cmd->add_option("--degree", degree, "Highest total degree checked (>= 2)")
      ->check(CLI::Range(2U, 1000U))
      ->capture_default_str();
  pf_cmd->add_option("--flip-sign", flip, "Self-test fixture: flip the sign of one operator's last term")
      ->check(CLI::IsMember({"D1", "D2", "D3"}));
  add_format_option(pf_cmd, format);

  auto* root_cmd = app.add_subcommand("theta-root", "Dump lattice theta multidegree data");
  int qorder = 4;
  root_cmd->add_option("--qorder", qorder, "Highest level Q/2")->check(CLI::Range(0, 100))->capture_default_str();
  add_format_option(root_cmd, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ExitCode::kOk : ExitCode::kUsage;
  }

  const OutputFormat out_format = *schoen::cli::parse_format(format);
  try {
    schoen::cli::RunReport report;
    if (amodel_cmd->parsed()) {
      static const std::map<std::string, schoen::amodel::ThetaRoute> routes{
          {"jacobi", schoen::amodel::ThetaRoute::jacobi},
          {"lattice", schoen::amodel::ThetaRoute::lattice},
          {"both", schoen::amodel::ThetaRoute::both}};
      report = schoen::cli::cmd_amodel(order, routes.at(route_name));
    } else if (bmodel_cmd->parsed()) {
      report = schoen::cli::cmd_bmodel(order);
    } else if (verify_cmd->parsed()) {
      schoen::cli::VerifyOptions options{.order = order, .regenerate_golden = regenerate};
      if (golden_dir) options.golden_dir = std::filesystem::path(*golden_dir);
      report = schoen::cli::cmd_verify(options, std::cerr);
    } else if (pf_cmd->parsed()) {
      report = schoen::cli::cmd_pf_check(degree, flip);
    } else {
      report = schoen::cli::cmd_theta_root(qorder);
    }
    std::cout << schoen::cli::render(report, out_format);
    return report.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kUsage;
  } catch (const schoen::RouteMismatchError& e) {
    std::cerr << "route mismatch: " << e.what() << "\n";
    return ExitCode::kRouteMismatch;
  } catch (const schoen::IntegralityError& e) {
    std::cerr << "integrality failure: " << e.what() << "\n";
    return ExitCode::kIntegrality;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
