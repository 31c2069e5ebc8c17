// eqlines: certificates for the 54-line equiangular system in R^18.
//
//   eqlines golay | construct | spectrum | aut | maximality | subscan | all
//           [--jobs N] [--out PATH] [--emit-vectors]
//
// Exit codes: 0 every certificate passes, 1 a certificate failed,
// 2 usage or internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "eqlines/certify.hpp"

namespace {

using eqlines::certify::Certificate;
using eqlines::certify::Command;
using eqlines::certify::Report;
using eqlines::certify::RunConfig;
using eqlines::certify::Stage;

void print_summary(std::ostream& out, const Certificate& c) {
  out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.claim_id << ": " << c.summary << " (" << c.runtime_ms << " ms)\n";
}

void write_report(const Report& report, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << nlohmann::json(report).dump(2) << '\n';
}

std::set<std::size_t> parse_orders(const std::string& text) {
  std::set<std::size_t> orders;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(item, &pos);
    if (pos != item.size() || value < 50 || value > 53) throw CLI::ValidationError("--orders", "orders must lie in 50..53");
    orders.insert(value);
  }
  if (orders.empty()) throw CLI::ValidationError("--orders", "at least one order is required");
  return orders;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for the 54 equiangular lines in R^18 built from the binary Golay code"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  std::string orders_text = "50,51,52,53";
  std::string stage_text = "final";
  bool show_progress = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out,-o", out_path, "write the JSON report to PATH");
    sub->add_flag("--emit-vectors", config.emit_vectors, "include the scaled integer vectors in the report");
    sub->add_flag("--progress", show_progress, "print search progress to stderr");
  };

  auto* golay = app.add_subcommand("golay", "Golay code validation gates");
  add_common(golay);
  golay->add_flag("--corrupt-generator", config.corrupt_generator, "flip one generator bit (negative control)");

  auto* construct = app.add_subcommand("construct", "build the 72- and 54-line systems and check the clique remark");
  add_common(construct);
  construct->add_option("--stage", stage_text, "final (54 lines) or asche (72 lines)")
      ->check(CLI::IsMember({"final", "asche"}));

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of the Seidel matrix");
  add_common(spectrum);
  auto* aut = app.add_subcommand("aut", "automorphism group of the Seidel matrix");
  add_common(aut);
  auto* maximality = app.add_subcommand("maximality", "exhaustive non-extendibility search");
  add_common(maximality);
  auto* subscan = app.add_subcommand("subscan", "integral-spectrum scan of principal submatrices");
  add_common(subscan);
  subscan->add_option("--orders", orders_text, "comma-separated subset of 50,51,52,53");
  auto* all = app.add_subcommand("all", "every certificate, in dependency order");
  add_common(all);
  all->add_option("--orders", orders_text, "comma-separated subset of 50,51,52,53 for the scan");

  try {
    app.parse(argc, argv);
    config.orders = parse_orders(orders_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (golay->parsed()) config.command = Command::kGolay;
  if (construct->parsed()) config.command = Command::kConstruct;
  if (spectrum->parsed()) config.command = Command::kSpectrum;
  if (aut->parsed()) config.command = Command::kAut;
  if (maximality->parsed()) config.command = Command::kMaximality;
  if (subscan->parsed()) config.command = Command::kSubscan;
  if (all->parsed()) config.command = Command::kAll;
  config.stage = stage_text == "asche" ? Stage::kAsche : Stage::kFinal;
  if (!out_path.empty()) config.output_path = out_path;

  std::mutex progress_mutex;
  if (show_progress) {
    config.progress = [&](const std::string& stage, std::uint64_t done, std::uint64_t total) {
      std::lock_guard lock(progress_mutex);
      std::cerr << "\r" << stage << ": " << done << "/" << total << std::flush;
      if (done == total) std::cerr << "\n";
    };
  }

  Report report;
  int status = 0;
  try {
    if (config.command == Command::kAll) {
      eqlines::certify::cmd_certify_all(config, report.certificates);
    } else {
      report = eqlines::certify::run(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = 2;
  }

  for (const auto& c : report.certificates) print_summary(std::cout, c);
  if (config.output_path) {
    try {
      write_report(report, *config.output_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (status != 0) return status;
  if (!report.all_passed()) {
    std::cout << "FAILED\n";
    return 1;
  }
  std::cout << "all " << report.certificates.size() << " certificate(s) pass\n";
  return 0;
}
