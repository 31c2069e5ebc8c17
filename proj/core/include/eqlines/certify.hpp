#pragma once

// Certificates: one structured, JSON-serializable record per verified claim,
// and the commands that produce them.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqlines/seidel.hpp"

namespace eqlines::certify {

inline constexpr const char* kArtifactVersion = "eqlines 1.0.0";
inline constexpr long kExpectedAutOrder = 216;

enum class Status { kPass, kFail };

struct Certificate {
  std::string claim_id;
  std::string clause;  // the statement being certified, in words
  Status status = Status::kFail;
  std::string summary;
  std::string inputs_digest;  // SHA-256 of the canonical inputs
  nlohmann::json details = nlohmann::json::object();
  std::int64_t runtime_ms = 0;

  bool passed() const { return status == Status::kPass; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Report {
  std::string artifact_version = kArtifactVersion;
  std::vector<Certificate> certificates;

  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

// Copy of a serialized report with every "runtime_ms" removed.
nlohmann::json without_timing(const nlohmann::json& report);

// Hex SHA-256 of the compact serialization of `canonical_inputs`.
std::string digest(const nlohmann::json& canonical_inputs);

enum class Command { kGolay, kConstruct, kSpectrum, kAut, kMaximality, kSubscan, kAll };
enum class Stage { kFinal, kAsche };

struct RunConfig {
  Command command = Command::kAll;
  std::set<std::size_t> orders{50, 51, 52, 53};
  unsigned jobs = 1;
  std::optional<std::string> output_path;
  bool emit_vectors = false;
  Stage stage = Stage::kFinal;
  bool corrupt_generator = false;  // negative control for the Golay gates
  std::function<void(const std::string&, std::uint64_t, std::uint64_t)> progress;
};

// Spectra as printed for S and for the order-52 submatrix T.
SpectrumClaim expected_spectrum_s();
SpectrumClaim expected_spectrum_t();

Certificate cmd_golay(const RunConfig& config);
Certificate cmd_construct(const RunConfig& config);
Certificate cmd_remark(const RunConfig& config);
Certificate cmd_spectrum(const RunConfig& config);
Certificate cmd_aut(const RunConfig& config);
Certificate cmd_maximality(const RunConfig& config);
Certificate cmd_subscan(const RunConfig& config);

// Every certificate in dependency order. Certificates are appended to `out`
// as they complete, so a partial list survives an exception.
void cmd_certify_all(const RunConfig& config, std::vector<Certificate>& out);
std::vector<Certificate> cmd_certify_all(const RunConfig& config);

// Certificates for config.command.
Report run(const RunConfig& config);

}  // namespace eqlines::certify
