#include <doctest.h>

#include "eqlines/certify.hpp"

using namespace eqlines;
using namespace eqlines::certify;
using nlohmann::json;

namespace {

RunConfig config_for(Command command) {
  RunConfig config;
  config.command = command;
  return config;
}

}  // namespace

TEST_CASE("digest is stable and key-order independent") {
  const json a = {{"x", 1}, {"y", {1, 2, 3}}};
  const json b = json::parse(R"({"y": [1, 2, 3], "x": 1})");
  CHECK(digest(a) == digest(b));
  CHECK(digest(a) != digest(json{{"x", 2}, {"y", {1, 2, 3}}}));
  const std::string d = digest(a);
  CHECK(d.starts_with("sha256:"));
  CHECK(d.size() == 7 + 64);
  // SHA-256 of the empty JSON object "{}".
  CHECK(digest(json::object()) == "sha256:44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST_CASE("report JSON round trip") {
  Report report;
  Certificate c;
  c.claim_id = "golay.gates";
  c.clause = "clause";
  c.status = Status::kPass;
  c.summary = "summary";
  c.inputs_digest = digest(json::object());
  c.details = {{"weights", {{"8", 759}}}};
  c.runtime_ms = 12;
  report.certificates.push_back(c);
  c.claim_id = "other";
  c.status = Status::kFail;
  report.certificates.push_back(c);

  const json j = report;
  CHECK(j.at("artifact_version") == kArtifactVersion);
  CHECK(j.at("certificates").at(1).at("status") == "fail");
  const Report back = j.get<Report>();
  CHECK(back == report);
  CHECK_FALSE(back.all_passed());

  const json stripped = without_timing(j);
  CHECK_FALSE(stripped.at("certificates").at(0).contains("runtime_ms"));
  CHECK(stripped.at("certificates").at(0).at("details") == j.at("certificates").at(0).at("details"));
}

TEST_CASE("expected spectra satisfy the trace identities") {
  for (const auto& [claim, n] : {std::pair{expected_spectrum_s(), 54}, std::pair{expected_spectrum_t(), 52}}) {
    CHECK(claim.order() == static_cast<std::size_t>(n));
    CHECK(claim.eigenvalue_sum() == 0);
    CHECK(claim.eigenvalue_square_sum() == n * (n - 1));
  }
  CHECK(expected_spectrum_s().polynomial().degree() == 54);
  CHECK(expected_spectrum_t().integral());
}

TEST_CASE("golay certificate and its negative control") {
  const auto good = cmd_golay(config_for(Command::kGolay));
  CHECK(good.passed());
  CHECK(good.claim_id == "golay.gates");

  auto config = config_for(Command::kGolay);
  config.corrupt_generator = true;
  const auto bad = cmd_golay(config);
  CHECK_FALSE(bad.passed());
  CHECK(bad.summary.find("self_duality") != std::string::npos);
}

TEST_CASE("construction certificates") {
  const auto fin = cmd_construct(config_for(Command::kConstruct));
  CHECK(fin.passed());
  CHECK(fin.claim_id == "lines.count");

  auto config = config_for(Command::kConstruct);
  config.stage = Stage::kAsche;
  config.emit_vectors = true;
  const auto asche = cmd_construct(config);
  CHECK(asche.passed());
  CHECK(asche.claim_id == "asche.count");

  const auto remark = cmd_remark(config_for(Command::kConstruct));
  CHECK(remark.passed());
  CHECK(remark.claim_id == "cliques.removed");
}

TEST_CASE("spectrum and automorphism certificates") {
  const auto spectrum = cmd_spectrum(config_for(Command::kSpectrum));
  CHECK(spectrum.passed());
  CHECK(spectrum.claim_id == "spectrum.S");

  const auto aut = cmd_aut(config_for(Command::kAut));
  CHECK(aut.passed());
  CHECK(aut.details.at("order") == 216);
  CHECK(aut.details.at("permutation_order") == 36);
  CHECK(aut.details.at("permutation_order_matches_expected") == false);
  CHECK(aut.details.at("generators_verified") == true);
}

TEST_CASE("subscan restricted to order 53 passes with no hits") {
  auto config = config_for(Command::kSubscan);
  config.orders = {53};
  const auto cert = cmd_subscan(config);
  CHECK(cert.passed());
  CHECK(cert.details.at("hits").empty());
}

TEST_CASE("run dispatches by command and is deterministic modulo timing") {
  auto config = config_for(Command::kConstruct);
  const json first = run(config);
  const json second = run(config);
  CHECK(first.at("certificates").size() == 2);
  CHECK(without_timing(first) == without_timing(second));
}
