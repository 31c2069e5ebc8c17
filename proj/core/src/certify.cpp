#include "eqlines/certify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <memory>
#include <sstream>

#include "eqlines/construct.hpp"
#include "eqlines/golay.hpp"
#include "eqlines/search.hpp"

namespace eqlines::certify {

using nlohmann::json;

namespace {

// Lazily built shared inputs for one run.
class Pipeline {
 public:
  const GolayCode& code() {
    if (!code_) code_ = generate_code(build_generator());
    return *code_;
  }
  const LineSystem& asche() {
    if (!asche_) asche_ = asche_system(code());
    return *asche_;
  }
  const LineSystem& final() {
    if (!final_) final_ = final_system(code());
    return *final_;
  }
  const SeidelMatrix& seidel() {
    if (!seidel_) seidel_ = seidel_from(final());
    return *seidel_;
  }
  const AutGroupResult& aut() {
    if (!aut_) aut_ = automorphism_order(seidel());
    return *aut_;
  }

 private:
  std::optional<GolayCode> code_;
  std::optional<LineSystem> asche_;
  std::optional<LineSystem> final_;
  std::optional<SeidelMatrix> seidel_;
  std::optional<AutGroupResult> aut_;
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json one_based(const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

json generator_json(const GeneratorMatrix& g) {
  json rows = json::array();
  for (auto row : g) rows.push_back(row.to_string());
  return rows;
}

json vector_json(const ScaledVector& v) { return json(std::vector<int>(v.begin(), v.end())); }

json system_json(const LineSystem& s) {
  json out = json::array();
  for (const auto& v : s.vectors) out.push_back({{"octad", v.source.coordinates()}, {"scaled", vector_json(v.coords)}});
  return out;
}

json seidel_json(const SeidelMatrix& s) {
  std::string rows;
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = 0; j < s.order(); ++j) rows += s(i, j) > 0 ? '+' : (s(i, j) < 0 ? '-' : '0');
    rows += '/';
  }
  return {{"order", s.order()}, {"rows", rows}};
}

json spectrum_json(const SpectrumClaim& claim) {
  json ints = json::array();
  for (const auto& e : claim.integer_eigs) ints.push_back({e.value, e.multiplicity});
  json out = {{"integer", ints}, {"quadratic", nullptr}};
  if (claim.quadratic) out["quadratic"] = {claim.quadratic->b, claim.quadratic->c};
  return out;
}

json filters_json(const FilterSet& f) {
  return {{"c1", f.c1.coordinates()}, {"c2", f.c2.coordinates()}, {"m", vector_json(f.m)}};
}

Certificate finish(Certificate cert, bool ok, const Stopwatch& clock) {
  cert.status = ok ? Status::kPass : Status::kFail;
  cert.runtime_ms = clock.elapsed_ms();
  return cert;
}

SearchOptions search_options(const RunConfig& config, const std::string& stage) {
  SearchOptions options;
  options.jobs = std::max(1U, config.jobs);
  if (config.progress) {
    options.progress = [&config, stage](std::uint64_t done, std::uint64_t total) { config.progress(stage, done, total); };
  }
  return options;
}

// ------------------------------------------------------------ certificates

Certificate golay_certificate(const RunConfig& config) {
  Stopwatch clock;
  Certificate cert;
  cert.claim_id = "golay.gates";
  cert.clause = "the extended binary Golay code generated by the bordered circulant matrix has 759 octads and contains c1, c2";

  GeneratorMatrix generator{};
  std::string shift = "right";
  if (config.corrupt_generator) {
    generator = assemble_generator(CirculantShift::kRight);
    generator[11] = generator[11] ^ Codeword(Codeword::bit_for(24));
    shift = "right (corrupted: row 12, coordinate 24 flipped)";
  } else {
    generator = build_generator();
    if (generator != assemble_generator(CirculantShift::kRight)) shift = "left";
  }
  const GateReport gates = check_gates(generator);
  cert.inputs_digest = digest({{"generator", generator_json(generator)}});

  json distribution = json::object();
  std::size_t words = 0;
  for (auto [w, count] : gates.weight_distribution) {
    distribution[std::to_string(w)] = count;
    words += static_cast<std::size_t>(count);
  }
  const std::string failure = gates.first_failure();
  cert.details = {{"circulant_shift", shift},
                  {"generator", generator_json(generator)},
                  {"words", words},
                  {"rank", gates.rank},
                  {"self_dual", gates.self_dual},
                  {"minimum_weight", gates.minimum_weight},
                  {"weight_distribution", distribution},
                  {"octads", gates.octad_count},
                  {"c1_in_code", gates.contains_c1},
                  {"c2_in_code", gates.contains_c2},
                  {"failed_gate", failure.empty() ? json(nullptr) : json(failure)}};
  const std::map<int, int> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  const bool ok = failure.empty() && words == 4096 && gates.weight_distribution == expected;
  cert.summary = ok ? "4096 words, minimum weight 8, 759 octads, c1 and c2 in the code"
                    : "gate failed: " + (failure.empty() ? std::string("weight_distribution") : failure);
  return finish(std::move(cert), ok, clock);
}

Certificate construct_certificate(const RunConfig& config, Pipeline& p) {
  Stopwatch clock;
  Certificate cert;
  const FilterSet filters = construction_filters();
  const LineSystem& asche = p.asche();

  auto angle_set = [](const LineSystem& s) {
    std::set<int> seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) seen.insert(scaled_inner(s.vectors[i], s.vectors[j]));
    }
    return seen;
  };
  const std::set<int> equiangular{-kScaledAngle, kScaledAngle};

  if (config.stage == Stage::kAsche) {
    cert.claim_id = "asche.count";
    cert.clause = "the octad lifts passing the c1, c2 and centre filters are 72 equiangular lines spanning R^19";
    cert.inputs_digest = digest({{"generator", generator_json(p.code().generator())}, {"filters", filters_json(filters)}});
    const auto angles = angle_set(asche);
    bool centre = true;
    for (const auto& v : asche.vectors) centre = centre && dot(v.coords, filters.centre) == 0;
    cert.details = {{"lines", asche.size()},
                    {"rank", asche.ambient_dim},
                    {"scaled_inner_products", angles},
                    {"denominator", kScaledNorm},
                    {"centre_identity", centre}};
    if (config.emit_vectors) cert.details["vectors"] = system_json(asche);
    const bool ok = asche.size() == 72 && asche.ambient_dim == 19 && angles == equiangular && centre;
    cert.summary = std::to_string(asche.size()) + " lines, rank " + std::to_string(asche.ambient_dim);
    return finish(std::move(cert), ok, clock);
  }

  cert.claim_id = "lines.count";
  cert.clause = "the lifts orthogonal to m are 54 lines spanning R^18, pairwise at angle arccos(1/5)";
  const LineSystem& fin = p.final();
  cert.inputs_digest = digest({{"generator", generator_json(p.code().generator())}, {"filters", filters_json(filters)}});

  const auto angles = angle_set(fin);
  bool centre = true;
  for (const auto& v : asche.vectors) centre = centre && dot(v.coords, filters.centre) == 0;
  // {v in 72-system : <v, m> = 0} == final system, both directions.
  std::vector<LineVector> orthogonal;
  for (const auto& v : asche.vectors) {
    if (dot(v.coords, filters.m) == 0) orthogonal.push_back(v);
  }
  const bool set_equal = orthogonal == fin.vectors;
  bool norms = true;
  for (const auto& v : fin.vectors) norms = norms && dot(v.coords, v.coords) == kScaledNorm;

  cert.details = {{"asche", {{"lines", asche.size()}, {"rank", asche.ambient_dim}}},
                  {"final", {{"lines", fin.size()}, {"rank", fin.ambient_dim}}},
                  {"removed", asche.size() - fin.size()},
                  {"scaled_norm", kScaledNorm},
                  {"scaled_inner_products", angles},
                  {"common_angle", "16/80 = 1/5"},
                  {"centre_identity", centre},
                  {"final_equals_m_orthogonal_subset", set_equal},
                  {"unit_norms", norms}};
  if (config.emit_vectors) cert.details["vectors"] = system_json(fin);
  const bool ok = asche.size() == 72 && asche.ambient_dim == 19 && fin.size() == 54 && fin.ambient_dim == 18 &&
                  angles == equiangular && centre && set_equal && norms;
  cert.summary = "72 lines (rank 19) -> 54 lines (rank 18), all angles +-1/5";
  if (!ok) cert.summary = "construction mismatch";
  return finish(std::move(cert), ok, clock);
}

Certificate remark_certificate(Pipeline& p) {
  Stopwatch clock;
  Certificate cert;
  cert.claim_id = "cliques.removed";
  cert.clause = "the 18 lines cut by m split 9/9 by the sign of <v, m>; each half is a 9-clique and each line has two positive partners in the other half";
  const FilterSet filters = construction_filters();
  cert.inputs_digest = digest({{"asche", system_json(p.asche())}, {"filters", filters_json(filters)}});
  const RemarkReport r = verify_remark(p.asche(), p.final(), filters);

  json partners = json::array();
  for (std::size_t k = 0; k < r.u_cross_partners.size(); ++k) {
    partners.push_back({{"u", r.u[k] + 1},
                        {"v", {r.v[r.u_cross_partners[k][0]] + 1, r.v[r.u_cross_partners[k].back()] + 1}}});
  }
  cert.details = {{"removed", r.removed.size()},
                  {"U", one_based(r.u)},
                  {"V", one_based(r.v)},
                  {"U_m_pairings", r.u_m_pairings},
                  {"V_m_pairings", r.v_m_pairings},
                  {"intra_clique_scaled_inner", kScaledAngle},
                  {"cross_partners", r.passed ? partners : json::array()},
                  {"indices", "1-based positions in the 72-line system"},
                  {"failure", r.failure.empty() ? json(nullptr) : json(r.failure)}};
  cert.summary = r.passed ? "two 9-cliques, <u,m> = 24, <v,m> = -24, two cross partners each" : r.failure;
  return finish(std::move(cert), r.passed, clock);
}

Certificate spectrum_certificate(Pipeline& p) {
  Stopwatch clock;
  Certificate cert;
  cert.claim_id = "spectrum.S";
  cert.clause = "the Seidel matrix S has spectrum {[-5]^36, [7]^6, [11]^8, [13]^2, [12 - sqrt 37]^1, [12 + sqrt 37]^1}";
  const SeidelMatrix& s = p.seidel();
  const SpectrumClaim claim = expected_spectrum_s();
  cert.inputs_digest = digest({{"seidel", seidel_json(s)}, {"claim", spectrum_json(claim)}});

  const SpectrumCertificate sc = certify_spectrum(s, claim);
  json coefficients = json::array();
  for (const auto& c : sc.char_poly.coefficients()) coefficients.push_back(c.get_str());
  json nullities = json::array();
  for (const auto& n : sc.nullity_checks) {
    nullities.push_back({{"lambda", n.value}, {"claimed", n.claimed}, {"char_poly_multiplicity", n.in_char_poly}, {"nullity", n.nullity}});
  }
  const IntMatrix m = s.to_int_matrix();
  const Integer trace = m.trace();
  const Integer trace_sq = (m * m).trace();
  const auto n = static_cast<long>(s.order());
  const bool identities = claim.eigenvalue_sum() == trace && claim.eigenvalue_square_sum() == trace_sq &&
                          trace == 0 && trace_sq == n * (n - 1);
  // G = 16 (5I + S) is PSD iff the least eigenvalue of S is >= -5; the
  // certified integer part starts at -5 and 12 - sqrt 37 > 0.
  const bool gram_psd = sc.passed && claim.integer_eigs.front().value >= -5;

  cert.details = {{"claim", spectrum_json(claim)},
                  {"char_poly_ascending", coefficients},
                  {"char_poly", sc.char_poly.to_string()},
                  {"nullity_checks", nullities},
                  {"trace", integer_json(trace)},
                  {"trace_of_square", integer_json(trace_sq)},
                  {"eigenvalue_sum", integer_json(claim.eigenvalue_sum())},
                  {"eigenvalue_square_sum", integer_json(claim.eigenvalue_square_sum())},
                  {"gram_psd", gram_psd},
                  {"mismatch", sc.mismatch.empty() ? json(nullptr) : json(sc.mismatch)}};
  const bool ok = sc.passed && identities && gram_psd;
  cert.summary = ok ? "det(xI - S) = (x+5)^36 (x-7)^6 (x-11)^8 (x-13)^2 (x^2 - 24x + 107)" : "spectrum mismatch: " + sc.mismatch;
  return finish(std::move(cert), ok, clock);
}

Certificate aut_certificate(Pipeline& p) {
  Stopwatch clock;
  Certificate cert;
  cert.claim_id = "aut.order";
  cert.clause = "|Aut(S)| = 216 = 4 * 54";
  const SeidelMatrix& s = p.seidel();
  cert.inputs_digest = digest({{"seidel", seidel_json(s)}});
  const AutGroupResult& plain = p.aut();
  const SignedGroupResult signed_group = signed_automorphism_order(s);

  bool verified = true;
  json plain_generators = json::array();
  for (const auto& g : plain.generators) {
    plain_generators.push_back(one_based(g));
    for (std::size_t i = 0; i < s.order() && verified; ++i) {
      for (std::size_t j = 0; j < s.order(); ++j) {
        if (s(g[i], g[j]) != s(i, j)) {
          verified = false;
          break;
        }
      }
    }
  }
  json signed_generators = json::array();
  for (const auto& g : signed_group.generators) {
    signed_generators.push_back({{"permutation", one_based(g.perm)}, {"signs", g.signs}});
    for (std::size_t i = 0; i < s.order() && verified; ++i) {
      for (std::size_t j = 0; j < s.order(); ++j) {
        if (i != j && g.signs[i] * g.signs[j] * s(g.perm[i], g.perm[j]) != s(i, j)) {
          verified = false;
          break;
        }
      }
    }
  }

  const bool plain_matches = plain.order == kExpectedAutOrder;
  const bool signed_matches = signed_group.order == kExpectedAutOrder;
  cert.details = {
      {"expected", kExpectedAutOrder},
      {"definition", "signed permutation matrices Q with Q^T S Q = S"},
      {"order", integer_json(signed_group.order)},
      {"line_permutation_order", integer_json(Integer(signed_group.order / 2))},
      {"permutation_order", integer_json(plain.order)},
      {"permutation_order_matches_expected", plain_matches},
      {"signed_generators", signed_generators},
      {"permutation_generators", plain_generators},
      {"generators_verified", verified}};
  cert.summary = "|Aut(S)| = " + signed_group.order.get_str() + " signed permutations (" +
                 std::to_string(signed_group.generators.size()) + " verified generators); plain permutations P^T S P = S: " +
                 plain.order.get_str();
  if (!plain_matches) cert.summary += " (differs from 216)";
  return finish(std::move(cert), verified && signed_matches, clock);
}

Certificate maximality_certificate(const RunConfig& config, Pipeline& p) {
  Stopwatch clock;
  Certificate cert;
  cert.claim_id = "maximality";
  cert.clause = "no line of R^18 is at angle arccos(1/5) to all 54 lines";
  const LineSystem& fin = p.final();
  cert.inputs_digest = digest({{"system", system_json(fin)}});

  const ExtendibilityReport main = check_extendibility(fin, search_options(config, "maximality"));

  // Control: drop the last member; the search must find it again.
  LineSystem reduced = fin;
  const LineVector dropped = reduced.vectors.back();
  reduced.vectors.pop_back();
  const ExtendibilityReport control = check_extendibility(reduced, search_options(config, "maximality-control"), 18);
  bool recovered = false;
  for (const auto& w : control.witnesses) {
    bool plus = true;
    bool minus = true;
    for (std::size_t c = 0; c < kCodeLength; ++c) {
      plus = plus && w.coords[c] == dropped.coords[c];
      minus = minus && w.coords[c] == -dropped.coords[c];
    }
    recovered = recovered || plus || minus;
  }

  json control_witnesses = json::array();
  for (const auto& w : control.witnesses) {
    json coords = json::array();
    for (const auto& c : w.coords) coords.push_back(c.get_str());
    control_witnesses.push_back({{"pattern", w.pattern}, {"scaled_coords", coords}});
  }
  cert.details = {{"extendible", main.extendible},
                  {"patterns_examined", main.patterns_examined},
                  {"basis", one_based(main.basis)},
                  {"ambient_dim", main.ambient_dim},
                  {"gram_determinant", main.gram_determinant.get_str()},
                  {"witnesses", main.witnesses.size()},
                  {"control",
                   {{"removed_member", fin.size()},
                    {"extendible", control.extendible},
                    {"patterns_examined", control.patterns_examined},
                    {"witnesses", control_witnesses},
                    {"removed_member_recovered", recovered}}}};
  const bool ok = !main.extendible && main.patterns_examined == (std::uint64_t{1} << 18) && control.extendible && recovered;
  cert.summary = "0 of " + std::to_string(main.patterns_examined) + " sign patterns extend the system; control recovers the dropped line: " +
                 (recovered ? "yes" : "no");
  return finish(std::move(cert), ok, clock);
}

Certificate subscan_certificate(const RunConfig& config, Pipeline& p) {
  Stopwatch clock;
  Certificate cert;
  cert.claim_id = "subscan.unique";
  cert.clause = "up to switching and relabeling, one principal submatrix of S of order 50..53 has an integral spectrum, and its order is 52";
  const SeidelMatrix& s = p.seidel();
  std::vector<std::size_t> orders(config.orders.begin(), config.orders.end());
  cert.inputs_digest = digest({{"seidel", seidel_json(s)}, {"orders", orders}});

  const SubScanResult scan = subseidel_scan(s, config.orders, search_options(config, "subscan"));

  json stats = json::object();
  for (const auto& [k, st] : scan.stats) {
    stats[std::to_string(k)] = {{"examined", st.examined}, {"screen_passed", st.screen_passed}, {"ambiguous", st.ambiguous}, {"certified_hits", st.certified_hits}};
  }
  json hits = json::array();
  for (const auto& h : scan.hits) hits.push_back({{"order", h.order}, {"removed", one_based(h.removed)}, {"spectrum", spectrum_json(h.spectrum)}});

  // Automorphisms of S must permute the hit set.
  const AutGroupResult& aut = p.aut();
  std::set<std::vector<std::size_t>> hit_sets;
  for (const auto& h : scan.hits) hit_sets.insert(h.removed);
  bool aut_consistent = true;
  for (const auto& g : aut.generators) {
    for (const auto& h : scan.hits) {
      std::vector<std::size_t> image;
      for (auto i : h.removed) image.push_back(g[i]);
      std::sort(image.begin(), image.end());
      aut_consistent = aut_consistent && hit_sets.count(image) == 1;
    }
  }

  json classes = json::array();
  for (const auto& c : scan.equivalence_classes) {
    const auto& rep = scan.hits[c.members.front()];
    classes.push_back({{"size", c.members.size()},
                       {"representative", {{"order", rep.order}, {"removed", one_based(rep.removed)}, {"spectrum", spectrum_json(rep.spectrum)}}}});
  }
  cert.details = {{"orders", orders},
                  {"equivalence", "switching and permutation of Seidel matrices"},
                  {"screen", {{"integer_tolerance", kScreenIntegerTolerance}, {"ambiguity_band", kScreenAmbiguityBand}}},
                  {"stats", stats},
                  {"hits", hits},
                  {"equivalence_classes", classes},
                  {"class_count", scan.equivalence_classes.size()},
                  {"automorphisms_permute_hits", aut_consistent}};

  bool ok = aut_consistent;
  if (config.orders.count(52) != 0) {
    ok = ok && scan.equivalence_classes.size() == 1 &&
         scan.hits[scan.equivalence_classes.front().members.front()].order == 52 &&
         scan.hits[scan.equivalence_classes.front().members.front()].spectrum == expected_spectrum_t();
    for (const auto& h : scan.hits) ok = ok && h.order == 52;
  } else {
    ok = ok && scan.hits.empty();
  }
  std::uint64_t examined = 0;
  for (const auto& [k, st] : scan.stats) examined += st.examined;
  cert.summary = std::to_string(examined) + " submatrices, " + std::to_string(scan.hits.size()) + " integral, " +
                 std::to_string(scan.equivalence_classes.size()) + " switching class(es)";
  return finish(std::move(cert), ok, clock);
}

json strip_runtime(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "runtime_ms") out[it.key()] = strip_runtime(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(strip_runtime(e));
    return out;
  }
  return j;
}

}  // namespace

// ----------------------------------------------------------- serialization

bool Report::all_passed() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.passed(); });
}

void to_json(json& j, const Certificate& c) {
  j = json{{"claim_id", c.claim_id},
           {"clause", c.clause},
           {"status", c.passed() ? "pass" : "fail"},
           {"summary", c.summary},
           {"inputs_digest", c.inputs_digest},
           {"details", c.details},
           {"runtime_ms", c.runtime_ms}};
}

void from_json(const json& j, Certificate& c) {
  j.at("claim_id").get_to(c.claim_id);
  j.at("clause").get_to(c.clause);
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("certificate status must be pass or fail");
  c.status = status == "pass" ? Status::kPass : Status::kFail;
  j.at("summary").get_to(c.summary);
  j.at("inputs_digest").get_to(c.inputs_digest);
  c.details = j.at("details");
  j.at("runtime_ms").get_to(c.runtime_ms);
}

void to_json(json& j, const Report& r) {
  j = json{{"artifact_version", r.artifact_version}, {"certificates", r.certificates}};
}

void from_json(const json& j, Report& r) {
  j.at("artifact_version").get_to(r.artifact_version);
  j.at("certificates").get_to(r.certificates);
}

json without_timing(const json& report) { return strip_runtime(report); }

std::string digest(const json& canonical_inputs) {
  const std::string text = canonical_inputs.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  out << "sha256:";
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

// ---------------------------------------------------------------- commands

SpectrumClaim expected_spectrum_s() {
  return SpectrumClaim{{{-5, 36}, {7, 6}, {11, 8}, {13, 2}}, QuadraticFactor{-24, 107}};
}

SpectrumClaim expected_spectrum_t() {
  return SpectrumClaim{{{-5, 34}, {3, 1}, {5, 1}, {7, 6}, {11, 7}, {13, 2}, {17, 1}}, std::nullopt};
}

Certificate cmd_golay(const RunConfig& config) { return golay_certificate(config); }

Certificate cmd_construct(const RunConfig& config) {
  Pipeline p;
  return construct_certificate(config, p);
}

Certificate cmd_remark(const RunConfig&) {
  Pipeline p;
  return remark_certificate(p);
}

Certificate cmd_spectrum(const RunConfig&) {
  Pipeline p;
  return spectrum_certificate(p);
}

Certificate cmd_aut(const RunConfig&) {
  Pipeline p;
  return aut_certificate(p);
}

Certificate cmd_maximality(const RunConfig& config) {
  Pipeline p;
  return maximality_certificate(config, p);
}

Certificate cmd_subscan(const RunConfig& config) {
  Pipeline p;
  return subscan_certificate(config, p);
}

void cmd_certify_all(const RunConfig& config, std::vector<Certificate>& out) {
  Pipeline p;
  RunConfig base = config;
  base.stage = Stage::kFinal;
  base.corrupt_generator = false;
  out.push_back(golay_certificate(base));
  out.push_back(construct_certificate(base, p));
  out.push_back(remark_certificate(p));
  out.push_back(spectrum_certificate(p));
  out.push_back(aut_certificate(p));
  out.push_back(maximality_certificate(base, p));
  out.push_back(subscan_certificate(base, p));
}

std::vector<Certificate> cmd_certify_all(const RunConfig& config) {
  std::vector<Certificate> out;
  cmd_certify_all(config, out);
  return out;
}

Report run(const RunConfig& config) {
  Report report;
  switch (config.command) {
    case Command::kGolay:
      report.certificates.push_back(cmd_golay(config));
      break;
    case Command::kConstruct: {
      Pipeline p;
      report.certificates.push_back(construct_certificate(config, p));
      if (config.stage == Stage::kFinal) report.certificates.push_back(remark_certificate(p));
      break;
    }
    case Command::kSpectrum:
      report.certificates.push_back(cmd_spectrum(config));
      break;
    case Command::kAut:
      report.certificates.push_back(cmd_aut(config));
      break;
    case Command::kMaximality:
      report.certificates.push_back(cmd_maximality(config));
      break;
    case Command::kSubscan:
      report.certificates.push_back(cmd_subscan(config));
      break;
    case Command::kAll:
      cmd_certify_all(config, report.certificates);
      break;
  }
  return report;
}

}  // namespace eqlines::certify
