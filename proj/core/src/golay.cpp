#include "eqlines/golay.hpp"

#include <algorithm>

namespace eqlines {

namespace {

// Row span of the generator, sorted and deduplicated.
std::vector<Codeword> row_span(const GeneratorMatrix& generator) {
  std::vector<Codeword> words;
  words.reserve(std::size_t{1} << kCodeDimension);
  Codeword current;
  words.push_back(current);
  // Gray-code walk: each step adds exactly one generator row.
  for (std::uint32_t k = 1; k < (std::uint32_t{1} << kCodeDimension); ++k) {
    current = current ^ generator[static_cast<std::size_t>(std::countr_zero(k))];
    words.push_back(current);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace

Codeword Codeword::from_coordinates(const std::vector<int>& coords) {
  std::uint32_t bits = 0;
  for (int c : coords) bits |= bit_for(c);
  return Codeword(bits);
}

std::vector<int> Codeword::coordinates() const {
  std::vector<int> out;
  for (int c = 1; c <= kCodeLength; ++c) {
    if (has(c)) out.push_back(c);
  }
  return out;
}

std::string Codeword::to_string() const {
  std::string s(kCodeLength, '0');
  for (int c = 1; c <= kCodeLength; ++c) {
    if (has(c)) s[static_cast<std::size_t>(c - 1)] = '1';
  }
  return s;
}

GeneratorMatrix assemble_generator(CirculantShift shift) {
  GeneratorMatrix g{};
  for (int row = 0; row < kCodeDimension; ++row) {
    std::uint32_t bits = Codeword::bit_for(row + 1);
    if (row == 0) {
      for (int c = 14; c <= 24; ++c) bits |= Codeword::bit_for(c);
    } else {
      bits |= Codeword::bit_for(13);
      const int offset = row - 1;
      for (int j = 0; j < 11; ++j) {
        const int src = shift == CirculantShift::kRight ? (j - offset + 11) % 11 : (j + offset) % 11;
        if (kCirculantFirstRow[static_cast<std::size_t>(src)] != 0) bits |= Codeword::bit_for(14 + j);
      }
    }
    g[static_cast<std::size_t>(row)] = Codeword(bits);
  }
  return g;
}

int gf2_rank(const std::vector<Codeword>& rows) {
  std::vector<std::uint32_t> m;
  m.reserve(rows.size());
  for (auto r : rows) m.push_back(r.bits());
  int rank = 0;
  for (int bit = kCodeLength - 1; bit >= 0; --bit) {
    const std::uint32_t mask = std::uint32_t{1} << bit;
    auto pivot = std::find_if(m.begin() + rank, m.end(), [&](std::uint32_t r) { return (r & mask) != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) != rank && (m[i] & mask) != 0) m[i] ^= m[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

std::string GateReport::first_failure() const {
  if (rank != kCodeDimension) return "rank";
  if (!self_dual) return "self_duality";
  if (minimum_weight != 8) return "minimum_weight";
  if (octad_count != 759) return "octad_count";
  if (!contains_c1) return "c1_membership";
  if (!contains_c2) return "c2_membership";
  return {};
}

GateReport check_gates(const GeneratorMatrix& generator) {
  GateReport report;
  report.rank = gf2_rank(std::vector<Codeword>(generator.begin(), generator.end()));

  report.self_dual = report.rank == kCodeDimension;
  for (std::size_t i = 0; i < generator.size() && report.self_dual; ++i) {
    for (std::size_t j = i; j < generator.size(); ++j) {
      if (generator[i].intersection_size(generator[j]) % 2 != 0) {
        report.self_dual = false;
        break;
      }
    }
  }

  const auto words = row_span(generator);
  report.minimum_weight = kCodeLength + 1;
  for (auto w : words) {
    ++report.weight_distribution[w.weight()];
    if (w.weight() > 0) report.minimum_weight = std::min(report.minimum_weight, w.weight());
    if (w.weight() == 8) ++report.octad_count;
  }
  report.contains_c1 = std::binary_search(words.begin(), words.end(), kFilterWordC1);
  report.contains_c2 = std::binary_search(words.begin(), words.end(), kFilterWordC2);
  return report;
}

GeneratorMatrix build_generator() {
  for (auto shift : {CirculantShift::kRight, CirculantShift::kLeft}) {
    auto g = assemble_generator(shift);
    if (check_gates(g).passed()) return g;
  }
  throw ConstructionError("no generator assembly passes the Golay validation gates");
}

bool GolayCode::contains(Codeword w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::map<int, int> GolayCode::weight_distribution() const {
  std::map<int, int> dist;
  for (auto w : words_) ++dist[w.weight()];
  return dist;
}

int GolayCode::minimum_weight() const {
  int best = kCodeLength + 1;
  for (auto w : words_) {
    if (w.weight() > 0) best = std::min(best, w.weight());
  }
  return best;
}

GolayCode generate_code(const GeneratorMatrix& generator) {
  const int rank = gf2_rank(std::vector<Codeword>(generator.begin(), generator.end()));
  if (rank < kCodeDimension) {
    throw RankDeficiencyError("generator has GF(2) rank " + std::to_string(rank) + ", expected 12");
  }
  GolayCode code;
  code.generator_ = generator;
  code.words_ = row_span(generator);
  for (auto w : code.words_) {
    if (w.weight() == 8) code.octads_.push_back(w);
  }
  return code;
}

std::vector<Codeword> octads_through(const GolayCode& code, int coordinate) {
  if (coordinate < 1 || coordinate > kCodeLength) {
    throw std::out_of_range("coordinate must lie in 1..24");
  }
  std::vector<Codeword> out;
  for (auto d : code.octads()) {
    if (d.has(coordinate)) out.push_back(d);
  }
  return out;
}

}  // namespace eqlines
