#pragma once

// Extended binary Golay code [24, 12, 8] and its octads.
//
// Codewords are 24-bit masks. Coordinates are numbered 1..24; coordinate 1
// is the most significant bit (bit 23), so numeric order on masks is the
// canonical lexicographic order on codewords.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlines {

inline constexpr int kCodeLength = 24;
inline constexpr int kCodeDimension = 12;

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankDeficiencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Codeword {
 public:
  constexpr Codeword() = default;
  constexpr explicit Codeword(std::uint32_t bits) : bits_(bits & kMask) {}

  // Builds a word from 1-based coordinates.
  static constexpr Codeword from_coordinates(std::initializer_list<int> coords) {
    std::uint32_t bits = 0;
    for (int c : coords) bits |= bit_for(c);
    return Codeword(bits);
  }
  static Codeword from_coordinates(const std::vector<int>& coords);
  static constexpr Codeword all_ones() { return Codeword(kMask); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int weight() const { return std::popcount(bits_); }
  constexpr bool has(int coordinate) const { return (bits_ & bit_for(coordinate)) != 0; }
  std::vector<int> coordinates() const;

  constexpr int intersection_size(Codeword other) const {
    return std::popcount(bits_ & other.bits_);
  }

  friend constexpr Codeword operator^(Codeword a, Codeword b) { return Codeword(a.bits_ ^ b.bits_); }
  friend constexpr Codeword operator&(Codeword a, Codeword b) { return Codeword(a.bits_ & b.bits_); }
  friend constexpr bool operator==(Codeword, Codeword) = default;
  friend constexpr auto operator<=>(Codeword, Codeword) = default;

  // "0110..." with coordinate 1 first.
  std::string to_string() const;

  static constexpr std::uint32_t bit_for(int coordinate) {
    return std::uint32_t{1} << (kCodeLength - coordinate);
  }

 private:
  static constexpr std::uint32_t kMask = (std::uint32_t{1} << kCodeLength) - 1;
  std::uint32_t bits_ = 0;
};

// c1 and c2 from the construction; both must be octads not containing coordinate 1.
inline constexpr Codeword kFilterWordC1 = Codeword::from_coordinates({2, 3, 14, 15, 16, 19, 22, 23});
inline constexpr Codeword kFilterWordC2 = Codeword::from_coordinates({2, 3, 9, 11, 12, 13, 21, 24});

// First row of the 11x11 circulant block.
inline constexpr std::array<int, 11> kCirculantFirstRow = {0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1};

using GeneratorMatrix = std::array<Codeword, kCodeDimension>;

enum class CirculantShift { kRight, kLeft };

// G = [I12 | B], B = [[0, 1...1], [1', A]] with A the circulant whose row i is
// the first row shifted by i (direction per `shift`). No validation.
GeneratorMatrix assemble_generator(CirculantShift shift);

// Rank over GF(2).
int gf2_rank(const std::vector<Codeword>& rows);

struct GateReport {
  int rank = 0;
  bool self_dual = false;
  int minimum_weight = 0;
  std::map<int, int> weight_distribution;
  std::size_t octad_count = 0;
  bool contains_c1 = false;
  bool contains_c2 = false;

  // Name of the first failing gate, empty when every gate passes.
  std::string first_failure() const;
  bool passed() const { return first_failure().empty(); }
};

// Runs every validation gate against a candidate generator.
GateReport check_gates(const GeneratorMatrix& generator);

// Assembles the generator, trying the right-shift circulant first and the
// left-shift variant second. Throws ConstructionError if neither passes.
GeneratorMatrix build_generator();

class GolayCode {
 public:
  const GeneratorMatrix& generator() const { return generator_; }
  // All 4096 codewords in canonical order.
  const std::vector<Codeword>& words() const { return words_; }
  // The 759 weight-8 codewords in canonical order.
  const std::vector<Codeword>& octads() const { return octads_; }

  bool contains(Codeword w) const;
  std::map<int, int> weight_distribution() const;
  int minimum_weight() const;

 private:
  friend GolayCode generate_code(const GeneratorMatrix& generator);
  GeneratorMatrix generator_{};
  std::vector<Codeword> words_;
  std::vector<Codeword> octads_;
};

// Enumerates the row span. Throws RankDeficiencyError when rank < 12.
GolayCode generate_code(const GeneratorMatrix& generator);

// Octads with a 1 at `coordinate` (1-based), canonical order.
std::vector<Codeword> octads_through(const GolayCode& code, int coordinate);

}  // namespace eqlines
