#pragma once

// The two exhaustive searches over the 54-line system:
//  * non-extendibility: every sign pattern on a basis, solved exactly;
//  * principal sub-Seidel matrices with integral spectrum, float-screened and
//    then certified exactly, grouped by switching class.
//
// Both scans split their index space into a fixed number of contiguous chunks
// and merge per-chunk results in chunk order, so reports do not depend on the
// number of worker threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqlines/construct.hpp"
#include "eqlines/exactlin.hpp"
#include "eqlines/seidel.hpp"

namespace eqlines {

// Eigenvalues within this distance of an integer pass the float screen.
inline constexpr double kScreenIntegerTolerance = 1e-6;
// Width of the band beyond the integer tolerance in which a candidate is
// ambiguous; ambiguous candidates are always certified exactly.
inline constexpr double kScreenAmbiguityBand = 1e-4;

struct SearchOptions {
  unsigned jobs = 1;
  // Called with (completed, total) work-unit counts; may be invoked from worker threads.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct ExtendibilityWitness {
  std::uint64_t pattern = 0;
  std::vector<int> signs;                // sign of <w, b_k> for each basis member
  std::vector<Rational> basis_coords;    // w = sum_k basis_coords[k] * b_k
  std::vector<Rational> coords;          // w in scaled coordinates, 24 entries
  Rational span_norm_sq;                 // <w, w> at scale 80
  Rational orthogonal_norm_sq;           // 80 - span_norm_sq; 0 when the span is the ambient space
};

struct ExtendibilityReport {
  bool extendible = false;
  std::vector<std::size_t> basis;  // indices of the basis members
  std::size_t ambient_dim = 0;
  Integer gram_determinant;
  std::uint64_t patterns_examined = 0;
  std::vector<ExtendibilityWitness> witnesses;  // in pattern order
};

// Exhaustive search for a further line at angle 1/5 to every member. The new
// line is sought inside an ambient space of dimension `ambient_dim` containing
// the span (default: the span itself).
ExtendibilityReport check_extendibility(const LineSystem& system, const SearchOptions& options = {},
                                        std::optional<std::size_t> ambient_dim = std::nullopt);

// First rank(system) linearly independent members in order.
std::vector<std::size_t> greedy_basis(const LineSystem& system);

struct SubScanHit {
  std::size_t order = 0;
  std::vector<std::size_t> removed;  // 0-based, ascending
  SpectrumClaim spectrum;
  double screen_deviation = 0.0;     // max distance of a float eigenvalue to an integer
  std::string canonical_form;
};

struct EquivalenceClass {
  std::string canonical_form;
  std::vector<std::size_t> members;  // indices into SubScanResult::hits
};

struct OrderStats {
  std::uint64_t examined = 0;
  std::uint64_t screen_passed = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t certified_hits = 0;
};

struct SubScanResult {
  std::vector<SubScanHit> hits;  // sorted by (order, removed)
  std::vector<EquivalenceClass> equivalence_classes;
  std::map<std::size_t, OrderStats> stats;
};

// Float verdict for one matrix: largest distance of an eigenvalue to the
// nearest integer.
double screen_deviation(const SeidelMatrix& s);

SubScanResult subseidel_scan(const SeidelMatrix& s, const std::set<std::size_t>& orders, const SearchOptions& options = {});

// Binomial coefficient as a 64-bit count.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// The `rank`-th k-subset of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k);

// Advances to the next k-subset in lexicographic order; false after the last.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n);

}  // namespace eqlines
