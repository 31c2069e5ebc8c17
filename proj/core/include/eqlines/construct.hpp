#pragma once

// Lifting octads to equiangular lines, in coordinates scaled by sqrt(80).
//
// A lifted octad d is stored as the integer vector 4d - 4e1 - eSigma; the
// sqrt(80) normalization is implicit. At that scale unit norms become 80, the
// common angle 1/5 becomes an inner product of +-16, and the m-pairings of the
// removed cliques become +-24.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eqlines/exactlin.hpp"
#include "eqlines/golay.hpp"

namespace eqlines {

inline constexpr int kScaledNorm = 80;
inline constexpr int kScaledAngle = 16;

using ScaledVector = std::array<int, kCodeLength>;

struct LineVector {
  ScaledVector coords{};
  Codeword source;

  friend bool operator==(const LineVector&, const LineVector&) = default;
};

int dot(const ScaledVector& a, const ScaledVector& b);
int scaled_inner(const LineVector& u, const LineVector& v);

// 4d - 4e1 - eSigma.
LineVector lift(Codeword d);

struct FilterSet {
  Codeword c1 = kFilterWordC1;
  Codeword c2 = kFilterWordC2;
  ScaledVector m{};
  ScaledVector centre{};  // 4e1 + eSigma
  ScaledVector e1_minus_e2{};
  ScaledVector e1_minus_e3{};
};

// The filters of the 54-line construction.
FilterSet construction_filters();

struct LineSystem {
  std::vector<LineVector> vectors;
  std::size_t ambient_dim = 0;  // rank of the span
  int scaled_angle = kScaledAngle;
  int denominator = kScaledNorm;

  std::size_t size() const { return vectors.size(); }
  // Members as rows of an n x 24 integer matrix.
  IntMatrix as_matrix() const;
  // n x n matrix of scaled inner products.
  IntMatrix gram() const;
};

// Wraps vectors into a system, computing the rank of their span.
LineSystem make_system(std::vector<LineVector> vectors);

// Asche's 72 lines in R^19. Throws ConstructionError on a count mismatch or
// if the centre identity <f(d), 4e1 + eSigma> = 0 fails for a member.
LineSystem asche_system(const GolayCode& code, const FilterSet& filters = construction_filters());

// The members of asche_system orthogonal to m: 54 lines in R^18.
LineSystem final_system(const GolayCode& code, const FilterSet& filters = construction_filters());

// The 18 lines cut by m: U = positive side of m, V = negative side.
struct RemarkReport {
  bool passed = false;
  std::string failure;  // first violated condition, empty on success
  std::vector<std::size_t> removed;  // indices into the 72-system
  std::vector<std::size_t> u;        // indices into the 72-system
  std::vector<std::size_t> v;
  std::vector<int> u_m_pairings;
  std::vector<int> v_m_pairings;
  std::vector<std::vector<std::size_t>> u_cross_partners;  // positions within v
  std::vector<std::vector<std::size_t>> v_cross_partners;  // positions within u
};

RemarkReport verify_remark(const LineSystem& full, const LineSystem& final, const FilterSet& filters = construction_filters());

}  // namespace eqlines
