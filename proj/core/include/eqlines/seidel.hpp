#pragma once

// Seidel matrices of equiangular systems at angle 1/5: exact spectra,
// permutation automorphisms and switching-class canonical forms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/canon.hpp"
#include "eqlines/construct.hpp"
#include "eqlines/exactlin.hpp"

namespace eqlines {

class NotEquiangularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnrepresentableSpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symmetric, zero diagonal, +-1 off the diagonal.
class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  // Validates the Seidel invariants; throws std::invalid_argument.
  static SeidelMatrix from_entries(std::size_t n, std::vector<std::int8_t> entries);
  // All off-diagonal entries +1.
  static SeidelMatrix clique(std::size_t n);

  std::size_t order() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  // Rows/columns `keep`, in the given order.
  SeidelMatrix principal_submatrix(std::span<const std::size_t> keep) const;
  // Deletes the listed indices.
  SeidelMatrix without(std::span<const std::size_t> removed) const;
  // result(i, j) = (*this)(perm[i], perm[j]).
  SeidelMatrix relabeled(std::span<const std::size_t> perm) const;
  // D S D with D = diag(signs), signs in {-1, +1}.
  SeidelMatrix switched(std::span<const int> signs) const;

  IntMatrix to_int_matrix() const;
  // Graph with an edge wherever the entry is -1.
  canon::Graph negative_graph() const;

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> entries_;
};

// S_ij = <v_i, v_j> / 16 off the diagonal. Throws NotEquiangularError if a
// scaled inner product is outside {-16, 16} or a norm differs from 80.
SeidelMatrix seidel_from(const LineSystem& system);

struct IntegerEigenvalue {
  long value = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const IntegerEigenvalue&, const IntegerEigenvalue&) = default;
};

// x^2 + b x + c with no integer roots.
struct QuadraticFactor {
  long b = 0;
  long c = 0;
  friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

struct SpectrumClaim {
  std::vector<IntegerEigenvalue> integer_eigs;  // ascending by value
  std::optional<QuadraticFactor> quadratic;

  std::size_t order() const;
  bool integral() const { return !quadratic.has_value(); }
  // prod (x - lambda)^mult * quadratic
  IntPolynomial polynomial() const;
  // Sum of eigenvalues and of their squares, with multiplicity.
  Integer eigenvalue_sum() const;
  Integer eigenvalue_square_sum() const;
  std::string to_string() const;

  friend bool operator==(const SpectrumClaim&, const SpectrumClaim&) = default;
};

struct NullityCheck {
  long value = 0;
  std::size_t claimed = 0;
  std::size_t in_char_poly = 0;
  std::size_t nullity = 0;
};

struct SpectrumCertificate {
  bool passed = false;
  std::string mismatch;  // first differing multiplicity or coefficient
  IntPolynomial char_poly;
  IntPolynomial claimed_poly;
  std::vector<NullityCheck> nullity_checks;
};

SpectrumCertificate certify_spectrum(const SeidelMatrix& s, const SpectrumClaim& claim);

// Integer eigenvalues (window [-(n-1), n-1]) with their multiplicities,
// plus at most one irreducible quadratic. Throws UnrepresentableSpectrumError
// when the non-integral part has degree > 2.
SpectrumClaim compute_spectrum(const SeidelMatrix& s);

struct AutGroupResult {
  Integer order;
  std::vector<canon::Permutation> generators;
};

// Permutations P with P^T S P = S.
AutGroupResult automorphism_order(const SeidelMatrix& s);

// A signed permutation: result(i, j) = signs[i] signs[j] S(perm[i], perm[j]).
struct SignedPermutation {
  canon::Permutation perm;
  std::vector<int> signs;
};

struct SignedGroupResult {
  Integer order;  // includes -I; order / 2 line permutations preserve the system
  std::vector<SignedPermutation> generators;
};

// Signed permutation matrices Q with Q^T S Q = S, found as the automorphisms
// of the two-fold cover graph on vertices (i, +-1) that preserve fibres.
SignedGroupResult signed_automorphism_order(const SeidelMatrix& s);

// Complete invariant of the switching-and-permutation class.
std::string switching_canonical_form(const SeidelMatrix& s);

}  // namespace eqlines
