#pragma once

// Exact linear algebra over Z and Q on top of GMP.
//
// Everything here is fraction-free where possible (Bareiss elimination), and
// no routine ever falls back to floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlines {

using Integer = mpz_class;
using Rational = mpq_class;

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Integer trace() const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Dense polynomial with integer coefficients in ascending degree order.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  // (x - root)
  static IntPolynomial linear(const Integer& root);

  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

  Integer evaluate(const Integer& x) const;

  // Exact division by (x - root); nullopt if the remainder is nonzero.
  std::optional<IntPolynomial> divide_by_linear(const Integer& root) const;

  IntPolynomial pow(unsigned exponent) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // e.g. "x^2 - 24x + 107"
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

// Determinant via Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

// Rank over Q.
std::size_t rank(const IntMatrix& m);

// dim ker(m - lambda I) over Q. m must be square.
std::size_t nullity_at(const IntMatrix& m, long lambda);

// det(xI - m): n+1 Bareiss determinants interpolated exactly.
IntPolynomial char_poly(const IntMatrix& m);

// Unique solution of m x = rhs for square nonsingular m. Throws SingularMatrixError.
std::vector<Rational> solve_rational(const IntMatrix& m, std::span<const Rational> rhs);

// Any solution of m x = rhs (free variables set to zero); nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational_general(const IntMatrix& m, std::span<const Rational> rhs);

// m * x, exactly.
std::vector<Rational> multiply(const IntMatrix& m, std::span<const Rational> x);

// Adjugate and determinant of a square matrix: adj(m) * m = det(m) I.
struct Adjugate {
  IntMatrix adjugate;
  Integer determinant;
};
Adjugate adjugate(const IntMatrix& m);

}  // namespace eqlines
