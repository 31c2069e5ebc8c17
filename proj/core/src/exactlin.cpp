#include "eqlines/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace eqlines {

namespace {

struct EchelonResult {
  std::size_t rank = 0;
  Integer determinant;  // meaningful for square input only
};

// Bareiss fraction-free forward elimination on a row-major buffer. Entries
// after step k are (k+1)-minors of the input, so every division is exact.
EchelonResult bareiss(std::vector<Integer>& a, std::size_t rows, std::size_t cols) {
  Integer prev = 1;
  Integer tmp;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p * cols + c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      sign = -sign;
    }
    const mpz_srcptr pivot = a[r * cols + c].get_mpz_t();
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_srcptr lead = a[i * cols + c].get_mpz_t();
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_ptr target = a[i * cols + j].get_mpz_t();
        mpz_mul(tmp.get_mpz_t(), target, pivot);
        mpz_submul(tmp.get_mpz_t(), lead, a[r * cols + j].get_mpz_t());
        mpz_divexact(target, tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = a[r * cols + c];
    ++r;
  }
  EchelonResult out;
  out.rank = r;
  out.determinant = (rows == cols && r == rows) ? Integer(sign * prev) : Integer(0);
  if (rows == cols && rows == 0) out.determinant = 1;
  return out;
}

std::vector<Integer> buffer_of(const IntMatrix& m) {
  std::vector<Integer> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
  }
  return a;
}

std::vector<Integer> shifted_buffer(const IntMatrix& m, const Integer& shift, bool negate) {
  // negate == false: m - shift I; negate == true: shift I - m
  auto a = buffer_of(m);
  const std::size_t n = m.rows();
  if (negate) {
    for (auto& v : a) v = -v;
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] += shift;
  } else {
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= shift;
  }
  return a;
}

// Reduced row echelon form of [m | rhs] over Q. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<Rational>& a, std::size_t rows, std::size_t cols, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p * cols + c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    }
    const Rational inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i * cols + c]) == 0) continue;
      const Rational factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= factor * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix rows must have equal length");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

// ------------------------------------------------------------ IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::linear(const Integer& root) { return IntPolynomial(std::vector<Integer>{-root, 1}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_by_linear(const Integer& root) const {
  if (coeffs_.empty()) return IntPolynomial{};
  // Synthetic division from the top coefficient down.
  std::vector<Integer> quotient(coeffs_.size() - 1);
  Integer carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    carry = coeffs_[k] + carry * root;
    quotient[k - 1] = carry;
  }
  const Integer remainder = coeffs_[0] + carry * root;
  if (sgn(remainder) != 0) return std::nullopt;
  return IntPolynomial(std::move(quotient));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result{1};
  for (unsigned k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

// --------------------------------------------------------------- operations

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  auto a = buffer_of(m);
  return bareiss(a, m.rows(), m.cols()).determinant;
}

std::size_t rank(const IntMatrix& m) {
  auto a = buffer_of(m);
  return bareiss(a, m.rows(), m.cols()).rank;
}

std::size_t nullity_at(const IntMatrix& m, long lambda) {
  if (!m.square()) throw std::invalid_argument("nullity_at requires a square matrix");
  auto a = shifted_buffer(m, Integer(lambda), false);
  return m.rows() - bareiss(a, m.rows(), m.cols()).rank;
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial{1};

  // Sample points x_k = k, k = 0..n. With nodes 0..n the Lagrange weights
  // are (-1)^(n-k) C(n,k) / n!, so the numerator stays integral.
  std::vector<Integer> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    auto a = shifted_buffer(m, Integer(static_cast<unsigned long>(k)), true);
    values[k] = bareiss(a, n, n).determinant;
  }

  IntPolynomial nodes{1};
  for (std::size_t k = 0; k <= n; ++k) nodes = nodes * IntPolynomial::linear(Integer(static_cast<unsigned long>(k)));

  std::vector<Integer> numerator(n + 1);
  Integer binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      binom *= static_cast<unsigned long>(n - k + 1);
      binom /= static_cast<unsigned long>(k);
    }
    auto basis = nodes.divide_by_linear(Integer(static_cast<unsigned long>(k)));
    Integer weight = values[k] * binom;
    if ((n - k) % 2 == 1) weight = -weight;
    for (std::size_t j = 0; j < basis->coefficients().size(); ++j) numerator[j] += weight * basis->coefficients()[j];
  }

  Integer factorial = 1;
  for (unsigned long k = 2; k <= n; ++k) factorial *= k;
  for (auto& c : numerator) {
    if (!mpz_divisible_p(c.get_mpz_t(), factorial.get_mpz_t())) {
      throw std::logic_error("char_poly: interpolated coefficient is not integral");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial.get_mpz_t());
  }
  IntPolynomial result(std::move(numerator));
  if (result.degree() != static_cast<int>(n) || result.leading() != 1) {
    throw std::logic_error("char_poly: interpolation did not produce a monic polynomial of degree n");
  }
  return result;
}

std::vector<Rational> solve_rational(const IntMatrix& m, std::span<const Rational> rhs) {
  if (!m.square()) throw std::invalid_argument("solve_rational requires a square matrix");
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_rational: rhs length mismatch");
  const std::size_t n = m.rows();
  const std::size_t cols = n + 1;
  std::vector<Rational> a(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = m(i, j);
    a[i * cols + n] = rhs[i];
  }
  const auto pivots = rref(a, n, cols, n);
  if (pivots.size() != n) throw SingularMatrixError("solve_rational: matrix is singular");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i * cols + n];
  return x;
}

std::optional<std::vector<Rational>> solve_rational_general(const IntMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_rational_general: rhs length mismatch");
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  const std::size_t cols = n + 1;
  std::vector<Rational> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = m(i, j);
    a[i * cols + n] = rhs[i];
  }
  const auto pivots = rref(a, rows, cols, n);
  for (std::size_t i = pivots.size(); i < rows; ++i) {
    if (sgn(a[i * cols + n]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i * cols + n];
  return x;
}

std::vector<Rational> multiply(const IntMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Rational> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  }
  return y;
}

Adjugate adjugate(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("adjugate requires a square matrix");
  const std::size_t n = m.rows();
  Adjugate out{IntMatrix(n, n), determinant(m)};
  if (sgn(out.determinant) == 0) throw SingularMatrixError("adjugate: matrix is singular");
  // adj(m) = det(m) m^{-1}; inverse via Gauss-Jordan on [m | I].
  const std::size_t cols = 2 * n;
  std::vector<Rational> a(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = m(i, j);
    a[i * cols + n + i] = 1;
  }
  rref(a, n, cols, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a[i * cols + n + j] * out.determinant;
      if (v.get_den() != 1) throw std::logic_error("adjugate: non-integral entry");
      out.adjugate(i, j) = v.get_num();
    }
  }
  return out;
}

}  // namespace eqlines
