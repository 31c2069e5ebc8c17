#include "eqlines/seidel.hpp"

#include <algorithm>
#include <sstream>

namespace eqlines {

namespace {

std::size_t root_multiplicity(IntPolynomial p, long value) {
  std::size_t mult = 0;
  const Integer root(value);
  while (p.degree() > 0) {
    auto q = p.divide_by_linear(root);
    if (!q) break;
    p = std::move(*q);
    ++mult;
  }
  return mult;
}

}  // namespace

// ------------------------------------------------------------- SeidelMatrix

SeidelMatrix SeidelMatrix::from_entries(std::size_t n, std::vector<std::int8_t> entries) {
  if (entries.size() != n * n) throw std::invalid_argument("SeidelMatrix: expected n*n entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i * n + i] != 0) throw std::invalid_argument("SeidelMatrix: nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      const int a = entries[i * n + j];
      if (a != 1 && a != -1) throw std::invalid_argument("SeidelMatrix: off-diagonal entry not +-1");
      if (entries[j * n + i] != a) throw std::invalid_argument("SeidelMatrix: not symmetric");
    }
  }
  SeidelMatrix s;
  s.n_ = n;
  s.entries_ = std::move(entries);
  return s;
}

SeidelMatrix SeidelMatrix::clique(std::size_t n) {
  std::vector<std::int8_t> e(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 0;
  return from_entries(n, std::move(e));
}

SeidelMatrix SeidelMatrix::principal_submatrix(std::span<const std::size_t> keep) const {
  SeidelMatrix s;
  s.n_ = keep.size();
  s.entries_.resize(s.n_ * s.n_);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) s.entries_[i * s.n_ + j] = entries_[keep[i] * n_ + keep[j]];
  }
  return s;
}

SeidelMatrix SeidelMatrix::without(std::span<const std::size_t> removed) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n_; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  }
  return principal_submatrix(keep);
}

SeidelMatrix SeidelMatrix::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("SeidelMatrix::relabeled: permutation size mismatch");
  return principal_submatrix(perm);
}

SeidelMatrix SeidelMatrix::switched(std::span<const int> signs) const {
  if (signs.size() != n_) throw std::invalid_argument("SeidelMatrix::switched: sign vector size mismatch");
  SeidelMatrix s = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      s.entries_[i * n_ + j] = static_cast<std::int8_t>(entries_[i * n_ + j] * signs[i] * signs[j]);
    }
  }
  return s;
}

IntMatrix SeidelMatrix::to_int_matrix() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<long>(entries_[i * n_ + j]);
  }
  return m;
}

canon::Graph SeidelMatrix::negative_graph() const {
  canon::Graph g(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (entries_[i * n_ + j] < 0) g.add_edge(i, j);
    }
  }
  return g;
}

SeidelMatrix seidel_from(const LineSystem& system) {
  const std::size_t n = system.size();
  std::vector<std::int8_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int ip = scaled_inner(system.vectors[i], system.vectors[j]);
      if (i == j) {
        if (ip != kScaledNorm) throw NotEquiangularError("seidel_from: member " + std::to_string(i + 1) + " has scaled norm " + std::to_string(ip));
        continue;
      }
      if (ip != kScaledAngle && ip != -kScaledAngle) {
        throw NotEquiangularError("seidel_from: scaled inner product " + std::to_string(ip) + " between members " +
                                  std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
      e[i * n + j] = static_cast<std::int8_t>(ip / kScaledAngle);
    }
  }
  return SeidelMatrix::from_entries(n, std::move(e));
}

// ------------------------------------------------------------ SpectrumClaim

std::size_t SpectrumClaim::order() const {
  std::size_t n = quadratic ? 2 : 0;
  for (const auto& e : integer_eigs) n += e.multiplicity;
  return n;
}

IntPolynomial SpectrumClaim::polynomial() const {
  IntPolynomial p{1};
  for (const auto& e : integer_eigs) p = p * IntPolynomial::linear(Integer(e.value)).pow(static_cast<unsigned>(e.multiplicity));
  if (quadratic) p = p * IntPolynomial{quadratic->c, quadratic->b, 1};
  return p;
}

Integer SpectrumClaim::eigenvalue_sum() const {
  Integer sum = 0;
  for (const auto& e : integer_eigs) sum += Integer(e.value) * static_cast<unsigned long>(e.multiplicity);
  if (quadratic) sum -= quadratic->b;
  return sum;
}

Integer SpectrumClaim::eigenvalue_square_sum() const {
  Integer sum = 0;
  for (const auto& e : integer_eigs) sum += Integer(e.value) * e.value * static_cast<unsigned long>(e.multiplicity);
  if (quadratic) {
    // r1^2 + r2^2 = (r1 + r2)^2 - 2 r1 r2 = b^2 - 2c
    sum += Integer(quadratic->b) * quadratic->b - 2 * Integer(quadratic->c);
  }
  return sum;
}

std::string SpectrumClaim::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& e : integer_eigs) {
    out << (first ? "" : ", ") << "[" << e.value << "]^" << e.multiplicity;
    first = false;
  }
  if (quadratic) {
    out << (first ? "" : ", ") << "roots(" << IntPolynomial{quadratic->c, quadratic->b, 1}.to_string() << ")";
  }
  out << "}";
  return out.str();
}

// --------------------------------------------------------------- operations

SpectrumCertificate certify_spectrum(const SeidelMatrix& s, const SpectrumClaim& claim) {
  SpectrumCertificate cert;
  const IntMatrix m = s.to_int_matrix();
  cert.char_poly = char_poly(m);
  cert.claimed_poly = claim.polynomial();

  for (const auto& e : claim.integer_eigs) {
    NullityCheck check{e.value, e.multiplicity, root_multiplicity(cert.char_poly, e.value), nullity_at(m, e.value)};
    cert.nullity_checks.push_back(check);
    if (cert.mismatch.empty() && (check.in_char_poly != check.claimed || check.nullity != check.claimed)) {
      cert.mismatch = "multiplicity mismatch at lambda = " + std::to_string(e.value) + ": claimed " +
                      std::to_string(check.claimed) + ", characteristic polynomial " +
                      std::to_string(check.in_char_poly) + ", nullity " + std::to_string(check.nullity);
    }
  }
  if (cert.mismatch.empty() && claim.order() != s.order()) {
    cert.mismatch = "claim has " + std::to_string(claim.order()) + " eigenvalues for a matrix of order " +
                    std::to_string(s.order());
  }
  if (cert.mismatch.empty() && cert.char_poly != cert.claimed_poly) {
    const auto top = static_cast<std::size_t>(std::max(cert.char_poly.degree(), cert.claimed_poly.degree()));
    for (std::size_t k = top + 1; k-- > 0;) {
      if (cert.char_poly.coefficient(k) != cert.claimed_poly.coefficient(k)) {
        cert.mismatch = "coefficient of x^" + std::to_string(k) + " differs: actual " +
                        cert.char_poly.coefficient(k).get_str() + ", claimed " + cert.claimed_poly.coefficient(k).get_str();
        break;
      }
    }
  }
  cert.passed = cert.mismatch.empty();
  return cert;
}

SpectrumClaim compute_spectrum(const SeidelMatrix& s) {
  const IntMatrix m = s.to_int_matrix();
  IntPolynomial rest = char_poly(m);
  SpectrumClaim claim;
  const long bound = s.order() == 0 ? 0 : static_cast<long>(s.order()) - 1;
  for (long lambda = -bound; lambda <= bound && rest.degree() > 0; ++lambda) {
    std::size_t mult = 0;
    while (rest.degree() > 0) {
      auto q = rest.divide_by_linear(Integer(lambda));
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult == 0) continue;
    const std::size_t nullity = nullity_at(m, lambda);
    if (nullity != mult) {
      throw std::logic_error("compute_spectrum: algebraic multiplicity " + std::to_string(mult) + " of " +
                             std::to_string(lambda) + " differs from nullity " + std::to_string(nullity));
    }
    claim.integer_eigs.push_back({lambda, mult});
  }
  if (rest.degree() == 2) {
    if (!rest.coefficient(1).fits_slong_p() || !rest.coefficient(0).fits_slong_p()) {
      throw UnrepresentableSpectrumError("compute_spectrum: quadratic cofactor coefficients out of range");
    }
    claim.quadratic = QuadraticFactor{rest.coefficient(1).get_si(), rest.coefficient(0).get_si()};
  } else if (rest.degree() != 0) {
    throw UnrepresentableSpectrumError("compute_spectrum: non-integral part has degree " + std::to_string(rest.degree()));
  }
  return claim;
}

AutGroupResult automorphism_order(const SeidelMatrix& s) {
  const canon::Graph g = s.negative_graph();
  std::vector<int> degree_colors(s.order());
  for (std::size_t v = 0; v < s.order(); ++v) degree_colors[v] = static_cast<int>(g.degree(v));
  auto group = canon::automorphism_group(g, degree_colors);

  for (const auto& perm : group.generators) {
    for (std::size_t i = 0; i < s.order(); ++i) {
      for (std::size_t j = 0; j < s.order(); ++j) {
        if (s(perm[i], perm[j]) != s(i, j)) throw std::logic_error("automorphism_order: generator does not preserve S");
      }
    }
  }
  return AutGroupResult{group.order, std::move(group.generators)};
}

SignedGroupResult signed_automorphism_order(const SeidelMatrix& s) {
  const std::size_t n = s.order();
  // Vertex 2i + a is line i with sign (-1)^a; (i, a) ~ (j, b) iff S_ij (-1)^(a+b) = -1.
  // Vertex 2n + i, in its own color, is joined to both signs of line i so that
  // every automorphism maps fibres to fibres.
  canon::Graph cover(3 * n);
  std::vector<int> colors(3 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cover.add_edge(2 * n + i, 2 * i);
    cover.add_edge(2 * n + i, 2 * i + 1);
    colors[2 * n + i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          const int sign = ((a + b) % 2 == 0) ? 1 : -1;
          if (s(i, j) * sign == -1) cover.add_edge(2 * i + a, 2 * j + b);
        }
      }
    }
  }
  auto group = canon::automorphism_group(cover, colors);

  SignedGroupResult result;
  for (const auto& g : group.generators) {
    SignedPermutation sp;
    sp.perm.resize(n);
    sp.signs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t image = g[2 * i];
      if (g[2 * i + 1] != (image ^ 1U)) throw std::logic_error("signed_automorphism_order: cover automorphism splits a fibre");
      sp.perm[i] = image / 2;
      sp.signs[i] = (image % 2 == 0) ? 1 : -1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && sp.signs[i] * sp.signs[j] * s(sp.perm[i], sp.perm[j]) != s(i, j)) {
          throw std::logic_error("signed_automorphism_order: generator does not preserve S");
        }
      }
    }
    result.generators.push_back(std::move(sp));
  }
  result.order = group.order;
  return result;
}

std::string switching_canonical_form(const SeidelMatrix& s) {
  const std::size_t n = s.order();
  std::string best;
  for (std::size_t v = 0; v < n; ++v) {
    // Switch so row v is all +1; the rest is the descendant graph at v.
    canon::Graph g(n - 1);
    auto index = [v](std::size_t i) { return i < v ? i : i - 1; };
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == v) continue;
        if (s(i, j) * s(v, i) * s(v, j) < 0) g.add_edge(index(i), index(j));
      }
    }
    std::string form = canon::canonical_labeling(g).form;
    if (best.empty() || form < best) best = std::move(form);
  }
  return "seidel:" + std::to_string(n) + ";" + best;
}

}  // namespace eqlines
