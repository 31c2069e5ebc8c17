#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "eqlines/search.hpp"
#include "fixtures.hpp"

using namespace eqlines;
using eqlines::testing::final_lines;
using eqlines::testing::golay_code;
using eqlines::testing::seidel_54;

namespace {

// Direct per-pattern check: solve Gram(B) c = 16 s and test norm and angles.
bool oracle_accepts(const LineSystem& system, const std::vector<std::size_t>& basis, const std::vector<int>& signs,
                    bool exact_norm) {
  const std::size_t r = basis.size();
  IntMatrix gram(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) gram(a, b) = scaled_inner(system.vectors[basis[a]], system.vectors[basis[b]]);
  }
  std::vector<Rational> rhs(r);
  for (std::size_t k = 0; k < r; ++k) rhs[k] = 16 * signs[k];
  const auto c = solve_rational(gram, rhs);
  Rational norm = 0;
  for (std::size_t k = 0; k < r; ++k) norm += rhs[k] * c[k];
  if (exact_norm ? norm != 80 : norm > 80) return false;
  for (std::size_t i = 0; i < system.size(); ++i) {
    Rational ip = 0;
    for (std::size_t k = 0; k < r; ++k) ip += c[k] * scaled_inner(system.vectors[i], system.vectors[basis[k]]);
    if (abs(ip) != 16) return false;
  }
  return true;
}

LineSystem without_last(const LineSystem& s) {
  std::vector<LineVector> v(s.vectors.begin(), s.vectors.end() - 1);
  return make_system(std::move(v));
}

bool parallel(const std::vector<Rational>& w, const ScaledVector& v) {
  bool plus = true;
  bool minus = true;
  for (std::size_t c = 0; c < kCodeLength; ++c) {
    plus = plus && w[c] == v[c];
    minus = minus && w[c] == -v[c];
  }
  return plus || minus;
}

}  // namespace

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(54, 4) == 316251);
  CHECK(binomial(54, 3) == 24804);
  CHECK(binomial(54, 2) == 1431);
  CHECK(binomial(54, 1) == 54);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);

  for (std::size_t n : {5U, 8U}) {
    for (std::size_t k : {1U, 2U, 3U}) {
      std::vector<std::size_t> combo(k);
      for (std::size_t i = 0; i < k; ++i) combo[i] = i;
      std::uint64_t index = 0;
      std::set<std::vector<std::size_t>> seen;
      do {
        REQUIRE(unrank_combination(index, n, k) == combo);
        seen.insert(combo);
        ++index;
      } while (next_combination(combo, n));
      CHECK(index == binomial(n, k));
      CHECK(seen.size() == index);
    }
  }
}

TEST_CASE("greedy basis") {
  const auto basis = greedy_basis(final_lines());
  CHECK(basis.size() == 18);
  CHECK(basis.front() == 0);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
}

TEST_CASE("a single line extends inside a larger ambient space") {
  const LineSystem one = make_system({lift(octads_through(golay_code(), 1).front())});
  REQUIRE(one.ambient_dim == 1);
  const auto tight = check_extendibility(one);
  CHECK_FALSE(tight.extendible);
  CHECK(tight.patterns_examined == 2);

  const auto loose = check_extendibility(one, {}, 2);
  CHECK(loose.extendible);
  REQUIRE(loose.witnesses.size() == 2);
  for (const auto& w : loose.witnesses) {
    CHECK(w.span_norm_sq == Rational(16, 5));
    CHECK(w.orthogonal_norm_sq == 80 - w.span_norm_sq);
  }
  CHECK_THROWS_AS(check_extendibility(one, {}, 0), std::invalid_argument);
}

TEST_CASE("the 54 lines do not extend") {
  const auto report = check_extendibility(final_lines());
  CHECK_FALSE(report.extendible);
  CHECK(report.witnesses.empty());
  CHECK(report.ambient_dim == 18);
  CHECK(report.patterns_examined == (std::uint64_t{1} << 18));
  CHECK(report.gram_determinant != 0);
}

TEST_CASE("deleting a line lets the search recover it") {
  const LineSystem reduced = without_last(final_lines());
  const auto report = check_extendibility(reduced, {}, 18);
  REQUIRE(report.extendible);
  bool recovered = false;
  for (const auto& w : report.witnesses) {
    CHECK(oracle_accepts(reduced, report.basis, w.signs, report.ambient_dim == report.basis.size()));
    recovered = recovered || parallel(w.coords, final_lines().vectors.back().coords);
  }
  CHECK(recovered);
}

TEST_CASE("incremental search agrees with per-pattern solves") {
  const LineSystem reduced = without_last(final_lines());
  const auto report = check_extendibility(reduced, {}, 18);
  std::set<std::vector<int>> accepted;
  for (const auto& w : report.witnesses) accepted.insert(w.signs);

  const bool exact = report.ambient_dim == report.basis.size();
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> signs(report.basis.size());
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    REQUIRE(oracle_accepts(reduced, report.basis, signs, exact) == (accepted.count(signs) == 1));
  }

  const auto full = check_extendibility(final_lines());
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> signs(full.basis.size());
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    REQUIRE_FALSE(oracle_accepts(final_lines(), full.basis, signs, true));
  }
}

TEST_CASE("thread count does not change the extendibility report") {
  const LineSystem reduced = without_last(final_lines());
  const auto one = check_extendibility(reduced, {1, {}}, 18);
  const auto four = check_extendibility(reduced, {4, {}}, 18);
  REQUIRE(one.witnesses.size() == four.witnesses.size());
  for (std::size_t k = 0; k < one.witnesses.size(); ++k) {
    CHECK(one.witnesses[k].pattern == four.witnesses[k].pattern);
    CHECK(one.witnesses[k].coords == four.witnesses[k].coords);
  }
}

TEST_CASE("screen deviation") {
  CHECK(screen_deviation(SeidelMatrix::clique(5)) < 1e-9);
  const std::vector<std::size_t> removed{2, 53};
  CHECK(screen_deviation(seidel_54().without(removed)) < kScreenIntegerTolerance);
  CHECK(screen_deviation(seidel_54()) > kScreenIntegerTolerance + kScreenAmbiguityBand);
}

TEST_CASE("scan of orders 52 and 53") {
  const auto& s = seidel_54();
  const auto result = subseidel_scan(s, {52, 53});
  CHECK(result.stats.at(53).examined == 54);
  CHECK(result.stats.at(52).examined == 1431);
  CHECK(result.stats.at(53).certified_hits == 0);
  CHECK(result.stats.at(52).certified_hits == 9);
  REQUIRE(result.hits.size() == 9);
  REQUIRE(result.equivalence_classes.size() == 1);
  CHECK(result.equivalence_classes.front().members.size() == 9);

  const std::set<std::vector<std::size_t>> expected{{2, 53},  {4, 23},  {6, 19},  {7, 52}, {11, 32},
                                                    {13, 34}, {21, 30}, {36, 39}, {42, 47}};
  std::set<std::vector<std::size_t>> removed_sets;
  for (const auto& hit : result.hits) {
    CHECK(hit.order == 52);
    CHECK(hit.spectrum.integral());
    CHECK(hit.spectrum.eigenvalue_sum() == 0);
    CHECK(hit.spectrum.eigenvalue_square_sum() == 52 * 51);
    removed_sets.insert(hit.removed);
  }
  CHECK(removed_sets == expected);

  // Automorphisms of S permute the removed pairs of the hits.
  for (const auto& g : automorphism_order(s).generators) {
    for (const auto& pair : removed_sets) {
      std::vector<std::size_t> image{g[pair[0]], g[pair[1]]};
      std::sort(image.begin(), image.end());
      CHECK(removed_sets.count(image) == 1);
    }
  }
  for (const auto& g : signed_automorphism_order(s).generators) {
    for (const auto& pair : removed_sets) {
      std::vector<std::size_t> image{g.perm[pair[0]], g.perm[pair[1]]};
      std::sort(image.begin(), image.end());
      CHECK(removed_sets.count(image) == 1);
    }
  }
}

TEST_CASE("scan of order 53 alone finds nothing") {
  const auto result = subseidel_scan(seidel_54(), {53});
  CHECK(result.hits.empty());
  CHECK(result.equivalence_classes.empty());
  CHECK(result.stats.at(53).examined == 54);
}

TEST_CASE("scan rejects orders outside the supported range") {
  CHECK_THROWS(subseidel_scan(seidel_54(), {55}));
  CHECK_THROWS(subseidel_scan(seidel_54(), {0}));
}
