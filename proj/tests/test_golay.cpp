#include <doctest.h>

#include <set>

#include "eqlines/golay.hpp"
#include "fixtures.hpp"

using namespace eqlines;
using eqlines::testing::golay_code;

TEST_CASE("generator rows follow the bordered circulant layout") {
  const auto g = build_generator();
  REQUIRE(g.size() == 12);
  // Circulant rows occupy generator rows 2..12, coordinates 14..24. Its first
  // row is the quoted one; its second is that row shifted right once.
  auto circulant_row = [&](std::size_t r) {
    std::vector<int> block;
    for (int c = 14; c <= 24; ++c) block.push_back(g[r + 1].has(c) ? 1 : 0);
    return block;
  };
  CHECK(circulant_row(0) == std::vector<int>(kCirculantFirstRow.begin(), kCirculantFirstRow.end()));
  CHECK(circulant_row(1) == std::vector<int>{1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1});
  for (std::size_t r = 0; r < 11; ++r) {
    const auto row = circulant_row(r);
    for (std::size_t j = 0; j < 11; ++j) REQUIRE(row[j] == kCirculantFirstRow[(j + 11 - r) % 11]);
  }
  // Border: row 1 is e1 + coordinates 14..24; rows 2..12 carry a 1 at coordinate 13.
  CHECK(g[0] == Codeword::from_coordinates({1, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24}));
  for (std::size_t r = 1; r < 12; ++r) CHECK(g[r].has(13));
  for (const auto& row : g) CHECK(row.weight() >= 8);
  CHECK(g == assemble_generator(CirculantShift::kRight));
}

TEST_CASE("gates reject the left-shift circulant") {
  const auto report = check_gates(assemble_generator(CirculantShift::kLeft));
  CHECK_FALSE(report.passed());
}

TEST_CASE("weight distribution of the generated code") {
  const auto& code = golay_code();
  CHECK(code.words().size() == 4096);
  CHECK(code.octads().size() == 759);
  CHECK(code.minimum_weight() == 8);
  const std::map<int, int> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  CHECK(code.weight_distribution() == expected);
  CHECK(code.contains(Codeword{}));
  CHECK(code.contains(Codeword::all_ones()));
  CHECK(code.contains(kFilterWordC1));
  CHECK(code.contains(kFilterWordC2));
  CHECK_FALSE(kFilterWordC1.has(1));
  CHECK_FALSE(kFilterWordC2.has(1));
}

TEST_CASE("c1 + c2 is a weight-12 codeword") {
  const auto sum = kFilterWordC1 ^ kFilterWordC2;
  CHECK(kFilterWordC1.intersection_size(kFilterWordC2) == 2);
  CHECK(sum.weight() == 12);
  CHECK(golay_code().contains(sum));
}

TEST_CASE("code is closed under addition and self-dual") {
  const auto& words = golay_code().words();
  std::set<std::uint32_t> all;
  for (auto w : words) all.insert(w.bits());
  // Every codeword pair: sum in the code, even intersection.
  for (std::size_t i = 0; i < words.size(); i += 7) {
    for (std::size_t j = 0; j < words.size(); j += 5) {
      REQUIRE(all.count((words[i] ^ words[j]).bits()) == 1);
      REQUIRE(words[i].intersection_size(words[j]) % 2 == 0);
    }
  }
  const auto& g = golay_code().generator();
  for (auto a : g) {
    for (auto b : g) CHECK(a.intersection_size(b) % 2 == 0);
  }
}

TEST_CASE("weight enumerator is symmetric") {
  const auto dist = golay_code().weight_distribution();
  for (auto [w, count] : dist) {
    REQUIRE(dist.count(24 - w) == 1);
    CHECK(dist.at(24 - w) == count);
  }
}

TEST_CASE("octads form a Steiner system S(5,8,24)") {
  const auto& octads = golay_code().octads();
  SUBCASE("pairwise intersections are 0, 2 or 4") {
    for (std::size_t i = 0; i < octads.size(); ++i) {
      for (std::size_t j = i + 1; j < octads.size(); ++j) {
        const int k = octads[i].intersection_size(octads[j]);
        REQUIRE((k == 0 || k == 2 || k == 4));
      }
    }
  }
  SUBCASE("every coordinate in 253 octads, every pair in 77") {
    for (int a = 1; a <= 24; ++a) {
      CHECK(octads_through(golay_code(), a).size() == 253);
      for (int b = a + 1; b <= 24; ++b) {
        int count = 0;
        for (auto d : octads) count += (d.has(a) && d.has(b)) ? 1 : 0;
        REQUIRE(count == 77);
      }
    }
  }
  SUBCASE("octads_through filters by coordinate") {
    const auto through1 = octads_through(golay_code(), 1);
    for (auto d : through1) {
      CHECK(d.weight() == 8);
      CHECK(d.has(1));
    }
    CHECK(std::is_sorted(through1.begin(), through1.end()));
    CHECK_THROWS_AS(octads_through(golay_code(), 0), std::out_of_range);
    CHECK_THROWS_AS(octads_through(golay_code(), 25), std::out_of_range);
  }
}

TEST_CASE("canonical order and determinism") {
  const auto& words = golay_code().words();
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(words.front() == Codeword{});
  const auto again = generate_code(build_generator());
  CHECK(again.words() == words);
  CHECK(again.octads() == golay_code().octads());
  // Coordinate 1 is the most significant bit.
  CHECK(Codeword::from_coordinates({1}) > Codeword::from_coordinates({2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(Codeword::from_coordinates({1, 5, 24}).coordinates() == std::vector<int>{1, 5, 24});
}

TEST_CASE("rank-deficient generator is rejected") {
  auto g = build_generator();
  g[11] = g[10];
  CHECK(gf2_rank({g.begin(), g.end()}) == 11);
  CHECK_THROWS_AS(generate_code(g), RankDeficiencyError);
  CHECK(check_gates(g).first_failure() == "rank");
}

TEST_CASE("corrupted generator fails a named gate") {
  auto g = build_generator();
  g[11] = g[11] ^ Codeword(Codeword::bit_for(24));
  const auto report = check_gates(g);
  CHECK_FALSE(report.passed());
  CHECK(report.first_failure() == "self_duality");
}
