#pragma once

// Graph automorphisms and canonical labeling by equitable partition refinement
// with vertex individualization (the search-tree scheme used by nauty-style
// tools, in a deliberately small form adequate for graphs of ~100 vertices).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqlines/exactlin.hpp"

namespace eqlines::canon {

// Simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }

  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const {
    return ((bits_[a * words_ + b / 64] >> (b % 64)) & 1U) != 0;
  }
  const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }
  std::size_t degree(std::size_t v) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// perm[i] is the image of vertex i.
using Permutation = std::vector<std::size_t>;

// True when perm is a bijection preserving adjacency and, if given, colors.
bool is_automorphism(const Graph& g, const Permutation& perm, std::span<const int> colors = {});

struct GroupInfo {
  Integer order;
  std::vector<Permutation> generators;
  std::size_t nodes_visited = 0;
};

// Color-preserving automorphism group. The order is the product of the
// stabilizer orbit lengths along the first path of the search tree; every
// returned generator has been checked with is_automorphism.
GroupInfo automorphism_group(const Graph& g, std::span<const int> colors = {});

struct CanonicalLabeling {
  std::vector<std::size_t> labeling;  // labeling[k] = vertex placed at position k
  std::string form;                   // canonical adjacency, "n:" + hex of the upper triangle
  std::size_t nodes_visited = 0;
};

// Canonical labeling; isomorphic (colored) graphs give identical `form`s.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

}  // namespace eqlines::canon
