#include "eqlines/canon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace eqlines::canon {

namespace {

using Cell = std::vector<std::size_t>;
using Trace = std::vector<long>;

struct Node {
  std::vector<Cell> cells;
  Trace trace;
  std::vector<std::size_t> individualized;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), mask_(g.words()) {}

  // Coarsest equitable refinement; `dirty` flags the cells to use as splitters.
  // Everything appended to `trace` depends only on cell positions and sizes.
  void refine(std::vector<Cell>& cells, std::vector<char> dirty, Trace& trace) const {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (;;) {
      auto next = std::find(dirty.begin(), dirty.end(), 1);
      if (next == dirty.end()) break;
      const auto k = static_cast<std::size_t>(next - dirty.begin());
      dirty[k] = 0;
      std::fill(mask_.begin(), mask_.end(), 0);
      for (auto v : cells[k]) mask_[v / 64] |= std::uint64_t{1} << (v % 64);

      for (std::size_t i = 0; i < cells.size(); ++i) {
        Cell& x = cells[i];
        if (x.size() == 1) continue;
        keyed.clear();
        for (auto v : x) keyed.emplace_back(neighbours_in_mask(v), v);
        const bool uniform = std::all_of(keyed.begin(), keyed.end(), [&](const auto& p) { return p.first == keyed.front().first; });
        if (uniform) continue;
        std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

        std::vector<Cell> pieces;
        trace.push_back(static_cast<long>(i));
        for (std::size_t p = 0; p < keyed.size();) {
          std::size_t q = p;
          Cell piece;
          while (q < keyed.size() && keyed[q].first == keyed[p].first) piece.push_back(keyed[q++].second);
          trace.push_back(static_cast<long>(keyed[p].first));
          trace.push_back(static_cast<long>(piece.size()));
          pieces.push_back(std::move(piece));
          p = q;
        }
        const std::size_t added = pieces.size() - 1;
        cells[i] = std::move(pieces[0]);
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::make_move_iterator(pieces.begin() + 1),
                     std::make_move_iterator(pieces.end()));
        dirty[i] = 1;
        dirty.insert(dirty.begin() + static_cast<std::ptrdiff_t>(i) + 1, added, 1);
        i += added;
      }
    }
    trace.push_back(-1);
    for (const auto& c : cells) trace.push_back(static_cast<long>(c.size()));
  }

  Node root(std::span<const int> colors) const {
    const std::size_t n = g_.order();
    Node node;
    if (n == 0) return node;
    std::map<int, Cell> by_color;
    for (std::size_t v = 0; v < n; ++v) by_color[colors.empty() ? 0 : colors[v]].push_back(v);
    for (auto& [color, cell] : by_color) {
      node.trace.push_back(static_cast<long>(cell.size()));
      node.cells.push_back(std::move(cell));
    }
    refine(node.cells, std::vector<char>(node.cells.size(), 1), node.trace);
    return node;
  }

  Node child(const Node& parent, std::size_t target, std::size_t vertex) const {
    Node node;
    node.cells = parent.cells;
    node.individualized = parent.individualized;
    node.individualized.push_back(vertex);
    Cell rest;
    for (auto v : node.cells[target]) {
      if (v != vertex) rest.push_back(v);
    }
    node.cells[target] = Cell{vertex};
    node.cells.insert(node.cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
    std::vector<char> dirty(node.cells.size(), 0);
    dirty[target] = 1;
    dirty[target + 1] = 1;
    node.trace.push_back(static_cast<long>(target));
    refine(node.cells, std::move(dirty), node.trace);
    return node;
  }

 private:
  std::size_t neighbours_in_mask(std::size_t v) const {
    const std::uint64_t* row = g_.row(v);
    std::size_t count = 0;
    for (std::size_t w = 0; w < mask_.size(); ++w) count += static_cast<std::size_t>(std::popcount(row[w] & mask_[w]));
    return count;
  }

  const Graph& g_;
  mutable std::vector<std::uint64_t> mask_;
};

bool is_discrete(const Node& node, std::size_t n) { return node.cells.size() == n; }

// First smallest non-singleton cell.
std::size_t target_cell(const Node& node) {
  std::size_t best = node.cells.size();
  for (std::size_t i = 0; i < node.cells.size(); ++i) {
    const auto size = node.cells[i].size();
    if (size > 1 && (best == node.cells.size() || size < node.cells[best].size())) best = i;
  }
  return best;
}

std::vector<std::size_t> leaf_labeling(const Node& node) {
  std::vector<std::size_t> lab;
  lab.reserve(node.cells.size());
  for (const auto& c : node.cells) lab.push_back(c.front());
  return lab;
}

// Upper triangle of the graph relabeled by `lab`, packed row by row.
std::vector<std::uint64_t> relabeled_adjacency(const Graph& g, const std::vector<std::size_t>& lab) {
  const std::size_t n = lab.size();
  std::vector<std::uint64_t> bits((n * (n - (n > 0 ? 1 : 0)) / 2 + 63) / 64 + 1, 0);
  std::size_t pos = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++pos) {
      if (g.adjacent(lab[a], lab[b])) bits[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
    }
  }
  return bits;
}

Permutation mapping(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
  Permutation perm(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) perm[from[k]] = to[k];
  return perm;
}

bool fixes_all(const Permutation& perm, const std::vector<std::size_t>& points) {
  return std::all_of(points.begin(), points.end(), [&](std::size_t p) { return perm[p] == p; });
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::span<const int> colors) : g_(g), colors_(colors), refiner_(g) {}

  GroupInfo run() {
    GroupInfo info;
    info.order = 1;
    const std::size_t n = g_.order();
    if (n == 0) return info;

    path_.push_back(refiner_.root(colors_));
    while (!is_discrete(path_.back(), n)) {
      const std::size_t t = target_cell(path_.back());
      targets_.push_back(t);
      path_.push_back(refiner_.child(path_.back(), t, path_.back().cells[t].front()));
    }
    first_leaf_ = leaf_labeling(path_.back());
    nodes_ = path_.size();

    for (std::size_t d = targets_.size(); d-- > 0;) {
      const Cell& cell = path_[d].cells[targets_[d]];
      const std::size_t v = cell.front();
      std::vector<std::size_t> rejected;
      for (std::size_t i = 1; i < cell.size(); ++i) {
        const std::size_t w = cell[i];
        UnionFind orbits = current_orbits();
        if (orbits.find(w) == orbits.find(v)) continue;
        if (std::any_of(rejected.begin(), rejected.end(), [&](std::size_t r) { return orbits.find(r) == orbits.find(w); })) continue;
        if (auto gamma = find_equivalent_leaf(refiner_.child(path_[d], targets_[d], w), d + 1)) {
          generators_.push_back(std::move(*gamma));
        } else {
          rejected.push_back(w);
        }
      }
      UnionFind orbits = current_orbits();
      const auto orbit_length = static_cast<unsigned long>(
          std::count_if(cell.begin(), cell.end(), [&](std::size_t w) { return orbits.find(w) == orbits.find(v); }));
      info.order *= orbit_length;
    }
    info.generators = generators_;
    info.nodes_visited = nodes_;
    return info;
  }

 private:
  UnionFind current_orbits() const {
    UnionFind uf(g_.order());
    for (const auto& gen : generators_) {
      for (std::size_t i = 0; i < gen.size(); ++i) uf.unite(i, gen[i]);
    }
    return uf;
  }

  std::optional<Permutation> find_equivalent_leaf(const Node& node, std::size_t depth) {
    ++nodes_;
    if (node.trace != path_[depth].trace) return std::nullopt;
    if (is_discrete(node, g_.order())) {
      Permutation gamma = mapping(first_leaf_, leaf_labeling(node));
      if (is_automorphism(g_, gamma, colors_)) return gamma;
      return std::nullopt;
    }
    const std::size_t t = targets_[depth];
    for (auto u : node.cells[t]) {
      if (auto gamma = find_equivalent_leaf(refiner_.child(node, t, u), depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::span<const int> colors_;
  Refiner refiner_;
  std::vector<Node> path_;
  std::vector<std::size_t> targets_;
  std::vector<std::size_t> first_leaf_;
  std::vector<Permutation> generators_;
  std::size_t nodes_ = 0;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::span<const int> colors) : g_(g), colors_(colors), refiner_(g) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (g_.order() == 0) {
      out.form = "0:";
      return out;
    }
    Node root = refiner_.root(colors_);
    std::vector<const Trace*> stack{&root.trace};
    dfs(root, stack);

    out.labeling = best_lab_;
    out.nodes_visited = nodes_;
    out.form = encode();
    return out;
  }

 private:
  // <0: current path is smaller than the best path so far, 0: equal prefix, >0: larger.
  int compare_prefix(const std::vector<const Trace*>& stack) const {
    for (std::size_t d = 0; d < stack.size() && d < best_traces_.size(); ++d) {
      if (*stack[d] < best_traces_[d]) return -1;
      if (best_traces_[d] < *stack[d]) return 1;
    }
    return 0;
  }

  void dfs(const Node& node, std::vector<const Trace*>& stack) {
    ++nodes_;
    if (have_best_ && compare_prefix(stack) > 0) return;

    if (is_discrete(node, g_.order())) {
      auto lab = leaf_labeling(node);
      auto adjacency = relabeled_adjacency(g_, lab);
      const int cmp = have_best_ ? compare_prefix(stack) : -1;
      if (cmp < 0 || (cmp == 0 && adjacency < best_adjacency_)) {
        have_best_ = true;
        best_traces_.clear();
        for (const auto* t : stack) best_traces_.push_back(*t);
        best_lab_ = std::move(lab);
        best_adjacency_ = std::move(adjacency);
      } else if (cmp == 0 && adjacency == best_adjacency_) {
        Permutation gamma = mapping(best_lab_, lab);
        if (is_automorphism(g_, gamma, colors_)) generators_.push_back(std::move(gamma));
      }
      return;
    }

    const std::size_t t = target_cell(node);
    std::vector<std::size_t> explored;
    for (auto u : node.cells[t]) {
      // Skip children equivalent to an explored one under known automorphisms
      // fixing the current individualization sequence.
      UnionFind orbits(g_.order());
      for (const auto& gen : generators_) {
        if (!fixes_all(gen, node.individualized)) continue;
        for (std::size_t i = 0; i < gen.size(); ++i) orbits.unite(i, gen[i]);
      }
      if (std::any_of(explored.begin(), explored.end(), [&](std::size_t e) { return orbits.find(e) == orbits.find(u); })) continue;
      explored.push_back(u);
      Node next = refiner_.child(node, t, u);
      stack.push_back(&next.trace);
      dfs(next, stack);
      stack.pop_back();
    }
  }

  std::string encode() const {
    static constexpr char kHex[] = "0123456789abcdef";
    const std::size_t n = g_.order();
    std::string s = std::to_string(n) + ":";
    if (!colors_.empty()) {
      for (auto v : best_lab_) s += std::to_string(colors_[v]) + ",";
      s += ":";
    }
    const std::size_t bit_count = n * (n - 1) / 2;
    for (std::size_t nibble = 0; nibble * 4 < bit_count; ++nibble) {
      const std::size_t pos = nibble * 4;
      const auto value = static_cast<unsigned>((best_adjacency_[pos / 64] >> (60 - pos % 64)) & 0xF);
      s += kHex[value];
    }
    return s;
  }

  const Graph& g_;
  std::span<const int> colors_;
  Refiner refiner_;
  bool have_best_ = false;
  std::vector<Trace> best_traces_;
  std::vector<std::size_t> best_lab_;
  std::vector<std::uint64_t> best_adjacency_;
  std::vector<Permutation> generators_;
  std::size_t nodes_ = 0;
};

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw std::out_of_range("Graph::add_edge: vertex out of range");
  if (a == b) throw std::invalid_argument("Graph::add_edge: loops are not supported");
  bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  bits_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[v * words_ + w]));
  return d;
}

bool is_automorphism(const Graph& g, const Permutation& perm, std::span<const int> colors) {
  const std::size_t n = g.order();
  if (perm.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (auto p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  if (!colors.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (colors[i] != colors[perm[i]]) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b) != g.adjacent(perm[a], perm[b])) return false;
    }
  }
  return true;
}

GroupInfo automorphism_group(const Graph& g, std::span<const int> colors) {
  if (!colors.empty() && colors.size() != g.order()) throw std::invalid_argument("automorphism_group: color count mismatch");
  return AutomorphismSearch(g, colors).run();
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (!colors.empty() && colors.size() != g.order()) throw std::invalid_argument("canonical_labeling: color count mismatch");
  return CanonicalSearch(g, colors).run();
}

}  // namespace eqlines::canon
