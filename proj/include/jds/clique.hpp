#pragma once

// Bitset graphs and exact maximum-clique search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace jds {

class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t words() const { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  const std::uint64_t *row(std::size_t v) const { return bits_.data() + v * words_; }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  bool is_complete() const;
  bool is_clique(const std::vector<std::size_t> &vs) const;
  bool is_maximal_clique(const std::vector<std::size_t> &vs) const;

  /// Induced subgraph; vertex i of the result is vs[i].
  Graph induced(const std::vector<std::size_t> &vs) const;

private:
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct CliqueResult {
  std::vector<std::size_t> vertices;  // sorted
  bool optimal = false;               // search finished within budget
  std::uint64_t expansions = 0;
};

/// Branch and bound with greedy-colouring bounds over a degeneracy order.
/// `budget` caps the number of search-tree nodes; when it runs out the
/// best clique so far is returned with optimal = false.
CliqueResult max_clique(const Graph &g, std::uint64_t budget);

/// Sizes of all maximal cliques. The graph is split into the components of
/// its complement (it is the join of those pieces) and maximal cliques are
/// enumerated per piece; the size sets add. Returns nullopt when the
/// enumeration exceeds `budget` recursive calls.
std::optional<std::set<std::size_t>> maximal_clique_sizes(const Graph &g, std::uint64_t budget);

/// Connected components of the complement graph, each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<std::size_t>> complement_components(const Graph &g);

}  // namespace jds
