#include "jds/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace jds {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits &b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t count(const Bits &b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t lowest(const Bits &b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
  return static_cast<std::size_t>(-1);
}

void clear_bit(Bits &b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
void set_bit(Bits &b, std::size_t v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }

// Vertices by repeatedly removing a minimum-degree vertex (smallest index on
// ties); the result lists the last-removed vertex first.
std::vector<std::size_t> degeneracy_order(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> gone(n, false);
  std::vector<std::size_t> removed;
  removed.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    gone[pick] = true;
    removed.push_back(pick);
    for (std::size_t u = 0; u < n; ++u)
      if (!gone[u] && g.adjacent(pick, u)) --deg[u];
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

class CliqueSearch {
public:
  CliqueSearch(const Graph &g, std::uint64_t budget) : g_(g), budget_(budget) {}

  void run(const std::vector<std::size_t> &seed) {
    best_ = seed;
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.order(); ++v) set_bit(all, v);
    if (g_.order() > 0) expand(all);
  }

  const std::vector<std::size_t> &best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::uint64_t expansions() const { return expansions_; }

private:
  void expand(Bits p) {
    if (++expansions_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colours;
    Bits uncoloured = p;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits q = uncoloured;
      while (any(q)) {
        const std::size_t v = lowest(q);
        clear_bit(q, v);
        clear_bit(uncoloured, v);
        const std::uint64_t *row = g_.row(v);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~row[w];
        verts.push_back(v);
        colours.push_back(colour);
      }
    }
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colours[idx] <= best_.size()) return;
      const std::size_t v = verts[idx];
      current_.push_back(v);
      Bits next(p.size());
      const std::uint64_t *row = g_.row(v);
      for (std::size_t w = 0; w < p.size(); ++w) next[w] = p[w] & row[w];
      if (!any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (aborted_) return;
      clear_bit(p, v);
    }
  }

  const Graph &g_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

class MaximalCliqueSizes {
public:
  MaximalCliqueSizes(const Graph &g, std::uint64_t budget) : g_(g), budget_(budget) {}

  bool run(std::set<std::size_t> &sizes) {
    Bits p(g_.words(), 0);
    for (std::size_t v = 0; v < g_.order(); ++v) set_bit(p, v);
    Bits x(g_.words(), 0);
    visit(0, p, x, sizes);
    return !aborted_;
  }

private:
  // Bron-Kerbosch with a pivot maximizing |P & N(u)|.
  void visit(std::size_t depth, Bits p, Bits x, std::set<std::size_t> &sizes) {
    if (++calls_ > budget_) {
      aborted_ = true;
      return;
    }
    if (!any(p)) {
      if (!any(x)) sizes.insert(depth);
      return;
    }
    std::size_t pivot = 0;
    std::size_t pivot_score = 0;
    bool have_pivot = false;
    for (std::size_t u = 0; u < g_.order(); ++u) {
      const bool in_px = (p[u / 64] >> (u % 64) & 1U) || (x[u / 64] >> (u % 64) & 1U);
      if (!in_px) continue;
      std::size_t score = 0;
      const std::uint64_t *row = g_.row(u);
      for (std::size_t w = 0; w < p.size(); ++w) score += static_cast<std::size_t>(std::popcount(p[w] & row[w]));
      if (!have_pivot || score > pivot_score) {
        pivot = u;
        pivot_score = score;
        have_pivot = true;
      }
    }
    Bits candidates = p;
    const std::uint64_t *prow = g_.row(pivot);
    for (std::size_t w = 0; w < candidates.size(); ++w) candidates[w] &= ~prow[w];
    while (any(candidates)) {
      const std::size_t v = lowest(candidates);
      clear_bit(candidates, v);
      const std::uint64_t *row = g_.row(v);
      Bits np(p.size());
      Bits nx(x.size());
      for (std::size_t w = 0; w < p.size(); ++w) {
        np[w] = p[w] & row[w];
        nx[w] = x[w] & row[w];
      }
      visit(depth + 1, std::move(np), std::move(nx), sizes);
      if (aborted_) return;
      clear_bit(p, v);
      set_bit(x, v);
    }
  }

  const Graph &g_;
  std::uint64_t budget_;
  std::uint64_t calls_ = 0;
  bool aborted_ = false;
};

}  // namespace

Graph::Graph(std::size_t order)
    : order_(order), words_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self loop");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(v)[w]));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < order_; ++v) total += degree(v);
  return total / 2;
}

bool Graph::is_complete() const { return edge_count() * 2 == order_ * (order_ == 0 ? 0 : order_ - 1); }

bool Graph::is_clique(const std::vector<std::size_t> &vs) const {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!adjacent(vs[a], vs[b])) return false;
  return true;
}

bool Graph::is_maximal_clique(const std::vector<std::size_t> &vs) const {
  if (!is_clique(vs)) return false;
  std::vector<bool> in(order_, false);
  for (auto v : vs) in[v] = true;
  for (std::size_t u = 0; u < order_; ++u) {
    if (in[u]) continue;
    if (std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return adjacent(u, v); })) return false;
  }
  return true;
}

Graph Graph::induced(const std::vector<std::size_t> &vs) const {
  Graph h(vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (adjacent(vs[a], vs[b])) h.add_edge(a, b);
  return h;
}

CliqueResult max_clique(const Graph &g, std::uint64_t budget) {
  const std::vector<std::size_t> order = degeneracy_order(g);
  const Graph h = g.induced(order);

  // Greedy seed: walk the order and keep every vertex adjacent to all kept.
  std::vector<std::size_t> seed;
  for (std::size_t v = 0; v < h.order(); ++v)
    if (std::all_of(seed.begin(), seed.end(), [&](std::size_t u) { return h.adjacent(u, v); }))
      seed.push_back(v);

  CliqueSearch search(h, budget);
  search.run(seed);

  CliqueResult out;
  for (std::size_t v : search.best()) out.vertices.push_back(order[v]);
  std::sort(out.vertices.begin(), out.vertices.end());
  out.optimal = !search.aborted();
  out.expansions = search.expansions();
  return out;
}

std::vector<std::vector<std::size_t>> complement_components(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && comp[v] < 0 && !g.adjacent(u, v)) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::optional<std::set<std::size_t>> maximal_clique_sizes(const Graph &g, std::uint64_t budget) {
  std::set<std::size_t> total{0};
  for (const auto &piece : complement_components(g)) {
    const Graph h = g.induced(piece);
    std::set<std::size_t> sizes;
    MaximalCliqueSizes enumerator(h, budget);
    if (!enumerator.run(sizes)) return std::nullopt;
    std::set<std::size_t> next;
    for (auto a : total)
      for (auto b : sizes) next.insert(a + b);
    total = std::move(next);
  }
  return total;
}

}  // namespace jds
