#include "pyrofuse/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace pyrofuse {

GraphState::GraphState(std::size_t n) : adj_(n, BitVector(n)) {}

GraphState::GraphState(std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : GraphState(n) {
  for (auto [a, b] : edges) set_edge(a, b, true);
}

GraphState GraphState::complete(std::size_t n) {
  GraphState g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.set_edge(a, b, true);
  return g;
}

GraphState GraphState::path(std::size_t n) {
  GraphState g(n);
  for (std::size_t a = 0; a + 1 < n; ++a) g.set_edge(a, a + 1, true);
  return g;
}

GraphState GraphState::disjoint_union(const GraphState& a, const GraphState& b) {
  GraphState g(a.size() + b.size());
  for (auto [u, v] : a.edges()) g.set_edge(u, v, true);
  for (auto [u, v] : b.edges()) g.set_edge(u + a.size(), v + a.size(), true);
  return g;
}

void GraphState::set_edge(std::size_t a, std::size_t b, bool present) {
  if (a >= size() || b >= size()) throw std::out_of_range("vertex out of range");
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  adj_[a].set(b, present);
  adj_[b].set(a, present);
}

void GraphState::toggle_edge(std::size_t a, std::size_t b) {
  set_edge(a, b, !has_edge(a, b));
}

std::vector<std::size_t> GraphState::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w)
    if (adj_[v].get(w)) out.push_back(w);
  return out;
}

std::size_t GraphState::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : adj_) c += r.count();
  return c / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> GraphState::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (adj_[a].get(b)) out.emplace_back(a, b);
  return out;
}

void GraphState::local_complement(std::size_t v) {
  const auto nb = neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) toggle_edge(nb[i], nb[j]);
}

GraphState GraphState::induced(const std::vector<std::size_t>& keep) const {
  GraphState g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) g.set_edge(i, j, true);
  return g;
}

GraphState GraphState::without_vertex(std::size_t v) const {
  std::vector<std::size_t> keep;
  for (std::size_t w = 0; w < size(); ++w)
    if (w != v) keep.push_back(w);
  return induced(keep);
}

std::vector<std::vector<std::size_t>> GraphState::components() const {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (std::size_t w : neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::uint64_t GraphState::key() const {
  if (size() > kMaxLcGuard) throw std::length_error("graph too large for a 64-bit key");
  std::uint64_t k = 0;
  int bit = 0;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b, ++bit)
      if (has_edge(a, b)) k |= std::uint64_t{1} << bit;
  return k;
}

std::string GraphState::str() const {
  std::string s = "n=" + std::to_string(size()) + " {";
  bool first = true;
  for (auto [a, b] : edges()) {
    if (!first) s += ",";
    s += std::to_string(a) + "-" + std::to_string(b);
    first = false;
  }
  return s + "}";
}

namespace {

void check_guard(std::size_t n, std::size_t max_n) {
  if (max_n > kMaxLcGuard)
    throw std::invalid_argument("lc guard may not exceed " + std::to_string(kMaxLcGuard));
  if (n > max_n)
    throw std::length_error("graph has " + std::to_string(n) +
                            " vertices, above the LC orbit guard of " + std::to_string(max_n));
}

// Breadth-first walk of the LC orbit.  Stops early once `target` is seen.
std::size_t walk_orbit(const GraphState& start, const std::uint64_t* target, bool& found) {
  std::unordered_set<std::uint64_t> visited{start.key()};
  std::deque<GraphState> queue{start};
  found = target && start.key() == *target;
  while (!queue.empty() && !found) {
    GraphState g = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.degree(v) < 2) continue;  // no-op
      GraphState h = g;
      h.local_complement(v);
      const auto k = h.key();
      if (visited.insert(k).second) {
        if (target && k == *target) {
          found = true;
          break;
        }
        queue.push_back(std::move(h));
      }
    }
  }
  return visited.size();
}

}  // namespace

bool lc_equivalent(const GraphState& g1, const GraphState& g2, std::size_t max_n) {
  if (g1.size() != g2.size()) throw std::invalid_argument("graphs have different vertex sets");
  if (g1 == g2) return true;
  check_guard(g1.size(), max_n);
  if (g1.components() != g2.components()) return false;
  const auto target = g2.key();
  bool found = false;
  walk_orbit(g1, &target, found);
  return found;
}

bool lc_equivalent_by_components(const GraphState& g1, const GraphState& g2,
                                 std::size_t max_component) {
  if (g1.size() != g2.size()) throw std::invalid_argument("graphs have different vertex sets");
  const auto c1 = g1.components();
  if (c1 != g2.components()) return false;
  for (const auto& comp : c1) {
    if (!lc_equivalent(g1.induced(comp), g2.induced(comp), max_component)) return false;
  }
  return true;
}

std::size_t lc_orbit_size(const GraphState& g, std::size_t max_n) {
  check_guard(g.size(), max_n);
  bool found = false;
  return walk_orbit(g, nullptr, found);
}

}  // namespace pyrofuse
