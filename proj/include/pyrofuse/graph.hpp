#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pyrofuse/pauli.hpp"

namespace pyrofuse {

/// Simple undirected graph on vertices 0..n-1 (symmetric adjacency, no loops).
class GraphState {
 public:
  GraphState() = default;
  explicit GraphState(std::size_t n);
  GraphState(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static GraphState complete(std::size_t n);
  static GraphState path(std::size_t n);
  // Disjoint union; vertices of b are shifted by a.size().
  static GraphState disjoint_union(const GraphState& a, const GraphState& b);

  std::size_t size() const { return adj_.size(); }

  bool has_edge(std::size_t a, std::size_t b) const { return adj_[a].get(b); }
  void set_edge(std::size_t a, std::size_t b, bool present);
  void toggle_edge(std::size_t a, std::size_t b);

  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  const BitVector& row(std::size_t v) const { return adj_[v]; }

  // Complements the subgraph induced on N(v).
  void local_complement(std::size_t v);

  // Induced subgraph on `keep` (in the given order).
  GraphState induced(const std::vector<std::size_t>& keep) const;
  GraphState without_vertex(std::size_t v) const;

  // Connected components, each sorted ascending; components ordered by
  // their smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }

  // Upper-triangle bit key; valid for n <= 11.
  std::uint64_t key() const;

  std::string str() const;

  friend bool operator==(const GraphState&, const GraphState&) = default;

 private:
  std::vector<BitVector> adj_;
};

inline constexpr std::size_t kDefaultLcGuard = 9;
inline constexpr std::size_t kMaxLcGuard = 11;

/// True iff g2 lies in the local-complementation orbit of g1.  The orbit is
/// enumerated exhaustively, so n is capped by `max_n` (itself <= 11).
bool lc_equivalent(const GraphState& g1, const GraphState& g2,
                   std::size_t max_n = kDefaultLcGuard);

/// Component-wise LC test: the graphs must have identical connected
/// components and each component pair must be LC-equivalent.  Local
/// complementation never changes components, so this decides LC
/// equivalence whenever every component has at most `max_component`
/// vertices, even when n itself exceeds the guard.
bool lc_equivalent_by_components(const GraphState& g1, const GraphState& g2,
                                 std::size_t max_component = kDefaultLcGuard);

/// Size of the LC orbit of g (same guard as lc_equivalent).
std::size_t lc_orbit_size(const GraphState& g, std::size_t max_n = kDefaultLcGuard);

}  // namespace pyrofuse
