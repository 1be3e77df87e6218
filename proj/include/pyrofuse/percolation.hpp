#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pyrofuse/lattice.hpp"

namespace pyrofuse {

enum class Pairing { fixed, random };

std::string to_string(Pairing p);
Pairing parse_pairing(const std::string& s);

// ---------------------------------------------------------------------------
// Counter-based randomness.  Every draw is a pure function of
// (seed, trial, kind, id), so sampling order and thread schedule never
// change a result.

enum class StreamKind : std::uint64_t { tetrahedron = 1, site = 2, pairing = 3, sweep_point = 4 };

std::uint64_t stream_bits(std::uint64_t seed, std::uint64_t trial, StreamKind kind, std::uint64_t id);
// Uniform in [0, 1) from the top 53 bits.
double stream_uniform(std::uint64_t seed, std::uint64_t trial, StreamKind kind, std::uint64_t id);

// ---------------------------------------------------------------------------

/// Disjoint sets with path halving and union by size.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(std::size_t n);

  std::size_t size() const { return parent_.size(); }
  std::uint32_t find(std::uint32_t x);
  std::uint32_t find(std::uint32_t x) const;
  bool unite(std::uint32_t a, std::uint32_t b);
  std::uint32_t set_size(std::uint32_t x) const { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

struct SampleConfig {
  double p = 0.75;  // Bell-measurement success probability
  Pairing pairing = Pairing::fixed;
  std::uint64_t seed = 1;
  std::uint64_t trial_index = 0;
  // Replaces the default site deletion probability 1 - p^2 when set.
  std::optional<double> site_deletion_prob;

  void validate() const;
  double site_retention() const;
};

/// The three perfect matchings of a tetrahedron's corners (by sublattice).
/// Matching 0 is the fixed pairing {0,1},{2,3}.
const std::array<std::array<std::pair<int, int>, 2>, 3>& tetrahedron_matchings();

/// Uniform draws for one trial, independent of p.
struct TrialDraws {
  std::vector<double> tet_u;
  std::vector<double> site_v;
  std::vector<std::uint8_t> matching;
};
TrialDraws draw_trial(const Lattice& lat, std::uint64_t seed, std::uint64_t trial, Pairing pairing);

struct Realization {
  std::vector<std::uint8_t> retained;  // per site
  std::vector<std::uint8_t> alive;     // per tetrahedron: K4 if 1, else matching
  std::vector<std::uint8_t> matching;  // per tetrahedron, used when not alive
  UnionFind clusters;
  bool spanning = false;
  std::size_t largest_spanning_cluster_size = 0;
  std::size_t retained_count = 0;

  /// Explicit edge list between retained sites, (a < b).
  std::vector<std::pair<int, int>> edges(const Lattice& lat) const;
};

/// Thresholds the draws: tetrahedron alive iff u < p, site kept iff
/// v < retention.  Monotone in both p and retention for fixed draws.
Realization realize(const Lattice& lat, const TrialDraws& draws, double p, double retention);

Realization sample(const Lattice& lat, const SampleConfig& cfg);

/// Largest spanning cluster divided by the total site count (0 if none spans).
double spanning_fraction(const Realization& r, const Lattice& lat);

struct ClusterStats {
  std::size_t cluster_count = 0;
  std::map<std::size_t, std::size_t> size_histogram;  // size -> number of clusters
  std::size_t largest = 0;
};
ClusterStats cluster_stats(const Realization& r);

}  // namespace pyrofuse
