#include "pyrofuse/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pyrofuse {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string to_string(Pairing p) { return p == Pairing::fixed ? "fixed" : "random"; }

Pairing parse_pairing(const std::string& s) {
  if (s == "fixed") return Pairing::fixed;
  if (s == "random") return Pairing::random;
  throw std::invalid_argument("pairing must be 'fixed' or 'random'");
}

std::uint64_t stream_bits(std::uint64_t seed, std::uint64_t trial, StreamKind kind, std::uint64_t id) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ static_cast<std::uint64_t>(kind));
  return splitmix64(h ^ id);
}

double stream_uniform(std::uint64_t seed, std::uint64_t trial, StreamKind kind, std::uint64_t id) {
  return static_cast<double>(stream_bits(seed, trial, kind, id) >> 11) * 0x1.0p-53;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

std::uint32_t UnionFind::find(std::uint32_t x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

void SampleConfig::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (site_deletion_prob && !(*site_deletion_prob >= 0.0 && *site_deletion_prob <= 1.0))
    throw std::invalid_argument("site deletion probability must lie in [0, 1]");
}

double SampleConfig::site_retention() const {
  return site_deletion_prob ? 1.0 - *site_deletion_prob : p * p;
}

const std::array<std::array<std::pair<int, int>, 2>, 3>& tetrahedron_matchings() {
  static const std::array<std::array<std::pair<int, int>, 2>, 3> m{{
      {{{0, 1}, {2, 3}}},
      {{{0, 2}, {1, 3}}},
      {{{0, 3}, {1, 2}}},
  }};
  return m;
}

TrialDraws draw_trial(const Lattice& lat, std::uint64_t seed, std::uint64_t trial, Pairing pairing) {
  TrialDraws d;
  const std::size_t nt = lat.tetrahedra.size(), ns = lat.sites.size();
  d.tet_u.resize(nt);
  d.site_v.resize(ns);
  d.matching.assign(nt, 0);
  for (std::size_t t = 0; t < nt; ++t) d.tet_u[t] = stream_uniform(seed, trial, StreamKind::tetrahedron, t);
  for (std::size_t s = 0; s < ns; ++s) d.site_v[s] = stream_uniform(seed, trial, StreamKind::site, s);
  if (pairing == Pairing::random)
    for (std::size_t t = 0; t < nt; ++t)
      d.matching[t] = static_cast<std::uint8_t>(stream_bits(seed, trial, StreamKind::pairing, t) % 3);
  return d;
}

Realization realize(const Lattice& lat, const TrialDraws& draws, double p, double retention) {
  const std::size_t nt = lat.tetrahedra.size(), ns = lat.sites.size();
  Realization r;
  r.retained.resize(ns);
  r.alive.resize(nt);
  r.matching = draws.matching;
  r.clusters = UnionFind(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    r.retained[s] = draws.site_v[s] < retention;
    r.retained_count += r.retained[s];
  }
  const auto& matchings = tetrahedron_matchings();
  for (std::size_t t = 0; t < nt; ++t) {
    const auto& c = lat.tetrahedra[t].corners;
    r.alive[t] = draws.tet_u[t] < p;
    if (r.alive[t]) {
      int first = -1;
      for (int site : c) {
        if (!r.retained[site]) continue;
        if (first < 0)
          first = site;
        else
          r.clusters.unite(first, site);
      }
    } else {
      for (auto [a, b] : matchings[r.matching[t]])
        if (r.retained[c[a]] && r.retained[c[b]]) r.clusters.unite(c[a], c[b]);
    }
  }

  std::vector<std::uint8_t> touches_source(ns, 0);
  for (int s : lat.source_sites)
    if (r.retained[s]) touches_source[r.clusters.find(s)] = 1;
  for (int s : lat.target_sites) {
    if (!r.retained[s]) continue;
    const auto root = r.clusters.find(s);
    if (touches_source[root]) {
      r.spanning = true;
      r.largest_spanning_cluster_size =
          std::max<std::size_t>(r.largest_spanning_cluster_size, r.clusters.set_size(root));
    }
  }
  return r;
}

Realization sample(const Lattice& lat, const SampleConfig& cfg) {
  cfg.validate();
  const auto draws = draw_trial(lat, cfg.seed, cfg.trial_index, cfg.pairing);
  return realize(lat, draws, cfg.p, cfg.site_retention());
}

std::vector<std::pair<int, int>> Realization::edges(const Lattice& lat) const {
  std::vector<std::pair<int, int>> out;
  const auto& matchings = tetrahedron_matchings();
  auto add = [&](int a, int b) {
    if (retained[a] && retained[b]) out.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (std::size_t t = 0; t < lat.tetrahedra.size(); ++t) {
    const auto& c = lat.tetrahedra[t].corners;
    if (alive[t]) {
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) add(c[a], c[b]);
    } else {
      for (auto [a, b] : matchings[matching[t]]) add(c[a], c[b]);
    }
  }
  return out;
}

double spanning_fraction(const Realization& r, const Lattice& lat) {
  if (!r.spanning || lat.sites.empty()) return 0.0;
  return static_cast<double>(r.largest_spanning_cluster_size) / static_cast<double>(lat.sites.size());
}

ClusterStats cluster_stats(const Realization& r) {
  ClusterStats st;
  std::map<std::uint32_t, std::size_t> sizes;
  for (std::size_t s = 0; s < r.retained.size(); ++s)
    if (r.retained[s]) ++sizes[r.clusters.find(static_cast<std::uint32_t>(s))];
  st.cluster_count = sizes.size();
  for (const auto& [root, size] : sizes) {
    ++st.size_histogram[size];
    st.largest = std::max(st.largest, size);
  }
  return st;
}

}  // namespace pyrofuse
