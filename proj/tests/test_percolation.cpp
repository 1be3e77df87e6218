#include <numeric>
#include <set>

#include "doctest.h"
#include "properties.hpp"
#include "pyrofuse/percolation.hpp"

using namespace pyrofuse;

TEST_CASE("union-find") {
  UnionFind uf(6);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.unite(1, 3));
  CHECK(uf.find(0) == uf.find(2));
  CHECK(uf.find(4) != uf.find(5));
  CHECK(uf.set_size(3) == 4);
  CHECK(uf.set_size(5) == 1);
}

TEST_CASE("counter-based streams") {
  CHECK(stream_bits(1, 2, StreamKind::site, 3) == stream_bits(1, 2, StreamKind::site, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t t = 0; t < 4; ++t)
      for (auto k : {StreamKind::tetrahedron, StreamKind::site, StreamKind::pairing})
        for (std::uint64_t id = 0; id < 4; ++id) seen.insert(stream_bits(s, t, k, id));
  CHECK(seen.size() == 4 * 4 * 3 * 4);
  double sum = 0;
  for (std::uint64_t id = 0; id < 20000; ++id) {
    const double u = stream_uniform(9, 0, StreamKind::site, id);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("tetrahedron matchings are the three perfect matchings") {
  const auto& m = tetrahedron_matchings();
  std::set<std::set<std::pair<int, int>>> distinct;
  for (const auto& mm : m) {
    std::set<int> covered;
    for (auto [a, b] : mm) {
      covered.insert(a);
      covered.insert(b);
    }
    CHECK(covered.size() == 4);
    distinct.insert({mm[0], mm[1]});
  }
  CHECK(distinct.size() == 3);
  CHECK(m[0][0] == std::pair{0, 1});
  CHECK(m[0][1] == std::pair{2, 3});
}

TEST_CASE("degenerate probabilities") {
  const auto lat = build_lattice({3, 2, 2});
  SampleConfig cfg;
  cfg.p = 1.0;
  auto r = sample(lat, cfg);
  CHECK(r.retained_count == lat.site_count());
  CHECK(std::all_of(r.alive.begin(), r.alive.end(), [](auto a) { return a == 1; }));
  CHECK(r.spanning);
  CHECK(spanning_fraction(r, lat) == 1.0);

  cfg.p = 0.0;
  r = sample(lat, cfg);
  CHECK(r.retained_count == 0);
  CHECK_FALSE(r.spanning);
  CHECK(spanning_fraction(r, lat) == 0.0);
  CHECK(cluster_stats(r).cluster_count == 0);

  for (int nx = 1; nx <= 5; ++nx) {
    cfg.p = 1.0;
    CHECK(sample(build_lattice({nx, 1, 1}), cfg).spanning);
  }

  cfg.p = 1.0;
  const auto cell = build_lattice({1, 1, 1});
  const auto st = cluster_stats(sample(cell, cfg));
  CHECK(st.cluster_count == 1);
  CHECK(st.largest == 40);
}

TEST_CASE("cluster histogram is a partition of the retained sites") {
  const auto lat = build_lattice({4, 3, 2});
  for (std::uint64_t t = 0; t < 20; ++t) {
    SampleConfig cfg;
    cfg.p = 0.7;
    cfg.trial_index = t;
    const auto r = sample(lat, cfg);
    const auto st = cluster_stats(r);
    std::size_t total = 0, count = 0;
    for (auto [size, n] : st.size_histogram) {
      total += size * n;
      count += n;
    }
    CHECK(total == r.retained_count);
    CHECK(count == st.cluster_count);
    if (r.spanning) CHECK(r.largest_spanning_cluster_size <= st.largest);
  }
}

TEST_CASE("union-find matches BFS on random small configurations") {
  const auto c = props::union_find_vs_bfs(100, 17);
  INFO(c.detail);
  CHECK(c.ok);
  CHECK(c.cases == 100);
}

TEST_CASE("pairing rules") {
  const auto lat = build_lattice({3, 3, 3});
  auto fixed = draw_trial(lat, 5, 0, Pairing::fixed);
  CHECK(std::all_of(fixed.matching.begin(), fixed.matching.end(), [](auto m) { return m == 0; }));
  auto rnd = draw_trial(lat, 5, 0, Pairing::random);
  std::array<int, 3> hist{};
  for (auto m : rnd.matching) ++hist[m];
  for (int h : hist) CHECK(h > static_cast<int>(rnd.matching.size()) / 5);
  CHECK(fixed.tet_u == rnd.tet_u);
  CHECK(fixed.site_v == rnd.site_v);
  CHECK(parse_pairing("random") == Pairing::random);
  CHECK(to_string(Pairing::fixed) == "fixed");
  CHECK_THROWS(parse_pairing("other"));
}

TEST_CASE("site deletion model") {
  SampleConfig cfg;
  cfg.p = 0.75;
  CHECK(cfg.site_retention() == doctest::Approx(0.5625));
  cfg.site_deletion_prob = 0.56;
  CHECK(cfg.site_retention() == doctest::Approx(0.44));
  cfg.p = 1.5;
  CHECK_THROWS(cfg.validate());
  cfg.p = 0.5;
  cfg.site_deletion_prob = -0.1;
  CHECK_THROWS(cfg.validate());

  // Retention frequency follows p^2.
  const auto lat = build_lattice({6, 6, 6});
  SampleConfig c2;
  c2.p = 0.8;
  const auto r = sample(lat, c2);
  CHECK(static_cast<double>(r.retained_count) / lat.site_count() == doctest::Approx(0.64).epsilon(0.05));
}

TEST_CASE("realization is a pure function of its configuration") {
  const auto lat = build_lattice({3, 3, 2});
  SampleConfig cfg;
  cfg.p = 0.72;
  cfg.seed = 99;
  cfg.trial_index = 4;
  const auto a = sample(lat, cfg), b = sample(lat, cfg);
  CHECK(a.retained == b.retained);
  CHECK(a.alive == b.alive);
  CHECK(a.edges(lat) == b.edges(lat));
  cfg.trial_index = 5;
  CHECK(sample(lat, cfg).retained != a.retained);
}
