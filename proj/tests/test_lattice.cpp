#include <chrono>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "pyrofuse/lattice.hpp"

using namespace pyrofuse;

TEST_CASE("site counts match the lattice-scaling table") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto specs = table1_specs();
  const auto q = table1_site_counts();
  REQUIRE(specs.size() == 12);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(static_cast<std::int64_t>(build_lattice(specs[i]).site_count()) == q[i]);
    CHECK(expected_site_count(specs[i]) == q[i]);
  }
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1));
  CHECK(build_lattice({1, 1, 1}).site_count() == 40);
}

TEST_CASE("explicit construction agrees with the closed form") {
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 4; ++y)
      for (int z = 1; z <= 4; ++z) {
        const LatticeSpec s{x, y, z};
        CHECK(static_cast<std::int64_t>(build_lattice(s).site_count()) == expected_site_count(s));
      }
}

TEST_CASE("corner-sharing topology") {
  for (const LatticeSpec spec : {LatticeSpec{1, 1, 1}, LatticeSpec{3, 2, 2}, LatticeSpec{4, 4, 4}}) {
    const auto lat = build_lattice(spec);
    std::vector<int> degree(lat.site_count(), 0);
    for (const auto& t : lat.tetrahedra) {
      std::set<int> distinct(t.corners.begin(), t.corners.end());
      CHECK(distinct.size() == 4);
      for (int k = 0; k < 4; ++k) {
        CHECK(lat.sites[t.corners[k]].sublattice == k);
        degree[t.corners[k]] += 3;
      }
    }
    std::size_t interior = 0;
    for (std::size_t s = 0; s < lat.site_count(); ++s) {
      CHECK(lat.sites[s].id == static_cast<int>(s));
      CHECK((degree[s] == 3 || degree[s] == 6));
      CHECK(degree[s] == 3 * lat.tets_of(static_cast<int>(s)));
      const auto [a, b] = lat.site_tets[s];
      REQUIRE(a >= 0);
      if (b >= 0) {
        ++interior;
        CHECK(lat.tetrahedra[a].parity != lat.tetrahedra[b].parity);
      }
    }
    CHECK(interior > 0);
  }
}

TEST_CASE("face sets") {
  const auto one = build_lattice({1, 1, 1});
  CHECK_FALSE(one.source_sites.empty());
  CHECK_FALSE(one.target_sites.empty());
  std::set<int> src(one.source_sites.begin(), one.source_sites.end());
  for (int t : one.target_sites) CHECK(src.count(t) == 0);

  for (const LatticeSpec spec : {LatticeSpec{2, 2, 2}, LatticeSpec{4, 4, 4}, LatticeSpec{15, 9, 3}}) {
    const auto lat = build_lattice(spec);
    double max_src = -1, min_dst = 1e9;
    for (int s : lat.source_sites) max_src = std::max(max_src, lat.sites[s].x());
    for (int s : lat.target_sites) min_dst = std::min(min_dst, lat.sites[s].x());
    CHECK(max_src < min_dst);
    CHECK(max_src < 0.5);
    CHECK(min_dst > spec.nx - 0.5);
  }
  const auto cube = build_lattice({4, 4, 4});
  CHECK(cube.source_sites.size() == cube.target_sites.size());
}

TEST_CASE("dump and load") {
  const auto lat = build_lattice({2, 3, 1});
  const auto text = dump_lattice(lat);
  CHECK(load_lattice(text) == lat);
  CHECK(dump_lattice(load_lattice(text)) == text);

  const auto j = dump_lattice(build_lattice({1, 1, 1}));
  std::size_t records = 0;
  for (std::size_t pos = 0; (pos = j.find("\"sublattice\"", pos)) != std::string::npos; ++pos) ++records;
  CHECK(records == 40);
  CHECK_THROWS(load_lattice("{\"schema\":\"something-else\"}"));
}

TEST_CASE("construction is deterministic and validated") {
  CHECK(build_lattice({3, 2, 2}) == build_lattice({3, 2, 2}));
  CHECK_THROWS_AS(build_lattice({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice({1, -2, 1}), std::invalid_argument);
}
