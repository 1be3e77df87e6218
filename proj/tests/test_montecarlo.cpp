#include "doctest.h"
#include "json.hpp"
#include "properties.hpp"
#include "pyrofuse/montecarlo.hpp"
#include "pyrofuse/report_io.hpp"

using namespace pyrofuse;

TEST_CASE("Wilson interval") {
  auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
  std::tie(lo, hi) = wilson_interval(0, 20);
  CHECK(lo == 0.0);
  CHECK(hi > 0.0);
  std::tie(lo, hi) = wilson_interval(20, 20);
  CHECK(hi == 1.0);
  CHECK(lo < 1.0);
  for (std::size_t n : {1u, 7u, 200u})
    for (std::size_t k = 0; k <= n; ++k) {
      std::tie(lo, hi) = wilson_interval(k, n);
      const double ph = static_cast<double>(k) / n;
      CHECK(lo >= 0.0);
      CHECK(hi <= 1.0);
      CHECK(lo <= ph);
      CHECK(ph <= hi);
    }
}

TEST_CASE("sweep grid and degenerate points") {
  SweepSpec s;
  s.lattice = {3, 3, 3};
  s.p_min = 0.0;
  s.p_max = 1.0;
  s.p_step = 1.0;
  s.trials = 20;
  const auto r = sweep(s);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].spanning_prob == 0.0);
  CHECK(r.rows[1].spanning_prob == 1.0);
  CHECK(r.rows[1].mean_spanning_fraction == 1.0);

  s.p_min = 0.65;
  s.p_max = 0.9;
  s.p_step = 0.01;
  CHECK(s.grid().size() == 26);
  CHECK(s.grid().back() == 0.9);
  s.p_step = 0.0;
  CHECK_THROWS(s.validate());
  s.p_step = 0.1;
  s.p_min = 0.95;
  CHECK_THROWS(s.validate());
}

TEST_CASE("coupled sweeps are monotone per trial") {
  for (Pairing pairing : {Pairing::fixed, Pairing::random}) {
    const auto c = props::coupled_monotone({4, 4, 4}, 60, 8, pairing);
    INFO(c.detail);
    CHECK(c.ok);
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto c = props::thread_invariance({4, 3, 3}, 37, 21);
  INFO(c.detail);
  CHECK(c.ok);
}

TEST_CASE("rows are consistent") {
  SweepSpec s;
  s.lattice = {4, 4, 4};
  s.p_min = 0.6;
  s.p_max = 0.8;
  s.p_step = 0.1;
  s.trials = 50;
  s.coupled = false;
  for (const auto& row : sweep(s).rows) {
    CHECK(row.spanning_prob == doctest::Approx(static_cast<double>(row.spanning_count) / row.trials));
    CHECK(row.ci_lo <= row.spanning_prob);
    CHECK(row.spanning_prob <= row.ci_hi);
    if (row.spanning_count)
      CHECK(row.mean_spanning_fraction ==
            doctest::Approx(static_cast<double>(row.spanning_size_sum) / (row.spanning_count * 1444.0)));
  }
}

TEST_CASE("threshold search") {
  ThresholdSpec t;
  t.lattice = {6, 6, 6};
  t.trials = 100;
  t.resolution = 0.005;
  const auto r = estimate_threshold(t);
  REQUIRE(r.crossed);
  CHECK(r.p_star > 0.6);
  CHECK(r.p_star < 0.8);
  CHECK(r.bracket_lo <= r.p_star);
  CHECK(r.p_star <= r.bracket_hi);
  CHECK(std::is_sorted(r.evaluated.begin(), r.evaluated.end(),
                       [](const SweepRow& a, const SweepRow& b) { return a.p < b.p; }));

  t.p_lo = 0.9;
  t.p_hi = 1.0;
  CHECK_FALSE(estimate_threshold(t).crossed);
  t.p_lo = 0.0;
  t.p_hi = 0.3;
  CHECK_FALSE(estimate_threshold(t).crossed);
}

TEST_CASE("more trials give a narrower bracket on average") {
  double width[2] = {0, 0};
  const std::size_t trials[2] = {50, 400};
  for (int k = 0; k < 2; ++k)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      ThresholdSpec t;
      t.lattice = {5, 5, 5};
      t.trials = trials[k];
      t.resolution = 0.005;
      t.p_lo = 0.5;
      t.p_hi = 0.9;
      t.seed = seed;
      const auto r = estimate_threshold(t);
      REQUIRE(r.crossed);
      width[k] += r.bracket_hi - r.bracket_lo;
    }
  CHECK(width[1] < width[0]);
}

TEST_CASE("table scan") {
  const auto rows = table_scan({{4, 4, 4}, {5, 5, 3}}, 0.75, 20, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].site_count == 1444);
  CHECK(rows[1].site_count == 1680);
  const auto csv = table_csv(rows);
  CHECK(csv.rfind("nx,ny,nz,lattice_size,trials,spanning_count,success_prob,ci_lo,ci_hi,mean_span_fraction\n", 0) == 0);
}

TEST_CASE("csv and manifest formats") {
  SweepSpec s;
  s.lattice = {2, 2, 2};
  s.p_min = 0.0;
  s.p_max = 1.0;
  s.p_step = 1.0;
  s.trials = 3;
  const auto csv = sweep_csv(sweep(s));
  CHECK(csv ==
        "p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction\n"
        "0.000000,2,2,2,3,0,0.000000,0.000000,0.561497,0.000000\n"
        "1.000000,2,2,2,3,3,1.000000,0.438503,1.000000,1.000000\n");
  RunManifest m{"sweep", {{"trials", "3"}}, 42, kSweepCsvSchema, "2020-01-01T00:00:00Z"};
  const auto j = nlohmann::json::parse(manifest_json(m));
  CHECK(j.at("seed") == 42);
  CHECK(j.at("timestamp") == "2020-01-01T00:00:00Z");
  CHECK(j.at("version") == kVersion);
  CHECK(j.at("command") == "sweep");
}
