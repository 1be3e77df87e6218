#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pyrofuse/lattice.hpp"
#include "pyrofuse/percolation.hpp"

namespace pyrofuse {

inline constexpr double kWilsonZ95 = 1.959963984540054;

/// Wilson score interval for k successes in n trials, clamped to [0,1] and
/// widened (if rounding requires) to contain k/n.
std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z = kWilsonZ95);

struct SweepSpec {
  LatticeSpec lattice;
  double p_min = 0.65;
  double p_max = 0.90;
  double p_step = 0.01;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  Pairing pairing = Pairing::fixed;
  // Shared draws across p (exactly monotone per trial).  Otherwise each grid
  // point gets its own streams.
  bool coupled = true;
  std::optional<double> site_deletion_prob;
  unsigned threads = 0;  // 0: hardware concurrency
  bool record_trials = false;

  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t spanning_count = 0;
  double spanning_prob = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  // Mean of (largest spanning cluster / site count) over spanning trials.
  double mean_spanning_fraction = 0.0;
  std::uint64_t spanning_size_sum = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  LatticeSpec lattice;
  std::size_t site_count = 0;
  std::vector<SweepRow> rows;  // ascending p
  // spanning_by_trial[row][trial], filled when record_trials is set.
  std::vector<std::vector<std::uint8_t>> spanning_by_trial;
};

SweepResult sweep(const SweepSpec& spec);
SweepResult sweep(const SweepSpec& spec, const Lattice& lat);

struct ThresholdSpec {
  LatticeSpec lattice;
  std::size_t trials = 400;
  double p_lo = 0.60;
  double p_hi = 0.80;
  double resolution = 0.002;
  std::uint64_t seed = 1;
  Pairing pairing = Pairing::fixed;
  std::optional<double> site_deletion_prob;
  unsigned threads = 0;

  void validate() const;
};

struct ThresholdResult {
  bool crossed = false;
  double p_star = 0.0;
  // Narrowest evaluated [a, b] whose Wilson intervals lie below / above 0.5.
  // A side that never separates from 0.5 falls back to the range end and is
  // flagged as not resolved.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool bracket_lo_resolved = false;
  bool bracket_hi_resolved = false;
  std::vector<SweepRow> evaluated;  // ascending p
};

/// 0.5-crossing of the coupled spanning curve, located by bisection on the
/// grid p_lo + k * resolution and linear interpolation between the two
/// straddling grid points.
ThresholdResult estimate_threshold(const ThresholdSpec& spec);

struct TableRow {
  LatticeSpec lattice;
  std::size_t site_count = 0;
  SweepRow stats;
};

std::vector<TableRow> table_scan(const std::vector<LatticeSpec>& rows, double p, std::size_t trials,
                                 std::uint64_t seed, Pairing pairing = Pairing::fixed,
                                 unsigned threads = 0,
                                 std::optional<double> site_deletion_prob = std::nullopt);

/// Runs `trials` coupled samples at a single p.
SweepRow sample_point(const Lattice& lat, double p, std::size_t trials, std::uint64_t seed,
                      Pairing pairing, unsigned threads,
                      std::optional<double> site_deletion_prob = std::nullopt);

}  // namespace pyrofuse
