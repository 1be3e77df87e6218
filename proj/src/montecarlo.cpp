#include "pyrofuse/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace pyrofuse {
namespace {

unsigned worker_count(unsigned requested, std::size_t trials) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(trials, 1)));
}

// Splits [0, trials) into contiguous chunks, one per worker.
template <class Body>
void run_parallel(std::size_t trials, unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(0u, std::size_t{0}, trials);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(trials, w * chunk);
    const std::size_t end = std::min(trials, begin + chunk);
    pool.emplace_back([&, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

struct Tally {
  std::size_t spanning = 0;
  std::uint64_t size_sum = 0;
};

SweepRow finish_row(double p, std::size_t trials, const Tally& t, std::size_t site_count) {
  SweepRow r;
  r.p = p;
  r.trials = trials;
  r.spanning_count = t.spanning;
  r.spanning_size_sum = t.size_sum;
  r.spanning_prob = trials ? static_cast<double>(t.spanning) / static_cast<double>(trials) : 0.0;
  std::tie(r.ci_lo, r.ci_hi) = wilson_interval(t.spanning, trials);
  if (t.spanning)
    r.mean_spanning_fraction = static_cast<double>(t.size_sum) /
                               (static_cast<double>(t.spanning) * static_cast<double>(site_count));
  return r;
}

double retention_for(double p, const std::optional<double>& deletion) {
  return deletion ? 1.0 - *deletion : p * p;
}

double snap(double p) { return std::clamp(std::round(p * 1e12) / 1e12, 0.0, 1.0); }

}  // namespace

std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (phat + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
  double lo = std::clamp(centre - half, 0.0, 1.0);
  double hi = std::clamp(centre + half, 0.0, 1.0);
  return {std::min(lo, phat), std::max(hi, phat)};
}

void SweepSpec::validate() const {
  lattice.validate();
  if (!(p_min >= 0.0 && p_max <= 1.0 && p_min <= p_max))
    throw std::invalid_argument("need 0 <= p_min <= p_max <= 1");
  if (!(p_step > 0.0)) throw std::invalid_argument("p_step must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (site_deletion_prob && !(*site_deletion_prob >= 0.0 && *site_deletion_prob <= 1.0))
    throw std::invalid_argument("site deletion probability must lie in [0, 1]");
}

std::vector<double> SweepSpec::grid() const {
  const auto steps = static_cast<std::size_t>(std::floor((p_max - p_min) / p_step + 1e-9));
  std::vector<double> g;
  for (std::size_t k = 0; k <= steps; ++k) g.push_back(snap(p_min + static_cast<double>(k) * p_step));
  return g;
}

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  return sweep(spec, build_lattice(spec.lattice));
}

SweepResult sweep(const SweepSpec& spec, const Lattice& lat) {
  spec.validate();
  const auto ps = spec.grid();
  const std::size_t npts = ps.size();
  const unsigned workers = worker_count(spec.threads, spec.trials);

  SweepResult res;
  res.lattice = spec.lattice;
  res.site_count = lat.site_count();
  if (spec.record_trials) res.spanning_by_trial.assign(npts, std::vector<std::uint8_t>(spec.trials, 0));

  std::vector<std::vector<Tally>> tallies(workers, std::vector<Tally>(npts));
  run_parallel(spec.trials, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& mine = tallies[w];
    for (std::size_t t = begin; t < end; ++t) {
      std::optional<TrialDraws> shared;
      if (spec.coupled) shared = draw_trial(lat, spec.seed, t, spec.pairing);
      for (std::size_t k = 0; k < npts; ++k) {
        const double p = ps[k];
        Realization r;
        if (shared) {
          r = realize(lat, *shared, p, retention_for(p, spec.site_deletion_prob));
        } else {
          const auto point_seed = stream_bits(spec.seed, k, StreamKind::sweep_point, 0);
          r = realize(lat, draw_trial(lat, point_seed, t, spec.pairing), p,
                      retention_for(p, spec.site_deletion_prob));
        }
        if (r.spanning) {
          ++mine[k].spanning;
          mine[k].size_sum += r.largest_spanning_cluster_size;
        }
        if (spec.record_trials) res.spanning_by_trial[k][t] = r.spanning;
      }
    }
  });

  for (std::size_t k = 0; k < npts; ++k) {
    Tally total;
    for (const auto& w : tallies) {
      total.spanning += w[k].spanning;
      total.size_sum += w[k].size_sum;
    }
    res.rows.push_back(finish_row(ps[k], spec.trials, total, lat.site_count()));
  }
  return res;
}

SweepRow sample_point(const Lattice& lat, double p, std::size_t trials, std::uint64_t seed,
                      Pairing pairing, unsigned threads, std::optional<double> site_deletion_prob) {
  SweepSpec s;
  s.lattice = lat.spec;
  s.p_min = s.p_max = p;
  s.p_step = 1.0;
  s.trials = trials;
  s.seed = seed;
  s.pairing = pairing;
  s.threads = threads;
  s.site_deletion_prob = site_deletion_prob;
  return sweep(s, lat).rows.front();
}

void ThresholdSpec::validate() const {
  lattice.validate();
  if (!(p_lo >= 0.0 && p_hi <= 1.0 && p_lo < p_hi)) throw std::invalid_argument("need 0 <= p_lo < p_hi <= 1");
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
}

ThresholdResult estimate_threshold(const ThresholdSpec& spec) {
  spec.validate();
  const Lattice lat = build_lattice(spec.lattice);
  const auto last = static_cast<long>(std::ceil((spec.p_hi - spec.p_lo) / spec.resolution - 1e-9));
  auto p_at = [&](long k) {
    return k >= last ? spec.p_hi : snap(spec.p_lo + static_cast<double>(k) * spec.resolution);
  };
  std::map<long, SweepRow> cache;
  auto eval = [&](long k) -> const SweepRow& {
    auto it = cache.find(k);
    if (it == cache.end())
      it = cache.emplace(k, sample_point(lat, p_at(k), spec.trials, spec.seed, spec.pairing,
                                         spec.threads, spec.site_deletion_prob))
               .first;
    return it->second;
  };

  ThresholdResult out;
  auto collect = [&] {
    for (const auto& [k, row] : cache) out.evaluated.push_back(row);
  };
  if (eval(0).spanning_prob >= 0.5 || eval(last).spanning_prob < 0.5) {
    collect();
    return out;
  }
  long lo = 0, hi = last;
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (eval(mid).spanning_prob >= 0.5 ? hi : lo) = mid;
  }
  const SweepRow a = eval(lo), b = eval(hi);
  out.crossed = true;
  out.p_star = a.p + (0.5 - a.spanning_prob) / (b.spanning_prob - a.spanning_prob) * (b.p - a.p);

  out.bracket_lo = spec.p_lo;
  for (long k = lo; k >= 0; --k)
    if (eval(k).ci_hi < 0.5) {
      out.bracket_lo = eval(k).p;
      out.bracket_lo_resolved = true;
      break;
    }
  out.bracket_hi = spec.p_hi;
  for (long k = hi; k <= last; ++k)
    if (eval(k).ci_lo > 0.5) {
      out.bracket_hi = eval(k).p;
      out.bracket_hi_resolved = true;
      break;
    }
  collect();
  return out;
}

std::vector<TableRow> table_scan(const std::vector<LatticeSpec>& rows, double p, std::size_t trials,
                                 std::uint64_t seed, Pairing pairing, unsigned threads,
                                 std::optional<double> site_deletion_prob) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::vector<TableRow> out;
  for (const auto& spec : rows) {
    const Lattice lat = build_lattice(spec);
    out.push_back({spec, lat.site_count(),
                   sample_point(lat, p, trials, seed, pairing, threads, site_deletion_prob)});
  }
  return out;
}

}  // namespace pyrofuse
