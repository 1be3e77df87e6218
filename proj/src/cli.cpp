#include "pyrofuse/cli.hpp"

#include <cstdio>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "pyrofuse/fusion_rules.hpp"
#include "pyrofuse/lattice.hpp"
#include "pyrofuse/montecarlo.hpp"
#include "pyrofuse/report_io.hpp"

namespace pyrofuse {
namespace {

std::string env_for(const std::string& flag) {
  std::string e = "PYROFUSE_";
  for (char c : flag) e += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return e;
}

template <class T>
CLI::Option* flag_opt(CLI::App* app, const std::string& name, T& var, const std::string& help) {
  return app->add_option("--" + name, var, help)->envname(env_for(name))->capture_default_str();
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Common {
  std::uint64_t seed = 1;
  std::string pairing = "fixed";
  unsigned threads = 0;
  std::optional<double> site_deletion_prob;
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool sampling) {
  flag_opt(app, "out", c.out, "Output file (a <out>.manifest.json is written next to it)");
  if (!sampling) return;
  flag_opt(app, "seed", c.seed, "Master seed");
  flag_opt(app, "pairing", c.pairing, "Failed-tetrahedron pairing: fixed or random")
      ->check(CLI::IsMember({"fixed", "random"}));
  flag_opt(app, "threads", c.threads, "Worker threads (0 = all cores); never changes results");
  app->add_option("--site-deletion-prob", c.site_deletion_prob,
                  "Override the site deletion probability (default 1 - p^2)")
      ->envname(env_for("site-deletion-prob"))
      ->check(CLI::Range(0.0, 1.0));
}

void write_with_manifest(const std::string& path, const std::string& body, RunManifest m) {
  write_file(path, body);
  write_file(path + ".manifest.json", manifest_json(m));
}

std::vector<std::pair<std::string, std::string>> common_params(const Common& c) {
  std::vector<std::pair<std::string, std::string>> p{{"pairing", c.pairing},
                                                     {"threads", std::to_string(c.threads)}};
  p.emplace_back("site_deletion_prob", c.site_deletion_prob ? fmt6(*c.site_deletion_prob) : "1-p^2");
  return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Percolated pyrochlore cluster states from 3-qubit resources and Bell-measurement fusion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  // verify-fusion
  auto* vf = app.add_subcommand("verify-fusion", "Run every fusion scenario and lattice-rule certification");
  std::string vf_out = "fusion_report.json";
  flag_opt(vf, "out", vf_out, "JSON report path");

  // build-lattice
  auto* bl = app.add_subcommand("build-lattice", "Build a pyrochlore lattice and print its site count");
  LatticeSpec bl_spec;
  std::string bl_out;
  flag_opt(bl, "nx", bl_spec.nx, "Cells along x")->check(CLI::PositiveNumber);
  flag_opt(bl, "ny", bl_spec.ny, "Cells along y")->check(CLI::PositiveNumber);
  flag_opt(bl, "nz", bl_spec.nz, "Cells along z")->check(CLI::PositiveNumber);
  flag_opt(bl, "out", bl_out, "Write the lattice JSON here");

  // sweep
  auto* sw = app.add_subcommand("sweep", "Spanning probability versus Bell success probability");
  SweepSpec sw_spec;
  sw_spec.lattice = {8, 8, 8};
  sw_spec.coupled = false;
  Common sw_c;
  flag_opt(sw, "nx", sw_spec.lattice.nx, "Cells along x")->check(CLI::PositiveNumber);
  flag_opt(sw, "ny", sw_spec.lattice.ny, "Cells along y")->check(CLI::PositiveNumber);
  flag_opt(sw, "nz", sw_spec.lattice.nz, "Cells along z")->check(CLI::PositiveNumber);
  flag_opt(sw, "p-min", sw_spec.p_min, "Smallest p")->check(CLI::Range(0.0, 1.0));
  flag_opt(sw, "p-max", sw_spec.p_max, "Largest p")->check(CLI::Range(0.0, 1.0));
  flag_opt(sw, "p-step", sw_spec.p_step, "Grid step")->check(CLI::PositiveNumber);
  flag_opt(sw, "trials", sw_spec.trials, "Trials per grid point")->check(CLI::PositiveNumber);
  sw->add_flag("--coupled", sw_spec.coupled, "Share random draws across p")->envname(env_for("coupled"));
  add_common(sw, sw_c, true);

  // threshold
  auto* th = app.add_subcommand("threshold", "Locate the 0.5 crossing of the spanning curve");
  ThresholdSpec th_spec;
  th_spec.lattice = {12, 12, 12};
  Common th_c;
  flag_opt(th, "nx", th_spec.lattice.nx, "Cells along x")->check(CLI::PositiveNumber);
  flag_opt(th, "ny", th_spec.lattice.ny, "Cells along y")->check(CLI::PositiveNumber);
  flag_opt(th, "nz", th_spec.lattice.nz, "Cells along z")->check(CLI::PositiveNumber);
  flag_opt(th, "trials", th_spec.trials, "Trials per evaluated point")->check(CLI::PositiveNumber);
  flag_opt(th, "p-lo", th_spec.p_lo, "Lower end of the search range")->check(CLI::Range(0.0, 1.0));
  flag_opt(th, "p-hi", th_spec.p_hi, "Upper end of the search range")->check(CLI::Range(0.0, 1.0));
  flag_opt(th, "resolution", th_spec.resolution, "Grid resolution")->check(CLI::PositiveNumber);
  add_common(th, th_c, true);

  // table1
  auto* tb = app.add_subcommand("table1", "Spanning statistics for the twelve lattice-scaling rows");
  double tb_p = 0.75;
  std::size_t tb_trials = 200;
  Common tb_c;
  flag_opt(tb, "p", tb_p, "Bell success probability")->check(CLI::Range(0.0, 1.0));
  flag_opt(tb, "trials", tb_trials, "Trials per row")->check(CLI::PositiveNumber);
  add_common(tb, tb_c, true);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*vf) {
      const FusionReport report = verify_fusion();
      out << format_table(report);
      write_with_manifest(vf_out, to_json(report),
                          {"verify-fusion", {{"out", vf_out}}, 0, "pyrofuse.fusion-report/1", ""});
      return report.all_pass() ? kExitOk : kExitFailure;
    }
    if (*bl) {
      const Lattice lat = build_lattice(bl_spec);
      out << lat.site_count() << "\n";
      if (!bl_out.empty())
        write_with_manifest(bl_out, dump_lattice(lat),
                            {"build-lattice",
                             {{"nx", std::to_string(bl_spec.nx)},
                              {"ny", std::to_string(bl_spec.ny)},
                              {"nz", std::to_string(bl_spec.nz)}},
                             0,
                             "pyrofuse.lattice/1",
                             ""});
      return kExitOk;
    }
    if (*sw) {
      sw_spec.seed = sw_c.seed;
      sw_spec.pairing = parse_pairing(sw_c.pairing);
      sw_spec.threads = sw_c.threads;
      sw_spec.site_deletion_prob = sw_c.site_deletion_prob;
      const auto csv = sweep_csv(sweep(sw_spec));
      if (sw_c.out.empty()) {
        out << csv;
      } else {
        auto params = common_params(sw_c);
        params.insert(params.begin(), {{"nx", std::to_string(sw_spec.lattice.nx)},
                                       {"ny", std::to_string(sw_spec.lattice.ny)},
                                       {"nz", std::to_string(sw_spec.lattice.nz)},
                                       {"p_min", fmt6(sw_spec.p_min)},
                                       {"p_max", fmt6(sw_spec.p_max)},
                                       {"p_step", fmt6(sw_spec.p_step)},
                                       {"trials", std::to_string(sw_spec.trials)},
                                       {"coupled", sw_spec.coupled ? "true" : "false"}});
        write_with_manifest(sw_c.out, csv, {"sweep", params, sw_spec.seed, kSweepCsvSchema, ""});
      }
      return kExitOk;
    }
    if (*th) {
      th_spec.seed = th_c.seed;
      th_spec.pairing = parse_pairing(th_c.pairing);
      th_spec.threads = th_c.threads;
      th_spec.site_deletion_prob = th_c.site_deletion_prob;
      const ThresholdResult r = estimate_threshold(th_spec);
      if (!th_c.out.empty()) {
        auto params = common_params(th_c);
        params.insert(params.begin(), {{"nx", std::to_string(th_spec.lattice.nx)},
                                       {"ny", std::to_string(th_spec.lattice.ny)},
                                       {"nz", std::to_string(th_spec.lattice.nz)},
                                       {"p_lo", fmt6(th_spec.p_lo)},
                                       {"p_hi", fmt6(th_spec.p_hi)},
                                       {"resolution", fmt6(th_spec.resolution)},
                                       {"trials", std::to_string(th_spec.trials)}});
        write_with_manifest(th_c.out, threshold_csv(th_spec.lattice, r),
                            {"threshold", params, th_spec.seed, kThresholdCsvSchema, ""});
      }
      if (!r.crossed) {
        out << "no crossing of 0.5 in [" << fmt6(th_spec.p_lo) << ", " << fmt6(th_spec.p_hi) << "]\n";
        return kExitFailure;
      }
      out << "p_star=" << fmt6(r.p_star) << " bracket=[" << fmt6(r.bracket_lo) << ","
          << fmt6(r.bracket_hi) << "]";
      if (!r.bracket_lo_resolved || !r.bracket_hi_resolved) out << " (bracket reaches the range end)";
      out << "\n";
      return kExitOk;
    }
    if (*tb) {
      const auto rows = table_scan(table1_specs(), tb_p, tb_trials, tb_c.seed, parse_pairing(tb_c.pairing),
                                   tb_c.threads, tb_c.site_deletion_prob);
      const auto csv = table_csv(rows);
      if (tb_c.out.empty()) {
        out << csv;
      } else {
        auto params = common_params(tb_c);
        params.insert(params.begin(), {{"p", fmt6(tb_p)}, {"trials", std::to_string(tb_trials)}});
        write_with_manifest(tb_c.out, csv, {"table1", params, tb_c.seed, kTableCsvSchema, ""});
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pyrofuse
