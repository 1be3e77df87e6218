#include "pyrofuse/report_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pyrofuse {
namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string sweep_csv(const SweepResult& r) {
  std::string out = "p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction\n";
  for (const auto& row : r.rows) {
    out += fixed6(row.p) + "," + std::to_string(r.lattice.nx) + "," + std::to_string(r.lattice.ny) + "," +
           std::to_string(r.lattice.nz) + "," + std::to_string(row.trials) + "," +
           std::to_string(row.spanning_count) + "," + fixed6(row.spanning_prob) + "," + fixed6(row.ci_lo) +
           "," + fixed6(row.ci_hi) + "," + fixed6(row.mean_spanning_fraction) + "\n";
  }
  return out;
}

std::string threshold_csv(const LatticeSpec& lattice, const ThresholdResult& r) {
  SweepResult s;
  s.lattice = lattice;
  s.rows = r.evaluated;
  return sweep_csv(s);
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "nx,ny,nz,lattice_size,trials,spanning_count,success_prob,ci_lo,ci_hi,mean_span_fraction\n";
  for (const auto& row : rows) {
    out += std::to_string(row.lattice.nx) + "," + std::to_string(row.lattice.ny) + "," +
           std::to_string(row.lattice.nz) + "," + std::to_string(row.site_count) + "," +
           std::to_string(row.stats.trials) + "," + std::to_string(row.stats.spanning_count) + "," +
           fixed6(row.stats.spanning_prob) + "," + fixed6(row.stats.ci_lo) + "," + fixed6(row.stats.ci_hi) +
           "," + fixed6(row.stats.mean_spanning_fraction) + "\n";
  }
  return out;
}

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["schema"] = "pyrofuse.manifest/1";
  j["command"] = m.command;
  j["version"] = kVersion;
  j["seed"] = m.seed;
  j["output_schema"] = m.output_schema;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  j["timestamp"] = m.timestamp.empty() ? now_utc() : m.timestamp;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << contents;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace pyrofuse
