#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pyrofuse/montecarlo.hpp"

namespace pyrofuse {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSweepCsvSchema = "pyrofuse.sweep-csv/1";
inline constexpr const char* kTableCsvSchema = "pyrofuse.table1-csv/1";
inline constexpr const char* kThresholdCsvSchema = "pyrofuse.threshold-csv/1";

// p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction
std::string sweep_csv(const SweepResult& r);
std::string threshold_csv(const LatticeSpec& lattice, const ThresholdResult& r);
std::string table_csv(const std::vector<TableRow>& rows);

/// Run manifest written next to every output file.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string output_schema;
  std::string timestamp;  // ISO-8601 UTC; filled by now_utc() when empty
};
std::string now_utc();
std::string manifest_json(const RunManifest& m);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace pyrofuse
