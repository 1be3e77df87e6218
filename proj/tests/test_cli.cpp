#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pyrofuse/cli.hpp"
#include "pyrofuse/report_io.hpp"

using namespace pyrofuse;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pyrofuse");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("pyrofuse_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("build-lattice") {
  CHECK(cli({"build-lattice", "--nx", "4", "--ny", "4", "--nz", "4"}).out == "1444\n");
  CHECK(cli({"build-lattice", "--nx", "1", "--ny", "1", "--nz", "1"}).out == "40\n");
  CHECK(cli({"build-lattice", "--nx", "0", "--ny", "1", "--nz", "1"}).code == kExitUsage);
  CHECK(cli({"build-lattice", "--nx", "abc"}).code == kExitUsage);

  const auto path = (scratch() / "lat.json").string();
  CHECK(cli({"build-lattice", "--nx", "2", "--ny", "1", "--nz", "1", "--out", path}).code == kExitOk);
  CHECK(read_file(path).find("\"pyrofuse.lattice/1\"") != std::string::npos);
  CHECK(fs::exists(path + ".manifest.json"));
}

TEST_CASE("usage errors and help") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"no-such-command"}).code == kExitUsage);
  CHECK(cli({"sweep", "--p-min", "1.5"}).code == kExitUsage);
  CHECK(cli({"sweep", "--pairing", "diagonal"}).code == kExitUsage);
  CHECK(cli({"sweep", "--p-min", "0.9", "--p-max", "0.8"}).code == kExitUsage);
  const auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("verify-fusion") != std::string::npos);
  CHECK(cli({"--version"}).out.find(kVersion) != std::string::npos);
}

TEST_CASE("verify-fusion") {
  const auto path = (scratch() / "fusion.json").string();
  const auto a = cli({"verify-fusion", "--out", path});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("bowtie") != std::string::npos);
  const auto first = read_file(path);
  CHECK(cli({"verify-fusion", "--out", path}).code == kExitOk);
  CHECK(read_file(path) == first);
  CHECK(nlohmann::json::parse(first).at("all_pass") == true);
  CHECK(nlohmann::json::parse(read_file(path + ".manifest.json")).at("command") == "verify-fusion");
}

TEST_CASE("sweep") {
  const auto r = cli({"sweep", "--nx", "3", "--ny", "3", "--nz", "3", "--p-min", "0", "--p-max", "1",
                      "--p-step", "1", "--trials", "10"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction\n"
        "0.000000,3,3,3,10,0,0.000000,0.000000,0.277533,0.000000\n"
        "1.000000,3,3,3,10,10,1.000000,0.722467,1.000000,1.000000\n");

  const std::vector<std::string> base{"sweep", "--nx", "4", "--ny", "4", "--nz", "3", "--p-min", "0.6",
                                      "--p-max", "0.8", "--p-step", "0.05", "--trials", "30", "--seed", "5"};
  std::string reference;
  for (const char* threads : {"1", "2", "4"})
    for (bool coupled : {false, true}) {
      auto args = base;
      args.insert(args.end(), {"--threads", threads});
      if (coupled) args.push_back("--coupled");
      const auto out = cli(args).out;
      CHECK(count_lines(out) == 6);
      if (coupled) continue;
      if (reference.empty())
        reference = out;
      else
        CHECK(out == reference);
    }
  auto other = base;
  other.back() = "6";
  CHECK(cli(other).out != reference);

  const auto path = (scratch() / "sweep.csv").string();
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", path});
  CHECK(cli(with_out).code == kExitOk);
  CHECK(read_file(path) == reference);
  const auto manifest = nlohmann::json::parse(read_file(path + ".manifest.json"));
  CHECK(manifest.at("command") == "sweep");
  CHECK(manifest.at("seed") == 5);
  CHECK(manifest.at("parameters").at("trials") == "30");
}

TEST_CASE("flags fall back to environment variables") {
  ::setenv("PYROFUSE_TRIALS", "7", 1);
  const auto r = cli({"sweep", "--nx", "2", "--ny", "2", "--nz", "2", "--p-min", "1", "--p-max", "1"});
  ::unsetenv("PYROFUSE_TRIALS");
  CHECK(r.out.find("1.000000,2,2,2,7,7,") != std::string::npos);
}

TEST_CASE("threshold") {
  const auto none = cli({"threshold", "--nx", "4", "--ny", "4", "--nz", "4", "--trials", "50", "--p-lo",
                         "0.9", "--p-hi", "1.0"});
  CHECK(none.code == kExitFailure);
  CHECK(none.out.find("no crossing") != std::string::npos);

  const auto path = (scratch() / "thr.csv").string();
  const auto ok = cli({"threshold", "--nx", "5", "--ny", "5", "--nz", "5", "--trials", "80", "--resolution",
                       "0.01", "--out", path});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.rfind("p_star=0.", 0) == 0);
  CHECK(fs::exists(path + ".manifest.json"));
}

TEST_CASE("table1") {
  const auto r = cli({"table1", "--trials", "4"});
  CHECK(r.code == kExitOk);
  CHECK(count_lines(r.out) == 13);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "nx,ny,nz,lattice_size,trials,spanning_count,success_prob,ci_lo,ci_hi,mean_span_fraction");
  std::vector<std::string> q;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int k = 0; k < 4; ++k) std::getline(cells, cell, ',');
    q.push_back(cell);
  }
  CHECK(q == std::vector<std::string>{"1444", "1680", "2352", "3136", "3556", "3976", "4984", "5460",
                                      "6636", "7168", "7700", "8232"});
}
