#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diskgroups/geometry.hpp"

namespace diskgroups {

/// Effective settings of one CLI run. Fields left empty fall back to a
/// per-subcommand default, which is filled in before the config is echoed.
struct RunConfig {
  int n1 = 5;
  int n2 = 5;
  std::optional<double> r1;
  std::optional<double> r2;
  PlanePoint center1{-1.0, 0.0};
  PlanePoint center2{1.0, 0.0};
  std::uint64_t budget = 1'000'000;
  double quantum = 1e-9;
  std::uint64_t rng_seed = 0x5eed'd15c'0000'0005ULL;
  unsigned threads = 0;  // 0: DISKGROUPS_THREADS, then 1
  std::optional<PlanePoint> seed;
  std::optional<std::uint64_t> max_depth;
  double tol = 1e-3;
  std::optional<double> lo;
  std::optional<double> hi;
  std::vector<int> ns;
  double epsilon = 1e-4;
  std::string out;
  std::optional<PlanePoint> view_center;
  std::optional<double> view_width;
  int width_px = 512;
  int height_px = 512;
  std::string coloring;
  int segments = 720;
  std::string word;
  std::uint64_t iterations = 100'000;
  int stride = 0;  // single-gen: 0 seeds only `seed`/the intersection point

  DiskSystem disk_system() const;
};

/// key=value per line, '#' starts a comment, blank lines ignored. Keys match
/// the JSON field names of RunConfig. Throws ParseError naming the line.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// JSON text of the config (keys in declaration order).
std::string config_json(const RunConfig& config);

/// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace diskgroups
