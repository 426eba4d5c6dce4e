#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "diskgroups/geometry.hpp"
#include "diskgroups/orbit.hpp"

namespace diskgroups {

/// Finiteness rule: false iff lcm(n1, n2) is 2, 3, 4 or 6.
bool family_can_be_infinite(int n1, int n2);

enum class Verdict { Finite, InfinitePresumed };

std::string to_string(Verdict v);

struct SeedEvidence {
  PlanePoint seed;
  OrbitStatus status = OrbitStatus::Closed;
  std::uint64_t size = 0;
  std::uint64_t depth = 0;
};

struct Classification {
  Verdict verdict = Verdict::Finite;
  std::vector<SeedEvidence> evidence;
  std::uint64_t budget = 0;
};

inline constexpr std::uint64_t kDefaultSeedRng = 0x5eed'd15c'0000'0005ULL;
inline constexpr int kDefaultLensSeeds = 8;

struct ClassifyOptions {
  double quantum = kDefaultQuantum;
  unsigned threads = 0;
  std::uint64_t rng_seed = kDefaultSeedRng;
  // Stop after the first seed that exceeds the budget. The verdict is the same;
  // only the evidence list is shorter.
  bool stop_at_first_infinite = false;
};

/// Upper intersection point (if any) followed by `lens_count` points drawn
/// uniformly from the lens of disks 0 and 1 by rejection sampling with a
/// mt19937_64 seeded by `rng_seed`. Empty lens contributes nothing.
std::vector<PlanePoint> default_seeds(const DiskSystem& sys, std::uint64_t rng_seed = kDefaultSeedRng,
                                      int lens_count = kDefaultLensSeeds);

/// Runs frontier_bfs from every seed (default_seeds when `seeds` is empty/nullopt).
Classification classify(const DiskSystem& sys, std::uint64_t budget,
                        const std::optional<std::vector<PlanePoint>>& seeds = std::nullopt,
                        const ClassifyOptions& options = {});

struct RcEstimate {
  int n = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::uint64_t budget = 0;
  double tol = 0.0;
  std::vector<PlanePoint> seeds_used;  // default seeds at bracket_hi
  int iterations = 0;

  double estimate() const { return 0.5 * (bracket_lo + bracket_hi); }
};

inline constexpr std::pair<double, double> kDefaultBracket{1.001, 4.0};

/// Bisection on r for GG_n(r) with default seeds recomputed at every radius.
RcEstimate estimate_rc(int n, std::uint64_t budget, double tol,
                       std::optional<std::pair<double, double>> bracket = std::nullopt,
                       const ClassifyOptions& options = {});

struct RadiusRow {
  int n = 0;
  std::optional<RcEstimate> estimate;  // empty for families that are always finite
};

std::vector<RadiusRow> radius_table(const std::vector<int>& n_list, std::uint64_t budget, double tol,
                                    const ClassifyOptions& options = {});

inline constexpr const char* kRadiusCsvHeader = "n,estimate,lo,hi,budget,tol,verdict_basis";

void write_radius_csv(std::ostream& out, const std::vector<RadiusRow>& rows, std::uint64_t budget, double tol);

}  // namespace diskgroups
