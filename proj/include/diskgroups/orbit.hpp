#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diskgroups/geometry.hpp"

namespace diskgroups {

inline constexpr double kDefaultQuantum = 1e-9;
/// A new point within this fraction of a quantum of a cell edge is a duplicate
/// of a stored point across the edge that lies within the same distance of it.
inline constexpr double kStraddleFraction = 1.0 / 64;

/// Dedup cell of a point: (round(x / quantum), round(y / quantum)).
struct GridKey {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const GridKey&, const GridKey&) = default;
};

GridKey quantize(PlanePoint p, double quantum);

struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

struct OrbitParams {
  std::uint64_t budget = 1'000'000;     // max distinct points
  std::optional<std::uint64_t> max_depth;  // BFS levels; hitting it counts as exceeding the budget
  double quantum = kDefaultQuantum;
  bool emit_points = false;
  unsigned threads = 0;  // 0: DISKGROUPS_THREADS or 1
};

enum class OrbitStatus { Closed, BudgetExceeded };

std::string to_string(OrbitStatus s);

struct OrbitResult {
  OrbitStatus status = OrbitStatus::Closed;
  std::uint64_t size = 0;
  std::uint64_t depth = 0;  // BFS levels that produced new points
  std::uint64_t peak_memory_points = 0;
  std::optional<std::vector<PlanePoint>> points;  // discovery order, present iff emit_points
};

/// Breadth-first closure of `seed` under all generators and inverses, keeping
/// every discovered key in memory.
///
/// Levels are expanded in parallel chunks; candidates are merged by sorting on
/// (key, x, y) so the stored representative of each cell is the smallest
/// candidate point, whatever the thread count.
OrbitResult orbit_bfs(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params);

/// Same contract as orbit_bfs but only the previous, current and next levels
/// are held for duplicate detection. Valid because the generator set is closed
/// under inverses, so the orbit graph is undirected.
OrbitResult frontier_bfs(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params);

struct StreamSummary {
  OrbitStatus status = OrbitStatus::Closed;
  std::uint64_t delivered = 0;
  std::uint64_t depth = 0;
  std::uint64_t peak_memory_points = 0;
  // The last `unexpanded` delivered points may have neighbours that were never
  // delivered (cut by the budget or depth limit). 0 when Closed.
  std::uint64_t unexpanded = 0;
};

/// Frontier search that hands each distinct point to `sink` exactly once
/// (seed first, then level by level in key order). Exceptions from the sink propagate.
StreamSummary orbit_stream(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params,
                           const std::function<void(PlanePoint)>& sink);

}  // namespace diskgroups
