#include "diskgroups/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "diskgroups/errors.hpp"
#include "diskgroups/parallel.hpp"

namespace diskgroups {

namespace {

struct Entry {
  GridKey key;
  PlanePoint point;
};

bool entry_less(const Entry& a, const Entry& b) {
  if (a.key != b.key) return a.key < b.key;
  if (a.point.x != b.point.x) return a.point.x < b.point.x;
  return a.point.y < b.point.y;
}

void validate(PlanePoint seed, const OrbitParams& params) {
  if (params.budget < 1) throw UsageError("orbit budget must be at least 1");
  if (!(params.quantum > 0.0) || !std::isfinite(params.quantum)) throw UsageError("orbit quantum must be positive");
  if (!std::isfinite(seed.x) || !std::isfinite(seed.y)) throw UsageError("orbit seed must be finite");
}

/// True if `p` sits within kStraddleFraction of a cell edge and `find` returns a
/// stored point in the cell across that edge which is equally close to p. Two
/// float copies of one point may round into neighbouring cells; without this
/// the frontier search would see the second copy as new and never close.
template <typename Find>
bool straddle_duplicate(PlanePoint p, const GridKey& k, double quantum, const Find& find) {
  const double tol = kStraddleFraction * quantum;
  const double fx = p.x / quantum - static_cast<double>(k.x);
  const double fy = p.y / quantum - static_cast<double>(k.y);
  const std::int64_t dx = fx > 0.5 - kStraddleFraction ? 1 : (fx < kStraddleFraction - 0.5 ? -1 : 0);
  const std::int64_t dy = fy > 0.5 - kStraddleFraction ? 1 : (fy < kStraddleFraction - 0.5 ? -1 : 0);
  if (dx == 0 && dy == 0) return false;
  auto close = [&](const GridKey& other) {
    const PlanePoint* s = find(other);
    return s && std::abs(s->x - p.x) <= tol && std::abs(s->y - p.y) <= tol;
  };
  if (dx != 0 && close({k.x + dx, k.y})) return true;
  if (dy != 0 && close({k.x, k.y + dy})) return true;
  return dx != 0 && dy != 0 && close({k.x + dx, k.y + dy});
}

const PlanePoint* sorted_find(const std::vector<Entry>& level, const GridKey& k) {
  auto it = std::lower_bound(level.begin(), level.end(), k, [](const Entry& e, const GridKey& key) { return e.key < key; });
  return it != level.end() && it->key == k ? &it->point : nullptr;
}

/// Expands one level into the sorted, deduplicated set of new entries.
/// `find` maps a key to its stored point (or nullptr) and must be safe to
/// call concurrently.
template <typename Find>
std::vector<Entry> expand_level(const DiskSystem& sys, const std::vector<Entry>& level, double quantum,
                                unsigned threads, const Find& find) {
  const unsigned chunks = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(level.size() / 256 + 1)));
  std::vector<std::vector<Entry>> partial(chunks);
  parallel_chunks(level.size(), chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto& out = partial[c];
    for (std::size_t i = begin; i < end; ++i) {
      for_each_neighbor(sys, level[i].point, [&](PlanePoint q) {
        const GridKey k = quantize(q, quantum);
        if (!find(k) && !straddle_duplicate(q, k, quantum, find)) out.push_back({k, q});
      });
    }
  });
  std::vector<Entry> merged;
  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  merged.reserve(total);
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end(), entry_less);
  merged.erase(std::unique(merged.begin(), merged.end(), [](const Entry& a, const Entry& b) { return a.key == b.key; }),
               merged.end());
  // Straddling copies found in the same level: the first in key order wins.
  std::vector<Entry> accepted;
  accepted.reserve(merged.size());
  for (const Entry& e : merged) {
    if (!straddle_duplicate(e.point, e.key, quantum, [&](const GridKey& k) { return sorted_find(accepted, k); }))
      accepted.push_back(e);
  }
  return accepted;
}

/// Shared driver for the bounded-memory search. `on_new` sees every accepted entry.
template <typename OnNew>
StreamSummary run_frontier(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params, OnNew&& on_new) {
  validate(seed, params);
  const unsigned threads = resolve_threads(params.threads);
  StreamSummary summary;
  std::vector<Entry> previous;
  std::vector<Entry> current{{quantize(seed, params.quantum), seed}};
  on_new(current.front());
  summary.delivered = 1;
  summary.peak_memory_points = 1;

  auto find_known = [&](const GridKey& k) {
    const PlanePoint* p = sorted_find(previous, k);
    return p ? p : sorted_find(current, k);
  };
  while (true) {
    if (params.max_depth && summary.depth >= *params.max_depth) {
      // Only a closed level lets us call the orbit complete.
      auto probe = expand_level(sys, current, params.quantum, threads, find_known);
      summary.status = probe.empty() ? OrbitStatus::Closed : OrbitStatus::BudgetExceeded;
      if (!probe.empty()) summary.unexpanded = current.size();
      return summary;
    }
    std::vector<Entry> next = expand_level(sys, current, params.quantum, threads, find_known);
    summary.peak_memory_points =
        std::max<std::uint64_t>(summary.peak_memory_points, previous.size() + current.size() + next.size());
    if (next.empty()) {
      summary.status = OrbitStatus::Closed;
      return summary;
    }
    const std::uint64_t room = params.budget - summary.delivered;
    if (next.size() > room) {
      for (std::size_t i = 0; i < room; ++i) on_new(next[i]);
      summary.delivered += room;
      summary.status = OrbitStatus::BudgetExceeded;
      summary.unexpanded = current.size() + room;
      return summary;
    }
    for (const Entry& e : next) on_new(e);
    summary.delivered += next.size();
    ++summary.depth;
    previous = std::move(current);
    current = std::move(next);
  }
}

}  // namespace

GridKey quantize(PlanePoint p, double quantum) {
  return {std::llround(p.x / quantum), std::llround(p.y / quantum)};
}

std::string to_string(OrbitStatus s) { return s == OrbitStatus::Closed ? "Closed" : "BudgetExceeded"; }

OrbitResult orbit_bfs(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params) {
  validate(seed, params);
  const unsigned threads = resolve_threads(params.threads);
  OrbitResult result;
  if (params.emit_points) result.points.emplace();
  std::unordered_map<GridKey, PlanePoint, GridKeyHash> visited;
  std::vector<Entry> current{{quantize(seed, params.quantum), seed}};
  visited.emplace(current.front().key, seed);
  if (result.points) result.points->push_back(seed);
  result.size = 1;

  auto find_known = [&](const GridKey& k) -> const PlanePoint* {
    auto it = visited.find(k);
    return it == visited.end() ? nullptr : &it->second;
  };
  while (true) {
    std::vector<Entry> next = expand_level(sys, current, params.quantum, threads, find_known);
    if (next.empty()) {
      result.status = OrbitStatus::Closed;
      break;
    }
    if (params.max_depth && result.depth >= *params.max_depth) {
      result.status = OrbitStatus::BudgetExceeded;
      break;
    }
    const std::uint64_t room = params.budget - result.size;
    const bool over = next.size() > room;
    if (over) next.resize(room);
    for (const Entry& e : next) {
      visited.emplace(e.key, e.point);
      if (result.points) result.points->push_back(e.point);
    }
    result.size += next.size();
    if (over) {
      result.status = OrbitStatus::BudgetExceeded;
      break;
    }
    ++result.depth;
    current = std::move(next);
  }
  result.peak_memory_points = visited.size();
  return result;
}

OrbitResult frontier_bfs(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params) {
  OrbitResult result;
  if (params.emit_points) result.points.emplace();
  const StreamSummary s = run_frontier(sys, seed, params, [&](const Entry& e) {
    if (result.points) result.points->push_back(e.point);
  });
  result.status = s.status;
  result.size = s.delivered;
  result.depth = s.depth;
  result.peak_memory_points = s.peak_memory_points;
  return result;
}

StreamSummary orbit_stream(const DiskSystem& sys, PlanePoint seed, const OrbitParams& params,
                           const std::function<void(PlanePoint)>& sink) {
  return run_frontier(sys, seed, params, [&](const Entry& e) { sink(e.point); });
}

}  // namespace diskgroups
