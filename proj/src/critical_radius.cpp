#include "diskgroups/critical_radius.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "diskgroups/errors.hpp"

namespace diskgroups {

namespace {

// Same bits on every platform, unlike std::uniform_real_distribution.
double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

bool family_can_be_infinite(int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw UsageError("rotation orders must be at least 2");
  const long l = std::lcm(static_cast<long>(n1), static_cast<long>(n2));
  return l != 2 && l != 3 && l != 4 && l != 6;
}

std::string to_string(Verdict v) { return v == Verdict::Finite ? "Finite" : "InfinitePresumed"; }

std::vector<PlanePoint> default_seeds(const DiskSystem& sys, std::uint64_t rng_seed, int lens_count) {
  std::vector<PlanePoint> seeds;
  if (auto top = upper_intersection_point(sys)) seeds.push_back(*top);
  const DiskSpec& d0 = sys.disk(0);
  const DiskSpec& d1 = sys.disk(1);
  const double x_lo = std::max(d0.center.x - d0.radius, d1.center.x - d1.radius);
  const double x_hi = std::min(d0.center.x + d0.radius, d1.center.x + d1.radius);
  const double y_lo = std::max(d0.center.y - d0.radius, d1.center.y - d1.radius);
  const double y_hi = std::min(d0.center.y + d0.radius, d1.center.y + d1.radius);
  if (!(x_lo < x_hi && y_lo < y_hi) || distance(d0.center, d1.center) >= d0.radius + d1.radius) return seeds;

  std::mt19937_64 rng(rng_seed);
  int found = 0;
  // The lens always fills a fixed fraction of its bounding box, so this cap is never hit in practice.
  for (long attempt = 0; found < lens_count && attempt < 1'000'000; ++attempt) {
    const double x = x_lo + (x_hi - x_lo) * unit_double(rng);
    const double y = y_lo + (y_hi - y_lo) * unit_double(rng);
    const PlanePoint p{x, y};
    if (d0.contains(p) && d1.contains(p)) {
      seeds.push_back(p);
      ++found;
    }
  }
  return seeds;
}

Classification classify(const DiskSystem& sys, std::uint64_t budget, const std::optional<std::vector<PlanePoint>>& seeds,
                        const ClassifyOptions& options) {
  if (budget < 1) throw UsageError("classify budget must be at least 1");
  Classification out;
  out.budget = budget;
  const std::vector<PlanePoint> used = seeds && !seeds->empty() ? *seeds : default_seeds(sys, options.rng_seed);
  OrbitParams params;
  params.budget = budget;
  params.quantum = options.quantum;
  params.threads = options.threads;
  for (const PlanePoint& s : used) {
    const OrbitResult r = frontier_bfs(sys, s, params);
    out.evidence.push_back({s, r.status, r.size, r.depth});
    if (r.status == OrbitStatus::BudgetExceeded) {
      out.verdict = Verdict::InfinitePresumed;
      if (options.stop_at_first_infinite) break;
    }
  }
  return out;
}

RcEstimate estimate_rc(int n, std::uint64_t budget, double tol, std::optional<std::pair<double, double>> bracket,
                       const ClassifyOptions& options) {
  if (!family_can_be_infinite(n, n)) throw AlwaysFiniteError("GG_" + std::to_string(n) + " is finite for every radius");
  if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
  auto [lo, hi] = bracket.value_or(kDefaultBracket);
  if (!(lo < hi) || !(lo > 0.0)) throw UsageError("bracket must satisfy 0 < lo < hi");

  ClassifyOptions fast = options;
  fast.stop_at_first_infinite = true;
  auto verdict_at = [&](double r) { return classify(DiskSystem::symmetric(n, r), budget, std::nullopt, fast).verdict; };

  if (verdict_at(lo) != Verdict::Finite) throw BadBracketError("lower bracket end " + shortest(lo) + " is not Finite");
  if (verdict_at(hi) != Verdict::InfinitePresumed)
    throw BadBracketError("upper bracket end " + shortest(hi) + " is not InfinitePresumed");

  RcEstimate est;
  est.n = n;
  est.budget = budget;
  est.tol = tol;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (verdict_at(mid) == Verdict::Finite) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++est.iterations;
  }
  est.bracket_lo = lo;
  est.bracket_hi = hi;
  est.seeds_used = default_seeds(DiskSystem::symmetric(n, hi), options.rng_seed);
  return est;
}

std::vector<RadiusRow> radius_table(const std::vector<int>& n_list, std::uint64_t budget, double tol,
                                    const ClassifyOptions& options) {
  std::vector<RadiusRow> rows;
  for (int n : n_list) {
    RadiusRow row{n, std::nullopt};
    if (family_can_be_infinite(n, n)) row.estimate = estimate_rc(n, budget, tol, std::nullopt, options);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_radius_csv(std::ostream& out, const std::vector<RadiusRow>& rows, std::uint64_t budget, double tol) {
  out << kRadiusCsvHeader << '\n';
  for (const RadiusRow& row : rows) {
    out << row.n << ',';
    if (row.estimate) {
      const RcEstimate& e = *row.estimate;
      out << fixed6(e.estimate()) << ',' << shortest(e.bracket_lo) << ',' << shortest(e.bracket_hi) << ',' << budget
          << ',' << shortest(tol) << ",bisection";
    } else {
      out << "AlwaysFinite,,," << budget << ',' << shortest(tol) << ",AlwaysFinite";
    }
    out << '\n';
  }
}

}  // namespace diskgroups
