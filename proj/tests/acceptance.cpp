// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "diskgroups/cli.hpp"
#include "diskgroups/constructions.hpp"
#include "diskgroups/critical_radius.hpp"
#include "diskgroups/exact.hpp"
#include "diskgroups/orbit.hpp"
#include "diskgroups/render.hpp"
#include "oracles/oracles.hpp"

using namespace diskgroups;

namespace {

constexpr unsigned kManyThreads = 4;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char budget[64];
  std::snprintf(budget, sizeof budget, "%.2fs of %.0fs", secs, limit_seconds);
  o.require(secs <= limit_seconds, std::string("over time: ") + budget);
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << budget << ")";
  if (!o.note.empty()) std::cout << " -- " << o.note;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

using Keys = std::vector<std::pair<long long, long long>>;

std::pair<long long, long long> key_of(std::complex<double> p, double q) {
  return {std::llround(p.real() / q), std::llround(p.imag() / q)};
}

// Membership within one quantum: the cell or any of its eight neighbours.
bool near_key(const Keys& sorted, std::pair<long long, long long> k) {
  for (long long dx = -1; dx <= 1; ++dx)
    for (long long dy = -1; dy <= 1; ++dy)
      if (std::binary_search(sorted.begin(), sorted.end(), std::pair{k.first + dx, k.second + dy})) return true;
  return false;
}

// Clockwise rotation by 2 pi / n about c, applied when p is in the closed disk.
std::complex<double> rotate(std::complex<double> p, std::complex<double> c, double r, int n, int dir) {
  if (std::abs(p - c) > r + 1e-12) return p;
  return c + (p - c) * std::polar(1.0, -dir * 2 * std::numbers::pi / n);
}

Keys sorted_keys(const std::vector<PlanePoint>& pts, double q) {
  Keys keys;
  keys.reserve(pts.size());
  for (PlanePoint p : pts) keys.push_back(key_of({p.x, p.y}, q));
  std::sort(keys.begin(), keys.end());
  return keys;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str()};
}

}  // namespace

int main() {
  criterion(1, "closed forms satisfy their quartics and match the numerical table", 1.0, [](Outcome& o) {
    // Quartics and numerical estimates as published; closed forms in doubles.
    const double phi = (1 + std::sqrt(5.0)) / 2;
    struct Expected {
      int n;
      std::vector<std::int64_t> quartic;
      double estimate;
      double closed;
    };
    const std::vector<Expected> expected{
        {5, {1, -7, 11}, 2.148961, std::sqrt(3 + phi)},
        {8, {1, -20, 50}, 1.711411, std::sqrt(5 * (2 - std::sqrt(2.0)))},
        {10, {1, -7, 11}, 1.543357, std::sqrt(4 - phi)},
        {12, {1, -80, 148}, 1.376547, std::sqrt(2 * (20 - 11 * std::sqrt(3.0)))},
    };
    const auto rows = minpoly_rows();
    o.require(rows.size() == expected.size(), "expected four rows");
    for (const Expected& e : expected) {
      const auto row = std::find_if(rows.begin(), rows.end(), [&](const MinpolyRow& r) { return r.n == e.n; });
      if (row == rows.end()) {
        o.require(false, "missing n=" + std::to_string(e.n));
        continue;
      }
      const std::string tag = "n=" + std::to_string(e.n);
      o.require(row->quartic == e.quartic, tag + " quartic");
      o.require(exact::minpoly_check(e.quartic, row->r_squared), tag + " exact root");
      o.require(row->exact_root, tag + " reported root");
      o.require(std::abs(row->r_squared.to_double() - e.closed * e.closed) <= 1e-12, tag + " closed form");
      const double x2 = e.closed * e.closed;
      o.require(std::abs(x2 * x2 + e.quartic[1] * x2 + e.quartic[2]) <= 1e-9, tag + " float root");
      o.require(std::abs(e.closed - e.estimate) <= 5e-6, tag + " table estimate");
      o.require(row->within_tolerance, tag + " reported tolerance");
    }
  });

  criterion(2, "segment dynamics checks and 1e5-step interval exchange", 10.0, [](Outcome& o) {
    const VerificationReport report = theorem2_check();
    o.require(report.pass() && !report.checks.empty(), "theorem2_check");
    for (const NamedCheck& c : report.checks) o.require(c.pass, c.name);
    o.require(interval_exchange_iterate(100'000) == 100'000, "distinct iterates");

    // Replay: each iterate is t * E with real t in [-1, 1], all distinct.
    const Theorem2Data d = theorem2_data(theorem2_radius_squared());
    const exact::QuadraticReal reach = exact::norm_to_quadratic(d.E);
    std::set<std::array<std::string, 4>> seen;
    exact::Cyclotomic5 x;
    bool on_segment = true;
    for (int i = 0; i < 100'000; ++i) {
      on_segment = on_segment && exact::cyc_mul(x, exact::cyc_conj(d.E)).is_real() &&
                   exact::quad_sign(reach - exact::norm_to_quadratic(x)) != exact::Sign::Negative;
      std::array<std::string, 4> k;
      for (int c = 0; c < 4; ++c) k[c] = x.coefficients()[c].get_str();
      seen.insert(k);
      x = interval_exchange_step(x);
    }
    o.require(on_segment, "iterate off E'E");
    o.require(seen.size() == 100'000, "replayed iterates not distinct");
  });

  criterion(3, "shrinking translations, lcm rotation and three-disk lengths", 30.0, [](Outcome& o) {
    for (int n : {7, 5}) {
      const ShrinkWitness w = shrinking_translations(n, 4.0, 1e-4);
      const std::string tag = "n=" + std::to_string(n);
      o.require(w.final_stage().length < 1e-4, tag + " not below epsilon");
      for (const ShrinkStage& s : w.stages) {
        o.require(s.max_displacement_error <= 1e-9, tag + " stage " + std::to_string(s.stage) + " displacement");
        o.require(s.max_center_distance <= 4.0, tag + " rotation outside disk");
      }
    }
    const LcmRotation rot = lcm_rotation_word(3, 5);
    o.require(std::abs(std::abs(rot.angle) - 2 * std::numbers::pi / 15) <= 1e-9, "lcm angle");
    o.require(rot.max_error <= 1e-9, "lcm rotation error");
    // Independent replay of (a^-1 b)^alpha with radius-8 disks, on points near
    // the centre (from the origin the word's path leaves the disks).
    const std::vector<oracle::Disk> disks{{{-1, 0}, kLcmRadius, 3}, {{1, 0}, kLcmRadius, 5}};
    std::vector<std::pair<int, int>> word;
    for (int i = 0; i < rot.alpha; ++i) {
      word.push_back({0, -1});
      word.push_back({1, 1});
    }
    const std::complex<double> c{rot.center.x, rot.center.y};
    for (std::complex<double> p : {c, c + 0.25, c + std::complex<double>{0.1, 0.25}}) {
      const std::complex<double> want = c + (p - c) * std::polar(1.0, rot.angle);
      o.require(std::abs(oracle::apply(disks, word, p) - want) <= 1e-9, "lcm replay");
    }
    const ThreeDiskDemo demo = three_disk_demo();
    o.require(std::abs(demo.length1 - 2.0) <= 1e-12, "three-disk length 2");
    o.require(std::abs(demo.length2 - 2 * std::sqrt(2.0)) <= 1e-12, "three-disk length 2 sqrt 2");
  });

  criterion(4, "frontier search equals the hash-set oracle on 50 random finite instances", 120.0, [](Outcome& o) {
    std::mt19937_64 rng(20240605);
    const int orders[] = {5, 7, 8, 12};
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> radius(1.01, 1.3);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uint64_t smallest = ~0ull;
    std::uint64_t largest = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const int n = orders[pick(rng)];
      const double r = radius(rng);
      // Uniform point of the lens |p +- 1| <= r by rejection.
      const double h = std::sqrt(r * r - 1.0);
      std::complex<double> seed;
      do seed = {unit(rng) * (r - 1.0), unit(rng) * h};
      while (std::abs(seed + 1.0) > r || std::abs(seed - 1.0) > r);

      const std::vector<oracle::Disk> disks{{{-1, 0}, r, n}, {{1, 0}, r, n}};
      const auto want = oracle::orbit_size(disks, seed, kDefaultQuantum, 2'000'000);
      const std::string tag = "trial " + std::to_string(trial);
      if (!want) {
        o.require(false, tag + " oracle did not close");
        continue;
      }
      OrbitParams p;
      p.budget = 2'000'000;
      p.emit_points = true;
      const OrbitResult got = frontier_bfs(DiskSystem::symmetric(n, r), {seed.real(), seed.imag()}, p);
      o.require(got.status == OrbitStatus::Closed, tag + " not closed");
      smallest = std::min(smallest, got.size);
      largest = std::max(largest, got.size);
      o.require(got.size == *want, tag + " size " + std::to_string(got.size) + " vs " + std::to_string(*want));
      const Keys keys = sorted_keys(*got.points, kDefaultQuantum);
      bool closed = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
      for (PlanePoint q : *got.points) {
        for (const oracle::Disk& d : disks) {
          for (int dir : {1, -1}) {
            const auto image = rotate({q.x, q.y}, d.center, d.radius, d.order, dir);
            closed = closed && near_key(keys, key_of(image, kDefaultQuantum));
          }
        }
      }
      o.require(closed, tag + " closure");
    }
    std::cout << "  orbit sizes " << smallest << ".." << largest << std::endl;
  });

  criterion(5, "estimate_rc(5, 2e6, 1e-3) midpoint within 0.02 of 2.148961", 1800.0, [](Outcome& o) {
    const RcEstimate e = estimate_rc(5, 2'000'000, 1e-3);
    char buf[128];
    std::snprintf(buf, sizeof buf, "bracket [%.7f, %.7f]", e.bracket_lo, e.bracket_hi);
    std::cout << "  " << buf << std::endl;
    o.require(e.bracket_hi - e.bracket_lo <= 1e-3, "bracket wider than tol");
    o.require(std::abs(e.estimate() - 2.148961) <= 0.02, buf);
  });

  criterion(6, "orbit sizes of (0,0) nondecreasing in r for n=5", 600.0, [](Outcome& o) {
    std::uint64_t previous = 0;
    std::string sizes;
    for (double r : {1.05, 1.2, 1.5, 1.8, 2.0}) {
      OrbitParams p;
      p.budget = 100'000;
      const OrbitResult res = frontier_bfs(DiskSystem::symmetric(5, r), {0.0, 0.0}, p);
      sizes += (sizes.empty() ? "" : ",") + std::to_string(res.size);
      o.require(res.size >= previous, "decrease");
      previous = res.size;
    }
    std::cout << "  sizes " << sizes << std::endl;
  });

  criterion(7, "boundary region counts, generator invariance and thread determinism", 600.0, [](Outcome& o) {
    RenderOptions one;
    one.threads = 1;
    RenderOptions many;
    many.threads = kManyThreads;

    for (auto [r, want] : {std::pair{0.5, -1}, {1.05, -2}}) {
      const DiskSystem sys = DiskSystem::symmetric(5, r);
      const Viewport v = default_viewport(sys);
      const BoundaryRender a = render_boundary(sys, 720, 1'000'000, v, BoundaryColoring::OrbitOrder, one);
      const BoundaryRender b = render_boundary(sys, 720, 1'000'000, v, BoundaryColoring::OrbitOrder, many);
      const std::string tag = "r=" + std::to_string(r);
      o.require(ppm_bytes(a.image) == ppm_bytes(b.image), tag + " boundary bytes differ across threads");
      if (want == -1) {
        o.require(a.interior_regions + 1 == 3, tag + " regions " + std::to_string(a.interior_regions + 1));
      } else {
        const int euler = oracle::count_faces(oracle::lens_image_arcs(5, r)).bounded_faces;
        o.require(euler == 11, "arrangement oracle " + std::to_string(euler));
        o.require(a.interior_regions == euler, tag + " interior " + std::to_string(a.interior_regions));
      }
    }

    const double r = 2.148958;
    const DiskSystem sys = DiskSystem::symmetric(5, r);
    const PlanePoint seed = *upper_intersection_point(sys);
    OrbitParams p;
    p.budget = 10'000'000;
    std::vector<PlanePoint> pts;
    pts.reserve(p.budget);
    const StreamSummary s = orbit_stream(sys, seed, p, [&](PlanePoint q) { pts.push_back(q); });
    std::cout << "  r=2.148958 orbit: " << s.delivered << " points, " << to_string(s.status) << ", "
              << s.unexpanded << " unexpanded" << std::endl;
    const Keys keys = sorted_keys(pts, p.quantum);
    o.require(std::adjacent_find(keys.begin(), keys.end()) == keys.end(), "duplicate cells");
    const std::complex<double> centers[2] = {{-1, 0}, {1, 0}};
    std::uint64_t checked = 0;
    std::uint64_t missing = 0;
    for (std::uint64_t i = 0; i + s.unexpanded < pts.size(); ++i) {
      const std::complex<double> q{pts[i].x, pts[i].y};
      for (const auto& c : centers) {
        if (std::abs(q - c) > r + 1e-12) continue;
        ++checked;
        missing += !near_key(keys, key_of(rotate(q, c, r, 5, 1), p.quantum));
      }
    }
    std::cout << "  invariance: " << checked << " generator images checked, " << missing << " missing" << std::endl;
    o.require(checked > 0 && missing == 0, "generator invariance");
    pts = {};

    const Viewport v = default_viewport(sys);
    const RasterImage a = render_orbit(sys, {seed}, p.budget, v, OrbitColoring::Density, one);
    const RasterImage b = render_orbit(sys, {seed}, p.budget, v, OrbitColoring::Density, many);
    o.require(ppm_bytes(a) == ppm_bytes(b), "orbit render bytes differ across threads");
  });

  criterion(8, "CLI examples", 1800.0, [](Outcome& o) {
    using nlohmann::json;
    const CliRun orbit = cli({"orbit", "--n", "5", "--r", "0.9", "--seed", "-0.5,0"});
    o.require(orbit.code == 0, "orbit exit");
    const json jo = json::parse(orbit.out);
    o.require(jo["status"] == "Closed" && jo["size"] == 5, "orbit output");

    const CliRun minpoly = cli({"verify", "minpoly"});
    o.require(minpoly.code == 0, "minpoly exit");
    const json jm = json::parse(minpoly.out);
    int passing = 0;
    for (const json& row : jm["rows"]) passing += row["pass"] == true;
    o.require(passing == 4 && jm["rows"].size() == 4, "minpoly rows");

    const CliRun est = cli({"estimate-rc", "--n", "5", "--budget", "2000000", "--tol", "1e-3"});
    o.require(est.code == 0, "estimate-rc exit");
    const json je = json::parse(est.out);
    const double lo = je["bracket"][0];
    const double hi = je["bracket"][1];
    std::cout << "  estimate-rc bracket [" << lo << ", " << hi << "]" << std::endl;
    o.require(lo >= 2.148961 - 0.02 && hi <= 2.148961 + 0.02, "bracket outside 2.148961 +- 0.02");
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
