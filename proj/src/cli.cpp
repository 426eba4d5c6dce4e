#include "diskgroups/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "diskgroups/constructions.hpp"
#include "diskgroups/critical_radius.hpp"
#include "diskgroups/errors.hpp"
#include "diskgroups/orbit.hpp"
#include "diskgroups/render.hpp"

namespace diskgroups {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Value parsers throw UsageError; config loading rewraps them with a line number.

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
  return v;
}

long long parse_int(const std::string& s) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

/// Accepts plain integers and integral scientific notation such as 2e6.
std::uint64_t parse_count(const std::string& s) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && p == s.data() + s.size()) return v;
  const double d = parse_double(s);
  if (d < 0 || d != std::floor(d) || d > 9.0e18) throw UsageError("not a non-negative integer: '" + s + "'");
  return static_cast<std::uint64_t>(d);
}

int parse_small_int(const std::string& s) {
  const long long v = parse_int(s);
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw UsageError("integer out of range: '" + s + "'");
  return static_cast<int>(v);
}

PlanePoint parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError("expected x,y but got '" + s + "'");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const std::string& p : split(s, ',')) out.push_back(parse_small_int(p));
  return out;
}

void apply_key(RunConfig& c, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "n") {
    c.n1 = c.n2 = parse_small_int(v);
  } else if (key == "n1") {
    c.n1 = parse_small_int(v);
  } else if (key == "n2") {
    c.n2 = parse_small_int(v);
  } else if (key == "r") {
    c.r1 = c.r2 = parse_double(v);
  } else if (key == "r1") {
    c.r1 = parse_double(v);
  } else if (key == "r2") {
    c.r2 = parse_double(v);
  } else if (key == "center1") {
    c.center1 = parse_point(v);
  } else if (key == "center2") {
    c.center2 = parse_point(v);
  } else if (key == "budget") {
    c.budget = parse_count(v);
  } else if (key == "quantum") {
    c.quantum = parse_double(v);
  } else if (key == "rng_seed") {
    c.rng_seed = parse_count(v);
  } else if (key == "threads") {
    const std::uint64_t t = parse_count(v);
    if (t > 4096) throw UsageError("too many threads: " + v);
    c.threads = static_cast<unsigned>(t);
  } else if (key == "seed") {
    c.seed = parse_point(v);
  } else if (key == "max_depth") {
    c.max_depth = parse_count(v);
  } else if (key == "tol") {
    c.tol = parse_double(v);
  } else if (key == "lo") {
    c.lo = parse_double(v);
  } else if (key == "hi") {
    c.hi = parse_double(v);
  } else if (key == "ns") {
    c.ns = parse_int_list(v);
  } else if (key == "epsilon") {
    c.epsilon = parse_double(v);
  } else if (key == "out") {
    c.out = v;
  } else if (key == "view_center") {
    c.view_center = parse_point(v);
  } else if (key == "view_width") {
    c.view_width = parse_double(v);
  } else if (key == "width_px") {
    c.width_px = parse_small_int(v);
  } else if (key == "height_px") {
    c.height_px = parse_small_int(v);
  } else if (key == "size") {
    const auto x = v.find('x');
    if (x == std::string::npos) throw UsageError("expected WxH but got '" + v + "'");
    c.width_px = parse_small_int(v.substr(0, x));
    c.height_px = parse_small_int(v.substr(x + 1));
  } else if (key == "coloring") {
    c.coloring = v;
  } else if (key == "segments") {
    c.segments = parse_small_int(v);
  } else if (key == "word") {
    c.word = v;
  } else if (key == "iterations") {
    c.iterations = parse_count(v);
  } else if (key == "stride") {
    c.stride = parse_small_int(v);
  } else {
    throw UsageError("unknown key '" + key + "'");
  }
}

Json point_json(PlanePoint p) { return Json::array({p.x, p.y}); }

template <typename T>
Json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, PlanePoint>) {
    return point_json(*v);
  } else {
    return *v;
  }
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["n1"] = c.n1;
  j["n2"] = c.n2;
  j["r1"] = opt_json(c.r1);
  j["r2"] = opt_json(c.r2);
  j["center1"] = point_json(c.center1);
  j["center2"] = point_json(c.center2);
  j["budget"] = c.budget;
  j["quantum"] = c.quantum;
  j["rng_seed"] = c.rng_seed;
  j["threads"] = c.threads;
  j["seed"] = opt_json(c.seed);
  j["max_depth"] = opt_json(c.max_depth);
  j["tol"] = c.tol;
  j["lo"] = opt_json(c.lo);
  j["hi"] = opt_json(c.hi);
  j["ns"] = c.ns;
  j["epsilon"] = c.epsilon;
  j["out"] = c.out;
  j["view_center"] = opt_json(c.view_center);
  j["view_width"] = opt_json(c.view_width);
  j["width_px"] = c.width_px;
  j["height_px"] = c.height_px;
  j["coloring"] = c.coloring;
  j["segments"] = c.segments;
  j["word"] = c.word;
  j["iterations"] = c.iterations;
  j["stride"] = c.stride;
  return j;
}

}  // namespace

DiskSystem RunConfig::disk_system() const {
  if (!r1 || !r2) throw UsageError("a radius is required (--r, or --r1 and --r2)");
  return DiskSystem({DiskSpec{center1, *r1, n1}, DiskSpec{center2, *r2, n2}});
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(number, "expected key=value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    try {
      apply_key(base, key, text.substr(eq + 1));
    } catch (const UsageError& e) {
      throw ParseError(number, e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  return parse_config(in, std::move(base));
}

std::string config_json(const RunConfig& config) { return config_to_json(config).dump(); }

// ---------------------------------------------------------------------------

namespace {

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

// Every value flag maps onto a config key; flags are applied after the config file.
constexpr FlagSpec kFlags[] = {
    {"--n", "n", "rotation order of both disks"},
    {"--n1", "n1", "rotation order of disk a"},
    {"--n2", "n2", "rotation order of disk b"},
    {"--r", "r", "radius of both disks"},
    {"--r1", "r1", "radius of disk a"},
    {"--r2", "r2", "radius of disk b"},
    {"--center1", "center1", "centre of disk a as x,y (default -1,0)"},
    {"--center2", "center2", "centre of disk b as x,y (default 1,0)"},
    {"--budget", "budget", "point budget (segment budget for boundary renders), default 1000000"},
    {"--quantum", "quantum", "grid quantum for point identity, default 1e-9"},
    {"--rng-seed", "rng_seed", "seed of the lens-point generator"},
    {"--threads", "threads", "worker threads (default: DISKGROUPS_THREADS, then 1)"},
    {"--seed", "seed", "seed point as x,y (default: upper intersection point)"},
    {"--max-depth", "max_depth", "stop the orbit search after this many levels"},
    {"--tol", "tol", "bisection tolerance, default 1e-3"},
    {"--lo", "lo", "lower end of the bisection bracket (default 1.001)"},
    {"--hi", "hi", "upper end of the bisection bracket (default 4.0)"},
    {"--ns", "ns", "comma-separated rotation orders"},
    {"--epsilon", "epsilon", "target translation length, default 1e-4"},
    {"--out", "out", "output file"},
    {"--center", "view_center", "viewport centre as x,y (default 0,0)"},
    {"--width", "view_width", "viewport width in plane units (default 2(max radius + 1))"},
    {"--size", "size", "image size WxH, default 512x512"},
    {"--coloring", "coloring", "colour rule"},
    {"--segments", "segments", "chords per boundary circle, default 720"},
    {"--word", "word", "generator word such as 'a^2 b^-1' (default: empty)"},
    {"--iterations", "iterations", "iterations per seed, default 100000"},
    {"--stride", "stride", "seed every stride-th pixel (0: a single seed)"},
};

class Flags {
 public:
  void add(CLI::App* app, std::initializer_list<const char*> keys) {
    app->add_option("--config", config_path_, "key=value file; flags override its values");
    for (const char* key : keys) {
      for (const FlagSpec& f : kFlags) {
        if (std::string_view(f.key) != key) continue;
        auto& slot = values_[f.key];
        options_.push_back({f.key, app->add_option(f.flag, slot, f.help)});
      }
    }
  }

  RunConfig resolve() const {
    RunConfig c;
    if (!config_path_.empty()) c = load_config(config_path_);
    for (const auto& [key, opt] : options_) {
      if (opt->count() > 0) apply_key(c, key, values_.at(key));
    }
    return c;
  }

 private:
  std::string config_path_;
  std::map<std::string, std::string> values_;
  std::vector<std::pair<std::string, CLI::Option*>> options_;
};

void emit(std::ostream& out, Json j, const RunConfig& c) {
  j["config"] = config_to_json(c);
  out << j.dump(2) << '\n';
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const NamedCheck& c : r.checks) checks.push_back({{"check_name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"report", r.name}, {"pass", r.pass()}, {"checks", checks}};
}

PlanePoint default_seed(const RunConfig& c, const DiskSystem& sys) {
  if (c.seed) return *c.seed;
  if (auto p = upper_intersection_point(sys)) return *p;
  throw UsageError("the disks do not intersect; give --seed");
}

std::string require_coloring(RunConfig& c, std::initializer_list<const char*> allowed) {
  if (c.coloring.empty()) c.coloring = *allowed.begin();
  for (const char* a : allowed) {
    if (c.coloring == a) return c.coloring;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("unknown coloring '" + c.coloring + "' (expected " + list + ")");
}

Viewport make_viewport(RunConfig& c, const DiskSystem& sys) {
  Viewport v = default_viewport(sys, std::max(c.width_px, 1), std::max(c.height_px, 1));
  v.pixels_w = c.width_px;
  v.pixels_h = c.height_px;
  if (!c.view_center) c.view_center = v.center;
  if (!c.view_width) c.view_width = v.width;
  v.center = *c.view_center;
  v.width = *c.view_width;
  v.validate();
  return v;
}

// ---------------------------------------------------------------------------

int run_orbit(RunConfig c, std::ostream& out) {
  const DiskSystem sys = c.disk_system();
  c.seed = default_seed(c, sys);
  OrbitParams p;
  p.budget = c.budget;
  p.max_depth = c.max_depth;
  p.quantum = c.quantum;
  p.threads = c.threads;
  const OrbitResult r = frontier_bfs(sys, *c.seed, p);
  emit(out,
       {{"status", to_string(r.status)},
        {"size", r.size},
        {"depth", r.depth},
        {"peak_memory_points", r.peak_memory_points}},
       c);
  return 0;
}

ClassifyOptions classify_options(const RunConfig& c) {
  ClassifyOptions o;
  o.quantum = c.quantum;
  o.threads = c.threads;
  o.rng_seed = c.rng_seed;
  return o;
}

int run_classify(RunConfig c, std::ostream& out) {
  const DiskSystem sys = c.disk_system();
  std::optional<std::vector<PlanePoint>> seeds;
  if (c.seed) seeds = std::vector<PlanePoint>{*c.seed};
  const Classification cl = classify(sys, c.budget, seeds, classify_options(c));
  Json evidence = Json::array();
  for (const SeedEvidence& e : cl.evidence) {
    evidence.push_back(
        {{"seed", point_json(e.seed)}, {"status", to_string(e.status)}, {"size", e.size}, {"depth", e.depth}});
  }
  emit(out, {{"verdict", to_string(cl.verdict)}, {"budget", cl.budget}, {"evidence", evidence}}, c);
  return 0;
}

int run_estimate(RunConfig c, std::ostream& out) {
  if (c.n1 != c.n2) throw UsageError("estimate-rc needs equal orders (--n)");
  if (c.lo.has_value() != c.hi.has_value()) throw UsageError("give both --lo and --hi, or neither");
  if (!c.lo) {
    c.lo = kDefaultBracket.first;
    c.hi = kDefaultBracket.second;
  }
  const RcEstimate e = estimate_rc(c.n1, c.budget, c.tol, std::pair{*c.lo, *c.hi}, classify_options(c));
  Json seeds = Json::array();
  for (PlanePoint p : e.seeds_used) seeds.push_back(point_json(p));
  emit(out,
       {{"n", e.n},
        {"bracket", Json::array({e.bracket_lo, e.bracket_hi})},
        {"estimate", e.estimate()},
        {"iterations", e.iterations},
        {"budget", e.budget},
        {"tol", e.tol},
        {"seeds_used", seeds}},
       c);
  return 0;
}

int run_table(RunConfig c, std::ostream& out) {
  if (c.ns.empty()) c.ns = {5, 7, 8};
  const std::vector<RadiusRow> rows = radius_table(c.ns, c.budget, c.tol, classify_options(c));
  if (c.out.empty()) {
    write_radius_csv(out, rows, c.budget, c.tol);
    return 0;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
  write_radius_csv(f, rows, c.budget, c.tol);
  emit(out, {{"rows", rows.size()}, {"out", c.out}}, c);
  return 0;
}

Json image_json(const RasterImage& img, const std::string& path) {
  return {{"out", path}, {"width_px", img.width()}, {"height_px", img.height()}, {"lit_pixels", img.lit_pixels()}};
}

int run_render_fractal(RunConfig c, std::ostream& out) {
  const DiskSystem sys = c.disk_system();
  c.seed = default_seed(c, sys);
  const std::string coloring = require_coloring(c, {"binary", "density"});
  if (c.out.empty()) c.out = "fractal.ppm";
  const Viewport v = make_viewport(c, sys);
  const RasterImage img = render_orbit(sys, {*c.seed}, c.budget, v,
                                       coloring == "binary" ? OrbitColoring::Binary : OrbitColoring::Density,
                                       {c.quantum, c.threads});
  write_ppm(img, c.out);
  emit(out, image_json(img, c.out), c);
  return 0;
}

int run_render_boundary(RunConfig c, std::ostream& out) {
  const DiskSystem sys = c.disk_system();
  const std::string coloring = require_coloring(c, {"orbit-order", "region-size"});
  if (c.out.empty()) c.out = "boundary.ppm";
  const Viewport v = make_viewport(c, sys);
  const BoundaryRender b = render_boundary(
      sys, c.segments, c.budget, v,
      coloring == "orbit-order" ? BoundaryColoring::OrbitOrder : BoundaryColoring::RegionSize, {c.quantum, c.threads});
  write_ppm(b.image, c.out);
  Json j = image_json(b.image, c.out);
  j["interior_regions"] = b.interior_regions;
  j["regions"] = b.interior_regions + 1;  // with the background
  j["segments"] = b.segments;
  j["partial"] = b.partial;
  emit(out, j, c);
  return 0;
}

int run_render_single(RunConfig c, std::ostream& out) {
  const DiskSystem sys = c.disk_system();
  const std::string coloring = require_coloring(c, {"density", "orbit-order"});
  if (c.out.empty()) c.out = "single-gen.ppm";
  if (c.stride < 0) throw UsageError("stride must be non-negative");
  const Word word = Word::parse(c.word);
  const Viewport v = make_viewport(c, sys);
  std::vector<PlanePoint> seeds;
  if (c.stride > 0) {
    seeds = pixel_seeds(v, c.stride);
  } else {
    c.seed = default_seed(c, sys);
    seeds = {*c.seed};
  }
  const RasterImage img = render_single_generator(
      sys, word, c.iterations, seeds, v,
      coloring == "density" ? SingleGenColoring::Density : SingleGenColoring::OrbitOrder, {c.quantum, c.threads});
  write_ppm(img, c.out);
  Json j = image_json(img, c.out);
  j["seeds"] = seeds.size();
  emit(out, j, c);
  return 0;
}

int run_verify_theorem2(RunConfig c, std::ostream& out) {
  VerificationReport r = theorem2_check();
  const std::uint64_t iterates = 100'000;
  const std::uint64_t distinct = interval_exchange_iterate(iterates);
  r.add("interval exchange distinct iterates", distinct == iterates,
        std::to_string(distinct) + " of " + std::to_string(iterates));
  emit(out, report_json(r), c);
  return r.pass() ? 0 : 1;
}

int run_verify_theorem1(RunConfig c, std::ostream& out) {
  if (c.ns.empty()) c.ns = {5, 7};
  if (!c.r1) c.r1 = c.r2 = 4.0;
  VerificationReport r{"theorem1", {}};
  Json witnesses = Json::array();
  for (int n : c.ns) {
    const ShrinkWitness w = shrinking_translations(n, *c.r1, c.epsilon);
    const ShrinkStage& last = w.final_stage();
    double worst = 0.0;
    for (const ShrinkStage& s : w.stages) worst = std::max(worst, s.max_displacement_error);
    r.add("n=" + std::to_string(n) + " reaches epsilon", last.length < c.epsilon,
          "length " + std::to_string(last.length) + " after " + std::to_string(w.stages.size()) + " stages");
    r.add("n=" + std::to_string(n) + " displacements match prediction", w.all_within_tolerance(),
          "max error " + std::to_string(worst));
    Json offsets = w.offsets;
    witnesses.push_back({{"n", n},
                         {"offsets", offsets},
                         {"ratio", w.ratio},
                         {"stages", w.stages.size()},
                         {"final_length", last.length},
                         {"final_word_length", last.word_length},
                         {"max_displacement_error", worst}});
  }
  const LcmRotation rot = lcm_rotation_word(3, 5);
  const double target = 2.0 * std::numbers::pi / 15.0;
  r.add("lcm(3,5) rotation by 2pi/15", std::abs(std::abs(rot.angle) - target) <= 1e-9 && rot.max_error <= 1e-9,
        "alpha " + std::to_string(rot.alpha) + ", angle " + std::to_string(rot.angle));
  Json j = report_json(r);
  j["witnesses"] = witnesses;
  j["lcm_rotation"] = {{"n1", rot.n1},
                       {"n2", rot.n2},
                       {"alpha", rot.alpha},
                       {"word", rot.word.to_string()},
                       {"center", point_json(rot.center)},
                       {"angle", rot.angle},
                       {"max_error", rot.max_error}};
  emit(out, j, c);
  return r.pass() ? 0 : 1;
}

int run_verify_minpoly(RunConfig c, std::ostream& out) {
  VerificationReport r{"minpoly", {}};
  Json rows = Json::array();
  for (const MinpolyRow& row : minpoly_rows()) {
    r.add("n=" + std::to_string(row.n) + " closed form is a root", row.exact_root, row.r_squared.to_string());
    r.add("n=" + std::to_string(row.n) + " matches the numerical estimate", row.within_tolerance,
          std::to_string(row.closed_form) + " vs " + std::to_string(row.table_estimate));
    rows.push_back({{"n", row.n},
                    {"r_squared", row.r_squared.to_string()},
                    {"quartic", row.quartic},
                    {"closed_form", row.closed_form},
                    {"estimate", row.table_estimate},
                    {"exact_root", row.exact_root},
                    {"within_tolerance", row.within_tolerance},
                    {"pass", row.exact_root && row.within_tolerance}});
  }
  Json j = report_json(r);
  j["rows"] = rows;
  emit(out, j, c);
  return r.pass() ? 0 : 1;
}

int run_verify_spiral(RunConfig c, std::ostream& out) {
  VerificationReport r{"spiral", {}};
  for (int n : {8, 12}) {
    const SpiralRadius s = spiral_radius(n);
    r.add("n=" + std::to_string(n) + " radius satisfies its quartic", s.minpoly_ok,
          "r^2 = " + s.r_squared.to_string() + ", r = " + std::to_string(s.r));
  }
  emit(out, report_json(r), c);
  return r.pass() ? 0 : 1;
}

int run_verify_three_disk(RunConfig c, std::ostream& out) {
  const ThreeDiskDemo d = three_disk_demo();
  VerificationReport r{"three-disk", {}};
  r.add("first translation has length 2", std::abs(d.length1 - 2.0) <= 1e-12, std::to_string(d.length1));
  r.add("second translation has length 2 sqrt 2", std::abs(d.length2 - 2.0 * std::numbers::sqrt2) <= 1e-12,
        std::to_string(d.length2));
  r.add("both translations point along +x",
        distance(d.direction1, Vec2{1.0, 0.0}) <= 1e-12 && distance(d.direction2, Vec2{1.0, 0.0}) <= 1e-12);
  r.add("translations invert exactly", d.max_error <= 1e-12, std::to_string(d.max_error));
  Json j = report_json(r);
  j["length1"] = d.length1;
  j["length2"] = d.length2;
  j["ratio"] = d.ratio;
  j["max_error"] = d.max_error;
  emit(out, j, c);
  return r.pass() ? 0 : 1;
}

// CLI11 reads "--seed -0.5,0" as two flags; glue such values onto their flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.size() > 2 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& v = args[i + 1];
      if (v.size() > 1 && v[0] == '-' && (std::isdigit(static_cast<unsigned char>(v[1])) || v[1] == '.')) {
        out.push_back(a + "=" + v);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

int cli_main(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits, critical radii, renders and exact checks for two-disk compound symmetry groups.",
               "diskgroups"};
  app.require_subcommand(1);
  Flags flags;
  std::function<int(RunConfig, std::ostream&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::initializer_list<const char*> keys, int (*fn)(RunConfig, std::ostream&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    flags.add(sub, keys);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  leaf(&app, "orbit", "orbit of one point (frontier search)",
       {"n", "n1", "n2", "r", "r1", "r2", "center1", "center2", "quantum", "threads", "budget", "seed", "max_depth"},
       run_orbit);
  leaf(&app, "classify", "Finite / InfinitePresumed verdict at one radius",
       {"n", "n1", "n2", "r", "r1", "r2", "center1", "center2", "quantum", "threads", "budget", "seed", "rng_seed"},
       run_classify);
  leaf(&app, "estimate-rc", "bisection estimate of the critical radius of GG_n",
       {"n", "quantum", "threads", "budget", "tol", "lo", "hi", "rng_seed"}, run_estimate);
  leaf(&app, "table", "critical-radius estimates as CSV",
       {"ns", "quantum", "threads", "budget", "tol", "rng_seed", "out"}, run_table);

  CLI::App* render = app.add_subcommand("render", "write a PPM image");
  render->require_subcommand(1);
  leaf(render, "fractal", "orbit point plot (coloring: binary, density)",
       {"n", "n1", "n2", "r", "r1", "r2", "center1", "center2", "quantum", "threads", "budget", "seed", "out", "center",
        "width", "size", "coloring"},
       run_render_fractal);
  leaf(render, "boundary", "images of the disk boundaries with filled regions (coloring: orbit-order, region-size)",
       {"n", "n1", "n2", "r", "r1", "r2", "center1", "center2", "quantum", "threads", "budget", "segments", "out",
        "center", "width", "size", "coloring"},
       run_render_boundary);
  leaf(render, "single-gen", "iterates of one word (coloring: density, orbit-order)",
       {"n", "n1", "n2", "r", "r1", "r2", "center1", "center2", "quantum", "threads", "word", "iterations", "seed",
        "stride", "out", "center", "width", "size", "coloring"},
       run_render_single);

  CLI::App* verify = app.add_subcommand("verify", "exact and numerical checks; exit 1 on failure");
  verify->require_subcommand(1);
  leaf(verify, "theorem2", "segment dynamics of GG_5 at r^2 = 3 + phi, in exact arithmetic", {}, run_verify_theorem2);
  leaf(verify, "theorem1", "arbitrarily short translations and the lcm rotation", {"ns", "r", "epsilon"},
       run_verify_theorem1);
  leaf(verify, "minpoly", "closed-form radii against their quartics", {}, run_verify_minpoly);
  leaf(verify, "spiral", "n = 8 and n = 12 closed forms", {}, run_verify_spiral);
  leaf(verify, "three-disk", "two independent translations from three disks", {}, run_verify_three_disk);

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* shown = &app;
    while (!shown->get_subcommands().empty()) shown = shown->get_subcommands().front();
    err << shown->help();
    return 2;
  }

  try {
    return action(flags.resolve(), out);
  } catch (const ParseError& e) {
    err << "error: config " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const AlwaysFiniteError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace diskgroups
