#include "diskgroups/render.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "diskgroups/errors.hpp"
#include "diskgroups/parallel.hpp"

namespace diskgroups {

const std::array<Rgb, kDensityPaletteSize> kDensityPalette{{
    {255, 247, 200}, {254, 232, 160}, {253, 212, 120}, {252, 187, 90},
    {250, 160, 70},  {244, 132, 60},  {232, 104, 58},  {214, 80, 62},
    {190, 60, 70},   {165, 45, 80},   {140, 35, 88},   {114, 28, 92},
    {88, 22, 90},    {64, 17, 80},    {42, 12, 62},    {22, 8, 40},
}};

const std::array<Rgb, kRegionPaletteSize> kRegionPalette{{
    {141, 211, 199}, {255, 255, 179}, {190, 186, 218}, {251, 128, 114},
    {128, 177, 211}, {253, 180, 98},  {179, 222, 105}, {252, 205, 229},
    {188, 128, 189}, {204, 235, 197}, {255, 237, 111}, {217, 217, 217},
}};

namespace {
constexpr Rgb kUnboundedOrbit{64, 64, 64};
}  // namespace

// ---------------------------------------------------------------------------

void Viewport::validate() const {
  if (pixels_w < 1 || pixels_h < 1) throw UsageError("viewport needs at least one pixel in each direction");
  if (!(width > 0.0) || !std::isfinite(width)) throw UsageError("viewport width must be positive");
  if (!std::isfinite(center.x) || !std::isfinite(center.y)) throw UsageError("viewport centre must be finite");
}

PlanePoint Viewport::to_pixel(PlanePoint p) const {
  const double scale = pixels_w / width;
  return {(p.x - (center.x - 0.5 * width)) * scale, ((center.y + 0.5 * height()) - p.y) * scale};
}

PlanePoint Viewport::pixel_center(int i, int j) const {
  const double unit = width / pixels_w;
  return {center.x - 0.5 * width + (i + 0.5) * unit, center.y + 0.5 * height() - (j + 0.5) * unit};
}

std::optional<std::array<int, 2>> Viewport::pixel_of(PlanePoint p) const {
  const PlanePoint q = to_pixel(p);
  if (!(q.x >= 0.0 && q.x <= pixels_w && q.y >= 0.0 && q.y <= pixels_h)) return std::nullopt;
  const int i = std::min(static_cast<int>(q.x), pixels_w - 1);
  const int j = std::min(static_cast<int>(q.y), pixels_h - 1);
  return std::array<int, 2>{i, j};
}

Viewport default_viewport(const DiskSystem& sys, int pixels_w, int pixels_h) {
  Viewport v;
  v.center = {0.0, 0.0};
  v.width = 2.0 * (sys.max_radius() + 1.0);
  v.pixels_w = pixels_w;
  v.pixels_h = pixels_h;
  v.validate();
  return v;
}

// ---------------------------------------------------------------------------

RasterImage::RasterImage(int w, int h) : w_(w), h_(h) {
  if (w < 1 || h < 1) throw UsageError("image needs at least one pixel in each direction");
  rgb_.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, 255);
  counts_.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
}

Rgb RasterImage::pixel(int x, int y) const {
  const std::size_t i = index(x, y) * 3;
  return {rgb_[i], rgb_[i + 1], rgb_[i + 2]};
}

void RasterImage::set_pixel(int x, int y, Rgb c) {
  const std::size_t i = index(x, y) * 3;
  rgb_[i] = c[0];
  rgb_[i + 1] = c[1];
  rgb_[i + 2] = c[2];
}

void RasterImage::add_count(int x, int y, std::uint32_t k) {
  std::uint32_t& c = counts_[index(x, y)];
  c = c > std::numeric_limits<std::uint32_t>::max() - k ? std::numeric_limits<std::uint32_t>::max() : c + k;
}

void RasterImage::merge_counts(const std::vector<std::uint32_t>& other) {
  if (other.size() != counts_.size()) throw InvariantViolation("count planes differ in size");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const std::uint64_t s = static_cast<std::uint64_t>(counts_[i]) + other[i];
    counts_[i] = static_cast<std::uint32_t>(std::min<std::uint64_t>(s, std::numeric_limits<std::uint32_t>::max()));
  }
}

std::uint64_t RasterImage::lit_pixels() const {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < rgb_.size(); i += 3) {
    if (rgb_[i] != 255 || rgb_[i + 1] != 255 || rgb_[i + 2] != 255) ++n;
  }
  return n;
}

Rgb density_color(std::uint32_t count) {
  if (count == 0) return kWhite;
  const auto level = static_cast<std::size_t>(std::bit_width(count) - 1);
  return kDensityPalette[std::min(level, kDensityPaletteSize - 1)];
}

namespace {

void finalize_density(RasterImage& img) {
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) img.set_pixel(x, y, density_color(img.count(x, y)));
}

void finalize_binary(RasterImage& img) {
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) img.set_pixel(x, y, img.count(x, y) > 0 ? kBlack : kWhite);
}

}  // namespace

RasterImage render_orbit(const DiskSystem& sys, const std::vector<PlanePoint>& seeds, std::uint64_t budget,
                         const Viewport& view, OrbitColoring coloring, const RenderOptions& options) {
  view.validate();
  RasterImage img(view.pixels_w, view.pixels_h);
  OrbitParams params;
  params.budget = budget;
  params.quantum = options.quantum;
  params.threads = options.threads;
  for (const PlanePoint& seed : seeds) {
    orbit_stream(sys, seed, params, [&](PlanePoint p) {
      if (auto px = view.pixel_of(p)) img.add_count((*px)[0], (*px)[1]);
    });
  }
  if (coloring == OrbitColoring::Binary) {
    finalize_binary(img);
  } else {
    finalize_density(img);
  }
  return img;
}

// ---------------------------------------------------------------------------
// Boundary arrangement

namespace {

using SegmentKey = std::array<std::int64_t, 4>;

SegmentKey segment_key(const PlaneSegment& s, double quantum) {
  GridKey a = quantize(s.a, quantum);
  GridKey b = quantize(s.b, quantum);
  if (b < a) std::swap(a, b);
  return {a.x, a.y, b.x, b.y};
}

struct SegmentKeyHash {
  std::size_t operator()(const SegmentKey& k) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::int64_t v : k) h = (h ^ static_cast<std::uint64_t>(v)) * 0xBF58476D1CE4E5B9ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

/// Cuts s at every crossing with a disk boundary circle so that each piece is
/// either inside or outside every disk.
void split_segment(const DiskSystem& sys, const PlaneSegment& s, std::vector<PlaneSegment>& out) {
  const PlanePoint d = s.b - s.a;
  const double len2 = d.x * d.x + d.y * d.y;
  if (len2 <= 0.0) return;
  std::vector<double> cuts{0.0, 1.0};
  for (const DiskSpec& disk : sys.disks()) {
    const PlanePoint f = s.a - disk.center;
    const double b = 2.0 * (f.x * d.x + f.y * d.y);
    const double c = f.x * f.x + f.y * f.y - disk.radius * disk.radius;
    const double disc = b * b - 4.0 * len2 * c;
    if (disc <= 0.0) continue;  // misses or only touches the circle
    const double root = std::sqrt(disc);
    for (double t : {(-b - root) / (2.0 * len2), (-b + root) / (2.0 * len2)}) {
      if (t > 1e-12 && t < 1.0 - 1e-12) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 1e-12) continue;
    out.push_back({s.a + cuts[i] * d, s.a + cuts[i + 1] * d});
  }
}

struct KeyedSegment {
  SegmentKey key;
  PlaneSegment seg;
};

bool keyed_less(const KeyedSegment& x, const KeyedSegment& y) {
  if (x.key != y.key) return x.key < y.key;
  const std::array<double, 4> a{x.seg.a.x, x.seg.a.y, x.seg.b.x, x.seg.b.y};
  const std::array<double, 4> b{y.seg.a.x, y.seg.a.y, y.seg.b.x, y.seg.b.y};
  return a < b;
}

void sort_unique(std::vector<KeyedSegment>& v) {
  std::sort(v.begin(), v.end(), keyed_less);
  v.erase(std::unique(v.begin(), v.end(), [](const KeyedSegment& a, const KeyedSegment& b) { return a.key == b.key; }),
          v.end());
}

}  // namespace

std::vector<PlaneSegment> boundary_segments(const DiskSystem& sys, int segment_count, std::uint64_t segment_budget,
                                            bool* partial, double quantum) {
  if (segment_count < 8) throw UsageError("segment_count must be at least 8");
  if (segment_budget < 1) throw UsageError("segment budget must be at least 1");
  if (!(quantum > 0.0)) throw UsageError("quantum must be positive");

  std::vector<KeyedSegment> level;
  for (const DiskSpec& disk : sys.disks()) {
    std::vector<PlaneSegment> pieces;
    for (int j = 0; j < segment_count; ++j) {
      const double t0 = 2.0 * std::numbers::pi * j / segment_count;
      const double t1 = 2.0 * std::numbers::pi * (j + 1) / segment_count;
      const PlaneSegment chord{disk.center + disk.radius * PlanePoint{std::cos(t0), std::sin(t0)},
                               disk.center + disk.radius * PlanePoint{std::cos(t1), std::sin(t1)}};
      split_segment(sys, chord, pieces);
    }
    for (const PlaneSegment& p : pieces) level.push_back({segment_key(p, quantum), p});
  }
  sort_unique(level);

  bool cut = false;
  if (level.size() > segment_budget) {
    level.resize(segment_budget);
    cut = true;
  }
  std::unordered_set<SegmentKey, SegmentKeyHash> seen;
  std::vector<PlaneSegment> all;
  for (const KeyedSegment& k : level) {
    seen.insert(k.key);
    all.push_back(k.seg);
  }

  const auto disks = sys.disks();
  while (!cut && !level.empty()) {
    std::vector<KeyedSegment> next;
    std::vector<PlaneSegment> pieces;
    for (const KeyedSegment& k : level) {
      const PlanePoint mid = 0.5 * (k.seg.a + k.seg.b);
      for (std::size_t i = 0; i < disks.size(); ++i) {
        if (!disks[i].contains(mid)) continue;
        const auto order = static_cast<std::size_t>(disks[i].order);
        for (std::size_t e : {std::size_t{1}, order - 1}) {
          if (e == order - 1 && order <= 2) break;
          const UnitRoot& root = sys.clockwise_root(i, e);
          const PlaneSegment img{disks[i].center + root.rotate(k.seg.a - disks[i].center),
                                 disks[i].center + root.rotate(k.seg.b - disks[i].center)};
          pieces.clear();
          split_segment(sys, img, pieces);
          for (const PlaneSegment& p : pieces) {
            const SegmentKey key = segment_key(p, quantum);
            if (!seen.count(key)) next.push_back({key, p});
          }
        }
      }
    }
    sort_unique(next);
    const std::uint64_t room = segment_budget - all.size();
    if (next.size() > room) {
      next.resize(room);
      cut = true;
    }
    for (const KeyedSegment& k : next) {
      seen.insert(k.key);
      all.push_back(k.seg);
    }
    level = std::move(next);
  }
  if (partial) *partial = cut;
  return all;
}

void rasterize_segment(const Viewport& view, PlaneSegment s, std::vector<std::uint8_t>& wall) {
  const int w = view.pixels_w;
  const int h = view.pixels_h;
  PlanePoint p = view.to_pixel(s.a);
  PlanePoint q = view.to_pixel(s.b);

  // Liang-Barsky clip to [0, w] x [0, h].
  double t0 = 0.0;
  double t1 = 1.0;
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const std::array<double, 4> pk{-dx, dx, -dy, dy};
  const std::array<double, 4> qk{p.x, w - p.x, p.y, h - p.y};
  for (int i = 0; i < 4; ++i) {
    if (pk[i] == 0.0) {
      if (qk[i] < 0.0) return;
      continue;
    }
    const double t = qk[i] / pk[i];
    if (pk[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (t0 > t1) return;
  const PlanePoint a{p.x + t0 * dx, p.y + t0 * dy};
  const PlanePoint b{p.x + t1 * dx, p.y + t1 * dy};

  // Grid traversal visiting every cell the segment passes through.
  auto cell = [](double v, int limit) { return std::clamp(static_cast<int>(std::floor(v)), 0, limit - 1); };
  int x = cell(a.x, w);
  int y = cell(a.y, h);
  const int x_end = cell(b.x, w);
  const int y_end = cell(b.y, h);
  const double sx = b.x - a.x;
  const double sy = b.y - a.y;
  const int step_x = sx > 0 ? 1 : -1;
  const int step_y = sy > 0 ? 1 : -1;
  const double inf = std::numeric_limits<double>::infinity();
  const double delta_x = sx != 0.0 ? std::abs(1.0 / sx) : inf;
  const double delta_y = sy != 0.0 ? std::abs(1.0 / sy) : inf;
  double t_max_x = sx != 0.0 ? ((step_x > 0 ? x + 1 - a.x : a.x - x) * delta_x) : inf;
  double t_max_y = sy != 0.0 ? ((step_y > 0 ? y + 1 - a.y : a.y - y) * delta_y) : inf;

  const int max_steps = std::abs(x_end - x) + std::abs(y_end - y) + 2;
  for (int i = 0; i <= max_steps; ++i) {
    wall[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + x] = 1;
    if (x == x_end && y == y_end) break;
    if (t_max_x < t_max_y) {
      if (x == x_end) break;
      x += step_x;
      t_max_x += delta_x;
    } else {
      if (y == y_end) break;
      y += step_y;
      t_max_y += delta_y;
    }
  }
}

int label_regions(const std::vector<std::uint8_t>& wall, int w, int h, std::vector<int>& labels) {
  labels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), -2);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (wall[i]) labels[i] = -1;
  }
  std::vector<std::size_t> stack;
  auto fill = [&](std::size_t start, int label) {
    labels[start] = label;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int x = static_cast<int>(i % static_cast<std::size_t>(w));
      const int y = static_cast<int>(i / static_cast<std::size_t>(w));
      const std::array<std::array<int, 2>, 4> nb{{{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}}};
      for (const auto& [nx, ny] : nb) {
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        const std::size_t j = static_cast<std::size_t>(ny) * static_cast<std::size_t>(w) + nx;
        if (labels[j] != -2) continue;
        labels[j] = label;
        stack.push_back(j);
      }
    }
  };
  // Everything reachable from outside the image is background.
  for (int x = 0; x < w; ++x) {
    for (int y : {0, h - 1}) {
      const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + x;
      if (labels[i] == -2) fill(i, 0);
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x : {0, w - 1}) {
      const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + x;
      if (labels[i] == -2) fill(i, 0);
    }
  }
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == -2) fill(i, ++next);
  }
  return next;
}

BoundaryRender render_boundary(const DiskSystem& sys, int segment_count, std::uint64_t segment_budget,
                               const Viewport& view, BoundaryColoring coloring, const RenderOptions& options) {
  view.validate();
  BoundaryRender out;
  const std::vector<PlaneSegment> segs =
      boundary_segments(sys, segment_count, segment_budget, &out.partial, options.quantum);
  out.segments = segs.size();

  const int w = view.pixels_w;
  const int h = view.pixels_h;
  std::vector<std::uint8_t> wall(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  for (const PlaneSegment& s : segs) rasterize_segment(view, s, wall);

  std::vector<int> labels;
  out.interior_regions = label_regions(wall, w, h, labels);
  out.region_areas.assign(static_cast<std::size_t>(out.interior_regions), 0);
  std::vector<std::size_t> first_pixel(static_cast<std::size_t>(out.interior_regions), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] <= 0) continue;
    const auto r = static_cast<std::size_t>(labels[i] - 1);
    ++out.region_areas[r];
    first_pixel[r] = std::min(first_pixel[r], i);
  }

  std::vector<Rgb> region_color(static_cast<std::size_t>(out.interior_regions), kWhite);
  if (coloring == BoundaryColoring::RegionSize) {
    std::vector<std::size_t> by_size(region_color.size());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t a, std::size_t b) { return out.region_areas[a] > out.region_areas[b]; });
    for (std::size_t rank = 0; rank < by_size.size(); ++rank)
      region_color[by_size[rank]] = kRegionPalette[rank % kRegionPaletteSize];
  } else {
    // Orbit size of one sample point per region; regions with equal sizes share a colour.
    OrbitParams params;
    params.budget = 1u << 14;
    params.quantum = options.quantum;
    params.threads = 1;
    std::vector<std::optional<std::uint64_t>> sizes(region_color.size());
    parallel_chunks(sizes.size(), resolve_threads(options.threads), [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t r = b; r < e; ++r) {
        const std::size_t i = first_pixel[r];
        const PlanePoint p = view.pixel_center(static_cast<int>(i % static_cast<std::size_t>(w)),
                                               static_cast<int>(i / static_cast<std::size_t>(w)));
        const OrbitResult res = orbit_bfs(sys, p, params);
        if (res.status == OrbitStatus::Closed) sizes[r] = res.size;
      }
    });
    std::vector<std::uint64_t> distinct;
    for (const auto& s : sizes) {
      if (s) distinct.push_back(*s);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t r = 0; r < sizes.size(); ++r) {
      if (!sizes[r]) {
        region_color[r] = kUnboundedOrbit;
        continue;
      }
      const auto rank = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), *sizes[r]) -
                                                 distinct.begin());
      region_color[r] = kRegionPalette[rank % kRegionPaletteSize];
    }
  }

  out.image = RasterImage(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int l = labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + x];
      out.image.set_pixel(x, y, l < 0 ? kBlack : (l == 0 ? kWhite : region_color[static_cast<std::size_t>(l - 1)]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RasterImage render_single_generator(const DiskSystem& sys, const Word& word, std::uint64_t iterations,
                                    const std::vector<PlanePoint>& seeds, const Viewport& view,
                                    SingleGenColoring coloring, const RenderOptions& options) {
  view.validate();
  if (iterations < 1) throw UsageError("iterations must be at least 1");
  for (const WordFactor& f : word.factors()) sys.disk(f.disk);  // validates indices
  RasterImage img(view.pixels_w, view.pixels_h);
  const unsigned threads = resolve_threads(options.threads);

  if (coloring == SingleGenColoring::Density) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, seeds.size()));
    std::vector<std::vector<std::uint32_t>> planes(chunks);
    parallel_chunks(seeds.size(), static_cast<unsigned>(chunks), [&](std::size_t c, std::size_t b, std::size_t e) {
      auto& plane = planes[c];
      plane.assign(img.counts().size(), 0);
      for (std::size_t s = b; s < e; ++s) {
        PlanePoint p = seeds[s];
        for (std::uint64_t it = 0; it < iterations; ++it) {
          if (auto px = view.pixel_of(p)) {
            std::uint32_t& cnt =
                plane[static_cast<std::size_t>((*px)[1]) * static_cast<std::size_t>(view.pixels_w) + (*px)[0]];
            if (cnt != std::numeric_limits<std::uint32_t>::max()) ++cnt;
          }
          p = apply_word(sys, word, p);
        }
      }
    });
    for (const auto& plane : planes) {
      if (!plane.empty()) img.merge_counts(plane);
    }
    finalize_density(img);
    return img;
  }

  // Orbit order: iterations until the point comes back within one quantum of its seed.
  std::vector<std::uint64_t> order(seeds.size(), 0);
  parallel_chunks(seeds.size(), threads, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) {
      PlanePoint p = seeds[s];
      for (std::uint64_t it = 1; it <= iterations; ++it) {
        p = apply_word(sys, word, p);
        if (std::abs(p.x - seeds[s].x) <= options.quantum && std::abs(p.y - seeds[s].y) <= options.quantum) {
          order[s] = it;
          break;
        }
      }
    }
  });
  std::vector<std::uint64_t> distinct;
  for (std::uint64_t o : order) {
    if (o > 0) distinct.push_back(o);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const auto px = view.pixel_of(seeds[s]);
    if (!px) continue;
    Rgb c = kBlack;
    if (order[s] > 0) {
      const auto rank =
          static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), order[s]) - distinct.begin());
      c = kRegionPalette[rank % kRegionPaletteSize];
    }
    img.set_pixel((*px)[0], (*px)[1], c);
  }
  return img;
}

std::vector<PlanePoint> pixel_seeds(const Viewport& view, int stride) {
  view.validate();
  if (stride < 1) throw UsageError("stride must be at least 1");
  std::vector<PlanePoint> out;
  for (int j = 0; j < view.pixels_h; j += stride)
    for (int i = 0; i < view.pixels_w; i += stride) out.push_back(view.pixel_center(i, j));
  return out;
}

// ---------------------------------------------------------------------------

std::string ppm_bytes(const RasterImage& img) {
  std::string out = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.bytes().data()), img.bytes().size());
  return out;
}

void write_ppm(const RasterImage& img, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::string bytes = ppm_bytes(img);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

RasterImage read_ppm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::string magic;
  int w = 0;
  int h = 0;
  int maxval = 0;
  f >> magic >> w >> h >> maxval;
  if (magic != "P6" || maxval != 255 || w < 1 || h < 1) throw std::runtime_error("not an 8-bit P6 file: " + path.string());
  f.get();  // single whitespace before the raster
  RasterImage img(w, h);
  std::vector<char> raw(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3);
  f.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (f.gcount() != static_cast<std::streamsize>(raw.size())) throw std::runtime_error("truncated PPM: " + path.string());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + x) * 3;
      img.set_pixel(x, y,
                    {static_cast<std::uint8_t>(raw[i]), static_cast<std::uint8_t>(raw[i + 1]),
                     static_cast<std::uint8_t>(raw[i + 2])});
    }
  }
  return img;
}

}  // namespace diskgroups
