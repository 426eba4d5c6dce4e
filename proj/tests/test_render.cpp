#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <set>

#include "diskgroups/errors.hpp"
#include "diskgroups/render.hpp"
#include "oracles/oracles.hpp"

using namespace diskgroups;

namespace {

double luminance(Rgb c) { return 0.299 * c[0] + 0.587 * c[1] + 0.114 * c[2]; }

std::string file_bytes(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

bool four_connected(const std::vector<std::uint8_t>& wall, int w) {
  // Every marked pixel after the first touches an earlier one through an edge.
  std::vector<int> cells;
  for (std::size_t i = 0; i < wall.size(); ++i)
    if (wall[i]) cells.push_back(static_cast<int>(i));
  std::set<int> reached{cells.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int c : cells) {
      if (reached.count(c)) continue;
      for (int d : {-1, 1, -w, w}) {
        if (reached.count(c + d) && (d == -w || d == w || (c / w == (c + d) / w))) {
          reached.insert(c);
          grew = true;
          break;
        }
      }
    }
  }
  return reached.size() == cells.size();
}

}  // namespace

TEST_CASE("viewport mapping") {
  Viewport v;
  v.center = {0.0, 0.0};
  v.width = 4.0;
  v.pixels_w = 4;
  v.pixels_h = 2;
  CHECK(v.height() == 2.0);
  CHECK(v.to_pixel({-2.0, 1.0}) == PlanePoint{0.0, 0.0});
  CHECK(v.to_pixel({2.0, -1.0}) == PlanePoint{4.0, 2.0});
  CHECK(v.pixel_of({-1.5, 0.5}) == std::array<int, 2>{0, 0});
  CHECK(v.pixel_of({2.0, -1.0}) == std::array<int, 2>{3, 1});  // right/bottom edge -> last pixel
  CHECK_FALSE(v.pixel_of({2.5, 0.0}).has_value());
  CHECK(v.pixel_center(0, 0) == PlanePoint{-1.5, 0.5});
  v.width = 0.0;
  CHECK_THROWS_AS(v.validate(), UsageError);

  const Viewport d = default_viewport(DiskSystem::two_disk(5, 7, 1.5, 2.5));
  CHECK(d.center == PlanePoint{0.0, 0.0});
  CHECK(d.width == 7.0);
}

TEST_CASE("orbit render") {
  const DiskSystem sys = DiskSystem::symmetric(5, 0.9);
  const Viewport v = default_viewport(sys);
  const RasterImage img = render_orbit(sys, {{-0.5, 0.0}}, 1000, v, OrbitColoring::Binary);
  CHECK(img.lit_pixels() == 5);
  CHECK(render_orbit(sys, {}, 1000, v, OrbitColoring::Binary).lit_pixels() == 0);
  Viewport zero = v;
  zero.pixels_w = 0;
  CHECK_THROWS_AS(render_orbit(sys, {{-0.5, 0.0}}, 1000, zero, OrbitColoring::Binary), UsageError);
}

TEST_CASE("density palette") {
  for (std::size_t i = 1; i < kDensityPaletteSize; ++i)
    CHECK(luminance(kDensityPalette[i]) < luminance(kDensityPalette[i - 1]));
  CHECK(density_color(0) == kWhite);
  CHECK(density_color(1) == kDensityPalette[0]);
  CHECK(density_color(3) == kDensityPalette[1]);
  CHECK(density_color(4) == kDensityPalette[2]);
  CHECK(density_color(0xFFFFFFFFu) == kDensityPalette[kDensityPaletteSize - 1]);
  double last = 256.0;
  for (std::uint32_t c = 1; c < 1u << 20; c = c * 3 / 2 + 1) {
    CHECK(luminance(density_color(c)) <= last);
    last = luminance(density_color(c));
  }
  for (Rgb c : kRegionPalette) CHECK(c != kWhite);
}

TEST_CASE("boundary arrangements") {
  const auto count = [](double r, int segments, int px) {
    const DiskSystem sys = DiskSystem::symmetric(5, r);
    return render_boundary(sys, segments, 1'000'000, default_viewport(sys, px, px), BoundaryColoring::RegionSize);
  };
  const BoundaryRender apart = count(0.5, 720, 512);
  CHECK(apart.interior_regions + 1 == 3);
  CHECK_FALSE(apart.partial);

  const oracle::ArrangementCount euler = oracle::count_faces(oracle::lens_image_arcs(5, 1.05));
  CHECK(euler.vertices == 18);
  CHECK(euler.edges == 28);
  CHECK(euler.bounded_faces == 11);
  const BoundaryRender lens = count(1.05, 720, 512);
  CHECK(lens.interior_regions == euler.bounded_faces);
  CHECK(count(1.2, 720, 512).interior_regions == oracle::count_faces(oracle::lens_image_arcs(5, 1.2)).bounded_faces);
  CHECK(oracle::count_faces({{{-1, 0}, 0.5, 0.0, 2 * std::numbers::pi}, {{1, 0}, 0.5, 0.0, 2 * std::numbers::pi}})
            .bounded_faces == 2);

  // Region counts stop changing once the chords are fine enough.
  for (double r : {0.5, 1.05}) {
    const int base = count(r, 360, 512).interior_regions;
    CHECK(count(r, 720, 512).interior_regions == base);
    CHECK(count(r, 1440, 512).interior_regions == base);
  }

  std::uint64_t area = 0;
  for (auto a : lens.region_areas) area += a;
  CHECK(area > 0);
  CHECK(lens.region_areas.size() == 11);

  CHECK_THROWS_AS(boundary_segments(DiskSystem::symmetric(5, 1.05), 4, 100), UsageError);
}

TEST_CASE("segment budget marks partial renders") {
  const DiskSystem sys = DiskSystem::symmetric(5, 1.5);
  bool partial = false;
  const auto segs = boundary_segments(sys, 360, 1000, &partial);
  CHECK(partial);
  CHECK(segs.size() == 1000);
  const BoundaryRender r = render_boundary(sys, 360, 1000, default_viewport(sys, 128, 128), BoundaryColoring::OrbitOrder);
  CHECK(r.partial);
  // Every piece lies entirely inside or outside each disk.
  bool unsplit = false;
  for (const PlaneSegment& s : boundary_segments(sys, 360, 100'000)) {
    for (std::size_t i = 0; i < 2; ++i) {
      const double da = distance(s.a, sys.disk(i).center) - 1.5;
      const double db = distance(s.b, sys.disk(i).center) - 1.5;
      if ((da < -1e-9 && db > 1e-9) || (da > 1e-9 && db < -1e-9))
        unsplit = true;
    }
  }
  CHECK_FALSE(unsplit);
}

TEST_CASE("rasterization and labelling") {
  Viewport v;
  v.center = {0.0, 0.0};
  v.width = 10.0;
  v.pixels_w = 10;
  v.pixels_h = 10;
  std::vector<std::uint8_t> wall(100, 0);
  rasterize_segment(v, {{-4.5, 0.5}, {3.5, 0.5}}, wall);
  int marked = 0;
  for (auto w : wall) marked += w;
  CHECK(marked == 9);
  CHECK(wall[4 * 10 + 0] == 1);
  CHECK(wall[4 * 10 + 8] == 1);

  std::fill(wall.begin(), wall.end(), 0);
  rasterize_segment(v, {{-4.3, -4.1}, {3.7, 4.6}}, wall);
  CHECK(four_connected(wall, 10));

  std::fill(wall.begin(), wall.end(), 0);
  rasterize_segment(v, {{20.0, 20.0}, {30.0, 25.0}}, wall);
  CHECK(std::count(wall.begin(), wall.end(), 1) == 0);
  rasterize_segment(v, {{-20.0, 0.2}, {20.0, 0.2}}, wall);  // clipped to the image
  CHECK(std::count(wall.begin(), wall.end(), 1) == 10);

  // A diamond drawn with diagonal segments still encloses its inside.
  std::fill(wall.begin(), wall.end(), 0);
  const std::array<PlanePoint, 4> diamond{{{0.1, 3.9}, {3.9, 0.1}, {0.1, -3.7}, {-3.7, 0.1}}};
  for (int i = 0; i < 4; ++i) rasterize_segment(v, {diamond[i], diamond[(i + 1) % 4]}, wall);
  std::vector<int> labels;
  CHECK(label_regions(wall, 10, 10, labels) == 1);

  // Open shape: no bounded region.
  std::fill(wall.begin(), wall.end(), 0);
  rasterize_segment(v, {{-4.0, -4.0}, {4.0, 4.0}}, wall);
  CHECK(label_regions(wall, 10, 10, labels) == 0);
  // Region touching the border belongs to the background.
  std::vector<std::uint8_t> box(25, 0);
  for (int i = 0; i < 5; ++i) box[2 * 5 + i] = 1;
  CHECK(label_regions(box, 5, 5, labels) == 0);
  CHECK(labels[0] == 0);
  CHECK(labels[2 * 5] == -1);
}

TEST_CASE("single-generator images") {
  const DiskSystem sys = DiskSystem::symmetric(5, 2.0);
  const Viewport v = default_viewport(sys, 64, 64);
  const PlanePoint seed{0.3, 0.4};
  const RasterImage still = render_single_generator(sys, Word{}, 1000, {seed}, v, SingleGenColoring::Density);
  const auto px = v.pixel_of(seed);
  REQUIRE(px.has_value());
  CHECK(still.count((*px)[0], (*px)[1]) == 1000);
  CHECK(still.lit_pixels() == 1);

  // Threads split the seeds; merged counts are identical.
  const auto seeds = pixel_seeds(v, 4);
  CHECK(seeds.size() == 256);
  const Word w = Word::parse("a^2 b^-1");
  RenderOptions one;
  one.threads = 1;
  RenderOptions four;
  four.threads = 4;
  const RasterImage d1 = render_single_generator(sys, w, 200, seeds, v, SingleGenColoring::Density, one);
  const RasterImage d4 = render_single_generator(sys, w, 200, seeds, v, SingleGenColoring::Density, four);
  CHECK(d1 == d4);
  CHECK(ppm_bytes(d1) == ppm_bytes(d4));

  // Orbit order: a single rotation returns after n steps inside the disk and
  // after one step outside every disk.
  const RasterImage order = render_single_generator(sys, Word::parse("a"), 100, {{-1.5, 0.2}, {2.8, 2.8}}, v,
                                                    SingleGenColoring::OrbitOrder);
  const auto inside = v.pixel_of({-1.5, 0.2});
  CHECK(order.pixel((*inside)[0], (*inside)[1]) == kRegionPalette[1]);  // rank of 5 among {1, 5}
  const auto outside = v.pixel_of({2.8, 2.8});
  CHECK(order.pixel((*outside)[0], (*outside)[1]) == kRegionPalette[0]);
  // Translations never return: black.
  const DiskSystem big = DiskSystem::symmetric(5, 4.0);
  const RasterImage never = render_single_generator(big, Word::parse("a^-1 b"), 2, {{0.0, 0.0}},
                                                    default_viewport(big, 32, 32), SingleGenColoring::OrbitOrder);
  CHECK(never.lit_pixels() == 1);
  CHECK_THROWS_AS(render_single_generator(sys, w, 0, {seed}, v, SingleGenColoring::Density), UsageError);
}

TEST_CASE("render determinism across threads") {
  const DiskSystem sys = DiskSystem::symmetric(5, 2.1);
  const Viewport v = default_viewport(sys, 200, 200);
  RenderOptions one;
  one.threads = 1;
  RenderOptions three;
  three.threads = 3;
  const PlanePoint seed = *upper_intersection_point(sys);
  CHECK(render_orbit(sys, {seed}, 300'000, v, OrbitColoring::Density, one) ==
        render_orbit(sys, {seed}, 300'000, v, OrbitColoring::Density, three));
  CHECK(render_boundary(sys, 360, 50'000, v, BoundaryColoring::OrbitOrder, one).image ==
        render_boundary(sys, 360, 50'000, v, BoundaryColoring::OrbitOrder, three).image);
}

TEST_CASE("PPM output") {
  RasterImage white(1, 1);
  CHECK(ppm_bytes(white) == std::string("P6\n1 1\n255\n\xff\xff\xff", 14));
  RasterImage small(3, 2);
  small.set_pixel(2, 1, {1, 2, 3});
  const std::string bytes = ppm_bytes(small);
  CHECK(bytes.substr(0, 11) == "P6\n3 2\n255\n");
  CHECK(bytes.size() == 11 + 18);
  CHECK(bytes.substr(bytes.size() - 3) == std::string("\x01\x02\x03", 3));

  const auto path = std::filesystem::temp_directory_path() / "diskgroups_roundtrip.ppm";
  write_ppm(small, path);
  CHECK(file_bytes(path) == bytes);
  const RasterImage back = read_ppm(path);
  CHECK(back.bytes() == small.bytes());
  std::filesystem::remove(path);
  CHECK_THROWS(write_ppm(small, "/nonexistent-dir/x.ppm"));
}
