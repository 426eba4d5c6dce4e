#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "diskgroups/geometry.hpp"
#include "diskgroups/orbit.hpp"

namespace diskgroups {

/// Affine, y-up, aspect-preserving map from the plane to a W x H pixel grid.
struct Viewport {
  PlanePoint center;
  double width = 4.0;  // plane units across the image
  int pixels_w = 512;
  int pixels_h = 512;

  double height() const { return width * pixels_h / pixels_w; }
  /// Continuous pixel coordinates: (0, 0) is the top-left corner of the image.
  PlanePoint to_pixel(PlanePoint p) const;
  /// Plane point at the centre of pixel (i, j).
  PlanePoint pixel_center(int i, int j) const;
  /// Pixel containing p, if inside the image. Points on the right/bottom edge
  /// belong to the last column/row.
  std::optional<std::array<int, 2>> pixel_of(PlanePoint p) const;
  void validate() const;
};

/// Centre (0, 0), width 2 (max radius + 1).
Viewport default_viewport(const DiskSystem& sys, int pixels_w = 512, int pixels_h = 512);

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(int w, int h);

  int width() const noexcept { return w_; }
  int height() const noexcept { return h_; }
  Rgb pixel(int x, int y) const;
  void set_pixel(int x, int y, Rgb c);
  const std::vector<std::uint8_t>& bytes() const noexcept { return rgb_; }

  // Accumulation plane used by density renders before finalization.
  std::uint32_t count(int x, int y) const { return counts_[index(x, y)]; }
  void add_count(int x, int y, std::uint32_t k = 1);
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  void merge_counts(const std::vector<std::uint32_t>& other);

  std::uint64_t lit_pixels() const;  // pixels that are not white

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * static_cast<std::size_t>(w_) + x; }

  int w_ = 0;
  int h_ = 0;
  std::vector<std::uint8_t> rgb_;
  std::vector<std::uint32_t> counts_;
};

// Palettes are part of the output contract: same inputs, same bytes.
inline constexpr std::size_t kDensityPaletteSize = 16;
/// Index = floor(log2(count)), clamped; luminance strictly decreases with the index.
extern const std::array<Rgb, kDensityPaletteSize> kDensityPalette;
inline constexpr std::size_t kRegionPaletteSize = 12;
extern const std::array<Rgb, kRegionPaletteSize> kRegionPalette;

Rgb density_color(std::uint32_t count);

enum class OrbitColoring { Binary, Density };
enum class BoundaryColoring { OrbitOrder, RegionSize };
enum class SingleGenColoring { Density, OrbitOrder };

struct RenderOptions {
  double quantum = kDefaultQuantum;
  unsigned threads = 0;
};

/// Streams the orbit of every seed into the accumulation plane.
RasterImage render_orbit(const DiskSystem& sys, const std::vector<PlanePoint>& seeds, std::uint64_t budget,
                         const Viewport& view, OrbitColoring coloring, const RenderOptions& options = {});

struct PlaneSegment {
  PlanePoint a;
  PlanePoint b;
};

struct BoundaryRender {
  RasterImage image;
  int interior_regions = 0;  // bounded regions of the rasterized arrangement
  std::uint64_t segments = 0;
  bool partial = false;  // the segment budget ran out before the images closed
  std::vector<std::uint64_t> region_areas;  // pixels per interior region, label order
};

/// Boundary circles as `segment_count` chords each, split at every disk
/// boundary they cross. A piece moves under a generator iff its midpoint lies
/// in that disk. Distinct pieces are collected breadth-first up to
/// `segment_budget`, rasterized with all touched pixels, and the bounded
/// 4-connected regions are filled.
BoundaryRender render_boundary(const DiskSystem& sys, int segment_count, std::uint64_t segment_budget,
                               const Viewport& view, BoundaryColoring coloring, const RenderOptions& options = {});

/// The pieces render_boundary rasterizes, exposed for tests.
std::vector<PlaneSegment> boundary_segments(const DiskSystem& sys, int segment_count, std::uint64_t segment_budget,
                                            bool* partial = nullptr, double quantum = kDefaultQuantum);

/// Labels 4-connected regions of non-wall pixels; pixels outside the image
/// count as one free region (the background). Returns the number of bounded
/// regions; `labels` gets -1 for walls, 0 for background, 1.. for bounded regions.
int label_regions(const std::vector<std::uint8_t>& wall, int w, int h, std::vector<int>& labels);

/// Marks every pixel the segment passes through.
void rasterize_segment(const Viewport& view, PlaneSegment s, std::vector<std::uint8_t>& wall);

/// Iterates `word` from every seed. Density counts visits; orbit-order colours
/// each seed's pixel by the rank of the number of iterations before the point
/// returns to its seed cell (black if it does not within `iterations`).
RasterImage render_single_generator(const DiskSystem& sys, const Word& word, std::uint64_t iterations,
                                    const std::vector<PlanePoint>& seeds, const Viewport& view,
                                    SingleGenColoring coloring, const RenderOptions& options = {});

/// Centres of every `stride`-th pixel, row by row.
std::vector<PlanePoint> pixel_seeds(const Viewport& view, int stride = 1);

/// Binary PPM: "P6\n{W} {H}\n255\n" then W*H RGB triples, top row first.
void write_ppm(const RasterImage& img, const std::filesystem::path& path);
RasterImage read_ppm(const std::filesystem::path& path);
std::string ppm_bytes(const RasterImage& img);

}  // namespace diskgroups
