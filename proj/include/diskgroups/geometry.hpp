#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diskgroups {

/// Membership slack for closed disks: |p - c| <= r + kBoundaryTolerance.
inline constexpr double kBoundaryTolerance = 1e-12;

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend constexpr PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr PlanePoint operator*(double s, PlanePoint a) { return {s * a.x, s * a.y}; }
  friend constexpr PlanePoint operator-(PlanePoint a) { return {-a.x, -a.y}; }
};

using Vec2 = PlanePoint;

inline double norm(PlanePoint p) { return std::hypot(p.x, p.y); }
inline double distance(PlanePoint a, PlanePoint b) { return norm(a - b); }

/// Unit complex number cos + i sin, stored as a 2x2 rotation.
struct UnitRoot {
  double c = 1.0;
  double s = 0.0;

  constexpr PlanePoint rotate(PlanePoint v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
};

/// exp(2 pi i k / n) with exact values at multiples of a quarter turn.
UnitRoot unit_root(long k, long n);

struct DiskSpec {
  PlanePoint center;
  double radius = 1.0;
  int order = 2;  // one generator step rotates by -2 pi / order

  /// Closed-disk test shared by every membership check in the library.
  bool contains(PlanePoint p) const {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    const double reach = radius + kBoundaryTolerance;
    return dx * dx + dy * dy <= reach * reach;
  }
};

/// Disk centers, radii and rotation orders of a compound symmetry group.
///
/// Rotation tables are built once in the constructor; every lookup after
/// that is read-only, so a DiskSystem can be shared freely across threads.
class DiskSystem {
 public:
  explicit DiskSystem(std::vector<DiskSpec> disks);

  /// Canonical two-disk layout with centers (-1, 0) and (1, 0).
  static DiskSystem two_disk(int n1, int n2, double r1, double r2);
  static DiskSystem symmetric(int n, double r) { return two_disk(n, n, r, r); }

  std::size_t size() const noexcept { return disks_.size(); }
  const DiskSpec& disk(std::size_t i) const;
  std::span<const DiskSpec> disks() const noexcept { return disks_; }
  double max_radius() const noexcept;

  /// Clockwise rotation by 2 pi k / order of disk i, for k already reduced to [0, order).
  const UnitRoot& clockwise_root(std::size_t i, std::size_t k) const { return roots_[i][k]; }

 private:
  std::vector<DiskSpec> disks_;
  std::vector<std::vector<UnitRoot>> roots_;
};

struct WordFactor {
  std::size_t disk = 0;
  long exponent = 0;

  friend bool operator==(const WordFactor&, const WordFactor&) = default;
};

/// Sequence of generator powers applied left to right: ab(x) = b(a(x)).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<WordFactor> factors) : factors_(factors) {}
  explicit Word(std::vector<WordFactor> factors) : factors_(std::move(factors)) {}

  /// Parses "a^-2 b^-1 a b2": letters name disks (a = 0), exponents optional.
  static Word parse(std::string_view text);

  std::span<const WordFactor> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t length() const noexcept { return factors_.size(); }

  Word& append(std::size_t disk, long exponent);
  Word& append(const Word& other);

  Word inverse() const;
  Word power(unsigned count) const;

  /// Adjacent same-disk factors merged, exponents reduced into (-order/2, order/2],
  /// identity factors dropped. Never reorders across disks.
  Word normalized(const DiskSystem& sys) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<WordFactor> factors_;
};

bool disk_contains(const DiskSystem& sys, std::size_t disk_index, PlanePoint p);

PlanePoint apply_generator(const DiskSystem& sys, std::size_t disk_index, long exponent, PlanePoint p);

PlanePoint apply_word(const DiskSystem& sys, const Word& w, PlanePoint p);

/// 2(1 - e^{-2 pi i/n}): the translation realised by a^-1 b on points in both disks.
Vec2 word_translation_vector(int n);

/// Boundary-circle intersections of disks 0 and 1, upper point first.
std::vector<PlanePoint> intersection_points(const DiskSystem& sys);

std::optional<PlanePoint> upper_intersection_point(const DiskSystem& sys);

/// Images of p under every generator and its inverse, omitting images equal to p.
std::vector<PlanePoint> neighbors(const DiskSystem& sys, PlanePoint p);

/// Allocation-free variant of neighbors() for the orbit engine hot loop.
template <typename Visit>
void for_each_neighbor(const DiskSystem& sys, PlanePoint p, Visit&& visit) {
  const auto disks = sys.disks();
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const DiskSpec& d = disks[i];
    if (!d.contains(p)) continue;
    const PlanePoint rel = p - d.center;
    const auto n = static_cast<std::size_t>(d.order);
    const PlanePoint forward = d.center + sys.clockwise_root(i, 1).rotate(rel);
    if (forward != p) visit(forward);
    if (n > 2) {
      const PlanePoint backward = d.center + sys.clockwise_root(i, n - 1).rotate(rel);
      if (backward != p) visit(backward);
    }
  }
}

}  // namespace diskgroups
