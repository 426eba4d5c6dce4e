#include "diskgroups/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numbers>

#include "diskgroups/errors.hpp"

namespace diskgroups {

UnitRoot unit_root(long k, long n) {
  if (n <= 0) throw UsageError("unit_root: n must be positive");
  k %= n;
  if (k < 0) k += n;
  // Split the angle into whole quarter turns plus a remainder so that
  // quarter-turn multiples come out exact.
  const long quarter_units = 4 * k;
  const long quadrant = quarter_units / n;
  const long rem = quarter_units - quadrant * n;
  const double alpha = (std::numbers::pi / 2.0) * static_cast<double>(rem) / static_cast<double>(n);
  double c = rem == 0 ? 1.0 : std::cos(alpha);
  double s = rem == 0 ? 0.0 : std::sin(alpha);
  for (long q = 0; q < quadrant; ++q) {
    const double t = c;
    c = -s;
    s = t;
  }
  return {c, s};
}

DiskSystem::DiskSystem(std::vector<DiskSpec> disks) : disks_(std::move(disks)) {
  if (disks_.size() < 2) throw UsageError("a disk system needs at least two disks");
  roots_.reserve(disks_.size());
  for (const DiskSpec& d : disks_) {
    if (!(d.radius > 0.0) || !std::isfinite(d.radius)) throw UsageError("disk radius must be positive and finite");
    if (d.order < 2) throw UsageError("disk rotation order must be at least 2");
    if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y)) throw UsageError("disk center must be finite");
    std::vector<UnitRoot> table(static_cast<std::size_t>(d.order));
    for (int k = 0; k < d.order; ++k) {
      const UnitRoot ccw = unit_root(k, d.order);
      table[static_cast<std::size_t>(k)] = {ccw.c, -ccw.s};
    }
    roots_.push_back(std::move(table));
  }
}

DiskSystem DiskSystem::two_disk(int n1, int n2, double r1, double r2) {
  return DiskSystem({DiskSpec{{-1.0, 0.0}, r1, n1}, DiskSpec{{1.0, 0.0}, r2, n2}});
}

const DiskSpec& DiskSystem::disk(std::size_t i) const {
  if (i >= disks_.size()) throw UsageError("disk index " + std::to_string(i) + " out of range");
  return disks_[i];
}

double DiskSystem::max_radius() const noexcept {
  double r = 0.0;
  for (const DiskSpec& d : disks_) r = std::max(r, d.radius);
  return r;
}

bool disk_contains(const DiskSystem& sys, std::size_t disk_index, PlanePoint p) {
  return sys.disk(disk_index).contains(p);
}

PlanePoint apply_generator(const DiskSystem& sys, std::size_t disk_index, long exponent, PlanePoint p) {
  const DiskSpec& d = sys.disk(disk_index);
  if (!d.contains(p)) return p;
  long k = exponent % d.order;
  if (k < 0) k += d.order;
  if (k == 0) return p;
  return d.center + sys.clockwise_root(disk_index, static_cast<std::size_t>(k)).rotate(p - d.center);
}

PlanePoint apply_word(const DiskSystem& sys, const Word& w, PlanePoint p) {
  for (const WordFactor& f : w.factors()) p = apply_generator(sys, f.disk, f.exponent, p);
  return p;
}

Vec2 word_translation_vector(int n) {
  if (n < 2) throw UsageError("word_translation_vector: n must be at least 2");
  const UnitRoot cw = unit_root(-1, n);
  return {2.0 * (1.0 - cw.c), -2.0 * cw.s};
}

std::vector<PlanePoint> intersection_points(const DiskSystem& sys) {
  const DiskSpec& d1 = sys.disk(0);
  const DiskSpec& d2 = sys.disk(1);
  const PlanePoint delta = d2.center - d1.center;
  const double dist = norm(delta);
  if (dist == 0.0) return {};
  if (dist > d1.radius + d2.radius || dist < std::abs(d1.radius - d2.radius)) return {};
  const double along = (d1.radius * d1.radius - d2.radius * d2.radius + dist * dist) / (2.0 * dist);
  const double h2 = d1.radius * d1.radius - along * along;
  const PlanePoint ex{delta.x / dist, delta.y / dist};
  const PlanePoint base = d1.center + along * ex;
  if (h2 <= 0.0) return {base};
  const double h = std::sqrt(h2);
  const PlanePoint ey{-ex.y, ex.x};
  PlanePoint p = base + h * ey;
  PlanePoint q = base - h * ey;
  if (p.y < q.y) std::swap(p, q);
  return {p, q};
}

std::optional<PlanePoint> upper_intersection_point(const DiskSystem& sys) {
  auto pts = intersection_points(sys);
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

std::vector<PlanePoint> neighbors(const DiskSystem& sys, PlanePoint p) {
  std::vector<PlanePoint> out;
  for_each_neighbor(sys, p, [&](PlanePoint q) { out.push_back(q); });
  return out;
}

// ---------------------------------------------------------------------------
// Word

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    const char c = text[i];
    if (c < 'a' || c > 'z') throw UsageError("word: expected generator letter at '" + std::string(text.substr(i)) + "'");
    const auto disk = static_cast<std::size_t>(c - 'a');
    ++i;
    const bool caret = i < text.size() && text[i] == '^';
    if (caret) ++i;
    long exponent = 1;
    const bool signed_digits =
        i < text.size() && (text[i] == '-' || text[i] == '+' || std::isdigit(static_cast<unsigned char>(text[i])));
    if (caret && !signed_digits) throw UsageError("word: missing exponent after '^'");
    if (signed_digits) {
      std::size_t start = i;
      if (text[i] == '+') start = ++i;
      else ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const std::string_view digits = text.substr(start, i - start);
      if (digits == "-" || digits.empty()) throw UsageError("word: missing exponent digits");
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw UsageError("word: bad exponent");
    }
    w.append(disk, exponent);
    skip_space();
  }
  return w;
}

Word& Word::append(std::size_t disk, long exponent) {
  factors_.push_back({disk, exponent});
  return *this;
}

Word& Word::append(const Word& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<WordFactor> out;
  out.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out.push_back({it->disk, -it->exponent});
  return Word(std::move(out));
}

Word Word::power(unsigned count) const {
  Word out;
  for (unsigned i = 0; i < count; ++i) out.append(*this);
  return out;
}

Word Word::normalized(const DiskSystem& sys) const {
  auto reduce = [&](std::size_t disk, long e) {
    const long n = sys.disk(disk).order;
    long k = e % n;
    if (k < 0) k += n;
    if (2 * k > n) k -= n;  // representative in (-n/2, n/2]
    return k;
  };
  std::vector<WordFactor> out;
  for (const WordFactor& f : factors_) {
    long e = reduce(f.disk, f.exponent);
    if (!out.empty() && out.back().disk == f.disk) {
      e = reduce(f.disk, out.back().exponent + e);
      out.pop_back();
    }
    if (e != 0) out.push_back({f.disk, e});
  }
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (factors_.empty()) return "e";
  std::string s;
  for (const WordFactor& f : factors_) {
    s += static_cast<char>('a' + static_cast<char>(f.disk));
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

}  // namespace diskgroups
