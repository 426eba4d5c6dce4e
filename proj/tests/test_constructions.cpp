#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "diskgroups/constructions.hpp"
#include "diskgroups/errors.hpp"
#include "oracles/oracles.hpp"

using namespace diskgroups;
using exact::Cyclotomic5;
using exact::QuadraticReal;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

std::complex<double> c(const Cyclotomic5& x) { return x.to_complex(); }

bool check_named(const VerificationReport& r, const std::string& prefix) {
  bool found = false;
  for (const NamedCheck& ch : r.checks) {
    if (ch.name.rfind(prefix, 0) == 0) {
      found = true;
      if (!ch.pass) return false;
    }
  }
  return found;
}

}  // namespace

TEST_CASE("segment points agree with a double-precision oracle") {
  const Theorem2Data d = theorem2_data(theorem2_radius_squared());
  const oracle::SegmentPoints o = oracle::segment_points();
  CHECK(std::abs(c(d.E) - o.E) < 1e-14);
  CHECK(std::abs(c(d.F) - o.F) < 1e-14);
  CHECK(std::abs(c(d.G) - o.G) < 1e-14);
  CHECK(d.E_prime == -d.E);
  CHECK(d.w1 == Word::parse("a^-2 b^-1 a^-1 b^-1"));
  CHECK(d.w2 == Word::parse("a b a b^2"));
  CHECK(d.w3 == Word::parse("a b a b^-1 a^-1 b^-1"));
  // |E + 1| is the radius sqrt(3 + phi) ~ 2.148961.
  CHECK(std::abs(o.E + 1.0) == doctest::Approx(2.148961).epsilon(1e-6));

  // The words act as stated on the endpoints, checked with plain complex rotations.
  const double r = std::sqrt(3 + kPhi) + 1e-12;
  const std::vector<oracle::Disk> disks{{{-1, 0}, r, 5}, {{1, 0}, r, 5}};
  const std::vector<std::pair<int, int>> w1{{0, -2}, {1, -1}, {0, -1}, {1, -1}};
  const std::vector<std::pair<int, int>> w2{{0, 1}, {1, 1}, {0, 1}, {1, 2}};
  const std::vector<std::pair<int, int>> w3{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}};
  CHECK(std::abs(oracle::apply(disks, w1, -o.E) - o.G) < 1e-12);
  CHECK(std::abs(oracle::apply(disks, w1, -o.F) - o.F) < 1e-12);
  CHECK(std::abs(oracle::apply(disks, w2, -o.F) - o.F) < 1e-12);
  CHECK(std::abs(oracle::apply(disks, w2, -o.G) - o.E) < 1e-12);
  CHECK(std::abs(oracle::apply(disks, w3, -o.G) + o.E) < 1e-12);
  CHECK(std::abs(oracle::apply(disks, w3, o.E) - o.G) < 1e-12);
}

TEST_CASE("theorem2_check passes in exact arithmetic") {
  const VerificationReport r = theorem2_check();
  CHECK(r.pass());
  CHECK(r.checks.size() >= 15);
  CHECK(check_named(r, "radius"));
  CHECK(check_named(r, "collinear"));
  CHECK(check_named(r, "w1 on E'F' endpoints map onto GF"));
  CHECK(check_named(r, "w2 on F'G' endpoints map onto FE"));
  CHECK(check_named(r, "w3 on G'E endpoints map onto E'G"));
  CHECK(check_named(r, "w1 on E'F' stays in both disks"));
  CHECK(check_named(r, "w3 on G'E sampled points translate by G-E"));
  CHECK(check_named(r, "|E-E'|^2 = phi^2 |F-F'|^2"));
  CHECK(r.to_text().find("PASS") != std::string::npos);
}

TEST_CASE("a smaller radius breaks the lens membership") {
  const QuadraticReal shrunk = theorem2_radius_squared() - QuadraticReal(exact::Rational(1, 100));
  const VerificationReport r = theorem2_check(shrunk);
  CHECK_FALSE(r.pass());
  bool membership_failed = false;
  for (const NamedCheck& ch : r.checks) {
    if (ch.name.find("stays in both disks") != std::string::npos && !ch.pass) membership_failed = true;
  }
  CHECK(membership_failed);
}

TEST_CASE("exact disk membership") {
  const QuadraticReal r2 = theorem2_radius_squared();
  const Theorem2Data d = theorem2_data(r2);
  CHECK(in_disk_exact(0, d.E, r2));  // on the boundary: |E + 1|^2 = r^2
  CHECK(in_disk_exact(1, d.E, r2));
  CHECK_FALSE(in_disk_exact(0, Cyclotomic5(2), r2));
  // One generator step fixes the centre and rotates by -72 degrees.
  const Cyclotomic5 moved = apply_generator_exact(1, 1, Cyclotomic5(0), r2);
  const std::complex<double> expected = 1.0 + (-1.0) * std::polar(1.0, -2 * std::numbers::pi / 5);
  CHECK(std::abs(moved.to_complex() - expected) < 1e-14);
  CHECK(apply_generator_exact(0, 1, Cyclotomic5(-1), r2) == Cyclotomic5(-1));
}

TEST_CASE("interval exchange") {
  CHECK(interval_exchange_iterate(1) == 1);
  CHECK(interval_exchange_iterate(10'000) == 10'000);
  CHECK_THROWS_AS(interval_exchange_iterate(0), UsageError);

  const Theorem2Data d = theorem2_data(theorem2_radius_squared());
  // On the line through E the origin sits strictly between G' and E, so its
  // first image moves by G - E (see the numeric positions below).
  const oracle::SegmentPoints o = oracle::segment_points();
  const double unit = std::abs(o.E);
  const double tG = std::abs(o.G) / unit;  // G' sits at -tG, G at +tG
  CHECK(tG == doctest::Approx(std::pow(kPhi, -3)));
  CHECK(interval_exchange_step(Cyclotomic5(0)) == d.G - d.E);
  // Points of [E', G'] move by 2F.
  CHECK(interval_exchange_step(d.E_prime) == d.E_prime + Cyclotomic5(2) * d.F);
  CHECK(interval_exchange_step(d.G_prime) == d.G_prime + Cyclotomic5(2) * d.F);
  CHECK(interval_exchange_step(d.E) == d.G);

  // Double shadow of the first 1000 iterates, with the same piece rule.
  double t = 0.0;
  Cyclotomic5 x(0);
  const double shift_left = 2 * std::abs(o.F) / unit;  // 2F points along +E
  const double shift_right = (std::abs(o.G) - unit) / unit;
  for (int i = 0; i < 1000; ++i) {
    x = interval_exchange_step(x);
    t += (t <= -tG) ? shift_left : shift_right;
    CHECK(std::abs(x.to_complex() - t * o.E) < 1e-9);
    CHECK(std::abs(t) <= 1.0 + 1e-12);
  }
}

TEST_CASE("shrinking translations") {
  const ShrinkWitness w7 = shrinking_translations(7, 4.0, 1e-3);
  CHECK(w7.final_stage().length < 1e-3);
  CHECK(w7.all_within_tolerance());
  for (std::size_t s = 1; s < w7.stages.size(); ++s) {
    CHECK(w7.stages[s].length < w7.stages[s - 1].length);
    CHECK(w7.stages[s].ratio_error <= 1e-9);
    CHECK(w7.stages[s].max_center_distance <= 4.0);
  }

  const ShrinkWitness w5 = shrinking_translations(5, 4.0, 1e-2);
  REQUIRE(w5.offsets == std::vector<int>{0, 2});
  // Every other pentagon edge: |1 + omega^2| = 1/phi per stage.
  const std::complex<double> omega = std::polar(1.0, -2 * std::numbers::pi / 5);
  CHECK(w5.ratio == doctest::Approx(std::abs(1.0 + omega * omega)).epsilon(1e-12));
  CHECK(w5.ratio == doctest::Approx(1 / kPhi).epsilon(1e-12));
  CHECK(w5.stages[2].length / w5.stages[0].length == doctest::Approx(1 / (kPhi * kPhi)).epsilon(1e-9));
  CHECK(w5.final_stage().length < 1e-2);
  // Stage 0 is the polygon side 4 sin(pi/n).
  CHECK(w5.stages[0].length == doctest::Approx(4 * std::sin(std::numbers::pi / 5)).epsilon(1e-12));

  // Replaying a materialized word moves the origin by the recorded length.
  const DiskSystem sys = DiskSystem::symmetric(5, 4.0);
  const Word word = w5.word(3, 0);
  CHECK(norm(apply_word(sys, word, {0.0, 0.0})) == doctest::Approx(w5.stages[3].length).epsilon(1e-9));

  CHECK_THROWS_AS(shrinking_translations(6, 4.0, 1e-3), AlwaysFiniteError);
  CHECK_THROWS_AS(shrinking_translations(7, 4.0, 0.0), UsageError);
}

TEST_CASE("lcm rotation") {
  const LcmRotation r35 = lcm_rotation_word(3, 5);
  CHECK(std::abs(std::abs(r35.angle) - 2 * std::numbers::pi / 15) <= 1e-9);
  CHECK(r35.max_error <= 1e-9);
  // Net angle of (a^-1 b)^alpha: alpha (2 pi / 3 - 2 pi / 5), reduced.
  const double net = std::remainder(r35.alpha * (2 * std::numbers::pi / 3 - 2 * std::numbers::pi / 5), 2 * std::numbers::pi);
  CHECK(std::abs(std::abs(net) - 2 * std::numbers::pi / 15) <= 1e-9);
  // Smallest such alpha.
  for (int a = 1; a < r35.alpha; ++a) {
    const double m = std::remainder(a * (2 * std::numbers::pi / 3 - 2 * std::numbers::pi / 5), 2 * std::numbers::pi);
    CHECK(std::abs(std::abs(m) - 2 * std::numbers::pi / 15) > 1e-6);
  }
  // Independent replay on a fourth point near the centre.
  const DiskSystem sys = DiskSystem::two_disk(3, 5, kLcmRadius, kLcmRadius);
  const PlanePoint p = r35.center + PlanePoint{0.1, -0.2};
  const PlanePoint q = apply_word(sys, r35.word, p);
  const std::complex<double> expected =
      std::complex<double>(r35.center.x, r35.center.y) + std::complex<double>(0.1, -0.2) * std::polar(1.0, r35.angle);
  CHECK(std::abs(std::complex<double>(q.x, q.y) - expected) <= 1e-9);

  const LcmRotation r23 = lcm_rotation_word(2, 3);
  CHECK(std::abs(std::abs(r23.angle) - 2 * std::numbers::pi / 6) <= 1e-9);
  CHECK_THROWS_AS(lcm_rotation_word(5, 5), UsageError);
}

TEST_CASE("closed-form radii") {
  CHECK(closed_form_radius(5) == QuadraticReal(3) + QuadraticReal::phi());
  CHECK(std::sqrt(closed_form_radius(5).to_double()) == doctest::Approx(2.148961).epsilon(1e-6));
  CHECK(std::abs(std::sqrt(closed_form_radius(10).to_double()) - 1.543362) <= 1e-6);
  CHECK(std::abs(std::sqrt(closed_form_radius(10).to_double()) - 1.543357) <= 5e-6 + 1e-9);
  const std::vector<std::int64_t> p12{1, -80, 148};
  CHECK(exact::minpoly_check(p12, closed_form_radius(12)));
  CHECK_THROWS_AS(closed_form_radius(7), UnsupportedInput);

  const SpiralRadius s8 = spiral_radius(8);
  CHECK(s8.minpoly_ok);
  CHECK(std::abs(s8.r - 1.711411) <= 5e-6);
  CHECK(s8.r == doctest::Approx(std::sqrt(5 * (2 - std::sqrt(2.0)))));
  const SpiralRadius s12 = spiral_radius(12);
  CHECK(s12.minpoly_ok);
  CHECK(std::round(s12.r * 1e6) / 1e6 == doctest::Approx(1.376547).epsilon(1e-12));
  CHECK(s12.r == doctest::Approx(std::sqrt(2 * (20 - 11 * std::sqrt(3.0)))));
  CHECK_THROWS_AS(spiral_radius(10), UnsupportedInput);

  const auto rows = minpoly_rows();
  REQUIRE(rows.size() == 4);
  for (const MinpolyRow& row : rows) {
    CHECK(row.exact_root);
    CHECK(row.within_tolerance);
  }
}

TEST_CASE("three disks give incommensurable translations") {
  const ThreeDiskDemo d = three_disk_demo();
  CHECK(std::abs(d.length1 - 2.0) <= 1e-12);
  CHECK(std::abs(d.length2 - 2.0 * std::sqrt(2.0)) <= 1e-12);
  CHECK(d.ratio == doctest::Approx(1.414214).epsilon(1e-6));
  CHECK(distance(d.direction1, {1.0, 0.0}) <= 1e-12);
  CHECK(distance(d.direction2, {1.0, 0.0}) <= 1e-12);
  CHECK(d.max_error <= 1e-12);
}
