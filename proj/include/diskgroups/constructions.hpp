#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "diskgroups/exact.hpp"
#include "diskgroups/geometry.hpp"

namespace diskgroups {

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::vector<NamedCheck> checks;

  bool pass() const;
  void add(std::string check, bool ok, std::string detail = {});
  std::string to_text() const;
};

// ---------------------------------------------------------------------------
// GG_5 at r^2 = 3 + phi, exact in Q(zeta_5).

struct Theorem2Data {
  exact::Cyclotomic5 E, F, G;
  exact::Cyclotomic5 E_prime, F_prime, G_prime;  // negations of E, F, G
  exact::QuadraticReal r_squared;
  Word w1, w2, w3;
};

/// 3 + phi.
exact::QuadraticReal theorem2_radius_squared();

/// The segment points, the three words and the given r^2.
Theorem2Data theorem2_data(const exact::QuadraticReal& r_squared);

/// Exact rotation of `p` about the disk centre (-1 for disk 0, +1 for disk 1)
/// by -2*pi*exponent/5, applied only if p is in the closed disk of radius^2 r_squared.
exact::Cyclotomic5 apply_generator_exact(int disk, long exponent, const exact::Cyclotomic5& p,
                                         const exact::QuadraticReal& r_squared);

bool in_disk_exact(int disk, const exact::Cyclotomic5& p, const exact::QuadraticReal& r_squared);

/// All checks for the segment dynamics. Pass a smaller r_squared to watch the
/// lens-membership check fail.
VerificationReport theorem2_check(const exact::QuadraticReal& r_squared);
inline VerificationReport theorem2_check() { return theorem2_check(theorem2_radius_squared()); }

/// Iterates the two-piece exchange on E'E from the origin: [E', G'] moves by 2F,
/// (G', E] moves by G - E. Returns the number of distinct points among the first
/// `n` iterates (origin included). Throws InvariantViolation if an iterate leaves E'E.
std::uint64_t interval_exchange_iterate(std::uint64_t n);

/// One exchange step, exposed for tests.
exact::Cyclotomic5 interval_exchange_step(const exact::Cyclotomic5& x);

// ---------------------------------------------------------------------------
// Arbitrarily short translations in GG_n(r).

inline constexpr double kDisplacementTolerance = 1e-9;

struct ShrinkStage {
  int stage = 0;
  std::uint64_t word_length = 0;  // generator factors per word
  double length = 0.0;            // measured |displacement| of word 0
  double predicted_length = 0.0;
  double ratio_error = 0.0;       // |length / previous length - ratio| / ratio; 0 at stage 0
  double max_center_distance = 0.0;  // certificate: every rotation acts if this is <= r
  bool replayed = false;             // measured by literal generator replay (else summed from parts)
  double max_displacement_error = 0.0;  // over all n words, vs the predicted vector

  bool within_tolerance() const { return max_displacement_error <= kDisplacementTolerance; }
};

struct ShrinkWitness {
  int n = 0;
  double r = 0.0;
  double epsilon = 0.0;
  // Word k of stage s + 1 concatenates the stage-s words k + offsets[i], in
  // the order recorded in `order`. Its translation is the sum of theirs.
  std::vector<int> offsets;
  double ratio = 0.0;  // |sum_i omega^offsets[i]|, omega = exp(-2 pi i / n)
  std::vector<ShrinkStage> stages;
  // order[s][k] = stage-(s-1) word indices concatenated into word k of stage s.
  std::vector<std::vector<std::vector<int>>> order;

  /// Materializes word k of a stage. Throws UsageError above `max_length` factors.
  Word word(int stage, int k, std::uint64_t max_length = 1u << 20) const;
  const ShrinkStage& final_stage() const { return stages.back(); }
  bool all_within_tolerance() const;
};

inline constexpr std::uint64_t kDefaultReplayLimit = 1ull << 24;

/// Builds stages of n translation words until the translation length is below
/// `epsilon`. Stage 0 holds the polygon edge translations b^-k a^-1 b^(k+1).
/// Each later stage sums translations of the previous one at fixed index
/// offsets; the offsets (two or three of them) are chosen for the fastest
/// shrink per factor of word growth among those whose rotations all stay
/// inside the disks. For n = 5 this is {0, 2}: every other pentagon edge.
///
/// Words up to `replay_limit` factors are replayed generator by generator
/// from the origin in extended precision, checking disk membership at every
/// step; longer ones are summed from their already measured parts.
ShrinkWitness shrinking_translations(int n, double r, double epsilon,
                                     std::uint64_t replay_limit = kDefaultReplayLimit);

// ---------------------------------------------------------------------------

struct LcmRotation {
  int n1 = 0;
  int n2 = 0;
  int alpha = 0;
  Word word;            // (a^-1 b)^alpha
  PlanePoint center;    // fixed point of the rigid motion
  double angle = 0.0;   // signed, counterclockwise positive
  double max_error = 0.0;  // over the three verification points
};

inline constexpr double kLcmRadius = 8.0;

LcmRotation lcm_rotation_word(int n1, int n2);

struct SpiralRadius {
  exact::QuadraticReal r_squared;
  double r = 0.0;
  bool minpoly_ok = false;
};

/// Closed forms for n = 8 and n = 12, checked against their minimal quartics.
SpiralRadius spiral_radius(int n);

/// r^2 for n in {5, 8, 10, 12}.
exact::QuadraticReal closed_form_radius(int n);

struct MinpolyRow {
  int n = 0;
  exact::QuadraticReal r_squared;
  std::vector<std::int64_t> quartic;  // even form: x^4, x^2, 1
  double closed_form = 0.0;
  double table_estimate = 0.0;
  bool exact_root = false;
  bool within_tolerance = false;
};

inline constexpr double kTableTolerance = 5e-6;

std::vector<MinpolyRow> minpoly_rows();

struct ThreeDiskDemo {
  double length1 = 0.0;
  double length2 = 0.0;
  double ratio = 0.0;
  Vec2 direction1;
  Vec2 direction2;
  double max_error = 0.0;
};

ThreeDiskDemo three_disk_demo();

}  // namespace diskgroups
