#include "diskgroups/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "diskgroups/critical_radius.hpp"
#include "diskgroups/errors.hpp"

namespace diskgroups {

using exact::Cyclotomic5;
using exact::QuadraticReal;
using exact::Rational;
using exact::Sign;

namespace {

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

using Complex = std::complex<double>;

Complex to_complex(PlanePoint p) { return {p.x, p.y}; }
PlanePoint to_point(Complex z) { return {z.real(), z.imag()}; }

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

void VerificationReport::add(std::string check, bool ok, std::string detail) {
  checks.push_back({std::move(check), ok, std::move(detail)});
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << name << ": " << (pass() ? "PASS" : "FAIL") << '\n';
  for (const NamedCheck& c : checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

QuadraticReal theorem2_radius_squared() { return QuadraticReal(3L) + QuadraticReal::phi(); }

Theorem2Data theorem2_data(const QuadraticReal& r_squared) {
  const Cyclotomic5 z = Cyclotomic5::zeta(1);
  const Cyclotomic5 z2 = Cyclotomic5::zeta(2);
  const Cyclotomic5 z3 = Cyclotomic5::zeta(3);
  Theorem2Data d;
  d.E = z - z2;
  d.F = Cyclotomic5(1L) - z + z2 - z3;
  d.G = Rational(2) * d.F - d.E;
  d.E_prime = -d.E;
  d.F_prime = -d.F;
  d.G_prime = -d.G;
  d.r_squared = r_squared;
  d.w1 = Word::parse("a^-2 b^-1 a^-1 b^-1");
  d.w2 = Word::parse("a b a b^2");
  d.w3 = Word::parse("a b a b^-1 a^-1 b^-1");
  return d;
}

bool in_disk_exact(int disk, const Cyclotomic5& p, const QuadraticReal& r_squared) {
  const Cyclotomic5 rel = p - Cyclotomic5(disk == 0 ? -1L : 1L);
  return (r_squared - exact::norm_to_quadratic(rel)).sign() != Sign::Negative;
}

Cyclotomic5 apply_generator_exact(int disk, long exponent, const Cyclotomic5& p, const QuadraticReal& r_squared) {
  if (disk != 0 && disk != 1) throw UsageError("exact generators exist for disks 0 and 1 only");
  if (!in_disk_exact(disk, p, r_squared)) return p;
  const Cyclotomic5 c(disk == 0 ? -1L : 1L);
  // Clockwise by 2 pi e / 5 is multiplication by zeta^-e.
  return c + (p - c) * Cyclotomic5::zeta(-exponent);
}

VerificationReport theorem2_check(const QuadraticReal& r_squared) {
  const Theorem2Data d = theorem2_data(r_squared);
  VerificationReport report;
  report.name = "theorem2";
  const QuadraticReal phi = QuadraticReal::phi();

  const QuadraticReal e_plus_one = exact::norm_to_quadratic(d.E + Cyclotomic5(1L));
  report.add("radius |E+1|^2 = r^2", e_plus_one == d.r_squared,
             "|E+1|^2 = " + e_plus_one.to_string() + ", r^2 = " + d.r_squared.to_string());

  // Collinear through the origin, in the order E', F', G', G, F, E along the line.
  const Cyclotomic5 e_inv = d.E.inverse();
  const std::array<std::pair<const char*, const Cyclotomic5*>, 6> line{
      {{"E'", &d.E_prime}, {"F'", &d.F_prime}, {"G'", &d.G_prime}, {"G", &d.G}, {"F", &d.F}, {"E", &d.E}}};
  bool collinear = true;
  bool ordered = true;
  std::string params;
  std::optional<QuadraticReal> previous;
  for (const auto& [label, point] : line) {
    const Cyclotomic5 t = *point * e_inv;
    if (!t.is_real()) {
      collinear = false;
      continue;
    }
    const QuadraticReal tq = t.to_quadratic();
    params += std::string(params.empty() ? "" : ", ") + label + "=" + tq.to_string();
    if (previous && (tq - *previous).sign() != Sign::Positive) ordered = false;
    previous = tq;
  }
  report.add("collinear through origin", collinear, params);
  report.add("order E' F' G' G F E", collinear && ordered);

  struct Case {
    const char* word_name;
    const Word* word;
    const char* from_name;
    Cyclotomic5 from, to;
    const char* to_from_name;
    Cyclotomic5 from_image, to_image;
    const char* translation_name;
    Cyclotomic5 translation;
  };
  const Cyclotomic5 two_f = Rational(2) * d.F;
  const std::array<Case, 3> cases{{
      {"w1", &d.w1, "E'F'", d.E_prime, d.F_prime, "GF", d.G, d.F, "2F", two_f},
      {"w2", &d.w2, "F'G'", d.F_prime, d.G_prime, "FE", d.F, d.E, "2F", two_f},
      {"w3", &d.w3, "G'E", d.G_prime, d.E, "E'G", d.E_prime, d.G, "G-E", d.G - d.E},
  }};

  const int interior = 16;
  for (const Case& c : cases) {
    auto apply = [&](Cyclotomic5 p, bool& inside, std::string& where) {
      int step = 0;
      auto check = [&] {
        if (!inside) return;
        if (!in_disk_exact(0, p, d.r_squared) || !in_disk_exact(1, p, d.r_squared)) {
          inside = false;
          where = "after factor " + std::to_string(step) + ", point " + p.to_string();
        }
      };
      check();
      for (const WordFactor& f : c.word->factors()) {
        p = apply_generator_exact(static_cast<int>(f.disk), f.exponent, p, d.r_squared);
        ++step;
        check();
      }
      return p;
    };

    bool inside = true;
    std::string where;
    const Cyclotomic5 img_from = apply(c.from, inside, where);
    const Cyclotomic5 img_to = apply(c.to, inside, where);
    const std::string seg = std::string(c.word_name) + " on " + c.from_name;
    report.add(seg + " endpoints map onto " + c.to_from_name, img_from == c.from_image && img_to == c.to_image);
    report.add(seg + " endpoints translate by " + c.translation_name,
               img_from - c.from == c.translation && img_to - c.to == c.translation);

    // Midpoint and evenly spaced interior points, all held in the lens throughout.
    bool translated = true;
    std::vector<Rational> ts{Rational(1, 2)};
    for (int j = 1; j <= interior; ++j) ts.emplace_back(j, interior + 1);
    for (const Rational& t : ts) {
      const Cyclotomic5 p = c.from + t * (c.to - c.from);
      const Cyclotomic5 q = apply(p, inside, where);
      if (q - p != c.translation) translated = false;
    }
    report.add(seg + " sampled points translate by " + c.translation_name, translated);
    report.add(seg + " stays in both disks", inside, inside ? "" : where);
  }

  const QuadraticReal outer = exact::norm_to_quadratic(d.E - d.E_prime);
  const QuadraticReal inner = exact::norm_to_quadratic(d.F - d.F_prime);
  report.add("|E-E'|^2 = phi^2 |F-F'|^2", outer == phi * phi * inner,
             outer.to_string() + " vs " + (phi * phi * inner).to_string());
  return report;
}

namespace {

struct ExchangeConstants {
  Cyclotomic5 e_inv;
  Cyclotomic5 two_f;
  Cyclotomic5 g_minus_e;
  QuadraticReal t_g_prime;

  static const ExchangeConstants& get() {
    static const ExchangeConstants k = [] {
      const Theorem2Data d = theorem2_data(theorem2_radius_squared());
      ExchangeConstants c;
      c.e_inv = d.E.inverse();
      c.two_f = Rational(2) * d.F;
      c.g_minus_e = d.G - d.E;
      c.t_g_prime = (d.G_prime * c.e_inv).to_quadratic();
      return c;
    }();
    return k;
  }
};

/// Position of x along the line as a multiple of E; throws if x is off the segment E'E.
QuadraticReal segment_parameter(const Cyclotomic5& x, const ExchangeConstants& k) {
  const Cyclotomic5 t = x * k.e_inv;
  if (!t.is_real()) throw InvariantViolation("interval exchange left the line E'E at " + x.to_string());
  QuadraticReal tq = t.to_quadratic();
  if ((tq + QuadraticReal(1L)).sign() == Sign::Negative || (QuadraticReal(1L) - tq).sign() == Sign::Negative)
    throw InvariantViolation("interval exchange left the segment E'E at t = " + tq.to_string());
  return tq;
}

}  // namespace

Cyclotomic5 interval_exchange_step(const Cyclotomic5& x) {
  const ExchangeConstants& k = ExchangeConstants::get();
  const QuadraticReal t = segment_parameter(x, k);
  // Ties at G' go to the left piece.
  return (t - k.t_g_prime).sign() == Sign::Positive ? x + k.g_minus_e : x + k.two_f;
}

std::uint64_t interval_exchange_iterate(std::uint64_t n) {
  if (n < 1) throw UsageError("interval_exchange_iterate needs n >= 1");
  const ExchangeConstants& k = ExchangeConstants::get();
  std::set<std::pair<Rational, Rational>> seen;
  Cyclotomic5 x;
  for (std::uint64_t i = 0; i < n; ++i) {
    const QuadraticReal t = segment_parameter(x, k);
    seen.emplace(t.rational_part(), t.radical_part());
    if (i + 1 == n) break;
    x = (t - k.t_g_prime).sign() == Sign::Positive ? x + k.g_minus_e : x + k.two_f;
  }
  return seen.size();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double max_abs(const std::vector<Complex>& pts) {
  double m = 0.0;
  for (Complex c : pts) m = std::max(m, std::abs(c));
  return m;
}

/// A translation word and the hull of the disk centres it rotates about,
/// pulled back to the coordinates of its starting point.
struct TranslationInfo {
  Complex translation;
  std::vector<Complex> hull;
};

TranslationInfo base_translation(const DiskSystem& sys, const Word& w) {
  Complex a = 1.0;
  Complex b = 0.0;
  std::vector<Complex> centers;
  for (const WordFactor& f : w.factors()) {
    const DiskSpec& d = sys.disk(f.disk);
    const Complex c = to_complex(d.center);
    centers.push_back((c - b) / a);
    long k = f.exponent % d.order;
    if (k < 0) k += d.order;
    const UnitRoot& root = sys.clockwise_root(f.disk, static_cast<std::size_t>(k));
    const Complex rho{root.c, root.s};
    a *= rho;
    b = (b - c) * rho + c;
  }
  if (std::abs(a - 1.0) > 1e-12) throw InvariantViolation("base word is not a translation");
  return {b, convex_hull(std::move(centers))};
}

}  // namespace

namespace {

using LComplex = std::complex<long double>;

struct Scheme {
  std::vector<int> offsets;
  double ratio = 0.0;
  double score = 0.0;  // log(ratio) / log(offsets.size()): shrink per unit of word growth
};

std::vector<Scheme> candidate_schemes(int n) {
  std::vector<Scheme> out;
  auto consider = [&](std::vector<int> offsets) {
    Complex sum = 0.0;
    for (int o : offsets) sum += std::polar(1.0, -2.0 * std::numbers::pi * o / n);
    const double ratio = std::abs(sum);
    if (ratio < 1e-9 || ratio > 1.0 - 1e-12) return;
    const double score = std::log(ratio) / std::log(static_cast<double>(offsets.size()));
    out.push_back({std::move(offsets), ratio, score});
  };
  for (int j = 1; j < n; ++j) consider({0, j});
  for (int j = 1; j < n; ++j)
    for (int l = j; l < n; ++l) consider({0, j, l});
  std::stable_sort(out.begin(), out.end(), [](const Scheme& a, const Scheme& b) {
    if (std::abs(a.score - b.score) > 1e-12) return a.score < b.score;
    return a.offsets.size() < b.offsets.size();
  });
  return out;
}

/// Hull certificate for every stage of one scheme. Returns the concatenation
/// order per stage and the certified centre distance, or nullopt if some
/// rotation would need a point outside its disk.
struct Plan {
  std::vector<std::vector<std::vector<int>>> order;
  std::vector<double> max_center;
};

std::optional<Plan> plan_scheme(const DiskSystem& sys, const Scheme& scheme, double r, int stages) {
  const int n = sys.disk(0).order;
  Plan plan;
  plan.order.emplace_back();
  std::vector<TranslationInfo> current;
  for (int k = 0; k < n; ++k) {
    Word base;
    base.append(1, -k).append(0, -1).append(1, k + 1);
    current.push_back(base_translation(sys, base));
  }
  auto stage_max = [&] {
    double m = 0.0;
    for (const TranslationInfo& t : current) m = std::max(m, max_abs(t.hull));
    return m;
  };
  plan.max_center.push_back(stage_max());
  if (plan.max_center.back() > r + kBoundaryTolerance) return std::nullopt;

  for (int s = 1; s <= stages; ++s) {
    std::vector<TranslationInfo> next;
    std::vector<std::vector<int>> parts_of_stage;
    for (int k = 0; k < n; ++k) {
      std::vector<int> parts;
      for (int o : scheme.offsets) parts.push_back((k + o) % n);
      std::sort(parts.begin(), parts.end());
      std::vector<int> best_parts;
      std::vector<Complex> best_hull;
      double best = 0.0;
      do {
        std::vector<Complex> pts;
        Complex shift = 0.0;
        for (int idx : parts) {
          const TranslationInfo& t = current[static_cast<std::size_t>(idx)];
          for (Complex c : t.hull) pts.push_back(c - shift);
          shift += t.translation;
        }
        std::vector<Complex> hull = convex_hull(std::move(pts));
        const double m = max_abs(hull);
        if (best_parts.empty() || m < best) {
          best = m;
          best_parts = parts;
          best_hull = std::move(hull);
        }
      } while (std::next_permutation(parts.begin(), parts.end()));
      Complex sum = 0.0;
      for (int idx : best_parts) sum += current[static_cast<std::size_t>(idx)].translation;
      next.push_back({sum, std::move(best_hull)});
      parts_of_stage.push_back(std::move(best_parts));
    }
    current = std::move(next);
    plan.order.push_back(std::move(parts_of_stage));
    plan.max_center.push_back(stage_max());
    if (plan.max_center.back() > r + kBoundaryTolerance) return std::nullopt;
  }
  return plan;
}

/// Generator-level replay in long double so that the measured translations
/// stay accurate to ~1e-14 even after tens of millions of rotations.
class Replayer {
 public:
  Replayer(const ShrinkWitness& w, double r) : w_(w) {
    const long double reach = static_cast<long double>(r) + kBoundaryTolerance;
    reach2_ = reach * reach;
    for (int e = 0; e < w.n; ++e) {
      const long double angle = -2.0L * std::numbers::pi_v<long double> * e / w.n;
      roots_.emplace_back(std::cos(angle), std::sin(angle));
    }
  }

  LComplex run(int stage, int k) const {
    LComplex p = 0.0L;
    step(stage, k, p);
    return p;
  }

 private:
  void rotate(int disk, long exponent, LComplex& p) const {
    const LComplex c = disk == 0 ? -1.0L : 1.0L;
    if (std::norm(p - c) > reach2_)
      throw ConstructionError("replay left disk " + std::to_string(disk) + " at (" +
                              std::to_string(static_cast<double>(p.real())) + ", " +
                              std::to_string(static_cast<double>(p.imag())) + ")");
    long e = exponent % w_.n;
    if (e < 0) e += w_.n;
    p = c + (p - c) * roots_[static_cast<std::size_t>(e)];
  }

  void step(int stage, int k, LComplex& p) const {
    if (stage == 0) {
      rotate(1, -k, p);
      rotate(0, -1, p);
      rotate(1, k + 1, p);
      return;
    }
    for (int part : w_.order[static_cast<std::size_t>(stage)][static_cast<std::size_t>(k)]) step(stage - 1, part, p);
  }

  const ShrinkWitness& w_;
  long double reach2_ = 0.0L;
  std::vector<LComplex> roots_;
};

}  // namespace

Word ShrinkWitness::word(int stage, int k, std::uint64_t max_length) const {
  if (stage < 0 || stage >= static_cast<int>(stages.size())) throw UsageError("no such stage");
  if (k < 0 || k >= n) throw UsageError("no such word index");
  if (stages[static_cast<std::size_t>(stage)].word_length > max_length) throw UsageError("word too long to materialize");
  std::function<void(int, int, Word&)> build = [&](int s, int idx, Word& out) {
    if (s == 0) {
      out.append(1, -idx).append(0, -1).append(1, idx + 1);
      return;
    }
    for (int part : order[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx)]) build(s - 1, part, out);
  };
  Word w;
  build(stage, k, w);
  return w;
}

bool ShrinkWitness::all_within_tolerance() const {
  return std::all_of(stages.begin(), stages.end(), [](const ShrinkStage& s) { return s.within_tolerance(); });
}

ShrinkWitness shrinking_translations(int n, double r, double epsilon, std::uint64_t replay_limit) {
  if (!family_can_be_infinite(n, n)) throw AlwaysFiniteError("GG_" + std::to_string(n) + " is finite for every radius");
  if (!(epsilon > 0.0)) throw UsageError("epsilon must be positive");
  if (!(r > 1.0)) throw UsageError("radius must exceed 1");
  const DiskSystem sys = DiskSystem::symmetric(n, r);
  const double edge = norm(word_translation_vector(n));

  std::optional<Plan> plan;
  ShrinkWitness w;
  w.n = n;
  w.r = r;
  w.epsilon = epsilon;
  int stages = 0;
  for (const Scheme& scheme : candidate_schemes(n)) {
    stages = 0;
    while (edge * std::pow(scheme.ratio, stages) >= epsilon) ++stages;
    plan = plan_scheme(sys, scheme, r, stages);
    if (plan) {
      w.offsets = scheme.offsets;
      w.ratio = scheme.ratio;
      break;
    }
  }
  if (!plan) throw ConstructionError("no shrinking scheme keeps every rotation inside radius " + std::to_string(r));
  w.order = std::move(plan->order);

  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const LComplex omega = std::polar(1.0L, -two_pi / n);
  const LComplex v1 = 2.0L * (1.0L - omega);
  LComplex shrink = 0.0L;
  for (int o : w.offsets) shrink += std::polar(1.0L, -two_pi * o / n);

  const Replayer replayer(w, r);
  std::vector<LComplex> measured(static_cast<std::size_t>(n));
  LComplex growth = 1.0L;  // shrink^stage
  std::uint64_t length = 3;
  for (int stage = 0; stage <= stages; ++stage) {
    ShrinkStage st;
    st.stage = stage;
    st.word_length = length;
    st.max_center_distance = plan->max_center[static_cast<std::size_t>(stage)];
    st.replayed = length <= replay_limit;
    std::vector<LComplex> now(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      LComplex v = 0.0L;
      if (st.replayed) {
        v = replayer.run(stage, k);
      } else {
        for (int part : w.order[static_cast<std::size_t>(stage)][static_cast<std::size_t>(k)])
          v += measured[static_cast<std::size_t>(part)];
      }
      now[static_cast<std::size_t>(k)] = v;
      const LComplex predicted = std::polar(1.0L, -two_pi * k / n) * growth * v1;
      st.max_displacement_error = std::max(st.max_displacement_error, static_cast<double>(std::abs(v - predicted)));
      if (k == 0) st.predicted_length = static_cast<double>(std::abs(predicted));
    }
    measured = std::move(now);
    st.length = static_cast<double>(std::abs(measured[0]));
    if (stage > 0) {
      const double prev = w.stages.back().length;
      st.ratio_error = std::abs(st.length / prev - w.ratio) / w.ratio;
    }
    w.stages.push_back(st);
    growth *= shrink;
    length *= w.offsets.size();
  }
  if (!(w.final_stage().length < epsilon))
    throw InvariantViolation("final translation " + std::to_string(w.final_stage().length) + " is not below epsilon");
  return w;
}

// ---------------------------------------------------------------------------

LcmRotation lcm_rotation_word(int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw UsageError("rotation orders must be at least 2");
  if (n1 == n2) throw UsageError("lcm_rotation_word needs distinct orders");
  const long prod = static_cast<long>(n1) * n2;
  const long g = std::gcd(n1, n2);
  const long diff = n2 - n1;
  LcmRotation out;
  out.n1 = n1;
  out.n2 = n2;
  for (long alpha = 1; alpha <= prod; ++alpha) {
    long m = (alpha * diff) % prod;
    if (m < 0) m += prod;
    if (m == g || m == prod - g) {
      out.alpha = static_cast<int>(alpha);
      break;
    }
  }
  if (out.alpha == 0)
    throw ConstructionError("no power of a^-1 b rotates by 2 pi / lcm(" + std::to_string(n1) + ", " +
                            std::to_string(n2) + ")");
  out.word = Word::parse("a^-1 b").power(static_cast<unsigned>(out.alpha));

  const DiskSystem sys = DiskSystem::two_disk(n1, n2, kLcmRadius, kLcmRadius);
  auto run = [&](PlanePoint p) {
    for (const WordFactor& f : out.word.factors()) {
      if (!disk_contains(sys, f.disk, p)) throw ConstructionError("verification point left a disk");
      p = apply_generator(sys, f.disk, f.exponent, p);
    }
    return to_complex(p);
  };
  // a^-1 b is itself a rotation; probing around its fixed point keeps every
  // intermediate image well inside both disks.
  const Complex ccw = std::polar(1.0, 2.0 * std::numbers::pi / n1);
  const Complex cw = std::polar(1.0, -2.0 * std::numbers::pi / n2);
  // b(a^-1(z)) = ccw cw z + (ccw - 2) cw + 1.
  const Complex lin = ccw * cw;
  const Complex off = (ccw - 2.0) * cw + 1.0;
  const Complex pivot = off / (1.0 - lin);
  const std::array<PlanePoint, 3> probes{{to_point(pivot), to_point(pivot + 0.25), to_point(pivot + Complex(0.0, 0.25))}};
  const Complex q0 = run(probes[0]);
  const Complex q1 = run(probes[1]);
  const Complex q2 = run(probes[2]);
  const Complex a = (q1 - q0) / (to_complex(probes[1]) - to_complex(probes[0]));
  const Complex center = (q0 - a * to_complex(probes[0])) / (1.0 - a);
  out.center = to_point(center);

  const long lcm = prod / g;
  const long m = ((static_cast<long>(out.alpha) * diff) % prod + prod) % prod;
  const double expected = (m == g ? 1.0 : -1.0) * 2.0 * std::numbers::pi / static_cast<double>(lcm);
  out.angle = std::arg(a);
  const Complex rot = std::polar(1.0, expected);
  out.max_error = std::abs(a - rot);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const Complex q = i == 0 ? q0 : (i == 1 ? q1 : q2);
    out.max_error = std::max(out.max_error, std::abs(q - (center + rot * (to_complex(probes[i]) - center))));
  }
  if (out.max_error > 1e-9) throw ConstructionError("word is not the expected rotation: error " + sci(out.max_error));
  return out;
}

QuadraticReal closed_form_radius(int n) {
  const QuadraticReal phi = QuadraticReal::phi();
  switch (n) {
    case 5: return QuadraticReal(3L) + phi;
    case 8: return {Rational(10), Rational(-5), 2};
    case 10: return QuadraticReal(4L) - phi;
    case 12: return {Rational(40), Rational(-22), 3};
    default: throw UnsupportedInput("no closed-form radius for n = " + std::to_string(n));
  }
}

SpiralRadius spiral_radius(int n) {
  if (n != 8 && n != 12) throw UnsupportedInput("spiral closed forms exist for n = 8 and n = 12 only");
  SpiralRadius out;
  out.r_squared = closed_form_radius(n);
  out.r = std::sqrt(out.r_squared.to_double());
  const std::vector<std::int64_t> quartic = n == 8 ? std::vector<std::int64_t>{1, -20, 50}
                                                   : std::vector<std::int64_t>{1, -80, 148};
  out.minpoly_ok = exact::minpoly_check(quartic, out.r_squared);
  return out;
}

std::vector<MinpolyRow> minpoly_rows() {
  struct Known {
    int n;
    std::vector<std::int64_t> quartic;
    double estimate;
  };
  const std::array<Known, 4> known{{
      {5, {1, -7, 11}, 2.148961},
      {8, {1, -20, 50}, 1.711411},
      {10, {1, -7, 11}, 1.543357},
      {12, {1, -80, 148}, 1.376547},
  }};
  std::vector<MinpolyRow> rows;
  for (const Known& k : known) {
    MinpolyRow row;
    row.n = k.n;
    row.r_squared = closed_form_radius(k.n);
    row.quartic = k.quartic;
    row.closed_form = std::sqrt(row.r_squared.to_double());
    row.table_estimate = k.estimate;
    row.exact_root = exact::minpoly_check(row.quartic, row.r_squared);
    row.within_tolerance = std::abs(row.closed_form - row.table_estimate) <= kTableTolerance;
    rows.push_back(std::move(row));
  }
  return rows;
}

ThreeDiskDemo three_disk_demo() {
  const double radius = 8.0;
  const DiskSystem sys({DiskSpec{{0.0, 0.0}, radius, 2}, DiskSpec{{1.0, 0.0}, radius, 2},
                        DiskSpec{{std::sqrt(2.0), 0.0}, radius, 2}});
  const Word first = Word::parse("a b");
  const Word second = Word::parse("a c");
  const std::array<PlanePoint, 3> probes{{{0.0, 0.0}, {0.3, 0.7}, {-0.5, 0.2}}};

  ThreeDiskDemo out;
  auto displacement = [&](const Word& w, double expected) {
    Vec2 d0{};
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const Vec2 d = apply_word(sys, w, probes[i]) - probes[i];
      if (i == 0) d0 = d;
      out.max_error = std::max(out.max_error, distance(d, Vec2{expected, 0.0}));
      out.max_error = std::max(out.max_error, distance(apply_word(sys, w.inverse(), probes[i] + d), probes[i]));
    }
    return d0;
  };
  const Vec2 t1 = displacement(first, 2.0);
  const Vec2 t2 = displacement(second, 2.0 * std::sqrt(2.0));
  out.length1 = norm(t1);
  out.length2 = norm(t2);
  out.ratio = out.length2 / out.length1;
  out.direction1 = (1.0 / out.length1) * t1;
  out.direction2 = (1.0 / out.length2) * t2;
  return out;
}

}  // namespace diskgroups
