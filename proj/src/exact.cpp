#include "diskgroups/exact.hpp"

#include <cmath>
#include <numbers>

#include "diskgroups/errors.hpp"

namespace diskgroups::exact {

namespace {

int common_radicand(const QuadraticReal& x, const QuadraticReal& y) {
  if (x.radical_part() == 0) return y.radicand();
  if (y.radical_part() == 0) return x.radicand();
  if (x.radicand() != y.radicand()) throw UnsupportedInput("QuadraticReal: mixed radicands");
  return x.radicand();
}

int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace

QuadraticReal::QuadraticReal(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d != 2 && d != 3 && d != 5) throw UnsupportedInput("QuadraticReal: radicand must be 2, 3 or 5");
}

QuadraticReal QuadraticReal::phi() { return {Rational(1, 2), Rational(1, 2), 5}; }

Sign QuadraticReal::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  int s = 0;
  if (sb == 0) {
    s = sa;
  } else if (sa == 0) {
    s = sb;
  } else if (sa == sb) {
    s = sa;
  } else {
    // Opposite signs: compare a^2 against b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * d_;
    const int cmp_result = cmp(lhs, rhs);
    s = cmp_result == 0 ? 0 : (cmp_result > 0 ? sa : sb);
  }
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

double QuadraticReal::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_)); }

QuadraticReal QuadraticReal::inverse() const {
  const Rational denom = a_ * a_ - b_ * b_ * d_;
  if (denom == 0) throw std::domain_error("QuadraticReal: inverse of zero");
  return {a_ / denom, -b_ / denom, d_};
}

std::string QuadraticReal::to_string() const {
  if (b_ == 0) return a_.get_str();
  const Rational mag = abs(b_);
  std::string s = a_.get_str() + (b_ > 0 ? " + " : " - ");
  if (mag != 1) s += mag.get_str() + "*";
  return s + "sqrt(" + std::to_string(d_) + ")";
}

QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y) {
  const int d = common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticReal operator-(const QuadraticReal& x) { return {-x.a_, -x.b_, x.d_}; }

bool operator==(const QuadraticReal& x, const QuadraticReal& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_ == 0 || x.d_ == y.d_;
}

Sign quad_sign(const QuadraticReal& q) { return q.sign(); }

// ---------------------------------------------------------------------------
// Q(zeta_5)

Cyclotomic5 Cyclotomic5::reduce(std::array<Rational, 5> full) {
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = full[i] - full[4];
  return Cyclotomic5(std::move(c));
}

Cyclotomic5 Cyclotomic5::zeta(long k) {
  long e = k % 5;
  if (e < 0) e += 5;
  std::array<Rational, 5> full{};
  full[static_cast<std::size_t>(e)] = 1;
  return reduce(std::move(full));
}

bool Cyclotomic5::is_zero() const {
  for (const Rational& q : c_) {
    if (q != 0) return false;
  }
  return true;
}

Cyclotomic5 Cyclotomic5::galois(int j) const {
  if (j < 1 || j > 4) throw UsageError("Cyclotomic5::galois: j must be in 1..4");
  std::array<Rational, 5> full{};
  for (int i = 0; i < 4; ++i) full[static_cast<std::size_t>((i * j) % 5)] += c_[i];
  return reduce(std::move(full));
}

Cyclotomic5 Cyclotomic5::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic5: inverse of zero");
  // x^-1 = sigma2(x) sigma3(x) sigma4(x) / N(x), where N(x) is rational.
  const Cyclotomic5 others = galois(2) * galois(3) * galois(4);
  const Cyclotomic5 n = *this * others;
  if (n.c_[1] != 0 || n.c_[2] != 0 || n.c_[3] != 0) throw InvariantViolation("Cyclotomic5: field norm is not rational");
  const Rational inv_norm = 1 / n.c_[0];
  return inv_norm * others;
}

bool Cyclotomic5::is_real() const { return c_[1] == 0 && c_[2] == c_[3]; }

QuadraticReal Cyclotomic5::to_quadratic() const {
  if (!is_real()) throw InvariantViolation("Cyclotomic5: element is not real: " + to_string());
  // c0 + c2 (z^2 + z^3) with z^2 + z^3 = -phi = (-1 - sqrt 5) / 2.
  const Rational half_c2 = c_[2] / 2;
  return {c_[0] - half_c2, -half_c2, 5};
}

std::complex<double> Cyclotomic5::to_complex() const {
  std::complex<double> z = 0.0;
  for (int i = 0; i < 4; ++i) {
    z += c_[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * i / 5.0);
  }
  return z;
}

std::string Cyclotomic5::to_string() const {
  return "[" + c_[0].get_str() + ", " + c_[1].get_str() + ", " + c_[2].get_str() + ", " + c_[3].get_str() + "]";
}

Cyclotomic5 operator+(const Cyclotomic5& x, const Cyclotomic5& y) {
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = x.c_[i] + y.c_[i];
  return Cyclotomic5(std::move(c));
}

Cyclotomic5 operator-(const Cyclotomic5& x, const Cyclotomic5& y) {
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = x.c_[i] - y.c_[i];
  return Cyclotomic5(std::move(c));
}

Cyclotomic5 operator*(const Cyclotomic5& x, const Cyclotomic5& y) {
  std::array<Rational, 5> full{};
  for (int i = 0; i < 4; ++i) {
    if (x.c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (y.c_[j] == 0) continue;
      full[static_cast<std::size_t>((i + j) % 5)] += x.c_[i] * y.c_[j];
    }
  }
  return Cyclotomic5::reduce(std::move(full));
}

Cyclotomic5 operator*(const Rational& s, const Cyclotomic5& x) {
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = s * x.c_[i];
  return Cyclotomic5(std::move(c));
}

Cyclotomic5 operator-(const Cyclotomic5& x) {
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = -x.c_[i];
  return Cyclotomic5(std::move(c));
}

Cyclotomic5 cyc_add(const Cyclotomic5& x, const Cyclotomic5& y) { return x + y; }
Cyclotomic5 cyc_mul(const Cyclotomic5& x, const Cyclotomic5& y) { return x * y; }
Cyclotomic5 cyc_conj(const Cyclotomic5& x) { return x.conj(); }

QuadraticReal norm_to_quadratic(const Cyclotomic5& x) { return (x * x.conj()).to_quadratic(); }

bool minpoly_check(std::span<const std::int64_t> even_coeffs_descending, const QuadraticReal& r_squared) {
  if (even_coeffs_descending.empty()) throw UnsupportedInput("minpoly_check: empty polynomial");
  // Horner in s = r^2.
  QuadraticReal acc(0L);
  for (const std::int64_t c : even_coeffs_descending) acc = acc * r_squared + QuadraticReal(static_cast<long>(c));
  return acc.is_zero();
}

std::vector<std::int64_t> even_part(std::span<const std::int64_t> coeffs_descending) {
  if (coeffs_descending.empty()) throw UnsupportedInput("even_part: empty polynomial");
  const std::size_t degree = coeffs_descending.size() - 1;
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_descending.size(); ++i) {
    const std::size_t power = degree - i;
    if (power % 2 == 1) {
      if (coeffs_descending[i] != 0) throw UnsupportedInput("odd-degree term x^" + std::to_string(power));
      continue;
    }
    out.push_back(coeffs_descending[i]);
  }
  return out;
}

}  // namespace diskgroups::exact
