#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace diskgroups::exact {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// a + b*sqrt(d) with rational a, b and d in {2, 3, 5}.
///
/// Values with b == 0 are plain rationals and combine with any radicand.
/// Mixing two different radicands with nonzero b is rejected.
class QuadraticReal {
 public:
  QuadraticReal() = default;
  QuadraticReal(Rational a, Rational b, int d);
  QuadraticReal(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticReal(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)

  static QuadraticReal sqrt_of(int d) { return {Rational(0), Rational(1), d}; }
  /// The golden ratio (1 + sqrt 5) / 2.
  static QuadraticReal phi();

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  int radicand() const noexcept { return d_; }

  Sign sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;
  QuadraticReal inverse() const;
  std::string to_string() const;

  friend QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y);
  friend QuadraticReal operator/(const QuadraticReal& x, const QuadraticReal& y) { return x * y.inverse(); }
  friend QuadraticReal operator-(const QuadraticReal& x);
  friend bool operator==(const QuadraticReal& x, const QuadraticReal& y);

 private:
  Rational a_{0};
  Rational b_{0};
  int d_ = 5;
};

Sign quad_sign(const QuadraticReal& q);

/// Element of Q(zeta_5), stored as c0 + c1 z + c2 z^2 + c3 z^3 with z^4 eliminated
/// through z^4 = -1 - z - z^2 - z^3. The representation is canonical, so
/// equality is coefficient-wise.
class Cyclotomic5 {
 public:
  Cyclotomic5() = default;
  Cyclotomic5(long c) { c_[0] = c; }  // NOLINT(google-explicit-constructor)
  Cyclotomic5(const Rational& c) { c_[0] = c; }  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic5(std::array<Rational, 4> coeffs) : c_(std::move(coeffs)) {}

  /// zeta_5^k for any integer k.
  static Cyclotomic5 zeta(long k = 1);

  const std::array<Rational, 4>& coefficients() const noexcept { return c_; }
  bool is_zero() const;

  /// Galois automorphism z -> z^j, j in {1, 2, 3, 4}.
  Cyclotomic5 galois(int j) const;
  /// Complex conjugation (z -> z^4).
  Cyclotomic5 conj() const { return galois(4); }
  Cyclotomic5 inverse() const;

  /// True iff the element lies in the real subfield Q(sqrt 5).
  bool is_real() const;
  /// Real element as a + b sqrt 5; throws InvariantViolation if not real.
  QuadraticReal to_quadratic() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend Cyclotomic5 operator+(const Cyclotomic5& x, const Cyclotomic5& y);
  friend Cyclotomic5 operator-(const Cyclotomic5& x, const Cyclotomic5& y);
  friend Cyclotomic5 operator*(const Cyclotomic5& x, const Cyclotomic5& y);
  friend Cyclotomic5 operator*(const Rational& s, const Cyclotomic5& x);
  friend Cyclotomic5 operator/(const Cyclotomic5& x, const Cyclotomic5& y) { return x * y.inverse(); }
  friend Cyclotomic5 operator-(const Cyclotomic5& x);
  friend bool operator==(const Cyclotomic5& x, const Cyclotomic5& y) { return x.c_ == y.c_; }

 private:
  static Cyclotomic5 reduce(std::array<Rational, 5> full);

  std::array<Rational, 4> c_{};
};

Cyclotomic5 cyc_add(const Cyclotomic5& x, const Cyclotomic5& y);
Cyclotomic5 cyc_mul(const Cyclotomic5& x, const Cyclotomic5& y);
Cyclotomic5 cyc_conj(const Cyclotomic5& x);

/// |x|^2 = x * conj(x) as an element of Q(sqrt 5).
QuadraticReal norm_to_quadratic(const Cyclotomic5& x);

/// True iff P(r) = 0 for the even polynomial P(x) = sum_k c_k x^(2k), where
/// `even_coeffs_descending` lists the coefficients of x^(2m), ..., x^2, 1 and
/// r_squared = r^2. So {1, -7, 11} stands for x^4 - 7x^2 + 11.
bool minpoly_check(std::span<const std::int64_t> even_coeffs_descending, const QuadraticReal& r_squared);

/// Converts a full descending coefficient list in x into the even form above.
/// Nonzero odd-degree coefficients throw UnsupportedInput.
std::vector<std::int64_t> even_part(std::span<const std::int64_t> coeffs_descending);

}  // namespace diskgroups::exact
