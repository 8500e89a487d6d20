#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace ietrel {

/// Exact number in Q or in the cubic field Q(a), where a is the real root of
/// a^3 + a^2 + a = 1 (a ~ 0.5437).
///
/// A value is c0 + c1*a + c2*a^2 with rational coefficients. Values with
/// c1 = c2 = 0 are stored as plain rationals (no irrational part allocated),
/// so is_rational() is a structural test.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : c0_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value);

  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar cubic(mpq_class c0, mpq_class c1, mpq_class c2);
  /// The generator a itself.
  static Scalar a();

  /// Parses "p/q" or "p" (GMP rational syntax).
  static Scalar parse_rational(std::string_view text);

  [[nodiscard]] bool is_rational() const { return !irr_; }
  [[nodiscard]] bool is_zero() const { return !irr_ && sgn(c0_) == 0; }
  [[nodiscard]] const mpq_class& c0() const { return c0_; }
  [[nodiscard]] mpq_class c1() const { return irr_ ? irr_->first : mpq_class(0); }
  [[nodiscard]] mpq_class c2() const { return irr_ ? irr_->second : mpq_class(0); }
  /// Only meaningful when is_rational().
  [[nodiscard]] const mpq_class& rational() const { return c0_; }

  /// -1, 0 or +1, exact.
  [[nodiscard]] int sign() const;
  [[nodiscard]] mpz_class floor() const;
  [[nodiscard]] Scalar abs() const { return sign() < 0 ? -*this : *this; }

  [[nodiscard]] double to_double() const;
  /// Decimal expansion with `digits` significant digits (truncated).
  [[nodiscard]] std::string to_decimal(int digits = 30) const;
  /// Exact human-readable form: "3/10" or "1/2 - 1/2*a + a^2".
  [[nodiscard]] std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

private:
  using IrrationalPart = std::pair<mpq_class, mpq_class>;

  void normalize();
  // Float value of the element; `magnitude` bounds the rounding error scale.
  double estimate(double& magnitude) const;

  mpq_class c0_;
  std::unique_ptr<IrrationalPart> irr_;
};

Scalar min(const Scalar& x, const Scalar& y);
Scalar max(const Scalar& x, const Scalar& y);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Rational enclosure (lo, hi) of a with p(lo) < 0 < p(hi), p = x^3+x^2+x-1,
/// after `steps` bisections of the starting bracket (1/2, 3/5).
std::pair<mpq_class, mpq_class> cubic_generator_bracket(int steps);

/// Hard cap on bisection steps used by sign determination.
inline constexpr int kMaxBisectionSteps = 4096;

}  // namespace ietrel
