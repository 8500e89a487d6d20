#include "ietrel/scalar.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ietrel {

namespace {

// a ~ 0.54368901269207636
constexpr double kGeneratorApprox = 0.54368901269207636;

// Dyadic refinement of the bracket (1/2, 3/5): after s steps the bracket is
// [L/(10*2^s), (L+1)/(10*2^s)].
struct Bracket {
  mpz_class low_numerator;
  mpz_class denominator;
  int steps = 0;
};

int sign_of_p(const mpz_class& m, const mpz_class& d) {
  // sign of p(m/d) * d^3 = m^3 + m^2 d + m d^2 - d^3
  mpz_class m2 = m * m;
  mpz_class d2 = d * d;
  mpz_class v = m2 * m + m2 * d + m * d2 - d2 * d;
  return sgn(v);
}

void bisect(Bracket& b, int steps) {
  for (int i = 0; i < steps; ++i) {
    mpz_class mid = 2 * b.low_numerator + 1;
    b.denominator *= 2;
    if (sign_of_p(mid, b.denominator) < 0) {
      b.low_numerator = mid;
    } else {
      b.low_numerator = mid - 1;
    }
    ++b.steps;
  }
}

// Brackets at 64, 128, ..., kMaxBisectionSteps steps, built on first use.
constexpr int kFirstLevelSteps = 64;
constexpr int kLevelCount = 7;
static_assert(kFirstLevelSteps << (kLevelCount - 1) == kMaxBisectionSteps);

const Bracket& bracket_level(int level) {
  static std::array<Bracket, kLevelCount> levels;
  static std::array<std::once_flag, kLevelCount> flags;
  std::call_once(flags[level], [level] {
    Bracket b;
    int target = kFirstLevelSteps << level;
    if (level == 0) {
      b.low_numerator = 5;
      b.denominator = 10;
    } else {
      b = bracket_level(level - 1);
    }
    bisect(b, target - b.steps);
    levels[level] = std::move(b);
  });
  return levels[level];
}

struct IntegerForm {
  mpz_class c0, c1, c2, scale;  // value = (c0 + c1 a + c2 a^2) / scale, scale > 0
};

IntegerForm integer_form(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2) {
  IntegerForm f;
  mpz_lcm(f.scale.get_mpz_t(), c0.get_den_mpz_t(), c1.get_den_mpz_t());
  mpz_lcm(f.scale.get_mpz_t(), f.scale.get_mpz_t(), c2.get_den_mpz_t());
  f.c0 = c0.get_num() * (f.scale / c0.get_den());
  f.c1 = c1.get_num() * (f.scale / c1.get_den());
  f.c2 = c2.get_num() * (f.scale / c2.get_den());
  return f;
}

// Bounds on (c0 + c1 x + c2 x^2) * d^2 for x in [L/d, (L+1)/d], 0 < x.
std::pair<mpz_class, mpz_class> interval_eval(const IntegerForm& f, const Bracket& b) {
  const mpz_class& lo = b.low_numerator;
  mpz_class hi = lo + 1;
  const mpz_class& d = b.denominator;
  mpz_class base = f.c0 * d * d;
  mpz_class t1a = f.c1 * lo * d;
  mpz_class t1b = f.c1 * hi * d;
  mpz_class t2a = f.c2 * lo * lo;
  mpz_class t2b = f.c2 * hi * hi;
  mpz_class low = base + (t1a < t1b ? t1a : t1b) + (t2a < t2b ? t2a : t2b);
  mpz_class high = base + (t1a < t1b ? t1b : t1a) + (t2a < t2b ? t2b : t2a);
  return {low, high};
}

// Floating-point filter: returns 0 when inconclusive.
int quick_sign(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2) {
  double x0 = c0.get_d();
  double x1 = c1.get_d() * kGeneratorApprox;
  double x2 = c2.get_d() * kGeneratorApprox * kGeneratorApprox;
  double v = x0 + x1 + x2;
  double magnitude = std::fabs(x0) + std::fabs(x1) + std::fabs(x2);
  if (!std::isfinite(v) || !std::isfinite(magnitude) || magnitude < 1e-250) {
    return 0;
  }
  double err = magnitude * 0x1p-44;
  if (v > err) return 1;
  if (v < -err) return -1;
  return 0;
}

[[noreturn]] void precision_exhausted() {
  throw std::logic_error("sign determination exceeded bisection cap for a nonzero element of Q(a)");
}

}  // namespace

std::pair<mpq_class, mpq_class> cubic_generator_bracket(int steps) {
  Bracket b;
  b.low_numerator = 5;
  b.denominator = 10;
  bisect(b, steps);
  mpq_class lo(b.low_numerator, b.denominator);
  mpq_class hi(b.low_numerator + 1, b.denominator);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Scalar::Scalar(long num, long den) : c0_(num, den) {
  if (den == 0) throw std::domain_error("division by zero");
  c0_.canonicalize();
}

Scalar::Scalar(mpq_class value) : c0_(std::move(value)) { c0_.canonicalize(); }

Scalar::Scalar(const Scalar& other)
    : c0_(other.c0_), irr_(other.irr_ ? std::make_unique<IrrationalPart>(*other.irr_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    c0_ = other.c0_;
    irr_ = other.irr_ ? std::make_unique<IrrationalPart>(*other.irr_) : nullptr;
  }
  return *this;
}

Scalar Scalar::cubic(mpq_class c0, mpq_class c1, mpq_class c2) {
  Scalar s;
  s.c0_ = std::move(c0);
  s.c0_.canonicalize();
  c1.canonicalize();
  c2.canonicalize();
  s.irr_ = std::make_unique<IrrationalPart>(std::move(c1), std::move(c2));
  s.normalize();
  return s;
}

Scalar Scalar::a() { return cubic(0, 1, 0); }

Scalar Scalar::parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+')) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return Scalar(std::move(q));
}

void Scalar::normalize() {
  if (irr_ && sgn(irr_->first) == 0 && sgn(irr_->second) == 0) irr_.reset();
}

double Scalar::estimate(double& magnitude) const {
  double x0 = c0_.get_d();
  double x1 = irr_ ? irr_->first.get_d() * kGeneratorApprox : 0.0;
  double x2 = irr_ ? irr_->second.get_d() * kGeneratorApprox * kGeneratorApprox : 0.0;
  magnitude = std::fabs(x0) + std::fabs(x1) + std::fabs(x2);
  return x0 + x1 + x2;
}

int Scalar::sign() const {
  if (!irr_) return sgn(c0_);
  const auto& [c1, c2] = *irr_;
  if (int s = quick_sign(c0_, c1, c2); s != 0) return s;
  IntegerForm f = integer_form(c0_, c1, c2);
  for (int level = 0; level < kLevelCount; ++level) {
    auto [low, high] = interval_eval(f, bracket_level(level));
    if (sgn(low) > 0) return 1;
    if (sgn(high) < 0) return -1;
  }
  precision_exhausted();
}

mpz_class Scalar::floor() const {
  mpz_class result;
  if (!irr_) {
    mpz_fdiv_q(result.get_mpz_t(), c0_.get_num_mpz_t(), c0_.get_den_mpz_t());
    return result;
  }
  IntegerForm f = integer_form(c0_, irr_->first, irr_->second);
  for (int level = 0; level < kLevelCount; ++level) {
    const Bracket& b = bracket_level(level);
    auto [low, high] = interval_eval(f, b);
    mpz_class denom = f.scale * b.denominator * b.denominator;
    mpz_class fl, fh;
    mpz_fdiv_q(fl.get_mpz_t(), low.get_mpz_t(), denom.get_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), high.get_mpz_t(), denom.get_mpz_t());
    if (fl == fh) return fl;
  }
  precision_exhausted();
}

double Scalar::to_double() const {
  if (!irr_) return c0_.get_d();
  mpf_class v(0, 256);
  auto [lo, hi] = cubic_generator_bracket(200);
  mpf_class av(lo, 256);
  v = mpf_class(c0_, 256) + mpf_class(irr_->first, 256) * av + mpf_class(irr_->second, 256) * av * av;
  return v.get_d();
}

std::string Scalar::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits * 4 + 128);
  mpf_class v(0, bits);
  if (!irr_) {
    v = mpf_class(c0_, bits);
  } else {
    const Bracket& b = bracket_level(bits > 1000 ? 2 : 1);
    mpf_class av(mpq_class(b.low_numerator, b.denominator), bits);
    v = mpf_class(c0_, bits) + mpf_class(irr_->first, bits) * av +
        mpf_class(irr_->second, bits) * av * av;
  }
  if (sgn(v) == 0) return "0";
  mp_exp_t exponent = 0;
  std::string mant = v.get_str(exponent, 10, static_cast<size_t>(digits));
  bool negative = !mant.empty() && mant[0] == '-';
  if (negative) mant.erase(0, 1);
  std::ostringstream os;
  if (negative) os << '-';
  if (exponent > 0 && exponent <= 40) {
    if (static_cast<size_t>(exponent) >= mant.size()) {
      os << mant << std::string(static_cast<size_t>(exponent) - mant.size(), '0');
    } else {
      os << mant.substr(0, static_cast<size_t>(exponent)) << '.' << mant.substr(static_cast<size_t>(exponent));
    }
  } else if (exponent <= 0 && exponent > -40) {
    os << "0." << std::string(static_cast<size_t>(-exponent), '0') << mant;
  } else {
    os << mant[0];
    if (mant.size() > 1) os << '.' << mant.substr(1);
    os << 'e' << (exponent - 1);
  }
  return os.str();
}

std::string Scalar::to_string() const {
  if (!irr_) return c0_.get_str();
  std::ostringstream os;
  bool first = true;
  auto term = [&](const mpq_class& c, const char* unit) {
    if (sgn(c) == 0) return;
    mpq_class mag = ::abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (*unit == '\0') {
      os << mag.get_str();
    } else if (mag == 1) {
      os << unit;
    } else {
      os << mag.get_str() << '*' << unit;
    }
  };
  term(c0_, "");
  term(irr_->first, "a");
  term(irr_->second, "a^2");
  return os.str();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  c0_ += rhs.c0_;
  if (rhs.irr_) {
    if (irr_) {
      irr_->first += rhs.irr_->first;
      irr_->second += rhs.irr_->second;
    } else {
      irr_ = std::make_unique<IrrationalPart>(*rhs.irr_);
    }
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  c0_ -= rhs.c0_;
  if (rhs.irr_) {
    if (irr_) {
      irr_->first -= rhs.irr_->first;
      irr_->second -= rhs.irr_->second;
    } else {
      irr_ = std::make_unique<IrrationalPart>(-rhs.irr_->first, -rhs.irr_->second);
    }
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!irr_ && !rhs.irr_) {
    c0_ *= rhs.c0_;
    return *this;
  }
  if (!rhs.irr_) {
    c0_ *= rhs.c0_;
    irr_->first *= rhs.c0_;
    irr_->second *= rhs.c0_;
    normalize();
    return *this;
  }
  if (!irr_) {
    mpq_class k = c0_;
    c0_ = k * rhs.c0_;
    irr_ = std::make_unique<IrrationalPart>(k * rhs.irr_->first, k * rhs.irr_->second);
    normalize();
    return *this;
  }
  const mpq_class& x0 = c0_;
  const mpq_class& x1 = irr_->first;
  const mpq_class& x2 = irr_->second;
  const mpq_class& y0 = rhs.c0_;
  const mpq_class& y1 = rhs.irr_->first;
  const mpq_class& y2 = rhs.irr_->second;
  // Coefficients of 1, a, ..., a^4, then a^3 = 1 - a - a^2 and a^4 = 2a - 1.
  mpq_class e0 = x0 * y0;
  mpq_class e1 = x0 * y1 + x1 * y0;
  mpq_class e2 = x0 * y2 + x1 * y1 + x2 * y0;
  mpq_class e3 = x1 * y2 + x2 * y1;
  mpq_class e4 = x2 * y2;
  c0_ = e0 + e3 - e4;
  irr_->first = e1 - e3 + 2 * e4;
  irr_->second = e2 - e3;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (!rhs.irr_) {
    c0_ /= rhs.c0_;
    if (irr_) {
      irr_->first /= rhs.c0_;
      irr_->second /= rhs.c0_;
    }
    return *this;
  }
  // Inverse of y from its multiplication matrix on the basis (1, a, a^2):
  // columns are y, y*a, y*a^2. Solve M z = e_1 by Cramer's rule.
  const mpq_class& y0 = rhs.c0_;
  const mpq_class& y1 = rhs.irr_->first;
  const mpq_class& y2 = rhs.irr_->second;
  mpq_class ya0 = y2, ya1 = y0 - y2, ya2 = y1 - y2;
  mpq_class yb0 = ya2, yb1 = ya0 - ya2, yb2 = ya1 - ya2;
  // M = [[y0, ya0, yb0], [y1, ya1, yb1], [y2, ya2, yb2]]
  mpq_class det = y0 * (ya1 * yb2 - yb1 * ya2) - ya0 * (y1 * yb2 - yb1 * y2) + yb0 * (y1 * ya2 - ya1 * y2);
  mpq_class z0 = (ya1 * yb2 - yb1 * ya2) / det;
  mpq_class z1 = -(y1 * yb2 - yb1 * y2) / det;
  mpq_class z2 = (y1 * ya2 - ya1 * y2) / det;
  return *this *= Scalar::cubic(z0, z1, z2);
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.c0_ = -r.c0_;
  if (r.irr_) {
    r.irr_->first = -r.irr_->first;
    r.irr_->second = -r.irr_->second;
  }
  return r;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (static_cast<bool>(x.irr_) != static_cast<bool>(y.irr_)) return false;
  if (x.c0_ != y.c0_) return false;
  return !x.irr_ || *x.irr_ == *y.irr_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  if (!x.irr_ && !y.irr_) {
    int c = cmp(x.c0_, y.c0_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Compare float estimates first; only near-ties pay for the exact difference.
  double mx = 0;
  double my = 0;
  const double ex = x.estimate(mx);
  const double ey = y.estimate(my);
  const double err = (mx + my) * 0x1p-44;
  if (std::isfinite(ex) && std::isfinite(ey) && std::isfinite(err) && mx + my > 1e-250) {
    if (ex - ey > err) return std::strong_ordering::greater;
    if (ey - ex > err) return std::strong_ordering::less;
  }
  if (x == y) return std::strong_ordering::equal;
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Scalar min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
Scalar max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace ietrel
