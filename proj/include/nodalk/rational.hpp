#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nodalk {

/// Raised when an exact integer or rational operation leaves the int64 range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Checked int64 helpers; every slope and window computation goes through these.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/*
 * Exact rational number p/q with q > 0 and gcd(|p|, q) = 1.
 *
 * Storage is fixed-width; every arithmetic operation checks for overflow
 * and throws OverflowError instead of wrapping.  Comparison is carried out
 * in 128-bit arithmetic and is therefore always exact.
 */
class Rat {
public:
  constexpr Rat() = default;
  Rat(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p/q", or "p" when q = 1.
  std::string str() const;
  /// Accepts "p", "p/q" and "-p/q"; the result is normalized.
  static Rat parse(std::string_view text);

  /// Mediant (a+c)/(b+d) of a/b and c/d as written (both already normalized).
  static Rat mediant(const Rat& a, const Rat& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::strong_ordering rat_cmp(const Rat& a, const Rat& b);
std::ostream& operator<<(std::ostream& os, const Rat& r);

/*
 * Interval of rationals with explicit endpoint closure.
 *
 * Valid states: empty, or lo <= hi with both flags closed whenever lo == hi.
 * Construction through make() normalizes degenerate inputs to empty.
 */
class RatInterval {
public:
  RatInterval() = default; // empty

  static RatInterval make(Rat lo, bool lo_closed, Rat hi, bool hi_closed);
  static RatInterval closed(Rat lo, Rat hi) { return make(lo, true, hi, true); }
  static RatInterval open(Rat lo, Rat hi) { return make(lo, false, hi, false); }
  static RatInterval empty_set() { return {}; }
  /// The open unit interval every polarization weight lives in.
  static RatInterval unit_open() { return open(Rat(0), Rat(1)); }

  bool empty() const { return empty_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool contains(const Rat& x) const;
  /// True when every point of this interval lies in other.
  bool subset_of(const RatInterval& other) const;
  RatInterval interior() const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;

  /// "[a, b]", "(a, b]", ... or "empty".
  std::string str() const;

private:
  Rat lo_;
  Rat hi_;
  bool lo_closed_ = false;
  bool hi_closed_ = false;
  bool empty_ = true;
};

RatInterval interval_intersect(const RatInterval& a, const RatInterval& b);
std::ostream& operator<<(std::ostream& os, const RatInterval& r);

/// {w in (0,1) : w <= bound} (or w < bound when strict).
RatInterval unit_at_most(const Rat& bound, bool strict = false);
/// {w in (0,1) : w >= bound} (or w > bound when strict).
RatInterval unit_at_least(const Rat& bound, bool strict = false);

} // namespace nodalk
