#include "nodalk/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace nodalk {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow in addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError("integer overflow in subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow in multiplication");
  return out;
}

namespace {

// Normalizes a 128-bit fraction and narrows it back to int64.
void normalize_into(__int128 num, __int128 den, std::int64_t& out_num,
                    std::int64_t& out_den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr __int128 kMax = INT64_MAX;
  constexpr __int128 kMin = INT64_MIN;
  if (num > kMax || num < kMin || den > kMax)
    throw OverflowError("rational result exceeds 64-bit range");
  out_num = static_cast<std::int64_t>(num);
  out_den = static_cast<std::int64_t>(den);
}

} // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  normalize_into(num, den, num_, den_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = checked_sub(0, num_);
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  normalize_into(n, d, num_, den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  normalize_into(n, d, num_, den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0)
    throw std::domain_error("rational division by zero");
  __int128 n = static_cast<__int128>(num_) * o.den_;
  __int128 d = static_cast<__int128>(den_) * o.num_;
  normalize_into(n, d, num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  // Denominators are positive so cross-multiplication preserves order.
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::strong_ordering rat_cmp(const Rat& a, const Rat& b) { return a <=> b; }

std::string Rat::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+')
      s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
      throw OverflowError("rational literal out of range: " + std::string(text));
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rat Rat::mediant(const Rat& a, const Rat& b) {
  return Rat(checked_add(a.num_, b.num_), checked_add(a.den_, b.den_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

RatInterval RatInterval::make(Rat lo, bool lo_closed, Rat hi, bool hi_closed) {
  RatInterval out;
  auto c = lo <=> hi;
  if (c > 0)
    return out;
  if (c == 0 && !(lo_closed && hi_closed))
    return out;
  out.lo_ = lo;
  out.hi_ = hi;
  out.lo_closed_ = lo_closed;
  out.hi_closed_ = hi_closed;
  out.empty_ = false;
  return out;
}

bool RatInterval::contains(const Rat& x) const {
  if (empty_)
    return false;
  bool above = lo_closed_ ? x >= lo_ : x > lo_;
  bool below = hi_closed_ ? x <= hi_ : x < hi_;
  return above && below;
}

bool RatInterval::subset_of(const RatInterval& other) const {
  return interval_intersect(*this, other) == *this;
}

RatInterval RatInterval::interior() const {
  if (empty_)
    return {};
  return open(lo_, hi_);
}

std::string RatInterval::str() const {
  if (empty_)
    return "empty";
  std::string s;
  s += lo_closed_ ? '[' : '(';
  s += lo_.str();
  s += ", ";
  s += hi_.str();
  s += hi_closed_ ? ']' : ')';
  return s;
}

RatInterval interval_intersect(const RatInterval& a, const RatInterval& b) {
  if (a.empty() || b.empty())
    return {};

  Rat lo;
  bool lo_closed;
  auto cl = a.lo() <=> b.lo();
  if (cl > 0) {
    lo = a.lo();
    lo_closed = a.lo_closed();
  } else if (cl < 0) {
    lo = b.lo();
    lo_closed = b.lo_closed();
  } else {
    lo = a.lo();
    lo_closed = a.lo_closed() && b.lo_closed();
  }

  Rat hi;
  bool hi_closed;
  auto ch = a.hi() <=> b.hi();
  if (ch < 0) {
    hi = a.hi();
    hi_closed = a.hi_closed();
  } else if (ch > 0) {
    hi = b.hi();
    hi_closed = b.hi_closed();
  } else {
    hi = a.hi();
    hi_closed = a.hi_closed() && b.hi_closed();
  }
  return RatInterval::make(lo, lo_closed, hi, hi_closed);
}

std::ostream& operator<<(std::ostream& os, const RatInterval& r) {
  return os << r.str();
}

RatInterval unit_at_most(const Rat& bound, bool strict) {
  if (bound >= Rat(1))
    return RatInterval::unit_open();
  return RatInterval::make(Rat(0), false, bound, !strict);
}

RatInterval unit_at_least(const Rat& bound, bool strict) {
  if (bound <= Rat(0))
    return RatInterval::unit_open();
  return RatInterval::make(bound, !strict, Rat(1), false);
}

} // namespace nodalk
