#pragma once

// Independent helpers for tests: a minimal fraction type that shares no code
// with nodalk::Rat, seeded generators, and scratch files.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>

#include "nodalk/rational.hpp"

namespace testing {

struct Frac {
  long long p = 0;
  long long q = 1;

  Frac(long long num = 0, long long den = 1) : p(num), q(den) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
  }

  friend bool operator<(const Frac& a, const Frac& b) { return a.p * b.q < b.p * a.q; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.p * b.q <= b.p * a.q; }
  friend bool operator==(const Frac& a, const Frac& b) { return a.p == b.p && a.q == b.q; }
  friend Frac operator+(const Frac& a, const Frac& b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator-(const Frac& a, const Frac& b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.p * b.p, a.q * b.q}; }
};

inline bool same(const nodalk::Rat& r, const Frac& f) { return r.num() == f.p && r.den() == f.q; }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline nodalk::Rat random_rat(long long bound = 50) {
  long long den = uniform(1, bound);
  return nodalk::Rat(uniform(-bound, bound), den);
}

inline nodalk::RatInterval random_interval() {
  if (uniform(0, 9) == 0)
    return nodalk::RatInterval::empty_set();
  nodalk::Rat a(uniform(-6, 6), uniform(1, 4));
  nodalk::Rat b(uniform(-6, 6), uniform(1, 4));
  if (b < a)
    std::swap(a, b);
  return nodalk::RatInterval::make(a, uniform(0, 1) == 1, b, uniform(0, 1) == 1);
}

inline std::string write_temp(const std::string& name, const std::string& body) {
  auto dir = std::filesystem::temp_directory_path() / "nodalk_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

} // namespace testing
