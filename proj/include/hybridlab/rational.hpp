#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hybridlab {

// Exact rational arithmetic on __int128 (enough headroom for every formula in
// this project: values stay far below 2^126 after cross-multiplication).
struct Rat {
  __int128 num = 0;
  __int128 den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
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
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string str() const {
    auto s = [](__int128 v) {
      bool neg = v < 0;
      if (neg) v = -v;
      std::string out;
      do {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      } while (v != 0);
      return neg ? "-" + out : out;
    };
    return den == 1 ? s(num) : s(num) + "/" + s(den);
  }
};

inline Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
inline Rat operator/(const Rat& a, const Rat& b) { return Rat(a.num * b.den, a.den * b.num); }
inline bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
inline bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
inline bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
inline bool operator>(const Rat& a, const Rat& b) { return b < a; }
inline bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

// Nearest rational with the given denominator (exact for the decimal epsilons
// used throughout).
inline Rat rat_from_double(double x, long long den = 1000000) {
  return Rat(static_cast<long long>(std::llround(x * den)), den);
}

// Value a + b*sqrt(r) with rational a, b >= 0 and integer r >= 0.
struct QuadVal {
  Rat a;
  Rat b;
  long long r = 0;

  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(static_cast<double>(r)); }
};

// Exact test: (q.a + q.b*sqrt(q.r)) * d < rhs, for rational d >= 0, rhs.
inline bool quad_times_less(const QuadVal& q, const Rat& d, const Rat& rhs) {
  Rat lhs_rat = q.a * d;
  if (q.b.num == 0 || q.r == 0) return lhs_rat < rhs;
  Rat rem = rhs - lhs_rat;          // need q.b*d*sqrt(r) < rem
  if (rem <= Rat(0)) return false;  // left side is nonnegative
  Rat lhs2 = q.b * q.b * d * d * Rat(q.r);
  return lhs2 < rem * rem;
}

}  // namespace hybridlab
