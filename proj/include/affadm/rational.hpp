#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace affadm {

// Exact rational arithmetic on 64-bit integers.  Every coordinate in this
// project is a fraction with denominator dividing 2(m+2), so the values
// stay microscopic; we still reduce eagerly.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  // floor/ceil with correct behavior on negatives
  long long floor_ll() const {
    long long q = num / den, r = num % den;
    return (r < 0) ? q - 1 : q;
  }
  long long ceil_ll() const {
    long long q = num / den, r = num % den;
    return (r > 0) ? q + 1 : q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
};

// Number of points of the arithmetic progression {offset + step*Z} lying
// strictly between a and b (in either order).
inline long long levels_strictly_between(Rat a, Rat b, long long offset,
                                         long long step) {
  if (b < a) std::swap(a, b);
  // count k with a < offset + k*step < b
  Rat lo = (a - Rat(offset)) / Rat(step);
  Rat hi = (b - Rat(offset)) / Rat(step);
  long long cnt = hi.ceil_ll() - lo.floor_ll() - 1;
  return cnt > 0 ? cnt : 0;
}

}  // namespace affadm
