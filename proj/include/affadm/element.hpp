#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "affadm/rational.hpp"

namespace affadm {

enum class Family { TypeB, TypeD, TypeGU };

// One of the three root-datum contexts.  n is the ambient dimension of the
// coordinate vectors: 2m for TypeD and TypeGU, 2m+1 for TypeB.
struct GroupKind {
  Family family = Family::TypeD;
  int m = 2;

  GroupKind() = default;
  GroupKind(Family f, int rank) : family(f), m(rank) {
    int lo = (f == Family::TypeD) ? 2 : 1;
    if (m < lo) throw std::invalid_argument("GroupKind: rank too small");
  }
  int n() const { return family == Family::TypeB ? 2 * m + 1 : 2 * m; }

  friend bool operator==(const GroupKind& a, const GroupKind& b) {
    return a.family == b.family && a.m == b.m;
  }
  friend bool operator!=(const GroupKind& a, const GroupKind& b) {
    return !(a == b);
  }
};

using IntVec = std::vector<int>;
using Point = std::vector<Rat>;  // apartment point, exact coordinates

// 0-based dual index: the involution j <-> n-1-j (j* = n+1-j in 1-based terms)
inline int dual(int n, int j) { return n - 1 - j; }

inline int sum(const IntVec& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

inline IntVec star(const IntVec& v) {
  IntVec w(v.rbegin(), v.rend());
  return w;
}
inline Point star(const Point& p) { return Point(p.rbegin(), p.rend()); }

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec c(a);
  for (size_t j = 0; j < c.size(); ++j) c[j] += b[j];
  return c;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec c(a);
  for (size_t j = 0; j < c.size(); ++j) c[j] -= b[j];
  return c;
}
inline Point operator+(const Point& a, const Point& b) {
  Point c(a);
  for (size_t j = 0; j < c.size(); ++j) c[j] += b[j];
  return c;
}
inline Point operator-(const Point& a, const Point& b) {
  Point c(a);
  for (size_t j = 0; j < c.size(); ++j) c[j] -= b[j];
  return c;
}
inline Point to_point(const IntVec& v) {
  Point p(v.size());
  for (size_t j = 0; j < v.size(); ++j) p[j] = Rat(v[j]);
  return p;
}

// v + v* = d*(1,...,1) for some integer d?  Returns d through out param.
inline bool pair_sums_constant(const IntVec& v, int* d_out = nullptr) {
  int n = static_cast<int>(v.size());
  if (n == 0) return false;
  int d = v[0] + v[n - 1];
  for (int j = 0; j < n; ++j)
    if (v[j] + v[dual(n, j)] != d) return false;
  if (d_out) *d_out = d;
  return true;
}

// The standard vector omega_i = ((-1)^(c), 0^(n-c)) - b*(1,...,1) where
// i = n*b + c, 0 <= c < n.  Total over all integers i.
inline IntVec omega(int n, long long i) {
  long long b = i >= 0 ? i / n : -((-i + n - 1) / n);
  int c = static_cast<int>(i - b * n);
  IntVec v(n, static_cast<int>(-b));
  for (int j = 0; j < c; ++j) v[j] -= 1;
  return v;
}

// Element of S_n^*: sigma(n+1-j) = n+1 - sigma(j), stored as 0-based images.
struct SignedPerm {
  std::vector<int> img;

  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images) : img(std::move(images)) {}
  static SignedPerm identity(int n) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j;
    return SignedPerm(std::move(v));
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int j) const { return img[j]; }

  bool is_permutation() const;
  bool is_star() const;  // sigma(j*) = sigma(j)*
  bool is_even() const;  // even as an element of S_n

  SignedPerm inverse() const {
    std::vector<int> inv(img.size());
    for (int j = 0; j < n(); ++j) inv[img[j]] = j;
    return SignedPerm(std::move(inv));
  }
  // (sigma tau)(j) = sigma(tau(j))
  SignedPerm operator*(const SignedPerm& t) const {
    std::vector<int> c(img.size());
    for (int j = 0; j < n(); ++j) c[j] = img[t.img[j]];
    return SignedPerm(std::move(c));
  }
  // (sigma x)(j) = x(sigma^{-1}(j)), i.e. y[img[j]] = x[j]
  template <class V>
  V permute(const V& x) const {
    V y(x.size());
    for (int j = 0; j < n(); ++j) y[img[j]] = x[j];
    return y;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.img == b.img;
  }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.img < b.img;
  }
};

// w = t_v * sigma in the extended affine Weyl group of the context `kind`.
// The translation part v is mu_0^w = nu_0^w; sigma is the linear part.
struct WeylElt {
  GroupKind kind;
  IntVec v;
  SignedPerm s;

  WeylElt() = default;
  WeylElt(GroupKind k, IntVec tv, SignedPerm sig)
      : kind(k), v(std::move(tv)), s(std::move(sig)) {}

  static WeylElt identity(GroupKind k) {
    return WeylElt(k, IntVec(k.n(), 0), SignedPerm::identity(k.n()));
  }
  static WeylElt translation(GroupKind k, IntVec tv) {
    return WeylElt(k, std::move(tv), SignedPerm::identity(k.n()));
  }

  int n() const { return kind.n(); }
  bool is_translation() const {
    return s == SignedPerm::identity(n());
  }

  IntVec apply(const IntVec& x) const { return v + s.permute(x); }
  Point apply(const Point& x) const { return to_point(v) + s.permute(x); }

  WeylElt operator*(const WeylElt& b) const {
    if (kind != b.kind) throw std::invalid_argument("WeylElt: kind mismatch");
    return WeylElt(kind, v + s.permute(b.v), s * b.s);
  }
  WeylElt inverse() const {
    SignedPerm si = s.inverse();
    IntVec vi = si.permute(v);
    for (int& x : vi) x = -x;
    return WeylElt(kind, std::move(vi), std::move(si));
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.kind == b.kind && a.v == b.v && a.s == b.s;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) {
    return !(a == b);
  }
  friend bool operator<(const WeylElt& a, const WeylElt& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.s < b.s;
  }
};

struct WeylEltHash {
  size_t operator()(const WeylElt& w) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](long long x) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<int>(w.kind.family));
    mix(w.kind.m);
    for (int x : w.v) mix(x);
    for (int x : w.s.img) mix(x);
    return h;
  }
};

}  // namespace affadm
