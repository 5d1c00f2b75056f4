// Test-only independent oracles: reduced-word machinery over the simple
// (wall) reflections, brute-force convex hull membership, and random element
// generation.  Nothing here may call the geometric Bruhat comparison.
#pragma once

#include <deque>
#include <functional>
#include <map>
#include <random>

#include "affadm/bruhat.hpp"

namespace affadm::oracles {

// Word lengths over the wall reflections, by breadth-first search in W_aff
// from the identity (left Cayley graph).  Independent of the hyperplane-
// counting length.
struct WordTable {
  std::vector<WeylElt> simples;
  std::map<WeylElt, int> len;

  WordTable(const Context& ctx, int bound) {
    for (auto& w : ctx.walls())
      simples.push_back(reflection(ctx, w.dir, w.level));
    WeylElt id = WeylElt::identity(ctx.kind());
    std::deque<std::pair<WeylElt, int>> queue{{id, 0}};
    len.emplace(id, 0);
    while (!queue.empty()) {
      auto [w, l] = queue.front();
      queue.pop_front();
      if (l == bound) continue;
      for (auto& s : simples) {
        WeylElt x = s * w;
        if (len.emplace(x, l + 1).second) queue.emplace_back(x, l + 1);
      }
    }
  }

  bool contains(const WeylElt& w) const { return len.count(w) > 0; }
  int length(const WeylElt& w) const { return len.at(w); }
};

// Classical recursive Bruhat comparison from the lifting property; valid for
// elements of W_aff whose whole chain stays inside the table.
inline bool subword_leq(const WordTable& T, const WeylElt& w,
                        const WeylElt& x) {
  if (w == x) return true;
  int lw = T.length(w), lx = T.length(x);
  if (lw >= lx) return false;
  if (lx == 0) return false;
  for (auto& s : T.simples) {
    WeylElt sx = s * x;
    if (T.length(sx) < lx) {
      WeylElt sw = s * w;
      if (T.length(sw) < lw) return subword_leq(T, sw, sx);
      return subword_leq(T, w, sx);
    }
  }
  throw std::logic_error("subword_leq: element of positive length with no descent");
}

// One length-zero element per Kottwitz class with |d| <= dmax.
inline std::vector<WeylElt> omega_reps(const Context& ctx, int dmax) {
  std::map<std::pair<long long, int>, WeylElt> found;
  int n = ctx.n(), m = ctx.m();
  for (int d = -dmax; d <= dmax; ++d) {
    if (n % 2 == 1 && d % 2 != 0) continue;
    std::vector<int> choice(m, -dmax - 1);
    while (true) {
      IntVec v(n, 0);
      for (int j = 0; j < m; ++j) {
        v[j] = choice[j];
        v[dual(n, j)] = d - choice[j];
      }
      if (n % 2 == 1) v[m] = d / 2;
      if (ctx.in_lattice(v)) {
        for (auto& s : ctx.finite_weyl()) {
          WeylElt w(ctx.kind(), v, s);
          auto cls = kottwitz(ctx, w);
          if (!found.count(cls) && length(ctx, w) == 0) found.emplace(cls, w);
        }
      }
      int j = 0;
      while (j < m && choice[j] == dmax + 1) choice[j++] = -dmax - 1;
      if (j == m) break;
      ++choice[j];
    }
  }
  std::vector<WeylElt> out;
  for (auto& kv : found) out.push_back(kv.second);
  return out;
}

// all elements of length <= bound in the coset W_aff * omega_rep
inline std::vector<WeylElt> length_ball(const Context& ctx,
                                        const WeylElt& omega_rep, int bound) {
  std::vector<WeylElt> walls;
  for (auto& w : ctx.walls()) walls.push_back(reflection(ctx, w.dir, w.level));
  EltSet seen{omega_rep};
  std::vector<WeylElt> out{omega_rep};
  std::deque<WeylElt> queue{omega_rep};
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    for (auto& s : walls) {
      WeylElt x = s * w;
      if (length(ctx, x) > bound) continue;
      if (seen.insert(x).second) {
        out.push_back(x);
        queue.push_back(x);
      }
    }
  }
  return out;
}

// random element of the extended group with translation entries in
// [-spread, spread+d]
inline WeylElt random_element(const Context& ctx, std::mt19937& rng,
                              int spread = 2, int d = 2) {
  int n = ctx.n(), m = ctx.m();
  std::uniform_int_distribution<int> entry(-spread, spread + d);
  IntVec v(n, 0);
  while (true) {
    for (int j = 0; j < m; ++j) {
      v[j] = entry(rng);
      v[dual(n, j)] = d - v[j];
    }
    if (n % 2 == 1) {
      if (d % 2 != 0) throw std::invalid_argument("odd d for odd n");
      v[m] = d / 2;
    }
    if (ctx.in_lattice(v)) break;
  }
  const auto& W = ctx.finite_weyl();
  std::uniform_int_distribution<size_t> pick(0, W.size() - 1);
  return WeylElt(ctx.kind(), v, W[pick(rng)]);
}

// raw convex-hull membership from the defining half-space family:
// lambda . v <= lambda_i . mu for every i and every lambda in S_n^* lambda_i
inline bool hull_raw(const Context& ctx, const IntVec& mu, const Point& v) {
  int n = ctx.n();
  for (int j = 0; j < n; ++j)
    if (v[j] + v[dual(n, j)] != Rat(2)) return false;
  int q = 0;
  while (q < n && mu[q] == 2) ++q;
  for (int i = 1; i <= ctx.m(); ++i) {
    long long bound = std::min<long long>(2 * i, i + q);
    // lambda = indicator of sigma({1..i}): exactly the i-subsets S of
    // {1..n} with S and S^* disjoint
    std::vector<int> idx(n);
    for (int j = 0; j < n; ++j) idx[j] = j;
    std::vector<int> comb(i);
    std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
      if (pos == i) {
        for (int a = 0; a < i; ++a)
          for (int b = 0; b < i; ++b)
            if (comb[a] == dual(n, comb[b])) return true;  // skip invalid
        Rat s(0);
        for (int a = 0; a < i; ++a) s += v[comb[a]];
        return s <= Rat(bound);
      }
      for (int j = start; j < n; ++j) {
        comb[pos] = j;
        if (!rec(pos + 1, j + 1)) return false;
      }
      return true;
    };
    if (!rec(0, 0)) return false;
  }
  return true;
}

}  // namespace affadm::oracles
