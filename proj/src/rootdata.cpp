#include "affadm/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace affadm {

namespace {

// rank over Q of a list of vectors
int rat_rank(std::vector<Point> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t rix = 0;
  for (size_t c = 0; c < cols && rix < rows.size(); ++c) {
    size_t piv = rix;
    while (piv < rows.size() && rows[piv][c] == Rat(0)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rix], rows[piv]);
    for (size_t r = rix + 1; r < rows.size(); ++r) {
      if (rows[r][c] == Rat(0)) continue;
      Rat f = rows[r][c] / rows[rix][c];
      for (size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[rix][cc];
    }
    ++rix;
    ++rank;
  }
  return rank;
}

}  // namespace

Context::Context(GroupKind kind) : kind_(kind), n_(kind.n()) {
  build_dirs();
  build_walls();
}

std::vector<VertexLabel> Context::point_labels() const {
  std::vector<VertexLabel> out;
  for (int k = 0; k <= m(); ++k) out.emplace_back(k);
  if (kind_.family == Family::TypeD) {
    out.emplace_back(0, true);
    out.emplace_back(m(), true);
  } else if (kind_.family == Family::TypeB) {
    out.emplace_back(0, true);
  }
  return out;
}

std::vector<VertexLabel> Context::vertex_labels() const {
  std::vector<VertexLabel> out;
  switch (kind_.family) {
    case Family::TypeD:
      out.emplace_back(0);
      out.emplace_back(0, true);
      for (int k = 2; k <= m() - 2; ++k) out.emplace_back(k);
      out.emplace_back(m());
      out.emplace_back(m(), true);
      break;
    case Family::TypeB:
      out.emplace_back(0);
      out.emplace_back(0, true);
      for (int k = 2; k <= m(); ++k) out.emplace_back(k);
      break;
    case Family::TypeGU:
      // mirror image of the TypeB vertex list under the k |-> m-k transport:
      // a_{m-1} is only an edge midpoint, and a primed vertex appears at m
      for (int k = 0; k <= m() - 2; ++k) out.emplace_back(k);
      out.emplace_back(m());
      out.emplace_back(m(), true);
      break;
  }
  return out;
}

Point Context::point(const VertexLabel& label) const {
  int k = label.k;
  if (!label.prime) {
    if (k < 0 || k > m())
      throw std::invalid_argument("base_point: unknown label " + label.str());
    // a_k = ((-1/2)^(k), 0^(n-2k), (1/2)^(k))
    Point p(n_, Rat(0));
    for (int j = 0; j < k; ++j) {
      p[j] = Rat(-1, 2);
      p[dual(n_, j)] = Rat(1, 2);
    }
    return p;
  }
  if (k == 0 && kind_.family != Family::TypeGU) {
    Point p(n_, Rat(0));
    p[0] = Rat(-1);
    p[n_ - 1] = Rat(1);
    return p;
  }
  if (k == m() && kind_.family != Family::TypeB) {
    // ((-1/2)^(m-1), 1/2, -1/2, (1/2)^(m-1)); for TypeGU this is the image
    // of the TypeB vertex a_{0'} under the transport
    Point p = point(VertexLabel(m()));
    std::swap(p[m() - 1], p[m()]);
    return p;
  }
  throw std::invalid_argument("base_point: unknown label " + label.str());
}

void Context::build_dirs() {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (j == dual(n_, i)) continue;
      // class representative: (i,j) vs (j*, i*)
      int ci = dual(n_, j), cj = dual(n_, i);
      if (std::make_pair(ci, cj) < std::make_pair(i, j)) continue;
      dirs_.push_back(RootDir{i, j, false});
    }
  if (kind_.family == Family::TypeGU) {
    for (int i = 0; i < m(); ++i) dirs_.push_back(RootDir{i, dual(n_, i), true});
  }
}

void Context::build_walls() {
  // interior reference point: barycenter of the vertex points
  auto verts = vertex_labels();
  Point bary(n_, Rat(0));
  for (auto& vl : verts) bary = bary + point(vl);
  for (auto& c : bary) c = c / Rat(static_cast<long long>(verts.size()));
  interior_ = bary;

  for (auto& d : dirs_) {
    Rat a = alpha(d, interior_);
    long long step = level_step(d), off = level_offset(d);
    // strict interiority of the reference point
    if (a.is_integer() && (a.num - off) % step == 0)
      throw std::logic_error("interior point lies on a hyperplane");
    // adjacent levels around the interior point
    Rat t = (a - Rat(off)) / Rat(step);
    long long klo = t.floor_ll(), khi = klo + 1;
    for (long long k : {klo, khi}) {
      long long level = off + k * step;
      std::vector<Point> rows;
      Point base;
      int off_count = 0;
      for (auto& vl : verts) {
        Point b = point(vl);
        if (alpha(d, b) == Rat(level)) {
          if (base.empty())
            base = b;
          else
            rows.push_back(b - base);
        } else {
          ++off_count;
          Rat val = alpha(d, b);
          if (val < Rat(std::min(level, off + klo * step)) ||
              val > Rat(std::max(level, off + khi * step)))
            throw std::logic_error("vertex beyond adjacent levels");
        }
      }
      if (base.empty() || off_count == 0) continue;
      rows.push_back(Point(n_, Rat(1)));  // the line direction (1,...,1)
      if (rat_rank(rows) == m()) walls_.push_back(Wall{d, level});
    }
  }
}

IntVec Context::coroot(const RootDir& d) const {
  IntVec c(n_, 0);
  if (d.star) {
    c[d.i] += 1;
    c[dual(n_, d.i)] -= 1;
    return c;
  }
  int mid = (kind_.family == Family::TypeB) ? m() : -1;
  if (d.i == mid) {
    c[d.j] -= 2;
    c[dual(n_, d.j)] += 2;
    return c;
  }
  if (d.j == mid) {
    c[d.i] += 2;
    c[dual(n_, d.i)] -= 2;
    return c;
  }
  c[d.i] += 1;
  c[d.j] -= 1;
  c[dual(n_, d.j)] += 1;
  c[dual(n_, d.i)] -= 1;
  return c;
}

SignedPerm Context::dir_perm(const RootDir& d) const {
  auto p = SignedPerm::identity(n_);
  auto swap2 = [&](int a, int b) { std::swap(p.img[a], p.img[b]); };
  int mid = (kind_.family == Family::TypeB) ? m() : -1;
  if (d.star || d.j == mid) {
    swap2(d.i, dual(n_, d.i));
  } else if (d.i == mid) {
    swap2(d.j, dual(n_, d.j));
  } else {
    swap2(d.i, d.j);
    swap2(dual(n_, d.i), dual(n_, d.j));
  }
  return p;
}

bool Context::in_lattice(const IntVec& v) const {
  if (static_cast<int>(v.size()) != n_) return false;
  int d = 0;
  if (!pair_sums_constant(v, &d)) return false;
  if (kind_.family == Family::TypeGU && d % 2 != 0) return false;
  return true;
}

bool Context::in_coroot_lattice(const IntVec& v) const {
  if (kind_.family == Family::TypeGU)
    throw std::invalid_argument(
        "in_coroot_lattice: use the Kottwitz invariant for TypeGU");
  if (static_cast<int>(v.size()) != n_) return false;
  for (int j = 0; j < n_; ++j)
    if (v[j] + v[dual(n_, j)] != 0) return false;
  int s = 0;
  for (int j = 0; j < m(); ++j) s += v[j];
  return s % 2 == 0;
}

bool Context::congruent_mod_coroot(const IntVec& u, const IntVec& v) const {
  return in_coroot_lattice(u - v);
}

bool Context::in_alcove_closure(const Point& p) const {
  for (auto& d : dirs_) {
    Rat a = alpha(d, interior_);
    long long step = level_step(d), off = level_offset(d);
    Rat t = (a - Rat(off)) / Rat(step);
    long long lo = off + t.floor_ll() * step;
    long long hi = lo + step;
    Rat val = alpha(d, p);
    if (val < Rat(lo) || val > Rat(hi)) return false;
  }
  return true;
}

std::vector<SignedPerm> Context::finite_weyl_generators() const {
  std::vector<SignedPerm> gens;
  auto starred_swap = [&](int a, int b) {
    auto p = SignedPerm::identity(n_);
    std::swap(p.img[a], p.img[b]);
    int as = dual(n_, a), bs = dual(n_, b);
    if (as != a || bs != b) {
      if (!(as == b && bs == a)) std::swap(p.img[as], p.img[bs]);
    }
    return p;
  };
  for (int i = 0; i + 1 < m(); ++i) gens.push_back(starred_swap(i, i + 1));
  switch (kind_.family) {
    case Family::TypeD:
      // reflection in e_{m-1} + e_m: (m-2, m)(m-1, m+1) in 0-based indices
      if (m() >= 2) {
        auto p = SignedPerm::identity(n_);
        std::swap(p.img[m() - 2], p.img[m()]);
        std::swap(p.img[m() - 1], p.img[m() + 1]);
        gens.push_back(p);
      }
      break;
    case Family::TypeB:
      gens.push_back(starred_swap(m() - 1, m() + 1));
      break;
    case Family::TypeGU:
      gens.push_back(starred_swap(m() - 1, m()));
      break;
  }
  return gens;
}

const std::vector<SignedPerm>& Context::finite_weyl() const {
  if (!finite_weyl_.empty()) return finite_weyl_;
  auto gens = finite_weyl_generators();
  std::set<std::vector<int>> seen;
  std::queue<SignedPerm> q;
  auto id = SignedPerm::identity(n_);
  seen.insert(id.img);
  q.push(id);
  while (!q.empty()) {
    SignedPerm w = q.front();
    q.pop();
    finite_weyl_.push_back(w);
    for (auto& g : gens) {
      SignedPerm x = g * w;
      if (seen.insert(x.img).second) q.push(x);
    }
  }
  return finite_weyl_;
}

bool Context::element_valid(const WeylElt& w, std::string* why) const {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.kind != kind_) return fail("kind mismatch");
  if (static_cast<int>(w.v.size()) != n_ || w.s.n() != n_)
    return fail("wrong dimension");
  if (!w.s.is_permutation() || !w.s.is_star())
    return fail("linear part not in S_n^*");
  if (kind_.family == Family::TypeD && !w.s.is_even())
    return fail("linear part not even");
  if (!in_lattice(w.v)) return fail("translation part not in the lattice");
  return true;
}

void Context::require_valid(const WeylElt& w) const {
  std::string why;
  if (!element_valid(w, &why))
    throw std::invalid_argument("invalid element: " + why);
}

Point base_point(const Context& ctx, const VertexLabel& label) {
  return ctx.point(label);
}

bool in_coroot_lattice(const Context& ctx, const IntVec& v) {
  return ctx.in_coroot_lattice(v);
}

std::vector<IntVec> weyl_orbit(const Context& ctx, const IntVec& mu) {
  if (!ctx.in_lattice(mu))
    throw std::invalid_argument("weyl_orbit: mu not in the lattice");
  std::set<IntVec> orbit;
  std::queue<IntVec> q;
  orbit.insert(mu);
  q.push(mu);
  auto gens = ctx.finite_weyl_generators();
  while (!q.empty()) {
    IntVec v = q.front();
    q.pop();
    for (auto& g : gens) {
      IntVec w = g.permute(v);
      if (orbit.insert(w).second) q.push(w);
    }
  }
  return std::vector<IntVec>(orbit.begin(), orbit.end());
}

}  // namespace affadm
