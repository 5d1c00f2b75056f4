#include "affadm/bruhat.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace affadm {

namespace {

// normalize an (i,j[,star]) pair to the stored direction class, flipping the
// sign of the level when the representative is the negated functional
bool find_dir(const Context& ctx, int i, int j, RootDir* out, int* sign) {
  for (auto& d : ctx.dirs()) {
    if (d.i == i && d.j == j) {
      *out = d;
      *sign = 1;
      return true;
    }
    if (d.i == j && d.j == i) {
      *out = d;
      *sign = -1;
      return true;
    }
    int n = ctx.n();
    if (d.i == dual(n, j) && d.j == dual(n, i)) {
      *out = d;
      *sign = 1;
      return true;
    }
    if (d.i == dual(n, i) && d.j == dual(n, j)) {
      *out = d;
      *sign = -1;
      return true;
    }
  }
  return false;
}

}  // namespace

WeylElt reflection(const Context& ctx, const RootDir& dir, long long level) {
  if ((level - ctx.level_offset(dir)) % ctx.level_step(dir) != 0)
    throw std::invalid_argument("reflection: level not in the level set");
  IntVec cr = ctx.coroot(dir);
  for (int& x : cr) x = static_cast<int>(level) * x;
  return WeylElt(ctx.kind(), std::move(cr), ctx.dir_perm(dir));
}

WeylElt reflection(const Context& ctx, const ReflectionSpec& spec) {
  int n = ctx.n();
  if (spec.i == spec.j || spec.i < 0 || spec.j < 0 || spec.i >= n ||
      spec.j >= n)
    throw std::invalid_argument("reflection: bad index pair");
  if (spec.j == dual(n, spec.i) && ctx.kind().family != Family::TypeGU)
    throw std::invalid_argument("reflection: j = i* only valid for TypeGU");
  RootDir d;
  int sign = 1;
  if (!find_dir(ctx, spec.i, spec.j, &d, &sign))
    throw std::invalid_argument("reflection: no such root direction");
  return reflection(ctx, d, sign * spec.d);
}

int length(const Context& ctx, const WeylElt& w) {
  const Point& p = ctx.interior();
  Point wp = w.apply(p);
  long long total = 0;
  for (auto& d : ctx.dirs()) {
    total += levels_strictly_between(ctx.alpha(d, p), ctx.alpha(d, wp),
                                     ctx.level_offset(d), ctx.level_step(d));
  }
  return static_cast<int>(total);
}

bool reflection_raises(const Context& ctx, const WeylElt& w, const RootDir& dir,
                       long long level) {
  WeylElt r = reflection(ctx, dir, level);
  return length(ctx, r * w) > length(ctx, w);
}

int BruhatEngine::len(const WeylElt& w) {
  auto it = len_memo_.find(w);
  if (it != len_memo_.end()) return it->second;
  int l = length(ctx_, w);
  len_memo_.emplace(w, l);
  return l;
}

std::vector<WeylElt> BruhatEngine::separating_reflections(const WeylElt& w) {
  std::vector<WeylElt> out;
  const Point& p = ctx_.interior();
  Point wp = w.apply(p);
  for (auto& d : ctx_.dirs()) {
    Rat a = ctx_.alpha(d, p), b = ctx_.alpha(d, wp);
    if (b < a) std::swap(a, b);
    long long step = ctx_.level_step(d), off = ctx_.level_offset(d);
    long long klo = ((a - Rat(off)) / Rat(step)).floor_ll() + 1;
    long long khi = ((b - Rat(off)) / Rat(step)).ceil_ll() - 1;
    for (long long k = klo; k <= khi; ++k)
      out.push_back(reflection(ctx_, d, off + k * step));
  }
  return out;
}

std::vector<WeylElt> BruhatEngine::covers_down(const WeylElt& w) {
  std::vector<WeylElt> out;
  int lw = len(w);
  for (auto& r : separating_reflections(w)) {
    WeylElt x = r * w;
    if (len(x) == lw - 1) out.push_back(std::move(x));
  }
  return out;
}

bool BruhatEngine::leq(const WeylElt& w, const WeylElt& x) {
  if (w.kind != x.kind) throw std::invalid_argument("leq: kind mismatch");
  if (w == x) return true;
  if (kottwitz(ctx_, w) != kottwitz(ctx_, x)) return false;
  int lw = len(w);
  if (lw >= len(x)) return false;
  EltSet frontier{x}, seen{x};
  while (!frontier.empty()) {
    EltSet next;
    for (auto& y : frontier) {
      if (len(y) <= lw) continue;
      for (auto& z : covers_down(y)) {
        if (z == w) return true;
        if (seen.insert(z).second) next.insert(z);
      }
    }
    frontier.swap(next);
  }
  return false;
}

EltSet BruhatEngine::lower_set(const std::vector<WeylElt>& seeds) {
  EltSet out;
  std::deque<WeylElt> queue;
  for (auto& s : seeds)
    if (out.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    WeylElt y = queue.front();
    queue.pop_front();
    for (auto& z : covers_down(y))
      if (out.insert(z).second) queue.push_back(z);
  }
  return out;
}

Parahoric::Parahoric(const Context& ctx, const std::vector<VertexLabel>& labels)
    : ctx_(&ctx), labels_(labels) {
  if (labels_.empty()) throw std::invalid_argument("Parahoric: empty label set");
  for (auto& l : labels_) pts_.push_back(ctx.point(l));
  for (auto& wall : ctx.walls()) {
    bool through_all = true;
    for (auto& p : pts_)
      if (ctx.alpha(wall.dir, p) != Rat(wall.level)) {
        through_all = false;
        break;
      }
    if (through_all) gens_.push_back(reflection(ctx, wall.dir, wall.level));
  }
}

Parahoric Parahoric::from_indices(const Context& ctx, const std::set<int>& I) {
  std::vector<VertexLabel> labels;
  for (int k : I) {
    if (k < 0 || k > ctx.m())
      throw std::invalid_argument("Parahoric: index out of range");
    labels.emplace_back(k);
  }
  return Parahoric(ctx, labels);
}

const std::vector<WeylElt>& Parahoric::elements() const {
  if (!elements_.empty()) return elements_;
  EltSet seen;
  std::deque<WeylElt> queue;
  WeylElt id = WeylElt::identity(ctx_->kind());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    elements_.push_back(w);
    for (auto& g : gens_) {
      WeylElt x = g * w;
      if (seen.insert(x).second) queue.push_back(x);
    }
    if (elements_.size() > 2000000)
      throw std::logic_error("Parahoric: group unexpectedly large");
  }
  return elements_;
}

bool Parahoric::fixes_points(const WeylElt& w) const {
  for (auto& p : pts_)
    if (w.apply(p) != p) return false;
  return true;
}

WeylElt min_coset_rep(BruhatEngine& eng, const WeylElt& w, const Parahoric& J,
                      const Parahoric& I) {
  WeylElt cur = w;
  int lcur = eng.len(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& s : J.generators()) {
      WeylElt x = s * cur;
      int lx = eng.len(x);
      if (lx < lcur) {
        cur = std::move(x);
        lcur = lx;
        changed = true;
      }
    }
    for (auto& s : I.generators()) {
      WeylElt x = cur * s;
      int lx = eng.len(x);
      if (lx < lcur) {
        cur = std::move(x);
        lcur = lx;
        changed = true;
      }
    }
  }
  return cur;
}

}  // namespace affadm
