#include "affadm/admset.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

namespace affadm {

namespace {

IntVec shape_mu_impl(const Context& ctx, int q) {
  IntVec mu(ctx.n(), 1);
  for (int j = 0; j < q; ++j) {
    mu[j] = 2;
    mu[dual(ctx.n(), j)] = 0;
  }
  return mu;
}

int worker_count() {
  if (const char* env = std::getenv("AFFADM_THREADS")) {
    int k = std::atoi(env);
    if (k >= 1) return k;
  }
  return 1;
}

// sorted unique min-rep projection of a set of elements
std::vector<WeylElt> project_minreps(BruhatEngine& eng,
                                     const std::vector<WeylElt>& elts,
                                     const Parahoric& J, const Parahoric& I) {
  std::set<WeylElt> out;
  for (auto& w : elts) out.insert(min_coset_rep(eng, w, J, I));
  return std::vector<WeylElt>(out.begin(), out.end());
}

}  // namespace

bool level_conditions_hold(const Context& ctx, const std::set<int>& I) {
  if (I.empty()) return false;
  for (int k : I)
    if (k < 0 || k > ctx.m()) return false;
  switch (ctx.kind().family) {
    case Family::TypeD:
      if (I.count(1) && !I.count(0)) return false;
      if (I.count(ctx.m() - 1) && !I.count(ctx.m())) return false;
      return true;
    case Family::TypeB:
      return !(I.count(1) && !I.count(0));
    case Family::TypeGU:
      return !(I.count(ctx.m() - 1) && !I.count(ctx.m()));
  }
  return false;
}

std::vector<std::set<int>> all_valid_levels(const Context& ctx) {
  std::vector<std::set<int>> out;
  int m = ctx.m();
  for (unsigned mask = 1; mask < (1u << (m + 1)); ++mask) {
    std::set<int> I;
    for (int k = 0; k <= m; ++k)
      if (mask & (1u << k)) I.insert(k);
    if (level_conditions_hold(ctx, I)) out.push_back(std::move(I));
  }
  return out;
}

std::vector<VertexLabel> minimal_facet_labels(const Context& ctx,
                                              const std::set<int>& I) {
  // walls through all the points a_k, k in I
  std::vector<Wall> through;
  std::vector<Point> pts;
  for (int k : I) pts.push_back(ctx.point(VertexLabel(k)));
  for (auto& w : ctx.walls()) {
    bool all = true;
    for (auto& p : pts)
      if (ctx.alpha(w.dir, p) != Rat(w.level)) {
        all = false;
        break;
      }
    if (all) through.push_back(w);
  }
  // vertex lines on every wall through the facet
  std::vector<VertexLabel> out;
  for (auto& vl : ctx.vertex_labels()) {
    Point b = ctx.point(vl);
    bool on_all = true;
    for (auto& w : through)
      if (ctx.alpha(w.dir, b) != Rat(w.level)) {
        on_all = false;
        break;
      }
    if (on_all) out.push_back(vl);
  }
  return out;
}

bool AdmReport::contains(BruhatEngine& eng, const WeylElt& w) const {
  Parahoric PJ = Parahoric::from_indices(eng.context(), J);
  Parahoric PI = Parahoric::from_indices(eng.context(), I);
  WeylElt r = min_coset_rep(eng, w, PJ, PI);
  return std::binary_search(reps.begin(), reps.end(), r);
}

int shape_q(const Context& ctx, const IntVec& mu) {
  if (ctx.kind().family == Family::TypeGU)
    throw UnsupportedCocharacter("shape_q: GU handled via its B_m transport");
  int n = ctx.n();
  if (static_cast<int>(mu.size()) != n)
    throw UnsupportedCocharacter("cocharacter has wrong length");
  int q = 0;
  while (q < n && mu[q] == 2) ++q;
  IntVec expect = shape_mu_impl(ctx, q);
  if (mu != expect)
    throw UnsupportedCocharacter("cocharacter not of the form (2^q,1^...,0^q)");
  int qmax = ctx.kind().family == Family::TypeD ? ctx.m() - 1 : ctx.m();
  if (q > qmax)
    throw UnsupportedCocharacter(
        "cocharacter outside the range covered by the theorems");
  return q;
}

IntVec shape_mu(const Context& ctx, int q) {
  int qmax = ctx.kind().family == Family::TypeD ? ctx.m() - 1 : ctx.m();
  if (q < 0 || q > qmax) throw UnsupportedCocharacter("q out of range");
  return shape_mu_impl(ctx, q);
}

bool sp1_nu(const Point& nu) {
  int n = static_cast<int>(nu.size());
  for (int j = 0; j < n; ++j) {
    if (nu[j] < Rat(0) || nu[j] > Rat(2)) return false;
    if (nu[j] + nu[dual(n, j)] != Rat(2)) return false;
  }
  return true;
}

int c_from_nu(const Point& nu) {
  int twos = 0, nonint = 0;
  for (auto& c : nu) {
    if (c == Rat(2)) ++twos;
    if (!c.is_integer()) ++nonint;
  }
  return twos + nonint / 4;
}

bool sp2_nu(const Point& nu, int q) { return c_from_nu(nu) <= q; }

bool sp3_nu(const Context& ctx, const Point& nu, const IntVec& mu, int k) {
  if (!is_integral(nu)) return true;
  IntVec v = to_intvec(nu);
  if (ctx.congruent_mod_coroot(v, mu)) return true;
  int n = ctx.n();
  bool a_witness = false;
  for (int j : set_A(n, k))
    if (v[j] == 1) {
      a_witness = true;
      break;
    }
  if (!a_witness) return false;
  if (ctx.kind().family == Family::TypeB) return true;
  for (int j : set_B(n, k))
    if (v[j] == 1) return true;
  return false;
}

std::vector<IntVec> pool_translations(const Context& ctx, int lo, int hi) {
  int n = ctx.n(), m = ctx.m();
  std::vector<IntVec> out;
  IntVec v(n, 1);  // middle entry (TypeB) is pinned to 1 by v + v* = 2
  std::vector<int> choice(m, lo);
  while (true) {
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      int a = choice[j], b = 2 - a;
      if (b < lo || b > hi) {
        ok = false;
        break;
      }
      v[j] = a;
      v[dual(n, j)] = b;
    }
    if (ok && ctx.in_lattice(v)) out.push_back(v);
    int j = 0;
    while (j < m && choice[j] == hi) choice[j++] = lo;
    if (j == m) break;
    ++choice[j];
  }
  return out;
}

std::vector<WeylElt> candidate_pool(const Context& ctx, int lo, int hi) {
  std::vector<WeylElt> out;
  for (auto& v : pool_translations(ctx, lo, hi))
    for (auto& s : ctx.finite_weyl()) out.emplace_back(ctx.kind(), v, s);
  return out;
}

namespace {

// chunked parallel filter over a candidate vector
std::vector<WeylElt> filter_pool(const std::vector<WeylElt>& pool,
                                 const std::function<bool(const WeylElt&)>& keep) {
  int workers = worker_count();
  if (workers <= 1 || pool.size() < 512) {
    std::vector<WeylElt> out;
    for (auto& w : pool)
      if (keep(w)) out.push_back(w);
    return out;
  }
  std::vector<std::vector<WeylElt>> parts(workers);
  std::vector<std::thread> threads;
  size_t chunk = (pool.size() + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&, t]() {
      size_t b = t * chunk, e = std::min(pool.size(), b + chunk);
      for (size_t i = b; i < e; ++i)
        if (keep(pool[i])) parts[t].push_back(pool[i]);
    });
  }
  for (auto& th : threads) th.join();
  std::vector<WeylElt> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

AdmReport admissible_set(const Context& ctx, const IntVec& mu,
                         const std::set<int>& I, const std::set<int>& J) {
  if (!ctx.in_lattice(mu))
    throw std::invalid_argument("admissible_set: mu not in the lattice");
  BruhatEngine eng(ctx);
  std::vector<WeylElt> seeds;
  for (auto& lam : weyl_orbit(ctx, mu))
    seeds.push_back(WeylElt::translation(ctx.kind(), lam));
  EltSet lower = eng.lower_set(seeds);
  Parahoric PJ = Parahoric::from_indices(ctx, J);
  Parahoric PI = Parahoric::from_indices(ctx, I);
  std::vector<WeylElt> all(lower.begin(), lower.end());
  AdmReport rep{ctx.kind(), mu, I, J, "bruhat-closure",
                project_minreps(eng, all, PJ, PI)};
  return rep;
}

AdmReport spin_permissible_set(const Context& ctx, const IntVec& mu,
                               const std::set<int>& I, const std::set<int>& J) {
  int q = shape_q(ctx, mu);
  BruhatEngine eng(ctx);
  WeylElt tmu = WeylElt::translation(ctx.kind(), mu);
  auto kmu = kottwitz(ctx, tmu);
  auto pool = candidate_pool(ctx, 0, 2);
  auto keep = [&](const WeylElt& w) -> bool {
    if (kottwitz(ctx, w) != kmu) return false;
    for (int k = 0; k <= ctx.m(); ++k) {
      if (!sp1_at(w, k)) return false;  // pool bound gives SP1 at k=0 only
    }
    for (int k : I) {
      Point nu = nu_vector(ctx, w, VertexLabel(k));
      if (!sp2_nu(nu, q)) return false;
      if (!sp3_nu(ctx, nu, mu, k)) return false;
    }
    return true;
  };
  auto kept = filter_pool(pool, keep);
  Parahoric PJ = Parahoric::from_indices(ctx, J);
  Parahoric PI = Parahoric::from_indices(ctx, I);
  return AdmReport{ctx.kind(), mu, I, J, "sp-filter",
                   project_minreps(eng, kept, PJ, PI)};
}

AdmReport permissible_set(const Context& ctx, const IntVec& mu,
                          const std::set<int>& I, const std::set<int>& J) {
  int q = shape_q(ctx, mu);
  BruhatEngine eng(ctx);
  WeylElt tmu = WeylElt::translation(ctx.kind(), mu);
  auto kmu = kottwitz(ctx, tmu);
  int k0 = *I.begin();
  auto pool = candidate_pool(ctx, -k0, 2 + k0);
  std::set<int> spin_here;  // the facets where SP3' participates
  for (int k : I) {
    bool edge = (k == 0 || k == 1);
    if (ctx.kind().family == Family::TypeD)
      edge = edge || k == ctx.m() - 1 || k == ctx.m();
    if (edge) spin_here.insert(k);
  }
  auto keep = [&](const WeylElt& w) -> bool {
    if (kottwitz(ctx, w) != kmu) return false;
    for (int k : I) {
      Point nu = nu_vector(ctx, w, VertexLabel(k));
      if (!sp1_nu(nu) || !sp2_nu(nu, q)) return false;
      if (spin_here.count(k) && !sp3_nu(ctx, nu, mu, k)) return false;
    }
    return true;
  };
  auto kept = filter_pool(pool, keep);
  Parahoric PJ = Parahoric::from_indices(ctx, J);
  Parahoric PI = Parahoric::from_indices(ctx, I);
  return AdmReport{ctx.kind(), mu, I, J, "perm-filter",
                   project_minreps(eng, kept, PJ, PI)};
}

AdmReport permissible_set_raw(const Context& ctx, const IntVec& mu,
                              const std::set<int>& I, const std::set<int>& J) {
  shape_q(ctx, mu);
  BruhatEngine eng(ctx);
  WeylElt tmu = WeylElt::translation(ctx.kind(), mu);
  auto kmu = kottwitz(ctx, tmu);
  int k0 = *I.begin();
  auto pool = candidate_pool(ctx, -k0 - 2, 4 + k0);
  auto facets = minimal_facet_labels(ctx, I);
  std::vector<Point> pts;
  for (auto& vl : facets) pts.push_back(ctx.point(vl));
  auto keep = [&](const WeylElt& w) -> bool {
    if (kottwitz(ctx, w) != kmu) return false;
    for (auto& a : pts)
      if (!in_convex_hull(ctx, mu, nu_point(w, a))) return false;
    return true;
  };
  auto kept = filter_pool(pool, keep);
  Parahoric PJ = Parahoric::from_indices(ctx, J);
  Parahoric PI = Parahoric::from_indices(ctx, I);
  return AdmReport{ctx.kind(), mu, I, J, "perm-hull",
                   project_minreps(eng, kept, PJ, PI)};
}

bool in_convex_hull(const Context& ctx, const IntVec& mu, const Point& v) {
  int q = shape_q(ctx, mu);
  int n = ctx.n(), m = ctx.m();
  if (static_cast<int>(v.size()) != n) return false;
  for (int j = 0; j < n; ++j)
    if (v[j] + v[dual(n, j)] != Rat(2)) return false;
  // the best lambda in S^*_n lambda_i picks the larger entry of each pair;
  // test the sorted partial sums against lambda_i . mu = min(2i, i+q)
  std::vector<Rat> pairmax;
  for (int j = 0; j < m; ++j) {
    Rat a = v[j], b = v[dual(n, j)];
    pairmax.push_back(a > b ? a : b);
  }
  std::sort(pairmax.begin(), pairmax.end(), [](const Rat& a, const Rat& b) {
    return b < a;
  });
  Rat run(0);
  for (int i = 1; i <= m; ++i) {
    run += pairmax[i - 1];
    long long bound = std::min<long long>(2 * i, i + q);
    if (run > Rat(bound)) return false;
  }
  return true;
}

AdmReport vertexwise_admissible_set(const Context& ctx, const IntVec& mu,
                                    const std::set<int>& I,
                                    const std::set<int>& J) {
  if (!ctx.in_lattice(mu))
    throw std::invalid_argument("vertexwise: mu not in the lattice");
  BruhatEngine eng(ctx);
  auto facets = minimal_facet_labels(ctx, I);
  if (facets.empty()) throw std::logic_error("vertexwise: no minimal facets");

  // per-vertex admissible sets (as min-rep sets in W_v \ W~ / W_v)
  std::vector<Parahoric> vertex_groups;
  std::vector<std::vector<WeylElt>> vertex_adm;
  std::vector<WeylElt> seeds;
  for (auto& lam : weyl_orbit(ctx, mu))
    seeds.push_back(WeylElt::translation(ctx.kind(), lam));
  EltSet lower = eng.lower_set(seeds);
  std::vector<WeylElt> lower_v(lower.begin(), lower.end());
  for (auto& vl : facets) {
    Parahoric P(ctx, {vl});
    vertex_adm.push_back(project_minreps(eng, lower_v, P, P));
    vertex_groups.push_back(std::move(P));
  }

  // candidates: everything over the first vertex-admissible set
  Parahoric PJ = Parahoric::from_indices(ctx, J);
  Parahoric PI = Parahoric::from_indices(ctx, I);
  std::set<WeylElt> cands;
  const auto& P0 = vertex_groups[0];
  for (auto& x : vertex_adm[0])
    for (auto& u : P0.elements())
      for (auto& up : P0.elements())
        cands.insert(min_coset_rep(eng, u * x * up, PJ, PI));

  std::set<WeylElt> out;
  for (auto& w : cands) {
    bool ok = true;
    for (size_t a = 0; a < facets.size() && ok; ++a) {
      WeylElt r = min_coset_rep(eng, w, vertex_groups[a], vertex_groups[a]);
      ok = std::binary_search(vertex_adm[a].begin(), vertex_adm[a].end(), r);
    }
    if (ok) out.insert(w);
  }
  return AdmReport{ctx.kind(), mu, I, J, "vertexwise",
                   std::vector<WeylElt>(out.begin(), out.end())};
}

WeylElt theta_transform(const Context& ctx, Theta which) {
  if (ctx.kind().family != Family::TypeD)
    throw std::invalid_argument("theta: TypeD only");
  int n = ctx.n(), m = ctx.m();
  WeylElt t0 = WeylElt::identity(ctx.kind());
  {
    t0.v[0] = -1;
    t0.v[n - 1] = 1;
    std::swap(t0.s.img[0], t0.s.img[n - 1]);
  }
  WeylElt tm = WeylElt::identity(ctx.kind());
  std::swap(tm.s.img[m - 1], tm.s.img[m]);
  switch (which) {
    case Theta::Zero:
      return t0;
    case Theta::M:
      return tm;
    case Theta::ZeroM:
      return t0 * tm;
  }
  throw std::logic_error("theta");
}

WeylElt apply_theta(const Context& ctx, Theta which, const WeylElt& w) {
  WeylElt th = theta_transform(ctx, which);
  WeylElt res = th * w * th.inverse();
  ctx.require_valid(res);
  return res;
}

}  // namespace affadm
