#include "affadm/steinberg.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace affadm {

IntVec iota(const IntVec& v) {
  int n = static_cast<int>(v.size());
  int mid = n / 2;  // n = 2m+1
  IntVec out;
  out.reserve(n + 1);
  for (int j = 0; j <= mid; ++j) out.push_back(v[j]);
  for (int j = mid; j < n; ++j) out.push_back(v[j]);
  return out;
}

WeylElt embed_b_in_d(int m, const WeylElt& w) {
  if (w.kind != GroupKind(Family::TypeB, m))
    throw std::invalid_argument("embed_b_in_d: expected a TypeB element");
  int nb = 2 * m + 1, nd = 2 * m + 2;
  IntVec v = iota(w.v);
  // iota' on the linear part: indices != m map across the middle gap, and
  // sigma fixes or swaps {m, m+1} as needed to land in S_{2m+2}^o
  auto up = [m](int j) { return j < m ? j : j + 1; };  // [0,2m+1) \ {m} in D
  std::vector<int> img(nd);
  img[m] = m;
  img[m + 1] = m + 1;
  for (int jb = 0; jb < nb; ++jb) {
    if (jb == m) continue;
    img[up(jb)] = up(w.s(jb));
  }
  SignedPerm s(img);
  if (!s.is_even()) {
    std::swap(s.img[m], s.img[m + 1]);
  }
  WeylElt out(GroupKind(Family::TypeD, m + 1), std::move(v), std::move(s));
  return out;
}

std::optional<WeylElt> restrict_d_to_b(int m, const WeylElt& x) {
  if (x.kind != GroupKind(Family::TypeD, m + 1))
    throw std::invalid_argument("restrict_d_to_b: expected a TypeD element");
  for (int k = 0; k <= m; ++k) {
    IntVec mu = mu_vector(x, k);
    if (mu[m] != mu[m + 1]) return std::nullopt;
  }
  // the linear part must preserve {m, m+1}
  if (!((x.s(m) == m && x.s(m + 1) == m + 1) ||
        (x.s(m) == m + 1 && x.s(m + 1) == m)))
    return std::nullopt;
  int nb = 2 * m + 1;
  IntVec v(nb);
  auto up = [m](int j) { return j < m ? j : j + 1; };
  for (int jb = 0; jb < nb; ++jb) v[jb] = x.v[up(jb)];
  std::vector<int> img(nb);
  img[m] = m;
  for (int jb = 0; jb < nb; ++jb) {
    if (jb == m) continue;
    int t = x.s(up(jb));
    if (t == m || t == m + 1) return std::nullopt;
    img[jb] = t < m ? t : t - 1;
  }
  WeylElt w(GroupKind(Family::TypeB, m), std::move(v), SignedPerm(img));
  if (embed_b_in_d(m, w) != x) return std::nullopt;
  return w;
}

std::set<int> level_tilde(int m, const std::set<int>& I) {
  std::set<int> out = I;
  if (I.count(m)) out.insert(m + 1);
  return out;
}

namespace {

// one length-0 element per Kottwitz class (d, parity), |d| <= dmax
std::vector<WeylElt> omega_reps(const Context& ctx, BruhatEngine& eng,
                                int dmax) {
  std::map<std::pair<long long, int>, WeylElt> found;
  int n = ctx.n(), m = ctx.m();
  // search translations t entries in [-dmax-1, dmax+1] paired with all
  // finite Weyl parts
  std::vector<IntVec> trans;
  for (int d = -dmax; d <= dmax; ++d) {
    std::vector<int> choice(m, -dmax - 1);
    while (true) {
      IntVec v(n, 0);
      bool ok = true;
      for (int j = 0; j < m; ++j) {
        v[j] = choice[j];
        v[dual(n, j)] = d - choice[j];
      }
      if (n % 2 == 1) {
        if (d % 2 != 0) ok = false;
        v[m] = d / 2;
      }
      if (ok && ctx.in_lattice(v)) trans.push_back(v);
      int j = 0;
      while (j < m && choice[j] == dmax + 1) choice[j++] = -dmax - 1;
      if (j == m) break;
      ++choice[j];
    }
  }
  for (auto& v : trans)
    for (auto& s : ctx.finite_weyl()) {
      WeylElt w(ctx.kind(), v, s);
      auto cls = kottwitz(ctx, w);
      if (cls.first < -dmax || cls.first > dmax) continue;
      if (found.count(cls)) continue;
      if (eng.len(w) == 0) found.emplace(cls, w);
    }
  std::vector<WeylElt> out;
  for (auto& kv : found) out.push_back(kv.second);
  return out;
}

// all elements of length <= bound in the coset W_aff * omega
std::vector<WeylElt> length_ball(const Context& ctx, BruhatEngine& eng,
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
      if (eng.len(x) > bound) continue;
      if (seen.insert(x).second) {
        out.push_back(x);
        queue.push_back(x);
      }
    }
  }
  return out;
}

}  // namespace

InheritanceReport check_inheritance(int m, int length_bound, bool parahoric) {
  InheritanceReport rep;
  Context B(GroupKind(Family::TypeB, m));
  Context D(GroupKind(Family::TypeD, m + 1));
  BruhatEngine engB(B), engD(D);

  auto omegas = omega_reps(B, engB, 2);
  for (auto& om : omegas) {
    auto ball = length_ball(B, engB, om, length_bound);
    std::vector<WeylElt> embedded;
    for (auto& w : ball) embedded.push_back(embed_b_in_d(m, w));
    // Iwahori pairs: down-sets computed once per upper element
    for (size_t bx = 0; bx < ball.size(); ++bx) {
      EltSet downB = engB.lower_set({ball[bx]});
      EltSet downD = engD.lower_set({embedded[bx]});
      for (size_t bw = 0; bw < ball.size(); ++bw) {
        ++rep.pairs_checked;
        bool inB = downB.count(ball[bw]) > 0;
        bool inD = downD.count(embedded[bw]) > 0;
        if (inB != inD)
          rep.order_violations.emplace_back(ball[bw], ball[bx]);
      }
    }
    if (!parahoric) continue;
    // double-coset order and min-rep Theta-fixedness, per valid level pair
    auto levels = all_valid_levels(B);
    for (auto& I : levels)
      for (auto& J : levels) {
        if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) continue;
        Parahoric PI = Parahoric::from_indices(B, I);
        Parahoric PJ = Parahoric::from_indices(B, J);
        Parahoric PIt = Parahoric::from_indices(D, level_tilde(m, I));
        Parahoric PJt = Parahoric::from_indices(D, level_tilde(m, J));
        std::vector<WeylElt> repsB, repsD;
        for (size_t i = 0; i < ball.size(); ++i) {
          repsB.push_back(min_coset_rep(engB, ball[i], PJ, PI));
          repsD.push_back(min_coset_rep(engD, embedded[i], PJt, PIt));
          ++rep.minrep_checked;
          if (!restrict_d_to_b(m, repsD.back()).has_value())
            rep.minrep_violations.push_back(ball[i]);
        }
        for (size_t bx = 0; bx < ball.size(); ++bx) {
          EltSet downB = engB.lower_set({repsB[bx]});
          EltSet downD = engD.lower_set({repsD[bx]});
          for (size_t bw = 0; bw < ball.size(); ++bw) {
            ++rep.pairs_checked;
            bool inB = downB.count(repsB[bw]) > 0;
            bool inD = downD.count(repsD[bw]) > 0;
            if (inB != inD)
              rep.order_violations.emplace_back(repsB[bw], repsB[bx]);
          }
        }
      }
  }
  return rep;
}

IntersectionReport check_adm_intersection(int m, int q, const std::set<int>& I,
                                          const std::set<int>& J) {
  IntersectionReport out;
  Context B(GroupKind(Family::TypeB, m));
  Context D(GroupKind(Family::TypeD, m + 1));
  BruhatEngine engB(B), engD(D);
  IntVec muB = shape_mu(B, q), muD = iota(muB);
  std::set<int> It = level_tilde(m, I), Jt = level_tilde(m, J);
  Parahoric PI = Parahoric::from_indices(B, I);
  Parahoric PJ = Parahoric::from_indices(B, J);
  Parahoric PIt = Parahoric::from_indices(D, It);
  Parahoric PJt = Parahoric::from_indices(D, Jt);

  // B side directly
  AdmReport admB = admissible_set(B, muB, I, J);
  out.b_cardinality = admB.cardinality();

  // D side, intersected with the embedded double cosets
  AdmReport admD = admissible_set(D, muD, It, Jt);
  std::set<WeylElt> d_side;
  for (auto& r : admD.reps) {
    std::optional<WeylElt> wb = restrict_d_to_b(m, r);
    if (!wb) {
      // scan the whole double coset for a Theta-fixed element
      for (auto& u : PJt.elements()) {
        if (wb) break;
        for (auto& up : PIt.elements()) {
          auto cand = restrict_d_to_b(m, u * r * up);
          if (cand) {
            wb = cand;
            break;
          }
        }
      }
    }
    if (wb) d_side.insert(min_coset_rep(engB, *wb, PJ, PI));
  }
  out.d_side_cardinality = d_side.size();
  std::vector<WeylElt> dv(d_side.begin(), d_side.end());
  out.adm_equal = dv == admB.reps;
  std::set_symmetric_difference(dv.begin(), dv.end(), admB.reps.begin(),
                                admB.reps.end(), std::back_inserter(out.diff));

  // Lemma: SPerm_{I,B}(mu) = SPerm_{I~,D}(iota mu) intersect embedded cosets
  {
    Parahoric trivB(B, B.point_labels());
    Parahoric trivD(D, D.point_labels());
    int k0 = *I.begin();
    std::set<WeylElt> spermB;
    // enumerate right cosets directly
    auto poolB = candidate_pool(B, -k0, 2 + k0);
    WeylElt tmuB = WeylElt::translation(B.kind(), muB);
    for (auto& w : poolB) {
      if (kottwitz(B, w) != kottwitz(B, tmuB)) continue;
      bool ok = true;
      for (int k : I) {
        Point nu = nu_vector(B, w, VertexLabel(k));
        if (!sp1_nu(nu) || !sp2_nu(nu, q) || !sp3_nu(B, nu, muB, k)) {
          ok = false;
          break;
        }
      }
      if (ok) spermB.insert(min_coset_rep(engB, w, trivB, PI));
    }
    std::set<WeylElt> spermD_pullback;
    auto poolD = candidate_pool(D, -k0 - 1, 3 + k0);
    WeylElt tmuD = WeylElt::translation(D.kind(), muD);
    for (auto& x : poolD) {
      if (kottwitz(D, x) != kottwitz(D, tmuD)) continue;
      bool ok = true;
      for (int k : It) {
        Point nu = nu_vector(D, x, VertexLabel(k));
        if (!sp1_nu(nu) || !sp2_nu(nu, q) || !sp3_nu(D, nu, muD, k)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // does the right coset x W_{I~} meet the embedded subgroup?
      std::optional<WeylElt> wb = restrict_d_to_b(m, x);
      for (auto& up : PIt.elements()) {
        if (wb) break;
        wb = restrict_d_to_b(m, x * up);
      }
      if (wb) spermD_pullback.insert(min_coset_rep(engB, *wb, trivB, PI));
    }
    out.sperm_equal = spermB == spermD_pullback;
  }

  // automatic spin at k = m (vacuous when m is not in I)
  out.auto_spin_ok = true;
  if (I.count(m)) {
    auto poolB = candidate_pool(B, 0, 2);
    WeylElt tmuB = WeylElt::translation(B.kind(), muB);
    for (auto& w : poolB) {
      if (kottwitz(B, w) != kottwitz(B, tmuB)) continue;
      Point num = nu_vector(B, w, VertexLabel(m));
      if (!sp1_nu(num) || !sp2_nu(num, q)) continue;
      if (!sp3_nu(B, num, muB, m)) {
        out.auto_spin_ok = false;
        break;
      }
      WeylElt x = embed_b_in_d(m, w);
      if (!sp1_at(x, m + 1)) {
        out.auto_spin_ok = false;
        break;
      }
      Point nud = nu_vector(D, x, VertexLabel(m + 1));
      if (!sp2_nu(nud, q) || !sp3_nu(D, nud, muD, m + 1)) {
        out.auto_spin_ok = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace affadm
