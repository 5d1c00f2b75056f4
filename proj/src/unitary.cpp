#include "affadm/unitary.hpp"

#include <algorithm>

namespace affadm {

IntVec gu_seed_cocharacter(const Signature& sig) {
  int m = sig.m(), n = 2 * m;
  IntVec mu(n, 1);
  for (int j = 0; j < sig.s; ++j) {
    mu[j] = 2;
    mu[dual(n, j)] = 0;
  }
  return mu;
}

IntVec gu_b_side_cocharacter(const Signature& sig) {
  int m = sig.m(), n = 2 * m + 1;
  IntVec mu(n, 1);
  for (int j = 0; j < sig.s; ++j) {
    mu[j] = 2;
    mu[dual(n, j)] = 0;
  }
  return mu;
}

GuFlags gu_permissibility_flags(const Context& gu, const WeylElt& w,
                                const std::set<int>& I, const Signature& sig) {
  if (gu.kind().family != Family::TypeGU)
    throw std::invalid_argument("gu_permissibility_flags: TypeGU only");
  if (sig.m() != gu.m()) throw std::invalid_argument("signature rank mismatch");
  if (I.empty()) throw std::invalid_argument("empty index set");
  for (int k : I)
    if (k < 0 || k > gu.m()) throw std::invalid_argument("invalid index set");
  gu.require_valid(w);
  int n = gu.n();
  GuFlags out;

  // P1: 2-face with 0 <= mu_i <= 2 at every i in I, plus the W_aff
  // congruence when m is not in I
  for (int i : I)
    if (!sp1_at(w, i)) return out;
  if (!I.count(gu.m())) {
    WeylElt seed = WeylElt::translation(gu.kind(), gu_seed_cocharacter(sig));
    if (kottwitz(gu, w) != kottwitz(gu, seed)) return out;
  }
  out.naive = true;

  // P2: at most s zero entries
  for (int i : I) {
    IntVec mu = mu_vector(w, i);
    int zeros = 0;
    for (int x : mu)
      if (x == 0) ++zeros;
    if (zeros > sig.s) return out;
  }
  out.wedge = true;

  // P3: spin condition on self-dual mu_i
  for (int i : I) {
    IntVec mu = mu_vector(w, i);
    if (mu != mu_vector(w, -i)) continue;  // not self-dual
    int zeros = 0;
    for (int x : mu)
      if (x == 0) ++zeros;
    if (zeros % 2 == sig.s % 2) continue;
    bool witness = false;
    for (int j : set_B(n, i))
      if (mu[j] == 1) {
        witness = true;
        break;
      }
    if (!witness) return out;
  }
  out.spin = true;
  return out;
}

GuToB::GuToB(int m)
    : m_(m),
      gu_(GroupKind(Family::TypeGU, m)),
      b_(GroupKind(Family::TypeB, m)) {
  int n = 2 * m;
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = j < m ? j + m : j - m;
  delta_ = SignedPerm(img);
  // z = delta t_{-omega_m}
  WeylElt lin(gu_.kind(), IntVec(n, 0), delta_);
  IntVec w = omega(n, m);
  for (int& x : w) x = -x;
  z_ = lin * WeylElt::translation(gu_.kind(), w);
  zinv_ = z_.inverse();
}

namespace {

// index shift [0,2m) -> [0,2m+1) \ {m}
int shift_up(int m, int j) { return j < m ? j : j + 1; }
int shift_down(int m, int j) { return j < m ? j : j - 1; }

}  // namespace

WeylElt GuToB::to_b(const WeylElt& w) const {
  gu_.require_valid(w);
  WeylElt y = z_ * w * zinv_;  // = t_{delta mu_m^w} (delta sigma delta)
  int n = 2 * m_;
  int c = 0;
  pair_sums_constant(y.v, &c);
  if (c % 2 != 0) throw std::logic_error("gu_to_b: odd face degree");
  IntVec vb(n + 1);
  for (int j = 0; j < n; ++j) vb[shift_up(m_, j)] = y.v[j];
  vb[m_] = c / 2;
  std::vector<int> img(n + 1);
  img[m_] = m_;
  for (int j = 0; j < n; ++j)
    img[shift_up(m_, j)] = shift_up(m_, y.s(j));
  WeylElt out(b_.kind(), std::move(vb), SignedPerm(std::move(img)));
  b_.require_valid(out);
  return out;
}

WeylElt GuToB::to_gu(const WeylElt& x) const {
  b_.require_valid(x);
  int n = 2 * m_;
  IntVec v(n);
  for (int j = 0; j < n; ++j) v[j] = x.v[shift_up(m_, j)];
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j)
    img[j] = shift_down(m_, x.s(shift_up(m_, j)));
  WeylElt y(gu_.kind(), std::move(v), SignedPerm(std::move(img)));
  WeylElt out = zinv_ * y * z_;
  gu_.require_valid(out);
  return out;
}

std::set<int> GuToB::level_to_b(const std::set<int>& I) const {
  std::set<int> out;
  for (int k : I) out.insert(m_ - k);
  return out;
}

WeylElt gu_to_b(int m, const WeylElt& w) { return GuToB(m).to_b(w); }

AdmReport gu_admissible_set(int m, const Signature& sig, const std::set<int>& I,
                            const std::set<int>& J) {
  if (sig.m() != m) throw std::invalid_argument("signature rank mismatch");
  GuToB tr(m);
  IntVec mu_b = gu_b_side_cocharacter(sig);
  AdmReport b_rep = admissible_set(tr.b(), mu_b, tr.level_to_b(I),
                                   tr.level_to_b(J));
  AdmReport out{tr.gu().kind(), gu_seed_cocharacter(sig), I, J, "gu-transport",
                {}};
  for (auto& x : b_rep.reps) out.reps.push_back(tr.to_gu(x));
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

AdmReport gu_spin_permissible_set(int m, const Signature& sig,
                                  const std::set<int>& I,
                                  const std::set<int>& J) {
  GuToB tr(m);
  const Context& gu = tr.gu();
  BruhatEngine eng(gu);
  int k0 = *I.begin();
  auto pool = candidate_pool(gu, -k0, 2 + k0);
  Parahoric PJ = Parahoric::from_indices(gu, J);
  Parahoric PI = Parahoric::from_indices(gu, I);
  std::set<WeylElt> reps;
  for (auto& w : pool) {
    GuFlags f = gu_permissibility_flags(gu, w, I, sig);
    if (f.spin) reps.insert(min_coset_rep(eng, w, PJ, PI));
  }
  return AdmReport{gu.kind(), gu_seed_cocharacter(sig), I, J, "gu-sp-filter",
                   std::vector<WeylElt>(reps.begin(), reps.end())};
}

}  // namespace affadm
