#include "affadm/spinwedge.hpp"

#include <algorithm>

namespace affadm {

int sign_sigma(int fourm, const std::vector<int>& E) {
  // image sequence of sigma_E: sorted E then sorted complement
  std::vector<char> in(fourm, 0);
  for (int e : E) in[e] = 1;
  std::vector<int> seq(E.begin(), E.end());
  std::sort(seq.begin(), seq.end());
  for (int j = 0; j < fourm; ++j)
    if (!in[j]) seq.push_back(j);
  long long inv = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

AOp a_operator(int m, const std::vector<int>& E) {
  int fourm = 4 * m;
  if (static_cast<int>(E.size()) != 2 * m)
    throw std::invalid_argument("a_operator: need |E| = 2m");
  std::vector<char> in(fourm, 0);
  for (int e : E) {
    if (e < 0 || e >= fourm) throw std::invalid_argument("a_operator: range");
    in[e] = 1;
  }
  // E^perp = (4m-1-E)^c  (0-based form of (4m+1-E)^c)
  std::vector<char> refl(fourm, 0);
  for (int j = 0; j < fourm; ++j)
    if (in[j]) refl[fourm - 1 - j] = 1;
  AOp out;
  for (int j = 0; j < fourm; ++j)
    if (!refl[j]) out.eperp.push_back(j);
  out.sign = sign_sigma(fourm, E);
  return out;
}

namespace {

void require_wedge_at(const Context& gu, const WeylElt& w, int k, int s) {
  if (!sp1_at(w, k))
    throw std::invalid_argument("wedge data: element not naively permissible");
  IntVec mu = mu_vector(w, k);
  int zeros = 0;
  for (int x : mu)
    if (x == 0) ++zeros;
  if (zeros > s)
    throw std::invalid_argument("wedge data: element not wedge-permissible");
}

}  // namespace

std::vector<int> e_set(const Context& gu, const WeylElt& w, int k) {
  int m = gu.m(), n = 2 * m;
  if (k < 0 || k > n) throw std::invalid_argument("e_set: k out of range");
  IntVec mu = mu_vector(w, k);
  auto is01 = [&](int j) { return mu[j] == 0 || mu[j] == 1; };  // 0-based j
  auto is0 = [&](int j) { return mu[j] == 0; };
  std::vector<int> E;
  if (k <= m) {
    // low form: blocks over [1,i], [i+1,m], [m+1,2m] and their pi-copies
    for (int j = 0; j < k; ++j)
      if (is0(j)) E.push_back(j);
    for (int j = k; j < m; ++j)
      if (is01(j)) E.push_back(j);
    for (int j = m; j < n; ++j)
      if (is0(j)) E.push_back(j);
    for (int j = 0; j < k; ++j)
      if (is01(j)) E.push_back(n + j);
    for (int j = k; j < m; ++j)
      if (is0(j)) E.push_back(n + j);
    for (int j = m; j < n; ++j)
      if (is01(j)) E.push_back(n + j);
  } else {
    // high form for k = 2m - i: blocks over [1,m], [m+1,2m-i], [i*,2m]
    int i = n - k;
    int istar0 = n - i;  // 0-based position of i* = 2m+1-i
    for (int j = 0; j < m; ++j)
      if (is0(j)) E.push_back(j);
    for (int j = m; j < n - i; ++j)
      if (is01(j)) E.push_back(j);
    for (int j = istar0; j < n; ++j)
      if (is0(j)) E.push_back(j);
    for (int j = 0; j < m; ++j)
      if (is01(j)) E.push_back(n + j);
    for (int j = m; j < n - i; ++j)
      if (is0(j)) E.push_back(n + j);
    for (int j = istar0; j < n; ++j)
      if (is01(j)) E.push_back(n + j);
  }
  return E;
}

int a_exponent(const Context& gu, const WeylElt& w, int k) {
  int m = gu.m(), n = 2 * m;
  IntVec mu = mu_vector(w, k);
  if (k <= m) {
    int cnt = 0;
    for (int j = k; j < m; ++j)
      if (mu[j] == 0 || mu[j] == 1) ++cnt;
    return cnt;
  }
  int i = n - k, cnt = 0;
  for (int j = m; j < n - i; ++j)
    if (mu[j] == 0) ++cnt;
  return -cnt;
}

int a_perp_exponent(const Context& gu, const WeylElt& w, int k) {
  int m = gu.m(), n = 2 * m;
  IntVec mu = mu_vector(w, k);
  if (k <= m) {
    int cnt = 0;
    for (int j = k; j < m; ++j)
      if (mu[dual(n, j)] == 2) ++cnt;
    return cnt;
  }
  int i = n - k, cnt = 0;
  for (int j = m; j < n - i; ++j)
    if (mu[dual(n, j)] != 0) ++cnt;
  return -cnt;
}

WedgeSpinData wedge_spin_data(const Context& gu, const WeylElt& w, int i,
                              const Signature& sig) {
  if (gu.kind().family != Family::TypeGU)
    throw std::invalid_argument("wedge_spin_data: TypeGU only");
  if (i < 0 || i > gu.m())
    throw std::invalid_argument("wedge_spin_data: i out of range");
  require_wedge_at(gu, w, i, sig.s);
  WedgeSpinData out;
  out.E = e_set(gu, w, i);
  if (static_cast<int>(out.E.size()) != 2 * gu.m())
    throw std::logic_error("wedge_spin_data: |E_i| != 2m");
  out.a = a_exponent(gu, w, i);
  out.a_perp = a_perp_exponent(gu, w, i);
  if (out.a > out.a_perp) {
    out.spin_ok = true;
  } else {
    int want = sig.s % 2 == 0 ? 1 : -1;
    out.spin_ok = sign_sigma(4 * gu.m(), out.E) == want;
  }
  return out;
}

}  // namespace affadm
