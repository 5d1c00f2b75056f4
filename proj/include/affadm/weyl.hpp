#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "affadm/rootdata.hpp"

namespace affadm {

// mu_k^w = w(omega_k) - omega_k, defined for every integer k and periodic:
// mu_{k+n} = mu_k.
IntVec mu_vector(const WeylElt& w, long long k);

// nu at a named point: nu^w_a = w(a) - a.  For numeric labels k this equals
// (mu_k^w + mu_{-k}^w)/2.
Point nu_vector(const Context& ctx, const WeylElt& w, const VertexLabel& label);
Point nu_point(const WeylElt& w, const Point& a);

bool is_integral(const Point& p);
IntVec to_intvec(const Point& p);  // requires integral

// A_k = {1..k, k*..n} and B_k = {k+1..n-k} of the paper, as 0-based index
// sets; k is reduced mod n to the range [0, n/2].
std::vector<int> set_A(int n, long long k);
std::vector<int> set_B(int n, long long k);

// mu_k^w satisfies SP1: 0 <= mu_k <= 2 and mu_k + (mu_{-k})^* = 2
bool sp1_at(const WeylElt& w, long long k);

// c_k^w = #{j : mu_k^w(j) = 2} = #{j : mu_k^w(j) = 0}; requires SP1 at k.
int c_value(const WeylElt& w, long long k);
// the nu-side count #{nu=2} + #{nu not in Z}/4 (Lemma on c via nu)
int c_value_from_nu(const Context& ctx, const WeylElt& w, int k);

// Upper value u(j) = max_k mu_k^w(j); constant in k when j is not proper.
std::vector<int> upper_values(const WeylElt& w);

// Kottwitz invariant (d, parity); w is in W_aff iff it equals (0,0).
std::pair<long long, int> kottwitz(const Context& ctx, const WeylElt& w);
bool equiv_mod_affine(const Context& ctx, const WeylElt& w, const WeylElt& x);

// Face of type (n, I): the family (v_i) for i in nZ +- I, stored on the
// fundamental period [0, n].
struct Face {
  int n = 0;
  int d = 0;  // v_i + v_{-i}^* = d
  std::vector<int> members;          // sorted indices in [0, n]
  std::vector<IntVec> vecs;          // v_i for each member
  IntVec at(long long i) const;      // any i in nZ +- I, via periodicity
  IntVec mu(long long i) const;      // v_i - omega_i
};

// The face (w omega_i)_{i in nZ +- I}; well-defined on cosets w W_I.
Face face_of_type(const WeylElt& w, const std::set<int>& I);
// Face attached to raw data (v, sigma) in X_{*n} x S_n^* (no family needed).
Face face_of_type(int n, const IntVec& v, const SignedPerm& s,
                  const std::set<int>& I);
// F1-F4 of the face definition
bool face_valid(const Face& f, std::string* why = nullptr);

// Serialization: "t:[v1,...,vn];s:[s1,...,sn]" with 1-based images.  The
// parser also accepts cycle notation for the linear part, e.g. "s:(27)(36)".
std::string to_string(const WeylElt& w);
WeylElt parse_element(GroupKind kind, const std::string& text);

}  // namespace affadm
