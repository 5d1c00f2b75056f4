#pragma once

#include "affadm/admset.hpp"

namespace affadm {

// signature of the Hermitian form; s <= r and r + s = 2m throughout
struct Signature {
  int r = 0, s = 0;
  Signature() = default;
  Signature(int rr, int ss) : r(rr), s(ss) {
    if (s > r || r < 0 || s < 0)
      throw std::invalid_argument("Signature: need 0 <= s <= r");
  }
  int m() const { return (r + s) / 2; }
};

// the maximal translation datum: mu-bar = (2^(s), 1^(2m-2s), 0^(s))
IntVec gu_seed_cocharacter(const Signature& sig);
// its type-B counterpart (2^(s), 1^(2m+1-2s), 0^(s))
IntVec gu_b_side_cocharacter(const Signature& sig);

struct GuFlags {
  bool naive = false, wedge = false, spin = false;
};

// P1/P2/P3 evaluated at every i in I; cumulative flags.
GuFlags gu_permissibility_flags(const Context& gu, const WeylElt& w,
                                const std::set<int>& I, const Signature& sig);

// The transport W~_G -> W~_{B_m} of the identification lemma: w |-> f(zwz^-1)
// with z = delta t_{-omega_m}.  A group isomorphism carrying the A_G-Bruhat
// order to the A_{B_m}-Bruhat order and W_{I,G} to W_{m-I,B_m}.
class GuToB {
 public:
  explicit GuToB(int m);
  const Context& gu() const { return gu_; }
  const Context& b() const { return b_; }

  WeylElt to_b(const WeylElt& w) const;
  WeylElt to_gu(const WeylElt& x) const;
  std::set<int> level_to_b(const std::set<int>& I) const;

  SignedPerm delta() const { return delta_; }

 private:
  int m_;
  Context gu_, b_;
  SignedPerm delta_;
  WeylElt z_, zinv_;  // affine transformations of the GU apartment
};

WeylElt gu_to_b(int m, const WeylElt& w);

// Adm_{J,I,G}({mu_{r,s}}) computed through the B_m transport; reps are
// GU-side minimal double-coset representatives.
AdmReport gu_admissible_set(int m, const Signature& sig, const std::set<int>& I,
                            const std::set<int>& J);

// the set {w : all three flags true} as minimal (W_J, W_I)-reps
AdmReport gu_spin_permissible_set(int m, const Signature& sig,
                                  const std::set<int>& I,
                                  const std::set<int>& J);

}  // namespace affadm
