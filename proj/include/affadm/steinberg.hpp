#pragma once

#include <optional>

#include "affadm/admset.hpp"

namespace affadm {

// The Steinberg fixed-point picture R_{B_m} = R_{D_{m+1}}^{[Theta]}, Theta
// the swap of the two middle coordinates.  phi = iota x iota' embeds
// W~_{B_m} into W~_{D_{m+1}}.

IntVec iota(const IntVec& v);                  // duplicate the middle entry
WeylElt embed_b_in_d(int m, const WeylElt& w);  // phi
std::optional<WeylElt> restrict_d_to_b(int m, const WeylElt& x);

// I~ = I u {m+1} if m in I, else I
std::set<int> level_tilde(int m, const std::set<int>& I);

struct InheritanceReport {
  long long pairs_checked = 0;
  long long minrep_checked = 0;
  std::vector<std::pair<WeylElt, WeylElt>> order_violations;
  std::vector<WeylElt> minrep_violations;
  bool clean() const {
    return order_violations.empty() && minrep_violations.empty();
  }
};

// Exhaustive check of Bruhat-order inheritance along phi on all pairs of
// W~_{B_m} elements up to the length bound (per Kottwitz class with |d|<=2),
// plus the parahoric double-coset variant when `parahoric` is set, plus the
// Theta-fixedness of minimal-length representatives of embedded cosets.
InheritanceReport check_inheritance(int m, int length_bound,
                                    bool parahoric = false);

struct IntersectionReport {
  bool adm_equal = false;    // Adm_B = Adm_D intersect embedded cosets
  bool sperm_equal = false;  // the SPerm intersection identity
  bool auto_spin_ok = false; // automatic (sp3) at k = m
  size_t b_cardinality = 0, d_side_cardinality = 0;
  std::vector<WeylElt> diff;  // symmetric difference, B-side reps
  bool clean() const { return adm_equal && sperm_equal && auto_spin_ok; }
};

// Both sides of the fixed-point admissibility identity computed
// independently and diffed, for mu = (2^q,1^(2m+1-2q),0^q).
IntersectionReport check_adm_intersection(int m, int q, const std::set<int>& I,
                                          const std::set<int>& J);

}  // namespace affadm
