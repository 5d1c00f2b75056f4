#pragma once

#include "affadm/unitary.hpp"

namespace affadm {

// The middle-degree wedge combinatorics: subsets E of {0,...,4m-1} of
// cardinality 2m, the dual E^perp = complement(4m-1-E), and the sign of the
// permutation sigma_E listing E then E^c in increasing order.

struct AOp {
  std::vector<int> eperp;  // sorted
  int sign = 1;            // sgn(sigma_E)
};

AOp a_operator(int m, const std::vector<int>& E);
int sign_sigma(int fourm, const std::vector<int>& E);

struct WedgeSpinData {
  std::vector<int> E;  // E_i, sorted, 0-based columns in {0,...,4m-1}
  int a = 0;           // pi_0-exponent a_i
  int a_perp = 0;
  bool spin_ok = false;  // spin condition derived through the wedge route
};

// E_k for 0 <= k <= 2m, by the block description (lower form for k <= m,
// upper form for k > m); requires the element to be wedge-permissible at k.
std::vector<int> e_set(const Context& gu, const WeylElt& w, int k);
int a_exponent(const Context& gu, const WeylElt& w, int k);
int a_perp_exponent(const Context& gu, const WeylElt& w, int k);

// Spin test for F_i^w purely through the wedge operator: holds automatically
// when a_i > a_i^perp, otherwise iff sgn(sigma_{E_i}) = (-1)^s.
WedgeSpinData wedge_spin_data(const Context& gu, const WeylElt& w, int i,
                              const Signature& sig);

}  // namespace affadm
