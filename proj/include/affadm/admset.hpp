#pragma once

#include "affadm/bruhat.hpp"

namespace affadm {

// Index set selecting base-alcove points a_k; the paper's conventions are
// 1 in I => 0 in I (TypeD/TypeB), m-1 in I => m in I (TypeD and, with the
// corrected reading, TypeGU).
bool level_conditions_hold(const Context& ctx, const std::set<int>& I);
std::vector<std::set<int>> all_valid_levels(const Context& ctx);

// Labels of the minimal facets of the facet spanned by {a_k : k in I}:
// the vertex lines contained in its closure.
std::vector<VertexLabel> minimal_facet_labels(const Context& ctx,
                                              const std::set<int>& I);

struct AdmReport {
  GroupKind kind;
  IntVec mu;
  std::set<int> I, J;
  std::string method;
  std::vector<WeylElt> reps;  // canonical minimal double-coset reps, sorted

  size_t cardinality() const { return reps.size(); }
  bool same_set(const AdmReport& other) const { return reps == other.reps; }
  bool contains(BruhatEngine& eng, const WeylElt& w) const;
};

// For the cocharacters (2^(q),1^(n-2q),0^(q)) handled by the paper's
// spin/permissibility theorems: returns q, throws UnsupportedCocharacter
// otherwise (including the excluded TypeD case q = m).
int shape_q(const Context& ctx, const IntVec& mu);
IntVec shape_mu(const Context& ctx, int q);

// conditions (SP1')-(SP3') / (sp1')-(sp3') on nu = w a_k - a_k
bool sp1_nu(const Point& nu);
int c_from_nu(const Point& nu);       // #{nu=2} + #{nu not integral}/4
bool sp2_nu(const Point& nu, int q);
bool sp3_nu(const Context& ctx, const Point& nu, const IntVec& mu, int k);

// Adm_{J,I}(mu): Bruhat down-closure of the translations of the Weyl orbit,
// projected to minimal (W_J, W_I)-double-coset representatives.
AdmReport admissible_set(const Context& ctx, const IntVec& mu,
                         const std::set<int>& I, const std::set<int>& J);

// SPerm_{J,I}(mu): direct SP1-SP3 filter over the candidate pool.
AdmReport spin_permissible_set(const Context& ctx, const IntVec& mu,
                               const std::set<int>& I, const std::set<int>& J);

// Perm_{J,I}(mu) via the SP'-conditions characterization.
AdmReport permissible_set(const Context& ctx, const IntVec& mu,
                          const std::set<int>& I, const std::set<int>& J);
// Perm via the raw definition: w = t_lambda mod W_aff and w a - a in
// Conv(W mu) at every minimal facet point a.
AdmReport permissible_set_raw(const Context& ctx, const IntVec& mu,
                              const std::set<int>& I, const std::set<int>& J);

// membership in Conv(W mu) for mu of the supported shape
bool in_convex_hull(const Context& ctx, const IntVec& mu, const Point& v);

// Adm^|_{J,I}(mu): vertexwise admissibility.
AdmReport vertexwise_admissible_set(const Context& ctx, const IntVec& mu,
                                    const std::set<int>& I,
                                    const std::set<int>& J);

enum class Theta { Zero, M, ZeroM };
// conjugation by theta_0 / theta_m / theta_0 theta_m (TypeD only)
WeylElt apply_theta(const Context& ctx, Theta which, const WeylElt& w);
// the automorphism as an explicit affine transformation (element of W~_{2m})
WeylElt theta_transform(const Context& ctx, Theta which);

// Candidate pools used by the filters (public so the tests can run the
// surjectivity checks against wider pools).
std::vector<IntVec> pool_translations(const Context& ctx, int lo, int hi);
std::vector<WeylElt> candidate_pool(const Context& ctx, int lo, int hi);

}  // namespace affadm
