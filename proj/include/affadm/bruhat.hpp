#pragma once

#include <unordered_map>
#include <unordered_set>

#include "affadm/weyl.hpp"

namespace affadm {

// Affine root alpha~_{i,j;d}: x_i - x_j - d (0-based i, j).  For TypeGU the
// pair j = i* is allowed with d odd; otherwise j != i, i*.
struct ReflectionSpec {
  int i = 0, j = 1;
  long long d = 0;
};

// s_{alpha~} = t_{d * alpha^vee} s_alpha, an involution in W_aff.
WeylElt reflection(const Context& ctx, const ReflectionSpec& spec);
WeylElt reflection(const Context& ctx, const RootDir& dir, long long level);

// ell(w): number of affine-root hyperplanes strictly separating the interior
// of the base alcove from its image under w.
int length(const Context& ctx, const WeylElt& w);

// The Bruhat-order test of the reflection lemma: w < s_{alpha~} w.
bool reflection_raises(const Context& ctx, const WeylElt& w, const RootDir& dir,
                       long long level);

using EltSet = std::unordered_set<WeylElt, WeylEltHash>;

// Bruhat order, covers and down-closures, with memoized lengths.  One engine
// per context; reuse it across queries to share the caches.
class BruhatEngine {
 public:
  explicit BruhatEngine(const Context& ctx) : ctx_(ctx) {}

  const Context& context() const { return ctx_; }
  int len(const WeylElt& w);

  // reflections across the hyperplanes separating the base alcove from w(A)
  std::vector<WeylElt> separating_reflections(const WeylElt& w);
  // {r w : ell(r w) = ell(w) - 1}
  std::vector<WeylElt> covers_down(const WeylElt& w);

  bool leq(const WeylElt& w, const WeylElt& x);

  // {w : w <= x for some x in seeds}
  EltSet lower_set(const std::vector<WeylElt>& seeds);

 private:
  const Context& ctx_;
  std::unordered_map<WeylElt, int, WeylEltHash> len_memo_;
};

// Parahoric subgroup data: the pointwise fixer in W_aff of a set of named
// points of the closed base alcove, generated by the wall reflections
// through those points.
class Parahoric {
 public:
  Parahoric(const Context& ctx, const std::vector<VertexLabel>& labels);
  static Parahoric from_indices(const Context& ctx, const std::set<int>& I);

  const std::vector<VertexLabel>& labels() const { return labels_; }
  const std::vector<WeylElt>& generators() const { return gens_; }
  // all elements (the group is finite); cached
  const std::vector<WeylElt>& elements() const;

  bool fixes_points(const WeylElt& w) const;

 private:
  const Context* ctx_;
  std::vector<VertexLabel> labels_;
  std::vector<Point> pts_;
  std::vector<WeylElt> gens_;
  mutable std::vector<WeylElt> elements_;
};

// The minimal-length element of W_J w W_I (greedy two-sided descent).
WeylElt min_coset_rep(BruhatEngine& eng, const WeylElt& w, const Parahoric& J,
                      const Parahoric& I);

}  // namespace affadm
