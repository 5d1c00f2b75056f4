#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affadm/element.hpp"

namespace affadm {

// Label of one of the named points a_k / a_{k'} in the closure of the base
// alcove.  Primes exist for TypeD (0', m') and TypeB (0').
struct VertexLabel {
  int k = 0;
  bool prime = false;

  VertexLabel() = default;
  VertexLabel(int kk, bool p = false) : k(kk), prime(p) {}
  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return a.k == b.k && a.prime == b.prime;
  }
  friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.prime < b.prime;
  }
  std::string str() const {
    return std::to_string(k) + (prime ? "'" : "");
  }
};

// A family of parallel affine-root hyperplanes: the vanishing loci of
// x_i - x_j - level.  For TypeD/TypeB the levels run over Z; for TypeGU the
// pair (i,j), j != i,i* also has levels Z, while the direction (i,i*) has
// odd levels only.  Directions are stored once per {+-alpha, (i,j)~(j*,i*)}
// class.
struct RootDir {
  int i = 0, j = 1;
  bool star = false;  // true only in TypeGU for the direction (i, i*)
  friend bool operator==(const RootDir& a, const RootDir& b) {
    return a.i == b.i && a.j == b.j && a.star == b.star;
  }
};

struct Wall {
  RootDir dir;
  long long level = 0;
};

// Thrown when a cocharacter falls outside the shape covered by the paper's
// spin/permissibility theorems.
struct UnsupportedCocharacter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Precomputed data of one root-datum context: named points, base-alcove
// interior reference point and walls, root directions, lattice predicates.
class Context {
 public:
  explicit Context(GroupKind kind);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return kind_.m; }

  // All labels valid for base_point in this family.
  std::vector<VertexLabel> point_labels() const;
  // Labels of the minimal facets of the base alcove (vertex lines).
  std::vector<VertexLabel> vertex_labels() const;
  Point point(const VertexLabel& label) const;

  const Point& interior() const { return interior_; }
  const std::vector<RootDir>& dirs() const { return dirs_; }
  const std::vector<Wall>& walls() const { return walls_; }

  // alpha_{i,j} evaluated at a vector / point
  long long alpha(const RootDir& d, const IntVec& x) const {
    return x[d.i] - x[d.j];
  }
  Rat alpha(const RootDir& d, const Point& x) const { return x[d.i] - x[d.j]; }

  // level-set geometry of a direction: {offset + step*Z}
  long long level_step(const RootDir& d) const { return d.star ? 2 : 1; }
  long long level_offset(const RootDir& d) const { return d.star ? 1 : 0; }

  IntVec coroot(const RootDir& d) const;
  // how the reflection in a hyperplane of direction d permutes coordinates
  SignedPerm dir_perm(const RootDir& d) const;

  bool in_lattice(const IntVec& v) const;
  bool in_coroot_lattice(const IntVec& v) const;
  bool congruent_mod_coroot(const IntVec& u, const IntVec& v) const;

  // membership in the closed base alcove
  bool in_alcove_closure(const Point& p) const;

  // the finite Weyl group of the context (S_n^o for TypeD, S_n^* otherwise)
  const std::vector<SignedPerm>& finite_weyl() const;
  std::vector<SignedPerm> finite_weyl_generators() const;

  bool element_valid(const WeylElt& w, std::string* why = nullptr) const;
  void require_valid(const WeylElt& w) const;

 private:
  GroupKind kind_;
  int n_;
  std::vector<RootDir> dirs_;
  std::vector<Wall> walls_;
  Point interior_;
  mutable std::vector<SignedPerm> finite_weyl_;  // lazy

  void build_dirs();
  void build_walls();
};

// omega is defined in element.hpp (needed there for group arithmetic).

Point base_point(const Context& ctx, const VertexLabel& label);

bool in_coroot_lattice(const Context& ctx, const IntVec& v);

std::vector<IntVec> weyl_orbit(const Context& ctx, const IntVec& mu);

}  // namespace affadm
