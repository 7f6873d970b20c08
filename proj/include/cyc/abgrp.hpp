#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyc/matrix.hpp"

namespace cyc {

// Finitely generated abelian group, presented by an integer relation matrix
// (rows = relations on the generators). Elements are integer column vectors
// on the generators, taken modulo the relation lattice.
class FGAbelianGroup {
 public:
  FGAbelianGroup() : FGAbelianGroup(0, IntegerMatrix(0, 0)) {}
  FGAbelianGroup(long generators, IntegerMatrix relations);

  static FGAbelianGroup free_group(long rank);
  static FGAbelianGroup cyclic(const Int& n);

  long generators() const { return gens_; }
  const IntegerMatrix& relations() const { return rels_; }

  // Canonical form: free rank plus invariant factors d_1 | d_2 | ..., each > 1.
  long rank() const { return rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  // Groups are reported isomorphic exactly when canonical forms coincide.
  bool isomorphic(const FGAbelianGroup& o) const {
    return rank_ == o.rank_ && torsion_ == o.torsion_;
  }

  bool is_zero_element(const std::vector<Int>& x) const;
  bool elements_equal(const std::vector<Int>& x, const std::vector<Int>& y) const;
  // Coordinates in the canonical decomposition: torsion entries reduced mod d_i,
  // free entries exact. Two elements are equal iff these agree.
  std::vector<Int> canonical_coords(const std::vector<Int>& x) const;

  const Lattice& relation_lattice() const { return *rel_lat_; }

  std::string str() const;  // e.g. "Z^2 + Z/2 + Z/4"

 private:
  long gens_;
  IntegerMatrix rels_;
  long rank_;
  std::vector<Int> torsion_;
  // SNF of rels^T: in coordinates y = u*x the relation lattice is diagonal.
  std::shared_ptr<const SnfResult> snf_;
  std::shared_ptr<const Lattice> rel_lat_;
};

// Morphism of presented groups, an integer matrix on generators
// (target.generators() x source.generators(), acting on column vectors).
// Construction checks that source relations land in the target relation lattice.
class GroupMorphism {
 public:
  GroupMorphism(FGAbelianGroup source, FGAbelianGroup target, IntegerMatrix matrix);

  static GroupMorphism identity(const FGAbelianGroup& g);
  static GroupMorphism zero(const FGAbelianGroup& source, const FGAbelianGroup& target);

  const FGAbelianGroup& source() const { return src_; }
  const FGAbelianGroup& target() const { return tgt_; }
  const IntegerMatrix& matrix() const { return mat_; }

  std::vector<Int> apply(const std::vector<Int>& x) const { return mat_.apply(x); }

  GroupMorphism scaled(const Int& c) const { return {src_, tgt_, mat_.scaled(c)}; }
  GroupMorphism operator+(const GroupMorphism& o) const;
  GroupMorphism operator-(const GroupMorphism& o) const;

  // Equality as maps of presented groups (entries compared modulo target
  // relations), not raw matrix equality.
  bool equals(const GroupMorphism& o) const;

 private:
  FGAbelianGroup src_, tgt_;
  IntegerMatrix mat_;
};

// g after f.
GroupMorphism compose(const GroupMorphism& g, const GroupMorphism& f);

struct CokernelResult {
  FGAbelianGroup group;
  GroupMorphism projection;  // target(f) -> group, identity on generators
};

CokernelResult cokernel(const GroupMorphism& f);

// Basis (as columns) of {x : f(x) = 0 in the presented target}, a sublattice
// of Z^{source generators} containing the source relations.
IntegerMatrix kernel_lattice(const GroupMorphism& f);

struct IsoCheck {
  bool ok = false;
  std::optional<GroupMorphism> inverse;  // inverse modulo relations, when ok
  std::string witness;                   // human-readable failure reason
  std::vector<Int> witness_element;      // kernel class or unhit generator
};

IsoCheck is_isomorphism(const GroupMorphism& f);

// The unique h with h * q_src = q_tgt * f, for projections q_src, q_tgt.
// Throws NotWellDefinedError (naming a violating generator) when f does not
// carry ker(q_src) into ker(q_tgt).
GroupMorphism induced_on_quotient(const GroupMorphism& f, const GroupMorphism& q_src,
                                  const GroupMorphism& q_tgt);

}  // namespace cyc
