#pragma once

#include <string>
#include <vector>

#include "cyc/ints.hpp"
#include "cyc/supernat.hpp"

namespace cyc {

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);
// r reduced into [0, 1/n).
Rat rat_mod_unit_fraction(const Rat& r, long n);
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// The orbit whose point stabilizers have order m, inside the ambient degree N.
// (The orbit itself is (1/N)Z / (1/m)Z; m is the stabilizer order, not the
// cardinality.)
class Orbit {
 public:
  Orbit(long level, Supernatural ambient);

  long level() const { return level_; }
  const Supernatural& ambient() const { return ambient_; }

  bool operator==(const Orbit& o) const { return level_ == o.level_ && ambient_ == o.ambient_; }
  bool operator!=(const Orbit& o) const { return !(*this == o); }

  std::string str() const;  // "<m>@N"

 private:
  long level_;
  Supernatural ambient_;
};

// Equivariant map between orbits: z -> z + offset, with the offset reduced
// into [0, 1/target level). Maps exist only when the source level divides the
// target level.
class OrbitMap {
 public:
  OrbitMap(Orbit source, Orbit target, const Rat& offset);

  static OrbitMap identity(const Orbit& o) { return {o, o, Rat(0)}; }

  const Orbit& source() const { return src_; }
  const Orbit& target() const { return tgt_; }
  const Rat& offset() const { return offset_; }

  bool parallel_to(const OrbitMap& o) const { return src_ == o.src_ && tgt_ == o.tgt_; }
  bool operator==(const OrbitMap& o) const { return parallel_to(o) && offset_ == o.offset_; }

 private:
  Orbit src_, tgt_;
  Rat offset_;  // in [0, 1/target level), denominator a finite divisor of N
};

OrbitMap make_orbit_map(long m, long n, const Rat& r, const Supernatural& ambient);

// g after f.
OrbitMap compose_orbit_maps(const OrbitMap& f, const OrbitMap& g);

// A 2-cell from u to v: a rational r with v = (translate by r) after u.
// Intertwiner values live in (1/N)Z and are not reduced; distinct values are
// distinct 2-cells.
class Intertwiner {
 public:
  Intertwiner(OrbitMap from, OrbitMap to, const Rat& value);

  const OrbitMap& from() const { return from_; }
  const OrbitMap& to() const { return to_; }
  const Rat& value() const { return value_; }

 private:
  OrbitMap from_, to_;
  Rat value_;
};

// All intertwiner values from u to v: base + (1/n)Z for the target level n.
struct IntertwinerCoset {
  Rat base;    // in [0, 1/n)
  Rat period;  // 1/n

  bool contains(const Rat& r) const {
    Rat d = (r - base) / period;
    return rat_den(d) == 1;
  }
};

IntertwinerCoset intertwiners(const OrbitMap& u, const OrbitMap& v);

// Checks that r is a valid intertwiner value from u to v in the given ambient.
bool is_intertwiner(const OrbitMap& u, const OrbitMap& v, const Rat& r);

struct FiniteCyclonicSet {
  std::vector<Orbit> orbits;  // all sharing the ambient degree
};

// One orbit component of a pullback, with its two projections.
struct PullbackComponent {
  Orbit orbit;
  OrbitMap pr1;  // to the source of f
  OrbitMap pr2;  // to the source of g
};

// Pullback of f: <k> -> <m> against g: <l> -> <m>, decomposed into orbits.
// Exactly m/lcm(k,l) components, each of level gcd(k,l); the projections
// satisfy f . pr1 = g . pr2 on the nose (recorded intertwiner 0).
std::vector<PullbackComponent> pullback_cospan(const OrbitMap& f, const OrbitMap& g);

// Data of a 3-simplex: four orbits in a divisibility chain, maps phi[i][j]
// for i < j, and claimed fillers alpha[{i,j,k}] (intertwiners from phi_ik to
// phi_jk . phi_ij).
struct Simplex3 {
  std::vector<Orbit> objects;             // size 4
  std::vector<std::vector<OrbitMap>> phi; // phi[i][j] valid for i < j
  // Fillers indexed 012, 013, 023, 123.
  Rat alpha012, alpha013, alpha023, alpha123;
};

struct Simplex3Report {
  bool ok = true;
  std::string failing_face;  // e.g. "alpha(0,1,2)" or "cocycle"
  std::string detail;
};

Simplex3Report check_simplex3(const Simplex3& s);

}  // namespace cyc
