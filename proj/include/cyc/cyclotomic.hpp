#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyc/mackey.hpp"
#include "cyc/rings.hpp"
#include "cyc/witt.hpp"

namespace cyc {

// Geometric fixed points at p: (Phi X)<l> is the cokernel of the push from
// the p-free part of l into X<lp>, with structure maps induced on the
// quotients. The result's `projection` member gives X<lp> -> (Phi X)<l>.
MackeyRule geometric_fixed_points(const MackeyRule& base, long p);

struct CheckEntry {
  long level = 0;
  std::string check;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  std::string str() const;
};

// The abelian shadow of the recollement at p: the p-constant extension maps
// into X by transfers, that map is a morphism of Mackey structures, and level
// by level X<ap^v>/X<a> carries induced structure; the sequence
//   (j X)<n> -> X<n> -> X<n>/im -> 0
// is right exact with kernel(projection) = image(transfer), verified by SNF.
CheckReport recollement_check(const MackeyData& d, long p);

// Cyclotomic structure on a lazy Mackey family: for each prime p of the
// declared set and every level l with p-free part a, an isomorphism
// r_p<l> : X<l> -> X<lp>/im(push_{a|lp}). The quotient targets are memoized
// here so every consumer sees one presentation.
class CyclotomicData {
 public:
  using StructureFn = std::function<IntegerMatrix(long p, long level)>;

  CyclotomicData(MackeyRule base, std::vector<long> primes, StructureFn structure);

  const MackeyRule& base() const { return base_; }
  const std::vector<long>& primes() const { return primes_; }

  // The memoized quotient carrier X<lp>/im(push) and its projection.
  const CokernelResult& target(long p, long level) const;
  // r_p at the level, as a morphism onto the memoized target.
  GroupMorphism r(long p, long level) const;

  // Same data with one structure map replaced (for counterexample tests).
  CyclotomicData with_override(long p, long level, IntegerMatrix matrix) const;

 private:
  MackeyRule base_;
  std::vector<long> primes_;
  StructureFn structure_;
  std::map<std::pair<long, long>, IntegerMatrix> overrides_;
  struct Memo {
    std::mutex mu;
    std::map<std::pair<long, long>, CokernelResult> targets;
  };
  std::shared_ptr<Memo> memo_;
};

// The Witt cyclotomic structure over Z or Z/n: r_p is induced by the
// identity-index section on components (the surviving component indices of
// the quotient are exactly the divisor set one level down).
CyclotomicData witt_cyclotomic(const RingSpec& ring, std::vector<long> primes = {2, 3, 5});

// Levelwise checks up to the bound: every r_p is an isomorphism, commutes
// with push and pull into the induced quotient maps, and for each prime pair
// the two iterated fixed-point squares agree under the canonical
// identification of the double quotients.
CheckReport verify_cyclotomic(const CyclotomicData& c, long bound);

// Restriction rho_{m|n} derived from the structure maps: at a prime step,
// project X<up> onto the quotient and pull back along r_p^{-1}; general
// ratios by composition. All factorization orders are compared before
// returning.
GroupMorphism derived_restriction(const CyclotomicData& c, long m, long n);

// verify_cyclotomic for the Witt structure, plus the comparison of every
// derived restriction against component truncation (levels m | n <= bound
// whose ratio factors through the prime set).
CheckReport verify_witt_cyclotomic(const RingSpec& ring, const std::vector<long>& primes,
                                   long bound);

// --- The twisted orbit category ---------------------------------------------

// Reindexing along multiplication by n: levels scale by n, offsets and
// 2-cells divide by n.
OrbitMap iota(const OrbitMap& f, long n);

// A morphism (scale, f : iota_scale(S) -> T).
struct TwistedMorphism {
  long scale = 1;
  OrbitMap map;
};

// (n, g) after (m, f) = (nm, g . iota_n(f)).
TwistedMorphism twisted_compose(const TwistedMorphism& a, const TwistedMorphism& b);

enum class TwistedCellFormula { divide_by_first_scale, divide_by_second_scale };

// Horizontal composite of 2-cells r (on a scale-m morphism) and s (on a
// scale-n morphism) under the chosen formula: r/m + s or r/n + s.
Rat twisted_compose_cells(const Rat& r, long m, const Rat& s, long n, TwistedCellFormula f);

struct TwistedAuditReport {
  bool first_scale_associative = false;
  bool second_scale_associative = false;
  std::string adopted;  // the surviving formula, "r/n + s"
  std::string witness;  // a triple breaking the rejected formula
  bool conclusive() const { return first_scale_associative != second_scale_associative; }
};

// Exhaustive associativity audit over scale triples with product <= max_product
// and a grid of 2-cell values; exactly one candidate formula survives.
TwistedAuditReport twisted_associativity_audit(long max_product);

}  // namespace cyc
