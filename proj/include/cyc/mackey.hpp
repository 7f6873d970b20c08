#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyc/abgrp.hpp"
#include "cyc/burnside.hpp"

namespace cyc {

// A level-indexed family of groups on a divisor-closed set of levels, with
// push (covariant) and pull (contravariant) maps stored on prime-ratio
// covering pairs only. Maps for general pairs are derived by composing the
// ascending prime factorization, so transitivity is a property of the data,
// not an assumption.
struct MackeyData {
  long bound = 1;
  std::vector<long> levels;  // sorted, divisor-closed
  std::map<long, FGAbelianGroup> groups;
  std::map<std::pair<long, long>, GroupMorphism> push;  // covering pairs m|n
  std::map<std::pair<long, long>, GroupMorphism> pull;

  bool has_level(long m) const;
  const FGAbelianGroup& group(long m) const;
  // Derived maps for any m | n in the level set.
  GroupMorphism push_map(long m, long n) const;
  GroupMorphism pull_map(long m, long n) const;
};

// Prime-step covering pairs inside a divisor-closed level set.
std::vector<std::pair<long, long>> covering_pairs(const std::vector<long>& levels);

struct MackeyViolation {
  std::string identity;  // "push-square", "pull-square", "double-coset", ...
  long k = 0, l = 0, m = 0;
  std::string detail;
};

struct MackeyReport {
  std::vector<MackeyViolation> violations;
  bool valid() const { return violations.empty(); }
  std::string str() const;
};

// Checks commutativity of covering squares (path-independence of derived
// maps) and the double-coset identity
//   pull_{l|m} . push_{k|m} = (m/lcm(k,l)) push_{gcd|l} . pull_{gcd|k}
// for all k, l | m across the level set.
MackeyReport validate_mackey(const MackeyData& d);

// The Burnside Mackey structure: X<m> = Z{divisors of m}, push induces
// ([k]_m -> [k]_n), pull is [k]_n -> (n/lcm(m,k)) [gcd(m,k)]_m.
MackeyData burnside_mackey(long bound);

// A basic span [k] acts as pull-to-k then push-from-k; eval is the additive
// extension.
GroupMorphism eval_h(const MackeyData& d, const HMorphism& h);

// Restriction to the p-coprime levels.
MackeyData j_upper_star(const MackeyData& d, long p);

// p-constant extension of data living on p-coprime levels: levels become all
// divisors of bound, with (j X)<n> = X<n with p-part removed>; push across a
// p-power step is the identity, pull is multiplication by the ratio.
MackeyData j_lower_shriek(const MackeyData& d, long p, long bound);

// Lazy, unbounded presentation: groups and covering maps computed on demand
// and memoized. Rules must be pure.
class MackeyRule {
 public:
  using GroupFn = std::function<FGAbelianGroup(long)>;
  using CoverFn = std::function<IntegerMatrix(long, long)>;

  MackeyRule(GroupFn group, CoverFn push_cover, CoverFn pull_cover);

  FGAbelianGroup group(long m) const;
  GroupMorphism push(long m, long n) const;  // any m | n
  GroupMorphism pull(long m, long n) const;

  // Present for rules produced by quotient constructions: the projection from
  // the underlying carrier at the consumed level onto group(m).
  std::function<GroupMorphism(long)> projection;

  MackeyData truncate(long bound) const;

 private:
  GroupMorphism cover_push(long m, long n) const;
  GroupMorphism cover_pull(long m, long n) const;
  FGAbelianGroup group_memoized(long m) const;  // requires memo_->mu held

  GroupFn group_fn_;
  CoverFn push_fn_, pull_fn_;
  struct Memo {
    std::mutex mu;
    std::map<long, FGAbelianGroup> groups;
    std::map<std::pair<long, long>, IntegerMatrix> push, pull;
  };
  std::shared_ptr<Memo> memo_;
};

MackeyRule burnside_rule();
MackeyRule zero_rule();

}  // namespace cyc
