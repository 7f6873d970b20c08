#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyc/cyclonic.hpp"

namespace cyc {

// A span <m> <- apex -> <n>, as a formal sum of basic spans; each apex level
// divides gcd(m, n).
class Span {
 public:
  struct Apex {
    Orbit orbit;
    OrbitMap left;   // apex -> source
    OrbitMap right;  // apex -> target
  };

  Span(Orbit source, Orbit target, std::vector<Apex> apexes);

  // The basic span through <l> with zero offsets.
  static Span basic(long l, long m, long n, const Supernatural& ambient);
  static Span identity(long m, const Supernatural& ambient) {
    return basic(m, m, m, ambient);
  }

  const Orbit& source() const { return src_; }
  const Orbit& target() const { return tgt_; }
  const std::vector<Apex>& apexes() const { return apexes_; }

 private:
  Orbit src_, tgt_;
  std::vector<Apex> apexes_;
};

// Morphism of the homotopy Burnside category: an integer vector indexed by
// the divisors of gcd(source level, target level). Coefficients are allowed
// to be negative (the additivized category); classes of actual spans are
// nonnegative.
class HMorphism {
 public:
  HMorphism(long source_level, long target_level);
  HMorphism(long source_level, long target_level, std::map<long, Int> coeffs);

  static HMorphism basis(long l, long m, long n);  // e_l : m -> n
  static HMorphism identity(long m) { return basis(m, m, m); }

  long source_level() const { return src_; }
  long target_level() const { return tgt_; }
  const std::map<long, Int>& coeffs() const { return coeffs_; }
  Int coeff(long l) const;

  HMorphism operator+(const HMorphism& o) const;
  HMorphism scaled(const Int& c) const;
  bool operator==(const HMorphism& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && coeffs_ == o.coeffs_;
  }

  bool is_zero() const;
  std::string str() const;

 private:
  void check_index(long l) const;
  long src_, tgt_;
  std::map<long, Int> coeffs_;  // zero entries dropped
};

// Element of the Burnside ring at level m: integer combination of orbit
// classes [l], l dividing m.
class BurnsideElement {
 public:
  explicit BurnsideElement(long level);
  BurnsideElement(long level, std::map<long, Int> coeffs);

  static BurnsideElement basis(long l, long m);
  static BurnsideElement one(long m) { return basis(m, m); }

  long level() const { return level_; }
  const std::map<long, Int>& coeffs() const { return coeffs_; }
  Int coeff(long l) const;

  BurnsideElement operator+(const BurnsideElement& o) const;
  bool operator==(const BurnsideElement& o) const {
    return level_ == o.level_ && coeffs_ == o.coeffs_;
  }
  std::string str() const;

 private:
  long level_;
  std::map<long, Int> coeffs_;
};

// 2-isomorphism class of a span: count apexes per level.
HMorphism span_class(const Span& s);

// Composition by pullback; apexes of the result are the pullback components
// with composed legs.
Span compose_spans(const Span& s, const Span& t);

// Bilinear extension of [l] . [k] = (n/lcm(k,l)) [gcd(k,l)] across the shared
// middle level n.
HMorphism compose_h(const HMorphism& h1, const HMorphism& h2);

// Bilinear extension of [k]*[l] = (m/lcm(k,l)) [gcd(k,l)] at level m.
BurnsideElement burnside_mul(const BurnsideElement& x, const BurnsideElement& y);

// Automorphisms of the basic span through <l> between <m> and <n>: a free
// abelian group of rank 1, generated by 1/lcm(m,n).
struct SpanAutGroup {
  Rat generator;
  std::string description;
};

SpanAutGroup span_aut_group(long m, long n, long l);

// Legs swapped; the coefficient vector is untouched (divisors of a gcd are
// symmetric in the two levels).
HMorphism dual(const HMorphism& h);

}  // namespace cyc
