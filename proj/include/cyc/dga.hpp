#pragma once

#include <map>
#include <optional>
#include <string>

#include "cyc/burnside.hpp"
#include "cyc/ints.hpp"

namespace cyc {

// Generator of the endomorphism algebra of the level sum: alpha (degree 0) or
// epsilon (degree 1), indexed (b, k, a) with a, b in the divisor set and
// k | gcd(a, b); the symbol points a -> b.
struct DgaBasisSymbol {
  enum class Kind { alpha, epsilon };
  Kind kind = Kind::alpha;
  long b = 1, k = 1, a = 1;

  int degree() const { return kind == Kind::alpha ? 0 : 1; }
  bool operator<(const DgaBasisSymbol& o) const {
    return std::tie(kind, b, k, a) < std::tie(o.kind, o.b, o.k, o.a);
  }
  bool operator==(const DgaBasisSymbol& o) const {
    return kind == o.kind && b == o.b && k == o.k && a == o.a;
  }

  std::string str() const;  // "a[b,k,a]" or "e[b,k,a]"
  static DgaBasisSymbol parse(const std::string& s);
};

DgaBasisSymbol make_alpha(long b, long k, long a);
DgaBasisSymbol make_epsilon(long b, long k, long a);

// Element with integer coefficients over the ambient divisor set of `bound`;
// products of two degree-1 generators vanish, so degrees stay within {0, 1}.
class DgaElement {
 public:
  explicit DgaElement(long bound);
  DgaElement(long bound, std::map<DgaBasisSymbol, Int> terms);

  static DgaElement basis(long bound, const DgaBasisSymbol& s);
  // The derived unit: the sum of alpha[a,a,a] over the divisor set.
  static DgaElement unit(long bound);

  long bound() const { return bound_; }
  const std::map<DgaBasisSymbol, Int>& terms() const { return terms_; }
  Int coeff(const DgaBasisSymbol& s) const;

  DgaElement operator+(const DgaElement& o) const;
  DgaElement scaled(const Int& c) const;
  bool operator==(const DgaElement& o) const { return bound_ == o.bound_ && terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }

  DgaElement homogeneous_part(int degree) const;

  std::string str() const;

 private:
  long bound_;
  std::map<DgaBasisSymbol, Int> terms_;
};

struct DgaScaledSymbol {
  Int coeff;  // zero encodes the zero product
  DgaBasisSymbol symbol;
};

// x*y means x after y. The five relation families:
//   e e = 0; mismatched middles kill everything;
//   a_{c,l,b} a_{b,k,a} = (b/lcm(k,l)) a_{c,gcd(k,l),a};
//   e_{c,l,b} a_{b,k,a} = (b/k)       e_{c,gcd(k,l),a};
//   a_{c,l,b} e_{b,k,a} = (b/l)       e_{c,gcd(k,l),a}.
DgaScaledSymbol mul_basis(const DgaBasisSymbol& x, const DgaBasisSymbol& y);

DgaElement dga_mul(const DgaElement& x, const DgaElement& y);

// Degree-0 part corresponds to the morphism algebra: alpha[b,k,a] -> e_k: a -> b.
HMorphism alpha_to_h(const DgaBasisSymbol& s);

}  // namespace cyc
