#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyc/errors.hpp"
#include "cyc/ints.hpp"

namespace cyc {

enum class DivStatus { ok, non_integral, ambiguous };

// Sparse multivariate polynomial over C (Int or Rat). A monomial is a sorted
// list of (variable id, exponent > 0); the key order makes maps deterministic.
template <typename C>
class Poly {
 public:
  using Monomial = std::vector<std::pair<int, int>>;

  Poly() = default;
  static Poly constant(const C& c) {
    Poly p;
    if (!(c == C(0))) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static Poly variable(int var) {
    Poly p;
    p.terms_.emplace(Monomial{{var, 1}}, C(1));
    return p;
  }

  const std::map<Monomial, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == C(0)) r.terms_.erase(it);
      }
    }
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m = merge_monomials(m1, m2);
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          C c = c1 * c2;
          if (!(c == C(0))) r.terms_.emplace(std::move(m), std::move(c));
        } else {
          it->second += c1 * c2;
          if (it->second == C(0)) r.terms_.erase(it);
        }
      }
    return r;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly scaled(const C& c) const {
    Poly r;
    if (c == C(0)) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
  }

  Poly pow(long e) const {
    Poly r = constant(C(1));
    Poly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  template <typename D, typename Conv>
  Poly<D> map_coeffs(Conv&& conv) const {
    Poly<D> r;
    for (const auto& [m, c] : terms_) r.insert_term(m, conv(c));
    return r;
  }

  void insert_term(const Monomial& m, const C& c) {
    if (!(c == C(0))) terms_.emplace(m, c);
  }

  static Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial m;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        m.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        m.push_back(b[j++]);
      } else {
        m.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
    return m;
  }

 private:
  std::map<Monomial, C> terms_;
};

// --- Ring instances -------------------------------------------------------
//
// Shared shape: value-semantic ring descriptor with an Elem type, exact
// operations, an integer scalar action, and partial exact division by an
// integer. Errors are signalled through DivStatus, never by rounding.

struct IntRing {
  using Elem = Int;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(const Int& n) const { return n; }
  Elem scalar(const Int& n, const Elem& a) const { return n * a; }
  DivStatus try_divide(Elem& out, const Elem& a, const Int& n) const {
    if (n == 0) return DivStatus::non_integral;
    if (a % n != 0) return DivStatus::non_integral;
    out = a / n;
    return DivStatus::ok;
  }
  bool torsion_free() const { return true; }
  bool same(const IntRing&) const { return true; }
  std::string name() const { return "Z"; }
  std::string str(const Elem& a) const { return a.str(); }
};

struct RatRing {
  using Elem = Rat;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(const Int& n) const { return Rat(n); }
  Elem scalar(const Int& n, const Elem& a) const { return Rat(n) * a; }
  DivStatus try_divide(Elem& out, const Elem& a, const Int& n) const {
    if (n == 0) return DivStatus::non_integral;
    out = a / Rat(n);
    return DivStatus::ok;
  }
  bool torsion_free() const { return true; }
  bool same(const RatRing&) const { return true; }
  std::string name() const { return "Q"; }
  std::string str(const Elem& a) const {
    Int num = boost::multiprecision::numerator(a), den = boost::multiprecision::denominator(a);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }
};

// Z/n with canonical representatives in [0, n).
struct ModRing {
  Int n;
  explicit ModRing(Int modulus) : n(std::move(modulus)) {
    if (n < 1) throw UnsupportedRingError("ModRing: modulus must be >= 1");
  }
  using Elem = Int;
  Elem zero() const { return 0; }
  Elem one() const { return pos_mod(Int(1), n); }
  Elem reduce(const Int& a) const { return pos_mod(a, n); }
  Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
  Elem neg(const Elem& a) const { return reduce(-a); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  bool eq(const Elem& a, const Elem& b) const { return reduce(a - b) == 0; }
  Elem from_int(const Int& k) const { return reduce(k); }
  Elem scalar(const Int& k, const Elem& a) const { return reduce(k * a); }
  // k*x = a: unique solution iff gcd(k, n) = 1; solvable-but-ambiguous counts
  // as torsion ambiguity.
  DivStatus try_divide(Elem& out, const Elem& a, const Int& k) const {
    XgcdResult x = xgcd(pos_mod(k, n), n);
    if (x.g == 1) {
      out = reduce(x.s * a);
      return DivStatus::ok;
    }
    return reduce(a) % x.g == 0 ? DivStatus::ambiguous : DivStatus::non_integral;
  }
  bool torsion_free() const { return false; }
  bool same(const ModRing& o) const { return n == o.n; }
  std::string name() const { return "Zmod:" + n.str(); }
  std::string str(const Elem& a) const { return reduce(a).str(); }
};

// Polynomials over a base coefficient ring (integers or rationals).
template <typename Base>
struct PolyRing {
  Base base;
  std::vector<std::string> vars;

  using Elem = Poly<typename Base::Elem>;
  Elem zero() const { return Elem(); }
  Elem one() const { return Elem::constant(base.one()); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(const Int& n) const { return Elem::constant(base.from_int(n)); }
  Elem scalar(const Int& n, const Elem& a) const { return a.scaled(base.from_int(n)); }
  Elem var(int i) const { return Elem::variable(i); }
  DivStatus try_divide(Elem& out, const Elem& a, const Int& n) const {
    Elem r;
    for (const auto& [m, c] : a.terms()) {
      typename Base::Elem q;
      DivStatus st = base.try_divide(q, c, n);
      if (st != DivStatus::ok) return st;
      r.insert_term(m, q);
    }
    out = std::move(r);
    return DivStatus::ok;
  }
  bool torsion_free() const { return base.torsion_free(); }
  bool same(const PolyRing& o) const { return vars == o.vars; }
  std::string name() const {
    std::string s = "Poly" + std::string(base.name() == "Z" ? "Z" : "Q") + ":";
    for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s;
  }
  std::string str(const Elem& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
      if (!first) os << " + ";
      first = false;
      os << base.str(c);
      for (auto [v, e] : m) {
        os << "*" << vars.at(v);
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }
};

using PolyZ = PolyRing<IntRing>;
using PolyQ = PolyRing<RatRing>;

// Runtime ring selection for the CLI surface. "Z", "Zmod:<n>", "Q",
// "PolyZ:<v1,v2,...>", "PolyQ:<vars>".
struct RingSpec {
  enum class Kind { z, zmod, q, poly_z, poly_q };
  Kind kind = Kind::z;
  Int modulus = 0;
  std::vector<std::string> vars;

  static RingSpec parse(const std::string& tag);
  std::string str() const;
};

template <typename F>
auto with_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind) {
    case RingSpec::Kind::z:
      return f(IntRing{});
    case RingSpec::Kind::zmod:
      return f(ModRing{spec.modulus});
    case RingSpec::Kind::q:
      return f(RatRing{});
    case RingSpec::Kind::poly_z:
      return f(PolyZ{IntRing{}, spec.vars});
    case RingSpec::Kind::poly_q:
      return f(PolyQ{RatRing{}, spec.vars});
  }
  throw UnsupportedRingError("with_ring: unknown ring kind");
}

}  // namespace cyc
