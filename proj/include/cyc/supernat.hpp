#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc/ints.hpp"

namespace cyc {

// Valuation in N ∪ {∞}.
class ExtNat {
 public:
  ExtNat() : inf_(false), v_(0) {}
  explicit ExtNat(const Int& v) : inf_(false), v_(v) {}
  static ExtNat infinity() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }
  const Int& finite_value() const;  // throws if infinite

  bool operator==(const ExtNat& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
  bool operator!=(const ExtNat& o) const { return !(*this == o); }
  bool operator<=(const ExtNat& o) const { return o.inf_ || (!inf_ && v_ <= o.v_); }

  ExtNat operator+(const ExtNat& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtNat(v_ + o.v_);
  }

  static ExtNat min(const ExtNat& a, const ExtNat& b) { return a <= b ? a : b; }
  static ExtNat max(const ExtNat& a, const ExtNat& b) { return a <= b ? b : a; }

  std::string str() const;

 private:
  bool inf_;
  Int v_;
};

// Formal product ∏ p^{v_p} with v_p ∈ N ∪ {∞}. The top element (v_p = ∞ for
// every p) is stored as a flag, never as a map; every stored valuation is
// >= 1 or ∞.
class Supernatural {
 public:
  Supernatural() = default;  // the unit, 1
  explicit Supernatural(const Int& n);
  explicit Supernatural(long n) : Supernatural(Int(n)) {}
  static Supernatural top();
  static Supernatural from_valuations(std::map<Int, ExtNat> vals);

  bool is_top() const { return top_; }
  bool is_finite() const;
  // Round-trips with the positive integer representation; throws when not finite.
  Int to_integer() const;

  ExtNat valuation(const Int& p) const;
  bool divides(const Supernatural& other) const;
  bool operator==(const Supernatural& o) const { return top_ == o.top_ && vals_ == o.vals_; }
  bool operator!=(const Supernatural& o) const { return !(*this == o); }

  Supernatural mul(const Supernatural& other) const;
  Supernatural meet(const Supernatural& other) const;  // gcd on finite inputs
  Supernatural join(const Supernatural& other) const;  // lcm on finite inputs

  // Finite divisors <= bound, ascending. The nest is infinite for infinite N,
  // so callers always truncate.
  std::vector<long> nest(long bound) const;

  // Prime-to-p part: the valuation at p dropped, everything else kept.
  Supernatural coprime_part(const Int& p) const;

  // Text form: "inf", a decimal integer, or "^"/"*"-joined factors such as
  // "2^inf*3".
  std::string str() const;
  static Supernatural parse(const std::string& text);

 private:
  bool top_ = false;
  std::map<Int, ExtNat> vals_;
};

}  // namespace cyc
