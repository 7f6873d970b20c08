#include "cyc/supernat.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyc/errors.hpp"

namespace cyc {

const Int& ExtNat::finite_value() const {
  if (inf_) throw std::logic_error("ExtNat: infinite valuation has no finite value");
  return v_;
}

std::string ExtNat::str() const { return inf_ ? "inf" : v_.str(); }

Supernatural::Supernatural(const Int& n) {
  if (n <= 0) throw std::invalid_argument("Supernatural: integer must be positive");
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      Int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      vals_.emplace(p, ExtNat(e));
    }
  }
  if (m > 1) vals_.emplace(m, ExtNat(Int(1)));
}

Supernatural Supernatural::top() {
  Supernatural s;
  s.top_ = true;
  return s;
}

Supernatural Supernatural::from_valuations(std::map<Int, ExtNat> vals) {
  Supernatural s;
  for (auto& [p, v] : vals) {
    if (p < 2) throw std::invalid_argument("Supernatural: prime must be >= 2");
    if (!v.is_infinite() && v.finite_value() < 0)
      throw std::invalid_argument("Supernatural: negative valuation");
    if (v.is_infinite() || v.finite_value() > 0) s.vals_.emplace(p, v);
  }
  return s;
}

bool Supernatural::is_finite() const {
  if (top_) return false;
  for (const auto& [p, v] : vals_)
    if (v.is_infinite()) return false;
  return true;
}

Int Supernatural::to_integer() const {
  if (!is_finite()) throw std::logic_error("Supernatural: not finite");
  Int r = 1;
  for (const auto& [p, v] : vals_) {
    Int e = v.finite_value();
    for (Int i = 0; i < e; ++i) r *= p;
  }
  return r;
}

ExtNat Supernatural::valuation(const Int& p) const {
  if (top_) return ExtNat::infinity();
  auto it = vals_.find(p);
  return it == vals_.end() ? ExtNat() : it->second;
}

bool Supernatural::divides(const Supernatural& other) const {
  if (other.top_) return true;
  if (top_) return false;
  for (const auto& [p, v] : vals_)
    if (!(v <= other.valuation(p))) return false;
  return true;
}

Supernatural Supernatural::mul(const Supernatural& other) const {
  if (top_ || other.top_) return top();
  std::map<Int, ExtNat> vals = vals_;
  for (const auto& [p, v] : other.vals_) {
    auto it = vals.find(p);
    if (it == vals.end())
      vals.emplace(p, v);
    else
      it->second = it->second + v;
  }
  return from_valuations(std::move(vals));
}

Supernatural Supernatural::meet(const Supernatural& other) const {
  if (top_) return other;
  if (other.top_) return *this;
  std::map<Int, ExtNat> vals;
  for (const auto& [p, v] : vals_) {
    ExtNat w = ExtNat::min(v, other.valuation(p));
    if (w.is_infinite() || w.finite_value() > 0) vals.emplace(p, w);
  }
  return from_valuations(std::move(vals));
}

Supernatural Supernatural::join(const Supernatural& other) const {
  if (top_ || other.top_) return top();
  std::map<Int, ExtNat> vals = vals_;
  for (const auto& [p, v] : other.vals_) {
    auto it = vals.find(p);
    if (it == vals.end())
      vals.emplace(p, v);
    else
      it->second = ExtNat::max(it->second, v);
  }
  return from_valuations(std::move(vals));
}

namespace {

void enumerate_divisors(const std::vector<std::pair<long, long>>& pw, size_t i, long cur,
                        long bound, std::vector<long>& out) {
  if (i == pw.size()) {
    out.push_back(cur);
    return;
  }
  auto [p, maxe] = pw[i];
  long v = cur;
  for (long e = 0; e <= maxe; ++e) {
    enumerate_divisors(pw, i + 1, v, bound, out);
    if (v > bound / p) break;
    v *= p;
  }
}

}  // namespace

std::vector<long> Supernatural::nest(long bound) const {
  if (bound < 1) throw std::invalid_argument("nest: bound must be >= 1");
  // Per-prime exponent caps: min(v_p(N), log_p bound).
  std::vector<std::pair<long, long>> pw;
  auto add_prime = [&](long p, const ExtNat& v) {
    long cap = 0;
    long q = 1;
    while (q <= bound / p) {
      q *= p;
      ++cap;
    }
    if (!v.is_infinite() && Int(cap) > v.finite_value())
      cap = static_cast<long>(v.finite_value());
    if (cap > 0) pw.emplace_back(p, cap);
  };
  if (top_) {
    for (long p = 2; p <= bound; ++p)
      if (is_prime(p)) add_prime(p, ExtNat::infinity());
  } else {
    for (const auto& [p, v] : vals_) {
      if (p > bound) continue;
      add_prime(static_cast<long>(p), v);
    }
  }
  std::vector<long> out;
  enumerate_divisors(pw, 0, 1, bound, out);
  // enumerate_divisors only multiplies while <= bound, but combined products
  // can still exceed it when several primes are in play.
  out.erase(std::remove_if(out.begin(), out.end(), [&](long d) { return d > bound; }), out.end());
  std::sort(out.begin(), out.end());
  return out;
}

Supernatural Supernatural::coprime_part(const Int& p) const {
  if (top_) throw std::logic_error("coprime_part: undefined for the top element");
  std::map<Int, ExtNat> vals = vals_;
  vals.erase(p);
  return from_valuations(std::move(vals));
}

std::string Supernatural::str() const {
  if (top_) return "inf";
  if (vals_.empty()) return "1";
  if (is_finite()) return to_integer().str();
  std::string s;
  for (const auto& [p, v] : vals_) {
    if (!s.empty()) s += "*";
    s += p.str();
    if (v.is_infinite())
      s += "^inf";
    else if (v.finite_value() != 1)
      s += "^" + v.finite_value().str();
  }
  return s;
}

Supernatural Supernatural::parse(const std::string& text) {
  if (text.empty()) throw InputError("supernatural: empty string");
  if (text == "inf") return top();
  Supernatural acc;  // 1
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string factor = text.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    if (factor.empty()) throw InputError("supernatural: empty factor in '" + text + "'");
    size_t caret = factor.find('^');
    try {
      if (caret == std::string::npos) {
        acc = acc.mul(Supernatural(Int(factor)));
      } else {
        Int base(factor.substr(0, caret));
        std::string exp = factor.substr(caret + 1);
        if (base < 2) throw InputError("supernatural: base must be >= 2 in '" + factor + "'");
        if (exp == "inf") {
          // p^inf for prime p; composite bases distribute over their factors.
          Supernatural b(base);
          std::map<Int, ExtNat> vals;
          for (const auto& [p, v] : b.vals_) vals.emplace(p, ExtNat::infinity());
          acc = acc.mul(from_valuations(std::move(vals)));
        } else {
          Int e(exp);
          if (e < 0) throw InputError("supernatural: negative exponent");
          Supernatural b(base);
          Supernatural powed;
          for (Int i = 0; i < e; ++i) powed = powed.mul(b);
          acc = acc.mul(powed);
        }
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& ex) {
      throw InputError(std::string("supernatural: cannot parse '") + text + "': " + ex.what());
    }
  }
  return acc;
}

}  // namespace cyc
