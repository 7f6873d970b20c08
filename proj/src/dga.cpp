#include "cyc/dga.hpp"

#include <sstream>

#include "cyc/errors.hpp"

namespace cyc {

namespace {

void check_symbol(const DgaBasisSymbol& s) {
  if (s.a < 1 || s.b < 1 || s.k < 1 || lgcd(s.a, s.b) % s.k != 0)
    throw NotDivisorError("DgaBasisSymbol: index k = " + std::to_string(s.k) +
                          " must divide gcd(" + std::to_string(s.a) + "," + std::to_string(s.b) +
                          ")");
}

}  // namespace

std::string DgaBasisSymbol::str() const {
  std::ostringstream os;
  os << (kind == Kind::alpha ? "a[" : "e[") << b << "," << k << "," << a << "]";
  return os.str();
}

DgaBasisSymbol DgaBasisSymbol::parse(const std::string& s) {
  if (s.size() < 6 || (s[0] != 'a' && s[0] != 'e') || s[1] != '[' || s.back() != ']')
    throw InputError("dga symbol: expected a[b,k,a] or e[b,k,a], got '" + s + "'");
  std::string body = s.substr(2, s.size() - 3);
  std::vector<long> nums;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      nums.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) nums.push_back(std::stol(cur));
  if (nums.size() != 3) throw InputError("dga symbol: expected three indices in '" + s + "'");
  DgaBasisSymbol sym{s[0] == 'a' ? Kind::alpha : Kind::epsilon, nums[0], nums[1], nums[2]};
  check_symbol(sym);
  return sym;
}

DgaBasisSymbol make_alpha(long b, long k, long a) {
  DgaBasisSymbol s{DgaBasisSymbol::Kind::alpha, b, k, a};
  check_symbol(s);
  return s;
}

DgaBasisSymbol make_epsilon(long b, long k, long a) {
  DgaBasisSymbol s{DgaBasisSymbol::Kind::epsilon, b, k, a};
  check_symbol(s);
  return s;
}

DgaElement::DgaElement(long bound) : bound_(bound) {
  if (bound_ < 1) throw OutOfBoundError("DgaElement: bound must be >= 1");
}

DgaElement::DgaElement(long bound, std::map<DgaBasisSymbol, Int> terms) : DgaElement(bound) {
  for (auto& [s, c] : terms) {
    check_symbol(s);
    if (bound_ % s.a != 0 || bound_ % s.b != 0)
      throw OutOfBoundError("DgaElement: symbol " + s.str() + " is outside the divisor set of " +
                            std::to_string(bound_));
    if (c != 0) terms_.emplace(s, c);
  }
}

DgaElement DgaElement::basis(long bound, const DgaBasisSymbol& s) {
  return {bound, {{s, Int(1)}}};
}

DgaElement DgaElement::unit(long bound) {
  std::map<DgaBasisSymbol, Int> terms;
  for (long a : divisors(bound)) terms.emplace(make_alpha(a, a, a), Int(1));
  return {bound, std::move(terms)};
}

Int DgaElement::coeff(const DgaBasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Int(0) : it->second;
}

DgaElement DgaElement::operator+(const DgaElement& o) const {
  if (bound_ != o.bound_) throw RingMismatchError("DgaElement: bound mismatch in +");
  std::map<DgaBasisSymbol, Int> t = terms_;
  for (const auto& [s, c] : o.terms_) {
    t[s] += c;
    if (t[s] == 0) t.erase(s);
  }
  DgaElement r(bound_);
  r.terms_ = std::move(t);
  return r;
}

DgaElement DgaElement::scaled(const Int& c) const {
  DgaElement r(bound_);
  if (c == 0) return r;
  for (const auto& [s, x] : terms_) r.terms_.emplace(s, x * c);
  return r;
}

DgaElement DgaElement::homogeneous_part(int degree) const {
  DgaElement r(bound_);
  for (const auto& [s, c] : terms_)
    if (s.degree() == degree) r.terms_.emplace(s, c);
  return r;
}

std::string DgaElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << s.str();
  }
  return os.str();
}

DgaScaledSymbol mul_basis(const DgaBasisSymbol& x, const DgaBasisSymbol& y) {
  check_symbol(x);
  check_symbol(y);
  using Kind = DgaBasisSymbol::Kind;
  DgaScaledSymbol zero{Int(0), DgaBasisSymbol{}};
  if (x.kind == Kind::epsilon && y.kind == Kind::epsilon) return zero;
  if (y.b != x.a) return zero;  // middles must match: x is (d,l,c), y is (b,k,a), need c == b
  long b = y.b, k = y.k, l = x.k;
  long g = lgcd(k, l);
  if (x.kind == Kind::alpha && y.kind == Kind::alpha)
    return {Int(b / llcm(k, l)), make_alpha(x.b, g, y.a)};
  if (x.kind == Kind::epsilon && y.kind == Kind::alpha)
    return {Int(b / k), make_epsilon(x.b, g, y.a)};
  // alpha after epsilon
  return {Int(b / l), make_epsilon(x.b, g, y.a)};
}

DgaElement dga_mul(const DgaElement& x, const DgaElement& y) {
  if (x.bound() != y.bound()) throw RingMismatchError("dga_mul: bound mismatch");
  DgaElement acc(x.bound());
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) {
      DgaScaledSymbol prod = mul_basis(sx, sy);
      if (prod.coeff == 0) continue;
      acc = acc + DgaElement(x.bound(), {{prod.symbol, prod.coeff * cx * cy}});
    }
  return acc;
}

HMorphism alpha_to_h(const DgaBasisSymbol& s) {
  if (s.kind != DgaBasisSymbol::Kind::alpha)
    throw NotDivisorError("alpha_to_h: only degree-0 symbols correspond to morphisms");
  return HMorphism::basis(s.k, s.a, s.b);
}

}  // namespace cyc
