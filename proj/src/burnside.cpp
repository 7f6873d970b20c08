#include "cyc/burnside.hpp"

#include <sstream>

#include "cyc/errors.hpp"

namespace cyc {

Span::Span(Orbit source, Orbit target, std::vector<Apex> apexes)
    : src_(std::move(source)), tgt_(std::move(target)), apexes_(std::move(apexes)) {
  long d = lgcd(src_.level(), tgt_.level());
  for (const Apex& a : apexes_) {
    if (d % a.orbit.level() != 0)
      throw NotDivisorError("Span: apex level " + std::to_string(a.orbit.level()) +
                            " does not divide gcd of the endpoint levels");
    if (!(a.left.source() == a.orbit) || !(a.left.target() == src_) ||
        !(a.right.source() == a.orbit) || !(a.right.target() == tgt_))
      throw LevelMismatchError("Span: apex legs do not match the endpoints");
  }
}

Span Span::basic(long l, long m, long n, const Supernatural& ambient) {
  Orbit apex(l, ambient), src(m, ambient), tgt(n, ambient);
  std::vector<Apex> as;
  as.push_back({apex, OrbitMap(apex, src, Rat(0)), OrbitMap(apex, tgt, Rat(0))});
  return {src, tgt, std::move(as)};
}

HMorphism::HMorphism(long source_level, long target_level) : src_(source_level), tgt_(target_level) {
  if (src_ < 1 || tgt_ < 1) throw NotDivisorError("HMorphism: levels must be positive");
}

HMorphism::HMorphism(long source_level, long target_level, std::map<long, Int> coeffs)
    : HMorphism(source_level, target_level) {
  for (auto& [l, c] : coeffs) {
    check_index(l);
    if (c != 0) coeffs_.emplace(l, c);
  }
}

void HMorphism::check_index(long l) const {
  if (l < 1 || lgcd(src_, tgt_) % l != 0)
    throw NotDivisorError("HMorphism: index " + std::to_string(l) + " does not divide gcd(" +
                          std::to_string(src_) + "," + std::to_string(tgt_) + ")");
}

HMorphism HMorphism::basis(long l, long m, long n) {
  return {m, n, {{l, Int(1)}}};
}

Int HMorphism::coeff(long l) const {
  auto it = coeffs_.find(l);
  return it == coeffs_.end() ? Int(0) : it->second;
}

HMorphism HMorphism::operator+(const HMorphism& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) throw LevelMismatchError("HMorphism: level mismatch in +");
  std::map<long, Int> c = coeffs_;
  for (const auto& [l, x] : o.coeffs_) c[l] += x;
  return {src_, tgt_, std::move(c)};
}

HMorphism HMorphism::scaled(const Int& c) const {
  std::map<long, Int> out;
  for (const auto& [l, x] : coeffs_) out[l] = c * x;
  return {src_, tgt_, std::move(out)};
}

bool HMorphism::is_zero() const { return coeffs_.empty(); }

std::string HMorphism::str() const {
  std::ostringstream os;
  os << src_ << "->" << tgt_ << ":";
  if (coeffs_.empty()) os << " 0";
  for (const auto& [l, c] : coeffs_) os << " " << c << "*[" << l << "]";
  return os.str();
}

BurnsideElement::BurnsideElement(long level) : level_(level) {
  if (level_ < 1) throw NotDivisorError("BurnsideElement: level must be positive");
}

BurnsideElement::BurnsideElement(long level, std::map<long, Int> coeffs) : BurnsideElement(level) {
  for (auto& [l, c] : coeffs) {
    if (l < 1 || level_ % l != 0)
      throw NotDivisorError("BurnsideElement: index " + std::to_string(l) +
                            " does not divide the level");
    if (c != 0) coeffs_.emplace(l, c);
  }
}

BurnsideElement BurnsideElement::basis(long l, long m) {
  return {m, {{l, Int(1)}}};
}

Int BurnsideElement::coeff(long l) const {
  auto it = coeffs_.find(l);
  return it == coeffs_.end() ? Int(0) : it->second;
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  if (level_ != o.level_) throw LevelMismatchError("BurnsideElement: level mismatch in +");
  std::map<long, Int> c = coeffs_;
  for (const auto& [l, x] : o.coeffs_) c[l] += x;
  return {level_, std::move(c)};
}

std::string BurnsideElement::str() const {
  std::ostringstream os;
  os << "Omega<" << level_ << ">:";
  if (coeffs_.empty()) os << " 0";
  for (const auto& [l, c] : coeffs_) os << " " << c << "*[" << l << "]";
  return os.str();
}

HMorphism span_class(const Span& s) {
  std::map<long, Int> c;
  for (const auto& a : s.apexes()) c[a.orbit.level()] += 1;
  return {s.source().level(), s.target().level(), std::move(c)};
}

Span compose_spans(const Span& s, const Span& t) {
  if (!(s.target() == t.source()))
    throw LevelMismatchError("compose_spans: middle objects do not match");
  std::vector<Span::Apex> apexes;
  for (const auto& a : s.apexes())
    for (const auto& b : t.apexes()) {
      for (const auto& comp : pullback_cospan(a.right, b.left)) {
        OrbitMap left = compose_orbit_maps(comp.pr1, a.left);
        OrbitMap right = compose_orbit_maps(comp.pr2, b.right);
        apexes.push_back({comp.orbit, left, right});
      }
    }
  return {s.source(), t.target(), std::move(apexes)};
}

HMorphism compose_h(const HMorphism& h1, const HMorphism& h2) {
  if (h1.target_level() != h2.source_level())
    throw LevelMismatchError("compose_h: middle levels do not match");
  long n = h1.target_level();
  std::map<long, Int> out;
  for (const auto& [k, ck] : h1.coeffs())
    for (const auto& [l, cl] : h2.coeffs())
      out[lgcd(k, l)] += ck * cl * (n / llcm(k, l));
  return {h1.source_level(), h2.target_level(), std::move(out)};
}

BurnsideElement burnside_mul(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.level() != y.level()) throw LevelMismatchError("burnside_mul: level mismatch");
  long m = x.level();
  std::map<long, Int> out;
  for (const auto& [k, ck] : x.coeffs())
    for (const auto& [l, cl] : y.coeffs())
      out[lgcd(k, l)] += ck * cl * (m / llcm(k, l));
  return {m, std::move(out)};
}

SpanAutGroup span_aut_group(long m, long n, long l) {
  if (m < 1 || n < 1 || lgcd(m, n) % l != 0)
    throw NotDivisorError("span_aut_group: apex level must divide gcd");
  long d = llcm(m, n);
  return {Rat(1, Int(d)), "free abelian of rank 1 with generator 1/" + std::to_string(d)};
}

HMorphism dual(const HMorphism& h) {
  return {h.target_level(), h.source_level(), h.coeffs()};
}

}  // namespace cyc
