#include "cyc/cyclonic.hpp"

#include <sstream>

#include "cyc/errors.hpp"

namespace cyc {

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

Rat rat_mod_unit_fraction(const Rat& r, long n) {
  // Subtract the integral part of r*n, leaving a representative in [0, 1/n).
  Rat scaled = r * n;
  Int fl = floor_div(rat_num(scaled), rat_den(scaled));
  return r - Rat(fl, Int(n));
}

std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat parse_rat(const std::string& s) {
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception& e) {
    throw InputError("rational: cannot parse '" + s + "'");
  }
}

Orbit::Orbit(long level, Supernatural ambient) : level_(level), ambient_(std::move(ambient)) {
  if (level_ < 1) throw NotDivisorError("Orbit: level must be positive");
  if (!Supernatural(level_).divides(ambient_))
    throw NotDivisorError("Orbit: level " + std::to_string(level_) +
                          " does not divide the ambient degree " + ambient_.str());
}

std::string Orbit::str() const { return "<" + std::to_string(level_) + ">@" + ambient_.str(); }

OrbitMap::OrbitMap(Orbit source, Orbit target, const Rat& offset)
    : src_(std::move(source)), tgt_(std::move(target)), offset_(0) {
  if (src_.ambient() != tgt_.ambient())
    throw LevelMismatchError("OrbitMap: orbits live in different ambient degrees");
  if (tgt_.level() % src_.level() != 0)
    throw NotDivisorError("OrbitMap: no equivariant map <" + std::to_string(src_.level()) +
                          "> -> <" + std::to_string(tgt_.level()) + ">");
  offset_ = rat_mod_unit_fraction(offset, tgt_.level());
  Int den = rat_den(offset_);
  if (den > 1 && !Supernatural(den).divides(src_.ambient()))
    throw BadDenominatorError("OrbitMap: offset " + rat_str(offset_) +
                              " does not lie in (1/N)Z for N = " + src_.ambient().str());
}

OrbitMap make_orbit_map(long m, long n, const Rat& r, const Supernatural& ambient) {
  return {Orbit(m, ambient), Orbit(n, ambient), r};
}

OrbitMap compose_orbit_maps(const OrbitMap& f, const OrbitMap& g) {
  if (!(f.target() == g.source()))
    throw LevelMismatchError("compose_orbit_maps: target of f is not the source of g");
  return {f.source(), g.target(), f.offset() + g.offset()};
}

Intertwiner::Intertwiner(OrbitMap from, OrbitMap to, const Rat& value)
    : from_(std::move(from)), to_(std::move(to)), value_(value) {
  if (!from_.parallel_to(to_))
    throw LevelMismatchError("Intertwiner: maps are not parallel");
  if (!is_intertwiner(from_, to_, value_))
    throw BadDenominatorError("Intertwiner: " + rat_str(value_) +
                              " does not rotate the first map into the second");
}

IntertwinerCoset intertwiners(const OrbitMap& u, const OrbitMap& v) {
  if (!u.parallel_to(v)) throw LevelMismatchError("intertwiners: maps are not parallel");
  long n = u.target().level();
  return {rat_mod_unit_fraction(v.offset() - u.offset(), n), Rat(1, Int(n))};
}

bool is_intertwiner(const OrbitMap& u, const OrbitMap& v, const Rat& r) {
  if (!u.parallel_to(v)) return false;
  Int den = rat_den(r);
  if (den > 1 && !Supernatural(den).divides(u.source().ambient())) return false;
  return intertwiners(u, v).contains(r);
}

std::vector<PullbackComponent> pullback_cospan(const OrbitMap& f, const OrbitMap& g) {
  if (!(f.target() == g.target()))
    throw LevelMismatchError("pullback_cospan: maps do not share a target");
  long k = f.source().level();
  long l = g.source().level();
  long m = f.target().level();
  long d = lgcd(k, l);
  long count = m / llcm(k, l);
  const Supernatural& amb = f.source().ambient();
  Orbit apex(d, amb);
  // Solutions (x, y) with f(x) = g(y), normalized so x = 0: then
  // y = (r_f - r_g) + j/m, and the residual (1/k)Z-action identifies values
  // of j modulo m/lcm(k,l).
  std::vector<PullbackComponent> out;
  out.reserve(count);
  Rat y0 = f.offset() - g.offset();
  for (long j = 0; j < count; ++j) {
    Rat y = y0 + Rat(Int(j), Int(m));
    OrbitMap pr1(apex, f.source(), Rat(0));
    OrbitMap pr2(apex, g.source(), y);
    out.push_back({apex, pr1, pr2});
  }
  return out;
}

Simplex3Report check_simplex3(const Simplex3& s) {
  Simplex3Report rep;
  auto fail = [&](const std::string& face, const std::string& detail) {
    rep.ok = false;
    rep.failing_face = face;
    rep.detail = detail;
    return rep;
  };
  if (s.objects.size() != 4) return fail("objects", "expected 4 objects");
  // Each filler must be an intertwiner phi_ik -> phi_jk . phi_ij.
  struct Face {
    int i, j, k;
    const Rat* alpha;
  };
  const Face faces[4] = {{0, 1, 2, &s.alpha012},
                         {0, 1, 3, &s.alpha013},
                         {0, 2, 3, &s.alpha023},
                         {1, 2, 3, &s.alpha123}};
  for (const Face& f : faces) {
    const OrbitMap& direct = s.phi[f.i][f.k];
    OrbitMap composite = compose_orbit_maps(s.phi[f.i][f.j], s.phi[f.j][f.k]);
    if (!is_intertwiner(direct, composite, *f.alpha)) {
      std::ostringstream os;
      os << "alpha(" << f.i << "," << f.j << "," << f.k << ")";
      return fail(os.str(), "value " + rat_str(*f.alpha) + " is not an intertwiner from phi_" +
                                std::to_string(f.i) + std::to_string(f.k) + " to the composite");
    }
  }
  // Cocycle identity, as an exact equality of rationals (whiskering keeps the
  // value, so both composites are plain sums).
  Rat lhs = s.alpha013 + s.alpha123;  // alpha_ijl + alpha_jkl
  Rat rhs = s.alpha023 + s.alpha012;  // alpha_ikl + alpha_ijk
  if (lhs != rhs)
    return fail("cocycle", "alpha013 + alpha123 = " + rat_str(lhs) +
                               " but alpha023 + alpha012 = " + rat_str(rhs));
  return rep;
}

}  // namespace cyc
