#include "cyc/witt.hpp"

#include <map>
#include <mutex>

namespace cyc {

namespace {

struct PolyCache {
  std::mutex mu;
  std::map<std::pair<long, WittOp>, std::vector<Poly<Int>>> universal;
  std::map<std::pair<long, long>, std::vector<Poly<Int>>> frobenius;
};

PolyCache& poly_cache() {
  static PolyCache cache;
  return cache;
}

std::vector<Poly<Int>> to_integral(const std::vector<Poly<Rat>>& polys, const char* what) {
  std::vector<Poly<Int>> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    out.push_back(p.template map_coeffs<Int>([&](const Rat& c) {
      if (boost::multiprecision::denominator(c) != 1)
        throw IntegralityFailure(std::string(what) + ": non-integral coefficient " +
                                 RatRing{}.str(c));
      return boost::multiprecision::numerator(c);
    }));
  }
  return out;
}

std::vector<Poly<Int>> compute_universal(long level, WittOp op) {
  PolyQ ring{RatRing{}, {}};
  auto ds = divisors(level);
  long r = static_cast<long>(ds.size());
  WittVector<PolyQ> x{ring, level, {}}, y{ring, level, {}};
  for (long i = 0; i < r; ++i) x.comp.push_back(ring.var(static_cast<int>(i)));
  for (long i = 0; i < r; ++i) y.comp.push_back(ring.var(static_cast<int>(r + i)));
  auto gx = ghost(x);
  std::vector<Poly<Rat>> gz;
  gz.reserve(r);
  if (op == WittOp::negation) {
    for (const auto& p : gx) gz.push_back(-p);
  } else {
    auto gy = ghost(y);
    for (long i = 0; i < r; ++i)
      gz.push_back(op == WittOp::sum ? gx[i] + gy[i] : gx[i] * gy[i]);
  }
  WittVector<PolyQ> w = ghost_solve(ring, level, gz);
  return to_integral(w.comp, "universal_polys");
}

std::vector<Poly<Int>> compute_frobenius(long m, long n) {
  PolyQ ring{RatRing{}, {}};
  auto dn = divisors(n);
  auto dm = divisors(m);
  WittVector<PolyQ> x{ring, n, {}};
  for (size_t i = 0; i < dn.size(); ++i) x.comp.push_back(ring.var(static_cast<int>(i)));
  auto gz = ghost(x);
  std::vector<Poly<Rat>> gout;
  gout.reserve(dm.size());
  for (long k : dm) {
    long idx = std::lower_bound(dn.begin(), dn.end(), k * (n / m)) - dn.begin();
    gout.push_back(gz[idx]);
  }
  WittVector<PolyQ> w = ghost_solve(ring, m, gout);
  return to_integral(w.comp, "frobenius_polys");
}

}  // namespace

const std::vector<Poly<Int>>& universal_polys(long level, WittOp op) {
  PolyCache& c = poly_cache();
  std::lock_guard<std::mutex> lk(c.mu);
  auto key = std::make_pair(level, op);
  auto it = c.universal.find(key);
  if (it == c.universal.end()) it = c.universal.emplace(key, compute_universal(level, op)).first;
  return it->second;
}

const std::vector<Poly<Int>>& frobenius_polys(long m, long n) {
  if (m < 1 || n % m != 0) throw NotDivisorError("frobenius_polys: m must divide n");
  PolyCache& c = poly_cache();
  std::lock_guard<std::mutex> lk(c.mu);
  auto key = std::make_pair(m, n);
  auto it = c.frobenius.find(key);
  if (it == c.frobenius.end()) it = c.frobenius.emplace(key, compute_frobenius(m, n)).first;
  return it->second;
}

PolyZ witt_poly_ring(long level, WittOp op) {
  std::vector<std::string> vars;
  for (long d : divisors(level)) vars.push_back("x" + std::to_string(d));
  if (op != WittOp::negation)
    for (long d : divisors(level)) vars.push_back("y" + std::to_string(d));
  return {IntRing{}, std::move(vars)};
}

IntegerMatrix witt_ghost_basis(long level) {
  auto ds = divisors(level);
  long r = static_cast<long>(ds.size());
  IntegerMatrix b(r, r);
  for (long col = 0; col < r; ++col)
    for (long row = 0; row < r; ++row)
      if (ds[row] % ds[col] == 0) b.at(row, col) = ds[col];
  return b;
}

std::vector<Int> witt_basis_solve(long level, const std::vector<Int>& v) {
  auto ds = divisors(level);
  if (v.size() != ds.size()) throw LevelMismatchError("witt_basis_solve: wrong length");
  // Forward substitution along the divisor order; x_d = (v_d - sum) / d.
  std::vector<Int> x(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    Int rest = 0;
    for (size_t j = 0; j < i; ++j)
      if (ds[i] % ds[j] == 0) rest += Int(ds[j]) * x[j];
    Int num = v[i] - rest;
    if (num % ds[i] != 0)
      throw NonIntegralError(ds[i], "witt_basis_solve: vector is outside the ghost lattice");
    x[i] = num / ds[i];
  }
  return x;
}

IntegerMatrix witt_mod_relations(long level, const Int& modulus) {
  auto ds = divisors(level);
  long r = static_cast<long>(ds.size());
  IntegerMatrix rels(r, r);
  for (long rowi = 0; rowi < r; ++rowi) {
    long d = ds[rowi];
    // ghost of the vector with component `modulus` at index d.
    std::vector<Int> g(r, Int(0));
    for (long j = 0; j < r; ++j)
      if (ds[j] % d == 0) g[j] = Int(d) * int_pow(modulus, ds[j] / d);
    std::vector<Int> coords = witt_basis_solve(level, g);
    for (long j = 0; j < r; ++j) rels.at(rowi, j) = coords[j];
  }
  return rels;
}

std::vector<Int> witt_to_coords(const WittVector<IntRing>& w) {
  return witt_basis_solve(w.level, ghost(w));
}

WittVector<IntRing> witt_from_coords(long level, const std::vector<Int>& coords) {
  IntegerMatrix b = witt_ghost_basis(level);
  return ghost_solve(IntRing{}, level, b.apply(coords));
}

namespace {

IntegerMatrix witt_push_cover(long m, long n) {
  // Verschiebung scales component indices by n/m, so on the triangular bases
  // it is the index embedding d -> d*(n/m).
  auto dm = divisors(m), dn = divisors(n);
  IntegerMatrix mat(dn.size(), dm.size());
  long c = n / m;
  for (size_t j = 0; j < dm.size(); ++j) {
    long tgt = dm[j] * c;
    long idx = std::lower_bound(dn.begin(), dn.end(), tgt) - dn.begin();
    mat.at(idx, j) = 1;
  }
  return mat;
}

IntegerMatrix witt_pull_cover(long m, long n) {
  // Frobenius on ghost coordinates: z'_k = z_{k n/m}; expressed in the bases.
  auto dm = divisors(m), dn = divisors(n);
  IntegerMatrix mat(dm.size(), dn.size());
  IntegerMatrix bn = witt_ghost_basis(n);
  for (size_t j = 0; j < dn.size(); ++j) {
    std::vector<Int> gcol(dm.size());
    for (size_t i = 0; i < dm.size(); ++i) {
      long src = dm[i] * (n / m);
      long idx = std::lower_bound(dn.begin(), dn.end(), src) - dn.begin();
      gcol[i] = bn.at(idx, j);
    }
    std::vector<Int> coords = witt_basis_solve(m, gcol);
    for (size_t i = 0; i < dm.size(); ++i) mat.at(i, j) = coords[i];
  }
  return mat;
}

}  // namespace

IntegerMatrix witt_restriction_matrix(long m, long n) {
  if (m < 1 || n % m != 0) throw NotDivisorError("witt_restriction_matrix: m must divide n");
  auto dm = divisors(m), dn = divisors(n);
  IntegerMatrix mat(dm.size(), dn.size());
  for (size_t j = 0; j < dn.size(); ++j) {
    long d = dn[j];
    if (m % d != 0) continue;
    long idx = std::lower_bound(dm.begin(), dm.end(), d) - dm.begin();
    mat.at(idx, j) = 1;
  }
  return mat;
}

MackeyRule witt_rule(const RingSpec& ring) {
  if (ring.kind == RingSpec::Kind::z) {
    auto group = [](long m) {
      return FGAbelianGroup::free_group(static_cast<long>(divisors(m).size()));
    };
    return {group, witt_push_cover, witt_pull_cover};
  }
  if (ring.kind == RingSpec::Kind::zmod) {
    Int n = ring.modulus;
    auto group = [n](long m) {
      return FGAbelianGroup(static_cast<long>(divisors(m).size()), witt_mod_relations(m, n));
    };
    return {group, witt_push_cover, witt_pull_cover};
  }
  throw UnsupportedRingError("witt_rule: matrix carriers exist only over Z and Zmod");
}

MackeyData witt_mackey(const RingSpec& ring, long bound) {
  return witt_rule(ring).truncate(bound);
}

WittVector<IntRing> dress_siebeneicher(const BurnsideElement& x) {
  long m = x.level();
  auto ds = divisors(m);
  std::vector<Int> z(ds.size(), Int(0));
  for (const auto& [n, c] : x.coeffs()) {
    // The orbit with stabilizer order n has m/n points; the subgroup of order
    // m/k fixes all of them iff (m/k) | n.
    for (size_t i = 0; i < ds.size(); ++i) {
      long k = ds[i];
      if (n % (m / k) == 0) z[i] += c * Int(m / n);
    }
  }
  return ghost_solve(IntRing{}, m, z);
}

GroupMorphism dress_siebeneicher_morphism(long level) {
  auto ds = divisors(level);
  long r = static_cast<long>(ds.size());
  IntegerMatrix mat(r, r);
  for (long j = 0; j < r; ++j) {
    std::vector<Int> coords = witt_to_coords(dress_siebeneicher(BurnsideElement::basis(ds[j], level)));
    for (long i = 0; i < r; ++i) mat.at(i, j) = coords[i];
  }
  FGAbelianGroup src = FGAbelianGroup::free_group(r);
  FGAbelianGroup tgt = FGAbelianGroup::free_group(r);
  return {src, tgt, mat};
}

}  // namespace cyc
