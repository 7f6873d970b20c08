#pragma once

#include <algorithm>
#include <vector>

#include "cyc/burnside.hpp"
#include "cyc/mackey.hpp"
#include "cyc/rings.hpp"

namespace cyc {

// Witt vector relative to the truncation set of divisors of `level`;
// components are aligned with divisors(level), ascending.
template <typename R>
struct WittVector {
  R ring;
  long level = 1;
  std::vector<typename R::Elem> comp;

  const typename R::Elem& at(long k) const {
    auto ds = divisors(level);
    auto it = std::lower_bound(ds.begin(), ds.end(), k);
    if (it == ds.end() || *it != k) throw NotDivisorError("WittVector: no component " + std::to_string(k));
    return comp[it - ds.begin()];
  }
};

template <typename R>
WittVector<R> witt_zero(const R& ring, long level) {
  WittVector<R> w{ring, level, {}};
  w.comp.assign(divisors(level).size(), ring.zero());
  return w;
}

// (a, 0, ..., 0); the multiplicative unit is teichmuller(ring, m, 1).
template <typename R>
WittVector<R> teichmuller(const R& ring, long level, const typename R::Elem& a) {
  WittVector<R> w = witt_zero(ring, level);
  w.comp[0] = a;
  return w;
}

template <typename R>
WittVector<R> witt_one(const R& ring, long level) {
  return teichmuller(ring, level, ring.one());
}

template <typename R>
bool witt_eq(const WittVector<R>& x, const WittVector<R>& y) {
  if (x.level != y.level || !x.ring.same(y.ring)) return false;
  for (size_t i = 0; i < x.comp.size(); ++i)
    if (!x.ring.eq(x.comp[i], y.comp[i])) return false;
  return true;
}

template <typename R>
typename R::Elem elem_pow(const R& ring, const typename R::Elem& a, long e) {
  typename R::Elem r = ring.one(), b = a;
  while (e > 0) {
    if (e & 1) r = ring.mul(r, b);
    b = ring.mul(b, b);
    e >>= 1;
  }
  return r;
}

// z_k = sum over l | k of l * w_l^{k/l}.
template <typename R>
std::vector<typename R::Elem> ghost(const WittVector<R>& w) {
  auto ds = divisors(w.level);
  std::vector<typename R::Elem> z;
  z.reserve(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    long k = ds[i];
    typename R::Elem acc = w.ring.zero();
    for (size_t j = 0; j <= i; ++j) {
      long l = ds[j];
      if (k % l != 0) continue;
      acc = w.ring.add(acc, w.ring.scalar(Int(l), elem_pow(w.ring, w.comp[j], k / l)));
    }
    z.push_back(std::move(acc));
  }
  return z;
}

// Triangular inversion of the ghost map: w_k = (z_k - sum_{l|k, l<k} l w_l^{k/l}) / k.
template <typename R>
WittVector<R> ghost_solve(const R& ring, long level, const std::vector<typename R::Elem>& z) {
  auto ds = divisors(level);
  if (z.size() != ds.size()) throw LevelMismatchError("ghost_solve: wrong ghost length");
  WittVector<R> w{ring, level, {}};
  w.comp.reserve(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    long k = ds[i];
    typename R::Elem rest = ring.zero();
    for (size_t j = 0; j < i; ++j) {
      long l = ds[j];
      if (k % l != 0) continue;
      rest = ring.add(rest, ring.scalar(Int(l), elem_pow(ring, w.comp[j], k / l)));
    }
    typename R::Elem num = ring.add(z[i], ring.neg(rest));
    typename R::Elem q;
    DivStatus st = ring.try_divide(q, num, Int(k));
    if (st == DivStatus::ambiguous)
      throw TorsionRingError("ghost_solve: division by " + std::to_string(k) +
                             " is ambiguous in " + ring.name());
    if (st == DivStatus::non_integral)
      throw NonIntegralError(k, "ghost_solve: component " + std::to_string(k) +
                                    " is not integral over " + ring.name());
    w.comp.push_back(std::move(q));
  }
  return w;
}

enum class WittOp { sum, product, negation };

// Universal integral polynomials computing Witt sum/product/negation on
// components; variables are x_k (ids 0..r-1) and, for binary ops, y_k
// (ids r..2r-1), k running over divisors(level). Cached per (level, op).
const std::vector<Poly<Int>>& universal_polys(long level, WittOp op);

// Component polynomials of the Frobenius W_<n> -> W_<m>; variables are the
// source components x_k, ids 0..divisors(n)-1. Cached per (m, n).
const std::vector<Poly<Int>>& frobenius_polys(long m, long n);

// Variable names matching the ids used by the polynomials above.
PolyZ witt_poly_ring(long level, WittOp op);

template <typename R>
typename R::Elem eval_poly(const R& ring, const Poly<Int>& p,
                           const std::vector<typename R::Elem>& vals) {
  typename R::Elem acc = ring.zero();
  for (const auto& [mono, c] : p.terms()) {
    typename R::Elem t = ring.from_int(c);
    for (auto [v, e] : mono) t = ring.mul(t, elem_pow(ring, vals.at(v), e));
    acc = ring.add(acc, t);
  }
  return acc;
}

namespace detail {

template <typename R>
WittVector<R> witt_binary(const WittVector<R>& x, const WittVector<R>& y, WittOp op) {
  if (x.level != y.level) throw LevelMismatchError("witt arithmetic: level mismatch");
  if (!x.ring.same(y.ring)) throw RingMismatchError("witt arithmetic: ring mismatch");
  const R& ring = x.ring;
  if (ring.torsion_free()) {
    auto gx = ghost(x), gy = ghost(y);
    std::vector<typename R::Elem> gz;
    gz.reserve(gx.size());
    for (size_t i = 0; i < gx.size(); ++i)
      gz.push_back(op == WittOp::sum ? ring.add(gx[i], gy[i]) : ring.mul(gx[i], gy[i]));
    return ghost_solve(ring, x.level, gz);
  }
  const auto& polys = universal_polys(x.level, op);
  std::vector<typename R::Elem> vals = x.comp;
  vals.insert(vals.end(), y.comp.begin(), y.comp.end());
  WittVector<R> out{ring, x.level, {}};
  out.comp.reserve(polys.size());
  for (const auto& p : polys) out.comp.push_back(eval_poly(ring, p, vals));
  return out;
}

}  // namespace detail

template <typename R>
WittVector<R> witt_add(const WittVector<R>& x, const WittVector<R>& y) {
  return detail::witt_binary(x, y, WittOp::sum);
}

template <typename R>
WittVector<R> witt_mul(const WittVector<R>& x, const WittVector<R>& y) {
  return detail::witt_binary(x, y, WittOp::product);
}

template <typename R>
WittVector<R> witt_neg(const WittVector<R>& x) {
  const R& ring = x.ring;
  if (ring.torsion_free()) {
    auto gx = ghost(x);
    for (auto& z : gx) z = ring.neg(z);
    return ghost_solve(ring, x.level, gx);
  }
  const auto& polys = universal_polys(x.level, WittOp::negation);
  WittVector<R> out{ring, x.level, {}};
  for (const auto& p : polys) out.comp.push_back(eval_poly(ring, p, x.comp));
  return out;
}

// n-fold additive multiple (n may be negative).
template <typename R>
WittVector<R> witt_int_multiple(const WittVector<R>& x, const Int& n) {
  if (n < 0) return witt_neg(witt_int_multiple(x, -n));
  WittVector<R> acc = witt_zero(x.ring, x.level);
  WittVector<R> b = x;
  Int e = n;
  while (e > 0) {
    if ((e & 1) != 0) acc = witt_add(acc, b);
    e >>= 1;
    if (e > 0) b = witt_add(b, b);
  }
  return acc;
}

// Frobenius F_{m|n}: ghost (z_l)_{l in divisors(n)} -> (z_{k n/m})_{k in divisors(m)}.
template <typename R>
WittVector<R> frobenius(const WittVector<R>& w, long target_level) {
  long n = w.level, m = target_level;
  if (m < 1 || n % m != 0) throw NotDivisorError("frobenius: target level must divide the level");
  const R& ring = w.ring;
  if (ring.torsion_free()) {
    auto gz = ghost(w);
    auto dn = divisors(n);
    auto dm = divisors(m);
    std::vector<typename R::Elem> out;
    out.reserve(dm.size());
    for (long k : dm) {
      long idx = std::lower_bound(dn.begin(), dn.end(), k * (n / m)) - dn.begin();
      out.push_back(gz[idx]);
    }
    return ghost_solve(ring, m, out);
  }
  const auto& polys = frobenius_polys(m, n);
  WittVector<R> out{ring, m, {}};
  for (const auto& p : polys) out.comp.push_back(eval_poly(ring, p, w.comp));
  return out;
}

// Verschiebung V_{m|n} by index scaling: (V w)_l = w_{l m / n} when (n/m) | l,
// and 0 otherwise. Additive, and F_{m|n} V_{m|n} = (n/m) id.
template <typename R>
WittVector<R> verschiebung(const WittVector<R>& w, long target_level) {
  long m = w.level, n = target_level;
  if (n < 1 || n % m != 0)
    throw NotDivisorError("verschiebung: the level must divide the target level");
  long c = n / m;
  auto dm = divisors(m);
  auto dn = divisors(n);
  WittVector<R> out = witt_zero(w.ring, n);
  for (size_t i = 0; i < dn.size(); ++i) {
    long l = dn[i];
    if (l % c != 0) continue;
    long src = l / c;
    auto it = std::lower_bound(dm.begin(), dm.end(), src);
    if (it == dm.end() || *it != src) continue;
    out.comp[i] = w.comp[it - dm.begin()];
  }
  return out;
}

// Restriction R_{m|n}: component truncation; a ring homomorphism.
template <typename R>
WittVector<R> restriction(const WittVector<R>& w, long target_level) {
  long n = w.level, m = target_level;
  if (m < 1 || n % m != 0) throw NotDivisorError("restriction: target level must divide the level");
  auto dn = divisors(n);
  auto dm = divisors(m);
  WittVector<R> out{w.ring, m, {}};
  for (long k : dm) {
    long idx = std::lower_bound(dn.begin(), dn.end(), k) - dn.begin();
    out.comp.push_back(w.comp[idx]);
  }
  return out;
}

// --- Additive carriers over Z and Z/n --------------------------------------
//
// The additive group of W_<m>(Z) is carried on ghost coordinates: the image
// of the ghost map is the full-rank sublattice of Z^{divisors(m)} with the
// triangular basis b^(d) = ghost of the component indicator at d, and vector
// addition there is Witt addition. Over Z/n the carrier is the quotient by
// the ghost lattice of componentwise-n multiples, which has the closed-form
// triangular basis ghost(n at component d).

// Basis matrix B_m: column for each divisor d, entry at row j equal to d when
// d | j and 0 otherwise.
IntegerMatrix witt_ghost_basis(long level);

// Solve B_m x = v exactly; throws on non-integral systems (which signals a
// vector outside the lattice).
std::vector<Int> witt_basis_solve(long level, const std::vector<Int>& v);

// Relation rows presenting W_<level>(Z/modulus) on the basis above.
IntegerMatrix witt_mod_relations(long level, const Int& modulus);

// Carrier coordinates of an integral Witt vector, and back.
std::vector<Int> witt_to_coords(const WittVector<IntRing>& w);
WittVector<IntRing> witt_from_coords(long level, const std::vector<Int>& coords);

// Component truncation W_<n> -> W_<m> on the carrier bases: the coordinate at
// d survives when d | m and dies otherwise.
IntegerMatrix witt_restriction_matrix(long m, long n);

// Lazy Mackey structure with push = Verschiebung and pull = Frobenius.
// Supported rings: Z and Zmod; anything else throws UnsupportedRingError.
MackeyRule witt_rule(const RingSpec& ring);
MackeyData witt_mackey(const RingSpec& ring, long bound);

// The additive extension of [k]_m -> the Witt vector whose ghost counts the
// fixed points of the order-(m/j) subgroup at component j. A ring isomorphism
// intertwining (push, pull) with (V, F).
WittVector<IntRing> dress_siebeneicher(const BurnsideElement& x);
GroupMorphism dress_siebeneicher_morphism(long level);

}  // namespace cyc
