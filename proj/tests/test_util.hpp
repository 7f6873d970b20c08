#pragma once

#include <map>
#include <random>
#include <vector>

#include "cyc/abgrp.hpp"
#include "cyc/burnside.hpp"
#include "cyc/cyclonic.hpp"
#include "cyc/mackey.hpp"

namespace cyctest {

using namespace cyc;

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, long rows, long cols, long lo, long hi) {
  IntegerMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = rand_in(rng, lo, hi);
  return m;
}

// Product of random elementary row operations; det = +/-1 by construction.
// Returns the matrix together with its exact inverse.
inline std::pair<IntegerMatrix, IntegerMatrix> random_unimodular(std::mt19937_64& rng, long n,
                                                                 int ops = 6) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  IntegerMatrix uinv = IntegerMatrix::identity(n);
  for (int t = 0; t < ops && n > 1; ++t) {
    long i = rand_in(rng, 0, n - 1);
    long j = rand_in(rng, 0, n - 1);
    if (i == j) continue;
    Int c = rand_in(rng, -2, 2);
    u.add_row(i, j, c);
    uinv.add_col(j, i, -c);
  }
  return {u, uinv};
}

// --- Brute-force oracles ----------------------------------------------------

// Pullback of f: <k> -> <m> <- g: <l>, counted by explicit enumeration of
// pairs at a working modulus M (a common multiple of all levels and offset
// denominators). Returns orbit count per apex level.
inline std::map<long, long> pullback_oracle(const OrbitMap& f, const OrbitMap& g, long working_mod) {
  long k = f.source().level(), l = g.source().level(), m = f.target().level();
  long M = working_mod;
  // Points of <k> reachable at modulus M: i/M mod 1/k for i in [0, M/k).
  auto val = [&](long i) { return Rat(Int(i), Int(M)); };
  long pairs = 0;
  for (long i = 0; i < M / k; ++i)
    for (long j = 0; j < M / l; ++j) {
      Rat fx = rat_mod_unit_fraction(val(i) + f.offset(), m);
      Rat gy = rat_mod_unit_fraction(val(j) + g.offset(), m);
      if (fx == gy) ++pairs;
    }
  // Each orbit has M/gcd(k,l) points under the modulus-M action.
  long d = lgcd(k, l);
  std::map<long, long> out;
  if (pairs > 0) out[d] = pairs * d / M;
  return out;
}

// Burnside product by enumeration: orbits of C_m/C_k x C_m/C_l, counted by
// stabilizer order.
inline std::map<long, long> orbit_product_oracle(long m, long k, long l) {
  std::vector<bool> seen(static_cast<size_t>((m / k) * (m / l)), false);
  std::map<long, long> out;
  for (long x = 0; x < m / k; ++x)
    for (long y = 0; y < m / l; ++y) {
      size_t idx = static_cast<size_t>(x * (m / l) + y);
      if (seen[idx]) continue;
      // Walk the diagonal orbit of (x, y).
      long size = 0;
      long cx = x, cy = y;
      do {
        seen[static_cast<size_t>(cx * (m / l) + cy)] = true;
        cx = (cx + 1) % (m / k);
        cy = (cy + 1) % (m / l);
        ++size;
      } while (cx != x || cy != y);
      out[m / size] += 1;  // stabilizer order = m / orbit size
    }
  return out;
}

// Random valid Mackey structure: the Burnside one conjugated by a random
// unimodular base change at every level.
inline MackeyData random_valid_mackey(std::mt19937_64& rng, long bound) {
  MackeyData base = burnside_mackey(bound);
  std::map<long, std::pair<IntegerMatrix, IntegerMatrix>> change;
  for (long m : base.levels)
    change.emplace(m, random_unimodular(rng, base.group(m).generators()));
  MackeyData out;
  out.bound = base.bound;
  out.levels = base.levels;
  out.groups = base.groups;
  for (const auto& [mn, f] : base.push) {
    const IntegerMatrix& tn = change.at(mn.second).first;
    const IntegerMatrix& tm_inv = change.at(mn.first).second;
    out.push.emplace(mn, GroupMorphism(f.source(), f.target(), tn * f.matrix() * tm_inv));
  }
  for (const auto& [mn, f] : base.pull) {
    const IntegerMatrix& tm = change.at(mn.first).first;
    const IntegerMatrix& tn_inv = change.at(mn.second).second;
    out.pull.emplace(mn, GroupMorphism(f.source(), f.target(), tm * f.matrix() * tn_inv));
  }
  return out;
}

}  // namespace cyctest
