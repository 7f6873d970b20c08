#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

// g = gcd(a,b) together with s, t such that s*a + t*b = g, g >= 0.
struct XgcdResult {
  Int g, s, t;
};

inline XgcdResult xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

// Floor division; the remainder a - floor_div(a,b)*b lies in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int pos_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline long lgcd(long a, long b) { return std::gcd(a, b); }
inline long llcm(long a, long b) { return std::lcm(a, b); }

// Divisors of n, ascending.
inline std::vector<long> divisors(long n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization of n as (p, multiplicity), primes ascending.
inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Largest divisor of n coprime to p.
inline long coprime_part(long n, long p) {
  while (n % p == 0) n /= p;
  return n;
}

inline Int int_pow(const Int& base, long exp) {
  Int r = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace cyc
