#include <doctest.h>

#include "cyc/dga.hpp"
#include "cyc/errors.hpp"
#include "test_util.hpp"

using namespace cyc;
using cyctest::make_rng;
using cyctest::rand_in;

namespace {

std::vector<DgaBasisSymbol> all_symbols(long bound) {
  std::vector<DgaBasisSymbol> out;
  for (long a : divisors(bound))
    for (long b : divisors(bound))
      for (long k : divisors(lgcd(a, b))) {
        out.push_back(make_alpha(b, k, a));
        out.push_back(make_epsilon(b, k, a));
      }
  return out;
}

}  // namespace

TEST_CASE("basis relations") {
  // epsilon . epsilon = 0.
  CHECK(mul_basis(make_epsilon(6, 2, 4), make_epsilon(4, 1, 2)).coeff == 0);
  // Mismatched middles kill everything.
  CHECK(mul_basis(make_alpha(6, 1, 3), make_alpha(2, 1, 4)).coeff == 0);
  CHECK(mul_basis(make_epsilon(6, 1, 3), make_alpha(2, 1, 4)).coeff == 0);
  CHECK(mul_basis(make_alpha(6, 1, 3), make_epsilon(2, 1, 4)).coeff == 0);
  // alpha alpha: coefficient b / lcm(k, l).
  DgaScaledSymbol aa = mul_basis(make_alpha(6, 2, 4), make_alpha(4, 2, 2));
  CHECK(aa.coeff == 2);  // b = 4, lcm = 2
  CHECK(aa.symbol == make_alpha(6, 2, 2));
  // epsilon alpha: b / k.
  DgaScaledSymbol ea = mul_basis(make_epsilon(6, 2, 4), make_alpha(4, 2, 2));
  CHECK(ea.coeff == 2);
  CHECK(ea.symbol == make_epsilon(6, 2, 2));
  // alpha epsilon: b / l.
  DgaScaledSymbol ae = mul_basis(make_alpha(6, 2, 4), make_epsilon(4, 2, 2));
  CHECK(ae.coeff == 2);
  CHECK(ae.symbol == make_epsilon(6, 2, 2));
  // Index validity.
  CHECK_THROWS_AS(make_alpha(4, 3, 6), NotDivisorError);
}

TEST_CASE("unit element") {
  for (long bound : {6L, 12L}) {
    DgaElement e = DgaElement::unit(bound);
    auto syms = all_symbols(bound);
    for (const auto& s : syms) {
      DgaElement x = DgaElement::basis(bound, s);
      CHECK(dga_mul(e, x) == x);
      CHECK(dga_mul(x, e) == x);
    }
  }
}

TEST_CASE("products of degree-1 elements vanish in degree 1") {
  auto rng = make_rng(303);
  long bound = 12;
  auto syms = all_symbols(bound);
  for (int t = 0; t < 50; ++t) {
    std::map<DgaBasisSymbol, Int> xs, ys;
    for (int i = 0; i < 3; ++i) {
      const auto& s1 = syms[rand_in(rng, 0, syms.size() - 1)];
      const auto& s2 = syms[rand_in(rng, 0, syms.size() - 1)];
      if (s1.degree() == 1) xs[s1] += rand_in(rng, -3, 3);
      if (s2.degree() == 1) ys[s2] += rand_in(rng, -3, 3);
    }
    DgaElement x(bound, xs), y(bound, ys);
    CHECK(dga_mul(x, y).is_zero());
  }
}

TEST_CASE("degree decomposition") {
  long bound = 6;
  DgaElement mixed = DgaElement::basis(bound, make_alpha(6, 2, 2)) +
                     DgaElement::basis(bound, make_epsilon(3, 1, 6)).scaled(2);
  DgaElement d0 = mixed.homogeneous_part(0);
  DgaElement d1 = mixed.homogeneous_part(1);
  CHECK(d0.terms().size() == 1);
  CHECK(d1.terms().size() == 1);
  CHECK(d0 + d1 == mixed);
  CHECK(DgaElement::basis(bound, make_alpha(6, 2, 2)).homogeneous_part(1).is_zero());
}

TEST_CASE("associativity, exhaustively at bound 6 and randomly at bound 24") {
  auto syms6 = all_symbols(6);
  for (const auto& x : syms6)
    for (const auto& y : syms6)
      for (const auto& z : syms6) {
        DgaElement ex = DgaElement::basis(6, x), ey = DgaElement::basis(6, y),
                   ez = DgaElement::basis(6, z);
        CHECK(dga_mul(dga_mul(ex, ey), ez) == dga_mul(ex, dga_mul(ey, ez)));
      }
  auto rng = make_rng(404);
  auto syms24 = all_symbols(24);
  for (int t = 0; t < 60; ++t) {
    auto re = [&]() {
      std::map<DgaBasisSymbol, Int> terms;
      for (int i = 0; i < 3; ++i)
        terms[syms24[rand_in(rng, 0, syms24.size() - 1)]] += rand_in(rng, -4, 4);
      return DgaElement(24, terms);
    };
    DgaElement x = re(), y = re(), z = re();
    CHECK(dga_mul(dga_mul(x, y), z) == dga_mul(x, dga_mul(y, z)));
  }
}

TEST_CASE("degree-0 structure constants match span composition") {
  for (long bound : {12L, 24L}) {
    for (long a : divisors(bound))
      for (long b : divisors(bound))
        for (long c : divisors(bound))
          for (long k : divisors(lgcd(a, b)))
            for (long l : divisors(lgcd(b, c))) {
              // alpha_{c,l,b} alpha_{b,k,a} against e_l . e_k through b.
              DgaScaledSymbol prod = mul_basis(make_alpha(c, l, b), make_alpha(b, k, a));
              HMorphism h = compose_h(alpha_to_h(make_alpha(b, k, a)), alpha_to_h(make_alpha(c, l, b)));
              REQUIRE(prod.coeff != 0);
              CHECK(prod.symbol.kind == DgaBasisSymbol::Kind::alpha);
              CHECK(h.coeff(prod.symbol.k) == prod.coeff);
              CHECK(prod.symbol.a == a);
              CHECK(prod.symbol.b == c);
            }
  }
}

TEST_CASE("element parsing round-trips") {
  DgaBasisSymbol s = DgaBasisSymbol::parse("a[6,2,4]");
  CHECK(s == make_alpha(6, 2, 4));
  CHECK(DgaBasisSymbol::parse(s.str()) == s);
  DgaBasisSymbol e = DgaBasisSymbol::parse("e[4,1,2]");
  CHECK(e.degree() == 1);
  CHECK_THROWS_AS(DgaBasisSymbol::parse("b[1,1,1]"), InputError);
  CHECK_THROWS_AS(DgaBasisSymbol::parse("a[4,3,6]"), NotDivisorError);
}
