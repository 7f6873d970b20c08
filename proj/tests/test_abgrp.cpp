#include <doctest.h>

#include "cyc/abgrp.hpp"
#include "cyc/errors.hpp"
#include "test_util.hpp"

using namespace cyc;
using cyctest::make_rng;
using cyctest::rand_in;
using cyctest::random_matrix;

namespace {

bool is_unimodular(const IntegerMatrix& m) {
  // |det| = 1 via the SNF diagonal.
  if (m.rows() != m.cols()) return false;
  SnfResult s = smith_normal_form(m);
  if (s.rank != m.rows()) return false;
  Int prod = 1;
  for (long i = 0; i < s.rank; ++i) prod *= s.d.at(i, i);
  return prod == 1;
}

void check_snf_postconditions(const IntegerMatrix& m) {
  SnfResult s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
  CHECK((s.u * s.uinv).is_identity());
  for (long i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    CHECK(s.d.at(i, i) >= 0);
    if (i + 1 < std::min(m.rows(), m.cols()) && s.d.at(i + 1, i + 1) != 0)
      CHECK(s.d.at(i + 1, i + 1) % std::max(s.d.at(i, i), Int(1)) == 0);
  }
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("snf of simple matrices") {
  // diag(2,3) -> diag(1,6): d_1 = gcd of entries, d_1 d_2 = |det|.
  IntegerMatrix m = IntegerMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}});
  SnfResult s = smith_normal_form(m);
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 6);
  check_snf_postconditions(m);

  IntegerMatrix id3 = IntegerMatrix::identity(3);
  CHECK(smith_normal_form(id3).d == id3);

  IntegerMatrix one = IntegerMatrix::from_rows({{Int(4)}});
  CHECK(smith_normal_form(one).d.at(0, 0) == 4);
}

TEST_CASE("snf determinant-divisor oracle on 2x2 matrices") {
  auto rng = make_rng(23);
  for (int t = 0; t < 200; ++t) {
    IntegerMatrix m = random_matrix(rng, 2, 2, -9, 9);
    SnfResult s = smith_normal_form(m);
    Int g = int_gcd(int_gcd(m.at(0, 0), m.at(0, 1)), int_gcd(m.at(1, 0), m.at(1, 1)));
    Int det = int_abs(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
    if (g == 0) {
      CHECK(s.rank == 0);
      continue;
    }
    CHECK(s.d.at(0, 0) == g);
    if (det != 0) CHECK(s.d.at(0, 0) * s.d.at(1, 1) == det);
  }
}

TEST_CASE("snf postconditions hold exactly on random matrices") {
  auto rng = make_rng(5);
  for (int t = 0; t < 100; ++t) {
    long r = rand_in(rng, 1, 6), c = rand_in(rng, 1, 6);
    check_snf_postconditions(random_matrix(rng, r, c, -9, 9));
  }
  check_snf_postconditions(IntegerMatrix(3, 4));  // all zeros
}

TEST_CASE("lattice membership and solving") {
  // Columns (2,0) and (1,1): the full lattice Z^2.
  IntegerMatrix g = IntegerMatrix::from_rows({{Int(2), Int(1)}, {Int(0), Int(1)}});
  Lattice lat(g);
  CHECK(lat.rank() == 2);
  CHECK(lat.contains({Int(3), Int(1)}));
  auto sol = lat.solve({Int(3), Int(1)});
  REQUIRE(sol.has_value());
  CHECK(g.apply(*sol) == std::vector<Int>{Int(3), Int(1)});
  // Columns (2,0) and (0,2): index 4, misses odd vectors.
  Lattice even(IntegerMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}));
  CHECK(even.contains({Int(4), Int(-2)}));
  CHECK_FALSE(even.contains({Int(1), Int(0)}));
  CHECK_FALSE(even.solve({Int(1), Int(0)}).has_value());
}

TEST_CASE("canonical forms") {
  CHECK(FGAbelianGroup::free_group(2).str() == "Z^2");
  CHECK(FGAbelianGroup::cyclic(6).str() == "Z/6");
  // Z^2 / <(2,1),(0,2)> has order 4 with d_1 = 1, so it is Z/4.
  FGAbelianGroup g(2, IntegerMatrix::from_rows({{Int(2), Int(1)}, {Int(0), Int(2)}}));
  CHECK(g.rank() == 0);
  CHECK(g.torsion() == std::vector<Int>{Int(4)});
  // Invariant factors 1 are dropped.
  FGAbelianGroup h(2, IntegerMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(6)}}));
  CHECK(h.torsion() == std::vector<Int>{Int(6)});
  CHECK(h.isomorphic(FGAbelianGroup::cyclic(6)));
}

TEST_CASE("cokernels") {
  FGAbelianGroup z = FGAbelianGroup::free_group(1);
  // multiplication by 2 on Z -> Z/2
  GroupMorphism dbl(z, z, IntegerMatrix::from_rows({{Int(2)}}));
  CokernelResult c = cokernel(dbl);
  CHECK(c.group.isomorphic(FGAbelianGroup::cyclic(2)));
  // zero map Z -> Z has cokernel Z
  CokernelResult cz = cokernel(GroupMorphism::zero(z, z));
  CHECK(cz.group.rank() == 1);
  CHECK(cz.group.torsion().empty());
  // [[2,1],[0,2]] : Z^2 -> Z^2 -> Z/4 (SNF oracle: det 4, d_1 = 1)
  FGAbelianGroup z2 = FGAbelianGroup::free_group(2);
  GroupMorphism f(z2, z2, IntegerMatrix::from_rows({{Int(2), Int(1)}, {Int(0), Int(2)}}));
  CHECK(cokernel(f).group.isomorphic(FGAbelianGroup::cyclic(4)));
}

TEST_CASE("isomorphism testing with witnesses") {
  FGAbelianGroup z6 = FGAbelianGroup::cyclic(6);
  IsoCheck ok = is_isomorphism(GroupMorphism::identity(z6));
  CHECK(ok.ok);
  REQUIRE(ok.inverse.has_value());
  CHECK(ok.inverse->equals(GroupMorphism::identity(z6)));

  // multiplication by 2 on Z/4 is not bijective.
  FGAbelianGroup z4 = FGAbelianGroup::cyclic(4);
  IsoCheck bad = is_isomorphism(GroupMorphism(z4, z4, IntegerMatrix::from_rows({{Int(2)}})));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witness.empty());
  CHECK_FALSE(bad.witness_element.empty());

  // x -> (x, 0) into Z^2 misses (0,1).
  FGAbelianGroup z = FGAbelianGroup::free_group(1);
  FGAbelianGroup z2 = FGAbelianGroup::free_group(2);
  IsoCheck inj = is_isomorphism(GroupMorphism(z, z2, IntegerMatrix::from_rows({{Int(1)}, {Int(0)}})));
  CHECK_FALSE(inj.ok);
  CHECK(inj.witness_element == std::vector<Int>{Int(0), Int(1)});
}

TEST_CASE("inverse witnesses invert on both sides") {
  auto rng = make_rng(13);
  for (int t = 0; t < 30; ++t) {
    long n = rand_in(rng, 1, 4);
    IntegerMatrix rels = random_matrix(rng, rand_in(rng, 0, 3), n, -6, 6);
    FGAbelianGroup g(n, rels);
    // x -> u x carries the relation lattice onto the transformed presentation.
    auto [u, uinv] = cyctest::random_unimodular(rng, n);
    FGAbelianGroup h(n, rels * u.transpose());
    GroupMorphism f(g, h, u);
    IsoCheck chk = is_isomorphism(f);
    REQUIRE(chk.ok);
    CHECK(compose(*chk.inverse, f).equals(GroupMorphism::identity(g)));
    CHECK(compose(f, *chk.inverse).equals(GroupMorphism::identity(h)));
  }
}

TEST_CASE("isomorphisms compose") {
  auto rng = make_rng(31);
  for (int t = 0; t < 50; ++t) {
    long n = rand_in(rng, 1, 4);
    FGAbelianGroup g = FGAbelianGroup::free_group(n);
    auto [u1, u1i] = cyctest::random_unimodular(rng, n);
    auto [u2, u2i] = cyctest::random_unimodular(rng, n);
    GroupMorphism f(g, g, u1), h(g, g, u2);
    CHECK(is_isomorphism(f).ok);
    CHECK(is_isomorphism(h).ok);
    CHECK(is_isomorphism(compose(h, f)).ok);
  }
}

TEST_CASE("morphism construction checks relations") {
  FGAbelianGroup z2 = FGAbelianGroup::cyclic(2);
  FGAbelianGroup z4 = FGAbelianGroup::cyclic(4);
  // Z/2 -> Z/4 by 1 is not well defined (2*1 = 2 != 0 in Z/4).
  CHECK_THROWS_AS(GroupMorphism(z2, z4, IntegerMatrix::from_rows({{Int(1)}})), NotWellDefinedError);
  // By 2 it is.
  GroupMorphism ok(z2, z4, IntegerMatrix::from_rows({{Int(2)}}));
  CHECK(ok.matrix().at(0, 0) == 2);
}

TEST_CASE("induced maps on quotients") {
  FGAbelianGroup z = FGAbelianGroup::free_group(1);
  // f = id, equal quotients -> id.
  GroupMorphism mod4(z, FGAbelianGroup::cyclic(4), IntegerMatrix::from_rows({{Int(1)}}));
  GroupMorphism ind = induced_on_quotient(GroupMorphism::identity(z), mod4, mod4);
  CHECK(ind.equals(GroupMorphism::identity(FGAbelianGroup::cyclic(4))));

  // doubling on Z descends to doubling on Z/4.
  GroupMorphism dbl(z, z, IntegerMatrix::from_rows({{Int(2)}}));
  GroupMorphism ind2 = induced_on_quotient(dbl, mod4, mod4);
  CHECK(pos_mod(ind2.matrix().at(0, 0), 4) == 2);

  // swap-sum Z^2 -> Z, (x,y) -> x + y, q_src kills (1,-1): well defined.
  FGAbelianGroup z2 = FGAbelianGroup::free_group(2);
  GroupMorphism sum(z2, z, IntegerMatrix::from_rows({{Int(1), Int(1)}}));
  FGAbelianGroup quot(2, IntegerMatrix::from_rows({{Int(1), Int(-1)}}));
  GroupMorphism q_src(z2, quot, IntegerMatrix::identity(2));
  GroupMorphism ind3 = induced_on_quotient(sum, q_src, GroupMorphism::identity(z));
  CHECK(compose(ind3, q_src).equals(sum));

  // The identity on Z does not descend along Z -> Z/4 against the identity target.
  CHECK_THROWS_AS(induced_on_quotient(GroupMorphism::identity(z), mod4, GroupMorphism::identity(z)),
                  NotWellDefinedError);
}

TEST_CASE("cokernel canonical form agrees with direct snf on random matrices") {
  auto rng = make_rng(47);
  for (int t = 0; t < 100; ++t) {
    long r = rand_in(rng, 1, 6), c = rand_in(rng, 1, 6);
    IntegerMatrix m = random_matrix(rng, r, c, -9, 9);
    GroupMorphism f(FGAbelianGroup::free_group(c), FGAbelianGroup::free_group(r), m);
    FGAbelianGroup q = cokernel(f).group;
    SnfResult s = smith_normal_form(m);
    std::vector<Int> torsion;
    for (long i = 0; i < s.rank; ++i)
      if (s.d.at(i, i) > 1) torsion.push_back(s.d.at(i, i));
    CHECK(q.rank() == r - s.rank);
    CHECK(q.torsion() == torsion);
  }
}
