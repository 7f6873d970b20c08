#include <doctest.h>

#include "cyc/mackey.hpp"
#include "cyc/errors.hpp"
#include "cyc/witt.hpp"
#include "test_util.hpp"

using namespace cyc;
using cyctest::make_rng;
using cyctest::rand_in;

TEST_CASE("burnside mackey structure maps") {
  MackeyData d = burnside_mackey(4);
  // push 1|2 sends [1]_1 to [1]_2.
  const GroupMorphism& p12 = d.push.at({1, 2});
  CHECK(p12.matrix().apply({Int(1)}) == std::vector<Int>{Int(1), Int(0)});
  // pull 1|2 of [1]_2 is 2[1]_1; of [2]_2 is [1]_1.
  const GroupMorphism& q12 = d.pull.at({1, 2});
  CHECK(q12.matrix().apply({Int(1), Int(0)}) == std::vector<Int>{Int(2)});
  CHECK(q12.matrix().apply({Int(0), Int(1)}) == std::vector<Int>{Int(1)});
  // pull m|m is the identity (trivially: no covering pair, derived map).
  CHECK(d.pull_map(4, 4).equals(GroupMorphism::identity(d.group(4))));
}

TEST_CASE("burnside mackey validates at 12 and 60") {
  CHECK(validate_mackey(burnside_mackey(12)).valid());
  CHECK(validate_mackey(burnside_mackey(60)).valid());
}

TEST_CASE("witt mackey validates over Z and Z/2") {
  CHECK(validate_mackey(witt_mackey(RingSpec::parse("Z"), 6)).valid());
  CHECK(validate_mackey(witt_mackey(RingSpec::parse("Z"), 12)).valid());
  CHECK(validate_mackey(witt_mackey(RingSpec::parse("Zmod:2"), 4)).valid());
}

TEST_CASE("validator reports a zeroed pull with its triple") {
  MackeyData d = witt_mackey(RingSpec::parse("Z"), 12);
  GroupMorphism zeroed = GroupMorphism::zero(d.group(4), d.group(2));
  d.pull.erase({2, 4});
  d.pull.emplace(std::make_pair(2L, 4L), zeroed);
  MackeyReport rep = validate_mackey(d);
  CHECK_FALSE(rep.valid());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.identity == "double-coset" && v.m == 4 && (v.k == 2 || v.l == 2)) found = true;
  CHECK(found);
}

TEST_CASE("derived maps compose transitively on valid data") {
  MackeyData d = burnside_mackey(60);
  for (long w : d.levels)
    for (long v : divisors(w))
      for (long u : divisors(v)) {
        CHECK(compose(d.push_map(v, w), d.push_map(u, v)).equals(d.push_map(u, w)));
        CHECK(compose(d.pull_map(u, v), d.pull_map(v, w)).equals(d.pull_map(u, w)));
      }
}

TEST_CASE("double coset identity as literal matrices") {
  MackeyData d = burnside_mackey(60);
  for (long m : d.levels)
    for (long k : divisors(m))
      for (long l : divisors(m)) {
        GroupMorphism lhs = compose(d.pull_map(l, m), d.push_map(k, m));
        GroupMorphism rhs = compose(d.push_map(lgcd(k, l), l), d.pull_map(lgcd(k, l), k))
                                .scaled(Int(m / llcm(k, l)));
        CHECK(lhs.matrix() == rhs.matrix());
      }
}

TEST_CASE("eval_h: units and functoriality") {
  MackeyData d = burnside_mackey(12);
  for (long m : d.levels)
    CHECK(eval_h(d, HMorphism::identity(m)).equals(GroupMorphism::identity(d.group(m))));
  // Functoriality against compose_h on all basis morphisms in the poset of 12.
  for (long m : d.levels)
    for (long n : d.levels)
      for (long q : d.levels)
        for (long k : divisors(lgcd(m, n)))
          for (long l : divisors(lgcd(n, q))) {
            HMorphism h1 = HMorphism::basis(k, m, n);
            HMorphism h2 = HMorphism::basis(l, n, q);
            CHECK(eval_h(d, compose_h(h1, h2)).equals(compose(eval_h(d, h2), eval_h(d, h1))));
          }
  CHECK_THROWS_AS(eval_h(d, HMorphism::basis(1, 5, 5)), OutOfBoundError);
}

TEST_CASE("eval_h functoriality on witt data over Z at 24") {
  MackeyData d = witt_mackey(RingSpec::parse("Z"), 24);
  auto rng = make_rng(8);
  for (int t = 0; t < 60; ++t) {
    long m = d.levels[rand_in(rng, 0, d.levels.size() - 1)];
    long n = d.levels[rand_in(rng, 0, d.levels.size() - 1)];
    long q = d.levels[rand_in(rng, 0, d.levels.size() - 1)];
    auto dk = divisors(lgcd(m, n)), dl = divisors(lgcd(n, q));
    HMorphism h1 = HMorphism::basis(dk[rand_in(rng, 0, dk.size() - 1)], m, n);
    HMorphism h2 = HMorphism::basis(dl[rand_in(rng, 0, dl.size() - 1)], n, q);
    CHECK(eval_h(d, compose_h(h1, h2)).equals(compose(eval_h(d, h2), eval_h(d, h1))));
  }
}

TEST_CASE("eval of [1]: 2->3 on witt data is verschiebung after frobenius") {
  MackeyData d = witt_mackey(RingSpec::parse("Z"), 6);
  GroupMorphism got = eval_h(d, HMorphism::basis(1, 2, 3));
  GroupMorphism expect = compose(d.push_map(1, 3), d.pull_map(1, 2));
  CHECK(got.equals(expect));
}

TEST_CASE("j_upper_star restricts to p-coprime levels") {
  MackeyData d = burnside_mackey(12);
  MackeyData odd = j_upper_star(d, 2);
  CHECK(odd.levels == std::vector<long>{1, 3});
  CHECK(validate_mackey(odd).valid());
  MackeyData w = j_upper_star(witt_mackey(RingSpec::parse("Z"), 12), 3);
  CHECK(w.levels == std::vector<long>{1, 2, 4});
}

TEST_CASE("j_lower_shriek is p-constant and valid") {
  MackeyData odd = j_upper_star(burnside_mackey(12), 2);
  MackeyData ext = j_lower_shriek(odd, 2, 12);
  CHECK(ext.levels == divisors(12));
  // push across a p-power step is the identity; pull is multiplication by it.
  CHECK(ext.push.at({1, 2}).matrix().is_identity());
  CHECK(ext.pull.at({1, 2}).matrix() == IntegerMatrix::identity(1).scaled(Int(2)));
  CHECK(ext.pull_map(1, 4).matrix() == IntegerMatrix::identity(1).scaled(Int(4)));
  CHECK(validate_mackey(ext).valid());
  // Sieve retraction: restricting the extension recovers the input.
  MackeyData back = j_upper_star(ext, 2);
  CHECK(back.levels == odd.levels);
  for (auto [m, n] : covering_pairs(back.levels)) {
    CHECK(back.push.at({m, n}).matrix() == odd.push.at({m, n}).matrix());
    CHECK(back.pull.at({m, n}).matrix() == odd.pull.at({m, n}).matrix());
  }
}

TEST_CASE("j_lower_shriek of random valid data validates for p in {2,3}") {
  auto rng = make_rng(303);
  for (int t = 0; t < 10; ++t) {
    for (long p : {2L, 3L}) {
      long bound = p == 2 ? 24 : 24;
      MackeyData base = cyctest::random_valid_mackey(rng, p == 2 ? 3 : 8);
      MackeyData ext = j_lower_shriek(base, p, bound);
      CHECK(validate_mackey(ext).valid());
    }
  }
}

TEST_CASE("random twisted data validates") {
  auto rng = make_rng(505);
  for (int t = 0; t < 10; ++t) {
    MackeyData d = cyctest::random_valid_mackey(rng, 12);
    CHECK(validate_mackey(d).valid());
  }
}

TEST_CASE("mackey rule memoizes and truncates consistently") {
  MackeyRule rule = burnside_rule();
  MackeyData d = rule.truncate(12);
  MackeyData direct = burnside_mackey(12);
  for (auto [m, n] : covering_pairs(d.levels)) {
    CHECK(d.push.at({m, n}).matrix() == direct.push.at({m, n}).matrix());
    CHECK(d.pull.at({m, n}).matrix() == direct.pull.at({m, n}).matrix());
  }
  CHECK(rule.push(1, 12).matrix() == direct.push_map(1, 12).matrix());
  CHECK(rule.pull(2, 12).matrix() == direct.pull_map(2, 12).matrix());
}
