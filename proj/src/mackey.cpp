#include "cyc/mackey.hpp"

#include <algorithm>
#include <sstream>

#include "cyc/errors.hpp"

namespace cyc {

bool MackeyData::has_level(long m) const {
  return std::binary_search(levels.begin(), levels.end(), m);
}

const FGAbelianGroup& MackeyData::group(long m) const {
  auto it = groups.find(m);
  if (it == groups.end())
    throw OutOfBoundError("MackeyData: level " + std::to_string(m) + " not present");
  return it->second;
}

namespace {

// Ascending-prime chain m = l_0 | l_1 | ... | l_k = n with prime steps.
std::vector<long> prime_chain(long m, long n) {
  if (n % m != 0) throw NotDivisorError("MackeyData: " + std::to_string(m) + " does not divide " +
                                        std::to_string(n));
  std::vector<long> chain{m};
  long cur = m;
  for (auto [p, e] : factorize(n / m))
    for (int i = 0; i < e; ++i) {
      cur *= p;
      chain.push_back(cur);
    }
  return chain;
}

}  // namespace

GroupMorphism MackeyData::push_map(long m, long n) const {
  auto chain = prime_chain(m, n);
  GroupMorphism acc = GroupMorphism::identity(group(m));
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    auto it = push.find({chain[i], chain[i + 1]});
    if (it == push.end())
      throw OutOfBoundError("MackeyData: missing push " + std::to_string(chain[i]) + "|" +
                            std::to_string(chain[i + 1]));
    acc = compose(it->second, acc);
  }
  return acc;
}

GroupMorphism MackeyData::pull_map(long m, long n) const {
  auto chain = prime_chain(m, n);
  GroupMorphism acc = GroupMorphism::identity(group(n));
  for (size_t i = chain.size(); i-- > 1;) {
    auto it = pull.find({chain[i - 1], chain[i]});
    if (it == pull.end())
      throw OutOfBoundError("MackeyData: missing pull " + std::to_string(chain[i - 1]) + "|" +
                            std::to_string(chain[i]));
    acc = compose(it->second, acc);
  }
  return acc;
}

std::vector<std::pair<long, long>> covering_pairs(const std::vector<long>& levels) {
  std::vector<std::pair<long, long>> out;
  for (long n : levels)
    for (auto [p, e] : factorize(n)) {
      long m = n / p;
      if (std::binary_search(levels.begin(), levels.end(), m)) out.emplace_back(m, n);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string MackeyReport::str() const {
  if (valid()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations)
    os << v.identity << " at (k=" << v.k << ", l=" << v.l << ", m=" << v.m << "): " << v.detail
       << "\n";
  return os.str();
}

MackeyReport validate_mackey(const MackeyData& d) {
  MackeyReport rep;
  auto record = [&](const std::string& id, long k, long l, long m, const std::string& detail) {
    rep.violations.push_back({id, k, l, m, detail});
  };

  // Covering-square commutativity: for m and distinct primes p != q with
  // mpq a level, the two orders of prime steps must agree. This is exactly
  // path-independence, hence transitivity of the derived maps.
  for (long m : d.levels) {
    // Collect primes p with m*p a level.
    std::vector<long> ps;
    for (long n : d.levels)
      if (n % m == 0 && n / m > 1 && is_prime(n / m)) ps.push_back(n / m);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) {
        long p = ps[i], q = ps[j];
        if (!d.has_level(m * p * q)) continue;
        GroupMorphism a = compose(d.push.at({m * p, m * p * q}), d.push.at({m, m * p}));
        GroupMorphism b = compose(d.push.at({m * q, m * p * q}), d.push.at({m, m * q}));
        if (!a.equals(b))
          record("push-square", p, q, m,
                 "push paths through " + std::to_string(m * p) + " and " + std::to_string(m * q) +
                     " differ: " + (a.matrix() - b.matrix()).str());
        GroupMorphism c = compose(d.pull.at({m, m * p}), d.pull.at({m * p, m * p * q}));
        GroupMorphism e = compose(d.pull.at({m, m * q}), d.pull.at({m * q, m * p * q}));
        if (!c.equals(e))
          record("pull-square", p, q, m,
                 "pull paths through " + std::to_string(m * p) + " and " + std::to_string(m * q) +
                     " differ: " + (c.matrix() - e.matrix()).str());
      }
  }

  // Double coset: pull_{l|m} push_{k|m} = (m/lcm(k,l)) push_{gcd|l} pull_{gcd|k}.
  for (long m : d.levels)
    for (long k : divisors(m)) {
      if (!d.has_level(k)) continue;
      for (long l : divisors(m)) {
        if (!d.has_level(l)) continue;
        long g = lgcd(k, l);
        if (!d.has_level(g)) continue;
        GroupMorphism lhs = compose(d.pull_map(l, m), d.push_map(k, m));
        GroupMorphism rhs =
            compose(d.push_map(g, l), d.pull_map(g, k)).scaled(Int(m / llcm(k, l)));
        if (!lhs.equals(rhs))
          record("double-coset", k, l, m, "difference " + (lhs.matrix() - rhs.matrix()).str());
      }
    }
  return rep;
}

MackeyData burnside_mackey(long bound) {
  if (bound < 1) throw OutOfBoundError("burnside_mackey: bound must be >= 1");
  MackeyData d;
  d.bound = bound;
  d.levels = divisors(bound);
  for (long m : d.levels) d.groups.emplace(m, FGAbelianGroup::free_group(divisors(m).size()));
  for (auto [m, n] : covering_pairs(d.levels)) {
    auto dm = divisors(m), dn = divisors(n);
    auto idx = [](const std::vector<long>& v, long x) {
      return std::lower_bound(v.begin(), v.end(), x) - v.begin();
    };
    IntegerMatrix pushm(dn.size(), dm.size());
    IntegerMatrix pullm(dm.size(), dn.size());
    for (size_t j = 0; j < dm.size(); ++j) pushm.at(idx(dn, dm[j]), j) = 1;
    for (size_t j = 0; j < dn.size(); ++j) {
      long k = dn[j];
      pullm.at(idx(dm, lgcd(m, k)), j) = n / llcm(m, k);
    }
    d.push.emplace(std::make_pair(m, n),
                   GroupMorphism(d.groups.at(m), d.groups.at(n), pushm));
    d.pull.emplace(std::make_pair(m, n),
                   GroupMorphism(d.groups.at(n), d.groups.at(m), pullm));
  }
  return d;
}

GroupMorphism eval_h(const MackeyData& d, const HMorphism& h) {
  long m = h.source_level(), n = h.target_level();
  if (!d.has_level(m) || !d.has_level(n))
    throw OutOfBoundError("eval_h: levels outside the data bound");
  GroupMorphism acc = GroupMorphism::zero(d.group(m), d.group(n));
  for (const auto& [k, c] : h.coeffs())
    acc = acc + compose(d.push_map(k, n), d.pull_map(k, m)).scaled(c);
  return acc;
}

MackeyData j_upper_star(const MackeyData& d, long p) {
  MackeyData out;
  out.bound = cyc::coprime_part(d.bound, p);
  for (long m : d.levels)
    if (m % p != 0) out.levels.push_back(m);
  for (long m : out.levels) out.groups.emplace(m, d.group(m));
  for (auto [m, n] : covering_pairs(out.levels)) {
    out.push.emplace(std::make_pair(m, n), d.push.at({m, n}));
    out.pull.emplace(std::make_pair(m, n), d.pull.at({m, n}));
  }
  return out;
}

MackeyData j_lower_shriek(const MackeyData& d, long p, long bound) {
  MackeyData out;
  out.bound = bound;
  out.levels = divisors(bound);
  for (long n : out.levels) {
    long a = cyc::coprime_part(n, p);
    if (!d.has_level(a))
      throw OutOfBoundError("j_lower_shriek: input misses level " + std::to_string(a));
    out.groups.emplace(n, d.group(a));
  }
  for (auto [m, n] : covering_pairs(out.levels)) {
    long q = n / m;
    if (q == p) {
      GroupMorphism ident = GroupMorphism::identity(out.groups.at(m));
      out.push.emplace(std::make_pair(m, n), ident);
      out.pull.emplace(std::make_pair(m, n), ident.scaled(Int(q)));
    } else {
      long am = cyc::coprime_part(m, p), an = cyc::coprime_part(n, p);
      out.push.emplace(std::make_pair(m, n), d.push.at({am, an}));
      out.pull.emplace(std::make_pair(m, n), d.pull.at({am, an}));
    }
  }
  return out;
}

MackeyRule::MackeyRule(GroupFn group, CoverFn push_cover, CoverFn pull_cover)
    : group_fn_(std::move(group)),
      push_fn_(std::move(push_cover)),
      pull_fn_(std::move(pull_cover)),
      memo_(std::make_shared<Memo>()) {}

FGAbelianGroup MackeyRule::group(long m) const {
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->groups.find(m);
    if (it != memo_->groups.end()) return it->second;
  }
  FGAbelianGroup g = group_fn_(m);
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->groups.emplace(m, g);
  return g;
}

FGAbelianGroup MackeyRule::group_memoized(long m) const {
  auto it = memo_->groups.find(m);
  if (it == memo_->groups.end()) throw std::logic_error("MackeyRule: group not memoized yet");
  return it->second;
}

GroupMorphism MackeyRule::cover_push(long m, long n) const {
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->push.find({m, n});
    if (it != memo_->push.end()) return {group_memoized(m), group_memoized(n), it->second};
  }
  IntegerMatrix mat = push_fn_(m, n);
  FGAbelianGroup gm = group(m), gn = group(n);
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->push.emplace(std::make_pair(m, n), mat);
  return {gm, gn, mat};
}

GroupMorphism MackeyRule::cover_pull(long m, long n) const {
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->pull.find({m, n});
    if (it != memo_->pull.end()) return {group_memoized(n), group_memoized(m), it->second};
  }
  IntegerMatrix mat = pull_fn_(m, n);
  FGAbelianGroup gm = group(m), gn = group(n);
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->pull.emplace(std::make_pair(m, n), mat);
  return {gn, gm, mat};
}

GroupMorphism MackeyRule::push(long m, long n) const {
  auto chain = prime_chain(m, n);
  GroupMorphism acc = GroupMorphism::identity(group(m));
  for (size_t i = 0; i + 1 < chain.size(); ++i) acc = compose(cover_push(chain[i], chain[i + 1]), acc);
  return acc;
}

GroupMorphism MackeyRule::pull(long m, long n) const {
  auto chain = prime_chain(m, n);
  GroupMorphism acc = GroupMorphism::identity(group(n));
  for (size_t i = chain.size(); i-- > 1;) acc = compose(cover_pull(chain[i - 1], chain[i]), acc);
  return acc;
}

MackeyData MackeyRule::truncate(long bound) const {
  MackeyData d;
  d.bound = bound;
  d.levels = divisors(bound);
  for (long m : d.levels) d.groups.emplace(m, group(m));
  for (auto [m, n] : covering_pairs(d.levels)) {
    d.push.emplace(std::make_pair(m, n), cover_push(m, n));
    d.pull.emplace(std::make_pair(m, n), cover_pull(m, n));
  }
  return d;
}

MackeyRule burnside_rule() {
  auto group = [](long m) { return FGAbelianGroup::free_group(divisors(m).size()); };
  auto idx = [](const std::vector<long>& v, long x) {
    return std::lower_bound(v.begin(), v.end(), x) - v.begin();
  };
  auto push = [idx](long m, long n) {
    auto dm = divisors(m), dn = divisors(n);
    IntegerMatrix mat(dn.size(), dm.size());
    for (size_t j = 0; j < dm.size(); ++j) mat.at(idx(dn, dm[j]), j) = 1;
    return mat;
  };
  auto pull = [idx](long m, long n) {
    auto dm = divisors(m), dn = divisors(n);
    IntegerMatrix mat(dm.size(), dn.size());
    for (size_t j = 0; j < dn.size(); ++j) {
      long k = dn[j];
      mat.at(idx(dm, lgcd(m, k)), j) = n / llcm(m, k);
    }
    return mat;
  };
  return {group, push, pull};
}

MackeyRule zero_rule() {
  auto group = [](long) { return FGAbelianGroup::free_group(0); };
  auto mapfn = [](long, long) { return IntegerMatrix(0, 0); };
  return {group, mapfn, mapfn};
}

}  // namespace cyc
