#include "cyc/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "cyc/errors.hpp"

namespace cyc {

namespace {

// Shared cokernel store for a fixed-point construction: level -> X<lp>/X<a>.
struct GfpMemo {
  std::mutex mu;
  std::map<long, CokernelResult> coks;
};

CokernelResult gfp_target(const MackeyRule& base, long p, const std::shared_ptr<GfpMemo>& memo,
                          long level) {
  {
    std::lock_guard<std::mutex> lk(memo->mu);
    auto it = memo->coks.find(level);
    if (it != memo->coks.end()) return it->second;
  }
  long a = coprime_part(level, p);
  CokernelResult cok = cokernel(base.push(a, level * p));
  std::lock_guard<std::mutex> lk(memo->mu);
  return memo->coks.emplace(level, std::move(cok)).first->second;
}

}  // namespace

MackeyRule geometric_fixed_points(const MackeyRule& base, long p) {
  auto memo = std::make_shared<GfpMemo>();
  auto target = [base, p, memo](long l) { return gfp_target(base, p, memo, l); };
  auto group = [target](long l) { return target(l).group; };
  auto push = [base, p, target](long m, long n) {
    return induced_on_quotient(base.push(m * p, n * p), target(m).projection,
                               target(n).projection)
        .matrix();
  };
  auto pull = [base, p, target](long m, long n) {
    return induced_on_quotient(base.pull(m * p, n * p), target(n).projection,
                               target(m).projection)
        .matrix();
  };
  MackeyRule rule(group, push, pull);
  rule.projection = [target](long l) { return target(l).projection; };
  return rule;
}

std::string CheckReport::str() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.pass ? "[pass] " : "[FAIL] ") << "level " << e.level << ": " << e.check;
    if (!e.pass && !e.witness.empty()) os << " -- " << e.witness;
    os << "\n";
  }
  return os.str();
}

CheckReport recollement_check(const MackeyData& d, long p) {
  CheckReport rep;
  auto add = [&](long level, const std::string& check, bool pass, const std::string& wit = "") {
    rep.entries.push_back({level, check, pass, pass ? "" : wit});
  };

  // The transfer from the p-constant part must be a morphism of the whole
  // structure: commute with push and pull at every covering pair.
  for (auto [m, n] : covering_pairs(d.levels)) {
    long am = coprime_part(m, p), an = coprime_part(n, p);
    long q = n / m;
    GroupMorphism lhs_push = compose(d.push_map(m, n), d.push_map(am, m));
    GroupMorphism rhs_push = q == p ? d.push_map(an, n)
                                    : compose(d.push_map(an, n), d.push_map(am, an));
    add(n, "transfer-commutes-push (" + std::to_string(m) + "|" + std::to_string(n) + ")",
        lhs_push.equals(rhs_push),
        "difference " + (lhs_push.matrix() - rhs_push.matrix()).str());
    GroupMorphism lhs_pull = compose(d.pull_map(m, n), d.push_map(an, n));
    GroupMorphism rhs_pull = q == p
                                 ? d.push_map(am, m).scaled(Int(q))
                                 : compose(d.push_map(am, m), d.pull_map(am, an));
    add(n, "transfer-commutes-pull (" + std::to_string(m) + "|" + std::to_string(n) + ")",
        lhs_pull.equals(rhs_pull),
        "difference " + (lhs_pull.matrix() - rhs_pull.matrix()).str());
  }

  // Right exactness level by level, and induced structure on the quotients.
  std::map<long, CokernelResult> coks;
  for (long n : d.levels) {
    long a = coprime_part(n, p);
    GroupMorphism lam = d.push_map(a, n);
    CokernelResult cok = cokernel(lam);
    GroupMorphism comp = compose(cok.projection, lam);
    add(n, "composite-zero", comp.equals(GroupMorphism::zero(lam.source(), cok.group)),
        "projection after transfer is " + comp.matrix().str());
    add(n, "projection-surjective", cokernel(cok.projection).group.is_trivial(), "");
    // ker(projection) = im(transfer) as sublattices of the carrier.
    IntegerMatrix ker = kernel_lattice(cok.projection);
    Lattice image(lam.matrix().hstack(lam.target().relations().transpose()));
    bool ker_in_im = true;
    for (long j = 0; j < ker.cols() && ker_in_im; ++j)
      if (!image.contains(ker.col(j))) ker_in_im = false;
    Lattice kerlat(ker);
    bool im_in_ker = true;
    for (long j = 0; j < lam.matrix().cols() && im_in_ker; ++j)
      if (!kerlat.contains(lam.matrix().col(j))) im_in_ker = false;
    add(n, "kernel-equals-image", ker_in_im && im_in_ker,
        ker_in_im ? "an image vector escapes the kernel" : "a kernel vector escapes the image");
    coks.emplace(n, std::move(cok));
  }
  for (auto [m, n] : covering_pairs(d.levels)) {
    try {
      induced_on_quotient(d.push_map(m, n), coks.at(m).projection, coks.at(n).projection);
      induced_on_quotient(d.pull_map(m, n), coks.at(n).projection, coks.at(m).projection);
      add(n, "induced-structure (" + std::to_string(m) + "|" + std::to_string(n) + ")", true);
    } catch (const NotWellDefinedError& e) {
      add(n, "induced-structure (" + std::to_string(m) + "|" + std::to_string(n) + ")", false,
          e.what());
    }
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.level < b.level; });
  return rep;
}

CyclotomicData::CyclotomicData(MackeyRule base, std::vector<long> primes, StructureFn structure)
    : base_(std::move(base)),
      primes_(std::move(primes)),
      structure_(std::move(structure)),
      memo_(std::make_shared<Memo>()) {
  std::sort(primes_.begin(), primes_.end());
  for (long p : primes_)
    if (!is_prime(p)) throw NotDivisorError("CyclotomicData: " + std::to_string(p) + " is not prime");
}

const CokernelResult& CyclotomicData::target(long p, long level) const {
  auto key = std::make_pair(p, level);
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->targets.find(key);
    if (it != memo_->targets.end()) return it->second;
  }
  long a = coprime_part(level, p);
  CokernelResult cok = cokernel(base_.push(a, level * p));
  std::lock_guard<std::mutex> lk(memo_->mu);
  return memo_->targets.emplace(key, std::move(cok)).first->second;
}

GroupMorphism CyclotomicData::r(long p, long level) const {
  auto it = overrides_.find({p, level});
  IntegerMatrix mat = it != overrides_.end() ? it->second : structure_(p, level);
  return {base_.group(level), target(p, level).group, mat};
}

CyclotomicData CyclotomicData::with_override(long p, long level, IntegerMatrix matrix) const {
  CyclotomicData c(base_, primes_, structure_);
  c.overrides_ = overrides_;
  c.overrides_[{p, level}] = std::move(matrix);
  return c;
}

CyclotomicData witt_cyclotomic(const RingSpec& ring, std::vector<long> primes) {
  if (ring.kind != RingSpec::Kind::z && ring.kind != RingSpec::Kind::zmod)
    throw UnsupportedRingError("witt_cyclotomic: supported rings are Z and Zmod");
  // The surviving coordinates of W<lp>/V(W<a>) are the divisors of l; the
  // structure map is the corresponding coordinate section.
  auto structure = [](long p, long level) {
    return witt_restriction_matrix(level, level * p).transpose();
  };
  return {witt_rule(ring), std::move(primes), structure};
}

CheckReport verify_cyclotomic(const CyclotomicData& c, long bound) {
  CheckReport rep;
  const MackeyRule& base = c.base();
  auto add = [&](long level, const std::string& check, bool pass, const std::string& wit = "") {
    rep.entries.push_back({level, check, pass, pass ? "" : wit});
  };

  for (long p : c.primes()) {
    for (long l = 1; l <= bound; ++l) {
      IsoCheck iso = is_isomorphism(c.r(p, l));
      add(l, "iso(p=" + std::to_string(p) + ")", iso.ok, iso.witness);
    }
    // r_p must be a morphism of Mackey structures into the fixed points.
    for (long n = 1; n <= bound; ++n)
      for (auto [q, e] : factorize(n)) {
        long m = n / q;
        GroupMorphism phi_push = induced_on_quotient(base.push(m * p, n * p),
                                                     c.target(p, m).projection,
                                                     c.target(p, n).projection);
        GroupMorphism lhs = compose(c.r(p, n), base.push(m, n));
        GroupMorphism rhs = compose(phi_push, c.r(p, m));
        add(n, "r-commutes-push(p=" + std::to_string(p) + "," + std::to_string(m) + "|" +
                   std::to_string(n) + ")",
            lhs.equals(rhs), "difference " + (lhs.matrix() - rhs.matrix()).str());
        GroupMorphism phi_pull = induced_on_quotient(base.pull(m * p, n * p),
                                                     c.target(p, n).projection,
                                                     c.target(p, m).projection);
        GroupMorphism lhs2 = compose(c.r(p, m), base.pull(m, n));
        GroupMorphism rhs2 = compose(phi_pull, c.r(p, n));
        add(n, "r-commutes-pull(p=" + std::to_string(p) + "," + std::to_string(m) + "|" +
                   std::to_string(n) + ")",
            lhs2.equals(rhs2), "difference " + (lhs2.matrix() - rhs2.matrix()).str());
      }
  }

  // Pairwise compatibility: the two iterated fixed-point routes agree under
  // the canonical identification of the double quotients.
  for (size_t i = 0; i < c.primes().size(); ++i)
    for (size_t j = i + 1; j < c.primes().size(); ++j) {
      long p1 = c.primes()[i], p2 = c.primes()[j];
      MackeyRule ya = geometric_fixed_points(base, p2);  // apply p1 second
      MackeyRule yb = geometric_fixed_points(base, p1);
      for (long l = 1; l <= bound; ++l) {
        std::string name =
            "square(p1=" + std::to_string(p1) + ",p2=" + std::to_string(p2) + ")";
        try {
          long a1 = coprime_part(l, p1), a2 = coprime_part(l, p2);
          // Route A: r_{p1} then Phi^{p1}(r_{p2}).
          CokernelResult ta = cokernel(ya.push(a1, l * p1));
          GroupMorphism phi_r2 = induced_on_quotient(c.r(p2, l * p1),
                                                     c.target(p1, l).projection, ta.projection);
          GroupMorphism route_a = compose(phi_r2, c.r(p1, l));
          // Route B: r_{p2} then Phi^{p2}(r_{p1}).
          CokernelResult tb = cokernel(yb.push(a2, l * p2));
          GroupMorphism phi_r1 = induced_on_quotient(c.r(p1, l * p2),
                                                     c.target(p2, l).projection, tb.projection);
          GroupMorphism route_b = compose(phi_r1, c.r(p2, l));
          // Both targets are quotients of X<l p1 p2>; identify them through
          // their projections.
          GroupMorphism pa = compose(ta.projection, ya.projection(l * p1));
          GroupMorphism pb = compose(tb.projection, yb.projection(l * p2));
          GroupMorphism ident =
              induced_on_quotient(GroupMorphism::identity(base.group(l * p1 * p2)), pa, pb);
          bool ok = compose(ident, route_a).equals(route_b);
          add(l, name, ok,
              "difference " + ((ident.matrix() * route_a.matrix()) - route_b.matrix()).str());
        } catch (const NotWellDefinedError& e) {
          add(l, name, false, e.what());
        }
      }
    }

  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.level < b.level; });
  return rep;
}

namespace {

GroupMorphism restriction_step(const CyclotomicData& c, long p, long u) {
  IsoCheck iso = is_isomorphism(c.r(p, u));
  if (!iso.ok)
    throw NotWellDefinedError("derived_restriction: structure map at level " + std::to_string(u) +
                              ", p = " + std::to_string(p) + " is not an isomorphism");
  return compose(*iso.inverse, c.target(p, u).projection);
}

GroupMorphism restriction_along(const CyclotomicData& c, long m, const std::vector<long>& primes_desc) {
  // Walk down from n = m * prod(primes) dividing off one prime at a time.
  long cur = m;
  for (long p : primes_desc) cur *= p;
  GroupMorphism acc = GroupMorphism::identity(c.base().group(cur));
  for (long p : primes_desc) {
    long next = cur / p;
    acc = compose(restriction_step(c, p, next), acc);
    cur = next;
  }
  return acc;
}

}  // namespace

GroupMorphism derived_restriction(const CyclotomicData& c, long m, long n) {
  if (m < 1 || n % m != 0) throw NotDivisorError("derived_restriction: m must divide n");
  std::vector<long> primes;
  for (auto [p, e] : factorize(n / m))
    for (int i = 0; i < e; ++i) primes.push_back(p);
  if (primes.empty()) return GroupMorphism::identity(c.base().group(m));
  for (long p : primes)
    if (std::find(c.primes().begin(), c.primes().end(), p) == c.primes().end())
      throw NotDivisorError("derived_restriction: prime " + std::to_string(p) +
                            " has no structure map");
  GroupMorphism result = restriction_along(c, m, primes);
  // Factorization order must not matter; compare every distinct ordering.
  std::sort(primes.begin(), primes.end());
  std::vector<long> perm = primes;
  while (std::next_permutation(perm.begin(), perm.end())) {
    GroupMorphism other = restriction_along(c, m, perm);
    if (!result.equals(other))
      throw NotWellDefinedError("derived_restriction: factorization orders disagree between " +
                                std::to_string(m) + " and " + std::to_string(n));
  }
  return result;
}

CheckReport verify_witt_cyclotomic(const RingSpec& ring, const std::vector<long>& primes,
                                   long bound) {
  CyclotomicData c = witt_cyclotomic(ring, primes);
  CheckReport rep = verify_cyclotomic(c, bound);
  for (long n = 1; n <= bound; ++n) {
    for (long m : divisors(n)) {
      // Only ratios supported by the prime set have derived restrictions.
      long ratio = n / m;
      if (ratio == 1) continue;
      bool supported = true;
      for (auto [p, e] : factorize(ratio))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) supported = false;
      if (!supported) continue;
      std::string name = "rho-is-truncation(" + std::to_string(m) + "|" + std::to_string(n) + ")";
      try {
        GroupMorphism rho = derived_restriction(c, m, n);
        GroupMorphism trunc(c.base().group(n), c.base().group(m), witt_restriction_matrix(m, n));
        rep.entries.push_back({n, name, rho.equals(trunc),
                               rho.equals(trunc) ? ""
                                                 : "difference " +
                                                       (rho.matrix() - trunc.matrix()).str()});
      } catch (const DomainError& e) {
        rep.entries.push_back({n, name, false, e.what()});
      }
    }
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.level < b.level; });
  return rep;
}

OrbitMap iota(const OrbitMap& f, long n) {
  Orbit src(f.source().level() * n, f.source().ambient());
  Orbit tgt(f.target().level() * n, f.target().ambient());
  return {src, tgt, f.offset() / n};
}

TwistedMorphism twisted_compose(const TwistedMorphism& a, const TwistedMorphism& b) {
  OrbitMap lifted = iota(a.map, b.scale);
  return {a.scale * b.scale, compose_orbit_maps(lifted, b.map)};
}

Rat twisted_compose_cells(const Rat& r, long m, const Rat& s, long n, TwistedCellFormula f) {
  long divisor = f == TwistedCellFormula::divide_by_first_scale ? m : n;
  return r / divisor + s;
}

TwistedAuditReport twisted_associativity_audit(long max_product) {
  TwistedAuditReport rep;
  std::vector<Rat> values = {Rat(0), Rat(1), Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(5, 6)};
  auto associative = [&](TwistedCellFormula f, std::string* witness) {
    for (long m = 1; m <= max_product; ++m)
      for (long n = 1; m * n <= max_product; ++n)
        for (long q = 1; m * n * q <= max_product; ++q)
          for (const Rat& r : values)
            for (const Rat& s : values)
              for (const Rat& t : values) {
                Rat left = twisted_compose_cells(twisted_compose_cells(r, m, s, n, f), m * n, t, q, f);
                Rat right = twisted_compose_cells(r, m, twisted_compose_cells(s, n, t, q, f), n * q, f);
                if (left != right) {
                  if (witness) {
                    std::ostringstream os;
                    os << "scales (" << m << "," << n << "," << q << "), cells (" << rat_str(r)
                       << "," << rat_str(s) << "," << rat_str(t) << "): " << rat_str(left)
                       << " != " << rat_str(right);
                    *witness = os.str();
                  }
                  return false;
                }
              }
    return true;
  };
  std::string wit_first, wit_second;
  rep.first_scale_associative = associative(TwistedCellFormula::divide_by_first_scale, &wit_first);
  rep.second_scale_associative =
      associative(TwistedCellFormula::divide_by_second_scale, &wit_second);
  if (rep.second_scale_associative && !rep.first_scale_associative) {
    rep.adopted = "r/n + s";
    rep.witness = wit_first;
  } else if (rep.first_scale_associative && !rep.second_scale_associative) {
    rep.adopted = "r/m + s";
    rep.witness = wit_second;
  }
  return rep;
}

}  // namespace cyc
