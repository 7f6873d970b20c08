#include "cyc/abgrp.hpp"

#include <sstream>
#include <stdexcept>

#include "cyc/errors.hpp"

namespace cyc {

FGAbelianGroup::FGAbelianGroup(long generators, IntegerMatrix relations)
    : gens_(generators), rels_(std::move(relations)) {
  if (rels_.cols() != gens_ && !(rels_.rows() == 0 && rels_.cols() == 0))
    throw std::invalid_argument("FGAbelianGroup: relations must have one column per generator");
  if (rels_.rows() == 0) rels_ = IntegerMatrix(0, gens_);
  IntegerMatrix lat = rels_.transpose();  // columns span the relation lattice
  snf_ = std::make_shared<SnfResult>(smith_normal_form(lat));
  rel_lat_ = std::make_shared<Lattice>(lat);
  rank_ = gens_ - snf_->rank;
  for (long i = 0; i < snf_->rank; ++i)
    if (snf_->d.at(i, i) > 1) torsion_.push_back(snf_->d.at(i, i));
}

FGAbelianGroup FGAbelianGroup::free_group(long rank) {
  return FGAbelianGroup(rank, IntegerMatrix(0, rank));
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) {
  IntegerMatrix rel(1, 1);
  rel.at(0, 0) = n;
  return FGAbelianGroup(1, rel);
}

bool FGAbelianGroup::is_zero_element(const std::vector<Int>& x) const {
  return rel_lat_->contains(x);
}

bool FGAbelianGroup::elements_equal(const std::vector<Int>& x, const std::vector<Int>& y) const {
  std::vector<Int> d(x);
  for (size_t i = 0; i < d.size(); ++i) d[i] -= y[i];
  return is_zero_element(d);
}

std::vector<Int> FGAbelianGroup::canonical_coords(const std::vector<Int>& x) const {
  std::vector<Int> y = snf_->u.apply(x);
  std::vector<Int> out;
  for (long i = 0; i < snf_->rank; ++i) {
    const Int& d = snf_->d.at(i, i);
    if (d > 1) out.push_back(pos_mod(y[i], d));
  }
  for (long i = snf_->rank; i < gens_; ++i) out.push_back(y[i]);
  return out;
}

std::string FGAbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z";
    if (rank_ > 1) os << "^" << rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

GroupMorphism::GroupMorphism(FGAbelianGroup source, FGAbelianGroup target, IntegerMatrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
  if (mat_.rows() != tgt_.generators() || mat_.cols() != src_.generators())
    throw std::invalid_argument("GroupMorphism: matrix shape mismatch");
  // A relation of the source must die in the target.
  const IntegerMatrix& rels = src_.relations();
  for (long i = 0; i < rels.rows(); ++i) {
    std::vector<Int> img = mat_.apply(rels.row(i));
    if (!tgt_.is_zero_element(img))
      throw NotWellDefinedError("GroupMorphism: source relation " + std::to_string(i) +
                                " does not map to zero in the target");
  }
}

GroupMorphism GroupMorphism::identity(const FGAbelianGroup& g) {
  return {g, g, IntegerMatrix::identity(g.generators())};
}

GroupMorphism GroupMorphism::zero(const FGAbelianGroup& source, const FGAbelianGroup& target) {
  return {source, target, IntegerMatrix(target.generators(), source.generators())};
}

GroupMorphism GroupMorphism::operator+(const GroupMorphism& o) const {
  return {src_, tgt_, mat_ + o.mat_};
}

GroupMorphism GroupMorphism::operator-(const GroupMorphism& o) const {
  return {src_, tgt_, mat_ - o.mat_};
}

bool GroupMorphism::equals(const GroupMorphism& o) const {
  if (mat_.rows() != o.mat_.rows() || mat_.cols() != o.mat_.cols()) return false;
  IntegerMatrix diff = mat_ - o.mat_;
  for (long j = 0; j < diff.cols(); ++j)
    if (!tgt_.is_zero_element(diff.col(j))) return false;
  return true;
}

GroupMorphism compose(const GroupMorphism& g, const GroupMorphism& f) {
  if (f.target().generators() != g.source().generators())
    throw std::invalid_argument("compose: incompatible morphisms");
  return {f.source(), g.target(), g.matrix() * f.matrix()};
}

CokernelResult cokernel(const GroupMorphism& f) {
  // Quotient of the target by the image: adjoin each f(e_j) as a relation.
  const IntegerMatrix& m = f.matrix();
  IntegerMatrix extra = m.transpose();
  FGAbelianGroup q(f.target().generators(), f.target().relations().vstack(extra));
  GroupMorphism proj(f.target(), q, IntegerMatrix::identity(f.target().generators()));
  return {q, proj};
}

IntegerMatrix kernel_lattice(const GroupMorphism& f) {
  // x maps to zero iff f(x) lies in the target relation lattice, i.e. iff
  // [matrix | target relations] has an integer solution hitting f(x).
  long gs = f.source().generators();
  IntegerMatrix combined = f.matrix().hstack(f.target().relations().transpose());
  Lattice lat(combined);
  IntegerMatrix full_kernel = lat.kernel_basis();
  // Project to the x-block and keep the source relations themselves.
  IntegerMatrix proj(gs, full_kernel.cols());
  for (long j = 0; j < full_kernel.cols(); ++j)
    for (long i = 0; i < gs; ++i) proj.at(i, j) = full_kernel.at(i, j);
  IntegerMatrix with_rels = proj.hstack(f.source().relations().transpose());
  return Lattice(with_rels).basis();
}

IsoCheck is_isomorphism(const GroupMorphism& f) {
  IsoCheck out;
  // Surjectivity: trivial cokernel.
  CokernelResult cok = cokernel(f);
  if (!cok.group.is_trivial()) {
    out.witness = "not surjective: cokernel is " + cok.group.str();
    // Name a generator class that is not hit.
    for (long j = 0; j < f.target().generators(); ++j) {
      std::vector<Int> e(f.target().generators(), Int(0));
      e[j] = 1;
      if (!cok.group.is_zero_element(e)) {
        out.witness_element = e;
        break;
      }
    }
    return out;
  }
  // Injectivity: the kernel lattice must be no bigger than the source relations.
  IntegerMatrix ker = kernel_lattice(f);
  const Lattice& src_rel = f.source().relation_lattice();
  for (long j = 0; j < ker.cols(); ++j) {
    std::vector<Int> v = ker.col(j);
    if (!src_rel.contains(v)) {
      out.witness = "not injective: nonzero kernel class";
      out.witness_element = v;
      return out;
    }
  }
  // Inverse modulo relations: solve f(x) = e_i in the presented target.
  IntegerMatrix combined = f.matrix().hstack(f.target().relations().transpose());
  Lattice lat(combined);
  long gs = f.source().generators(), gt = f.target().generators();
  IntegerMatrix inv(gs, gt);
  for (long i = 0; i < gt; ++i) {
    std::vector<Int> e(gt, Int(0));
    e[i] = 1;
    auto sol = lat.solve(e);
    if (!sol) throw std::logic_error("is_isomorphism: surjectivity witness failed to solve");
    for (long r = 0; r < gs; ++r) inv.at(r, i) = (*sol)[r];
  }
  out.ok = true;
  out.inverse = GroupMorphism(f.target(), f.source(), inv);
  return out;
}

GroupMorphism induced_on_quotient(const GroupMorphism& f, const GroupMorphism& q_src,
                                  const GroupMorphism& q_tgt) {
  if (q_src.source().generators() != f.source().generators() ||
      q_tgt.source().generators() != f.target().generators())
    throw std::invalid_argument("induced_on_quotient: projections do not match f");
  // ker(q_src) must land in ker(q_tgt) under f.
  IntegerMatrix ker = kernel_lattice(q_src);
  for (long j = 0; j < ker.cols(); ++j) {
    std::vector<Int> img = q_tgt.apply(f.apply(ker.col(j)));
    if (!q_tgt.target().is_zero_element(img)) {
      std::ostringstream os;
      os << "induced_on_quotient: kernel generator (";
      std::vector<Int> k = ker.col(j);
      for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
      os << ") is not carried into the target kernel";
      throw NotWellDefinedError(os.str());
    }
  }
  // For each generator of the source quotient, lift through q_src and push.
  IntegerMatrix combined = q_src.matrix().hstack(q_src.target().relations().transpose());
  Lattice lat(combined);
  long gq = q_src.target().generators();
  long ga = f.source().generators();
  IntegerMatrix m(q_tgt.target().generators(), gq);
  for (long i = 0; i < gq; ++i) {
    std::vector<Int> e(gq, Int(0));
    e[i] = 1;
    auto sol = lat.solve(e);
    if (!sol)
      throw NotWellDefinedError("induced_on_quotient: q_src is not surjective onto generator " +
                                std::to_string(i));
    std::vector<Int> x(sol->begin(), sol->begin() + ga);
    m.set_col(i, q_tgt.apply(f.apply(x)));
  }
  return {q_src.target(), q_tgt.target(), m};
}

}  // namespace cyc
