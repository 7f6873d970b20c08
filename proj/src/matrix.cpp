#include "cyc/matrix.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace cyc {

IntegerMatrix::IntegerMatrix(long rows, long cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (static_cast<long>(e_.size()) != rows_ * cols_)
    throw std::invalid_argument("IntegerMatrix: entry count != rows*cols");
}

IntegerMatrix IntegerMatrix::identity(long n) {
  IntegerMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  long r = static_cast<long>(rows.size());
  long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
  IntegerMatrix m(r, c);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(rows[i].size()) != c)
      throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (long j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch in *");
  IntegerMatrix r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntegerMatrix: shape mismatch in +");
  IntegerMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
  return *this + (-o);
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

IntegerMatrix IntegerMatrix::scaled(const Int& c) const {
  IntegerMatrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<long>(x.size()) != cols_)
    throw std::invalid_argument("IntegerMatrix: vector size mismatch");
  std::vector<Int> y(rows_, Int(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

std::vector<Int> IntegerMatrix::col(long j) const {
  std::vector<Int> v(rows_);
  for (long i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntegerMatrix::row(long i) const {
  std::vector<Int> v(cols_);
  for (long j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntegerMatrix::set_col(long j, const std::vector<Int>& v) {
  for (long i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  IntegerMatrix r(rows_ + o.rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (long i = 0; i < o.rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  IntegerMatrix r(rows_, cols_ + o.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

void IntegerMatrix::swap_rows(long i, long j) {
  if (i == j) return;
  for (long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(long i, long j) {
  if (i == j) return;
  for (long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntegerMatrix::add_row(long dst, long src, const Int& c) {
  if (c == 0) return;
  for (long k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntegerMatrix::add_col(long dst, long src, const Int& c) {
  if (c == 0) return;
  for (long k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IntegerMatrix::negate_row(long i) {
  for (long k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntegerMatrix::negate_col(long j) {
  for (long k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

std::string IntegerMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Row/column operation mirroring so that u * m0 * v = d and uinv = u^{-1}
// stay invariant while d is reduced in place.
struct SnfWork {
  IntegerMatrix d, u, v, uinv;

  void do_swap_rows(long i, long j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  }
  void do_swap_cols(long i, long j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void do_add_row(long dst, long src, const Int& c) {
    d.add_row(dst, src, c);
    u.add_row(dst, src, c);
    uinv.add_col(src, dst, -c);
  }
  void do_add_col(long dst, long src, const Int& c) {
    d.add_col(dst, src, c);
    v.add_col(dst, src, c);
  }
  void do_negate_row(long i) {
    d.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
  SnfWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()),
            IntegerMatrix::identity(m.rows())};
  long n = std::min(m.rows(), m.cols());
  long t = 0;
  for (; t < n; ++t) {
    // Pivot selection: smallest nonzero absolute value in the trailing block,
    // first occurrence in row-major order. Keeps coefficient growth down.
    auto find_pivot = [&](long from) -> std::optional<std::pair<long, long>> {
      std::optional<std::pair<long, long>> best;
      Int best_abs = 0;
      for (long i = from; i < m.rows(); ++i)
        for (long j = from; j < m.cols(); ++j) {
          const Int& x = w.d.at(i, j);
          if (x == 0) continue;
          Int a = int_abs(x);
          if (!best || a < best_abs) {
            best = {i, j};
            best_abs = a;
          }
        }
      return best;
    };

    auto piv = find_pivot(t);
    if (!piv) break;
    w.do_swap_rows(t, piv->first);
    w.do_swap_cols(t, piv->second);

    for (;;) {
      // Clear column t.
      bool again = false;
      for (long i = t + 1; i < m.rows(); ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = floor_div(w.d.at(i, t), w.d.at(t, t));
        w.do_add_row(i, t, -q);
        if (w.d.at(i, t) != 0) {
          // Remainder is smaller than the pivot; promote it.
          w.do_swap_rows(t, i);
          again = true;
        }
      }
      if (again) continue;
      // Clear row t.
      for (long j = t + 1; j < m.cols(); ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = floor_div(w.d.at(t, j), w.d.at(t, t));
        w.do_add_col(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.do_swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // Divisibility sweep: the pivot must divide everything below-right.
      bool fixed = true;
      for (long i = t + 1; i < m.rows() && fixed; ++i)
        for (long j = t + 1; j < m.cols() && fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.do_add_row(t, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.d.at(t, t) < 0) w.do_negate_row(t);
  }
  SnfResult r{std::move(w.d), std::move(w.u), std::move(w.v), std::move(w.uinv), t};
  return r;
}

Lattice::Lattice(const IntegerMatrix& generators)
    : gens_(generators), snf_(smith_normal_form(generators)) {}

bool Lattice::contains(const std::vector<Int>& x) const {
  std::vector<Int> y = snf_.u.apply(x);
  for (long i = 0; i < ambient_dim(); ++i) {
    if (i < snf_.rank) {
      if (y[i] % snf_.d.at(i, i) != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<Int>> Lattice::solve(const std::vector<Int>& x) const {
  std::vector<Int> y = snf_.u.apply(x);
  std::vector<Int> z(gens_.cols(), Int(0));
  for (long i = 0; i < ambient_dim(); ++i) {
    if (i < snf_.rank) {
      if (y[i] % snf_.d.at(i, i) != 0) return std::nullopt;
      if (i < gens_.cols()) z[i] = y[i] / snf_.d.at(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.v.apply(z);
}

IntegerMatrix Lattice::basis() const {
  IntegerMatrix b(ambient_dim(), snf_.rank);
  for (long j = 0; j < snf_.rank; ++j)
    for (long i = 0; i < ambient_dim(); ++i) b.at(i, j) = snf_.uinv.at(i, j) * snf_.d.at(j, j);
  return b;
}

IntegerMatrix Lattice::kernel_basis() const {
  long g = gens_.cols();
  IntegerMatrix k(g, g - snf_.rank);
  for (long j = snf_.rank; j < g; ++j)
    for (long i = 0; i < g; ++i) k.at(i, j - snf_.rank) = snf_.v.at(i, j);
  return k;
}

}  // namespace cyc
