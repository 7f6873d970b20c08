#pragma once

#include <string>
#include <vector>

#include "cyc/ints.hpp"

namespace cyc {

// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntegerMatrix(long rows, long cols, std::vector<Int> entries);

  static IntegerMatrix identity(long n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& at(long i, long j) { return e_[i * cols_ + j]; }
  const Int& at(long i, long j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  IntegerMatrix operator+(const IntegerMatrix& o) const;
  IntegerMatrix operator-(const IntegerMatrix& o) const;
  IntegerMatrix operator-() const;
  IntegerMatrix scaled(const Int& c) const;
  IntegerMatrix transpose() const;

  std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * column vector
  std::vector<Int> col(long j) const;
  std::vector<Int> row(long i) const;
  void set_col(long j, const std::vector<Int>& v);

  bool is_zero() const;
  bool is_identity() const;

  // Stack o below this (equal column counts).
  IntegerMatrix vstack(const IntegerMatrix& o) const;
  // Put o to the right of this (equal row counts).
  IntegerMatrix hstack(const IntegerMatrix& o) const;

  void swap_rows(long i, long j);
  void swap_cols(long i, long j);
  void add_row(long dst, long src, const Int& c);  // row dst += c * row src
  void add_col(long dst, long src, const Int& c);
  void negate_row(long i);
  void negate_col(long j);

  std::string str() const;

 private:
  long rows_, cols_;
  std::vector<Int> e_;
};

// u * m * v = d with u, v unimodular; d diagonal, d_i >= 0, d_i | d_{i+1}.
// uinv is the inverse of u (kept so lattice bases can be read off).
struct SnfResult {
  IntegerMatrix d, u, v, uinv;
  long rank = 0;  // number of nonzero diagonal entries
};

SnfResult smith_normal_form(const IntegerMatrix& m);

// The column span of a generator matrix, with exact membership and solving.
class Lattice {
 public:
  explicit Lattice(const IntegerMatrix& generators);

  long ambient_dim() const { return gens_.rows(); }
  long rank() const { return snf_.rank; }

  bool contains(const std::vector<Int>& x) const;
  // Some y with generators * y = x, if one exists.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& x) const;
  // Basis vectors (columns), rank() of them.
  IntegerMatrix basis() const;
  // Basis of the integer kernel {y : generators * y = 0}.
  IntegerMatrix kernel_basis() const;

 private:
  IntegerMatrix gens_;
  SnfResult snf_;
};

}  // namespace cyc
