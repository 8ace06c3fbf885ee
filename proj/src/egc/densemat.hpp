#ifndef EGC_DENSEMAT_HPP
#define EGC_DENSEMAT_HPP

// Dense exact matrices: arbitrary-precision integer entries (rationals are
// row-scaled to integers on the way in; rank and zero/nonzero determinant
// questions are unaffected).

#include "egc/bigint.hpp"
#include "egc/fp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace egc {

class DenseIntMat {
public:
  DenseIntMat() = default;
  DenseIntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const DenseIntMat& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  DenseIntMat transposed() const;

  // Fraction-free Gaussian elimination with per-row content removal;
  // exact rank over the rationals.
  int rank_exact() const;

  // Row-major reduction of every entry.
  std::vector<uint64_t> mod_p(uint64_t p) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

class DenseModMat {
public:
  DenseModMat(int rows, int cols, uint64_t p) : rows_(rows), cols_(cols), f_(p),
      a_(size_t(rows) * cols) {}
  DenseModMat(const DenseIntMat& m, uint64_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint64_t p() const { return f_.p(); }

  uint64_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  uint64_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const DenseModMat& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && p() == o.p() && a_ == o.a_;
  }

  int rank() const;

  // determinant != 0, decided by in-place elimination (square only)
  bool nonsingular() const;

  std::string to_csv() const;

private:
  int rows_, cols_;
  PrimeField f_;
  std::vector<uint64_t> a_;
};

// CSV format shared with the CLI: header "rows,cols,modulus" with 0 for
// exact integer entries, then one matrix row per line.
std::string dense_to_csv(const DenseIntMat& m);
DenseIntMat dense_from_csv(const std::string& text, long* modulus_out = nullptr);

} // namespace egc

#endif
