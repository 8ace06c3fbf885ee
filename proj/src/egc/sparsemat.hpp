#ifndef EGC_SPARSEMAT_HPP
#define EGC_SPARSEMAT_HPP

// Sparse matrices over a prime field, stored as per-row (col, value)
// triplets with no explicit zeros.

#include "egc/fp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace egc {

class SparseModMat {
public:
  using Entry = std::pair<int32_t, uint64_t>;

  SparseModMat(int rows, int cols, uint64_t p) : rows_(rows), cols_(cols), f_(p), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint64_t p() const { return f_.p(); }
  const PrimeField& field() const { return f_; }

  // entries must be reduced; duplicate columns within a row are not allowed
  void set_row(int r, std::vector<Entry> entries);
  const std::vector<Entry>& row(int r) const { return data_[r]; }

  size_t nnz() const;

  // Exact rank. Column-connected components are eliminated independently;
  // within a component pivots are chosen Markowitz-style (shortest column,
  // then shortest row, ties by smallest index), so the pivot sequence is
  // deterministic.
  int rank() const;

  std::string to_csv() const;

private:
  int rows_, cols_;
  PrimeField f_;
  std::vector<std::vector<Entry>> data_;
};

} // namespace egc

#endif
