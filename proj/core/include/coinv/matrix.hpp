#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "coinv/field.hpp"
#include "coinv/rational.hpp"

namespace coinv {

// Sparse exact matrix: at most one entry per cell, zero entries dropped.
// Entries are stored as exact rationals; over a prime field they are read
// through reduction mod p at elimination time.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Accumulates into the cell, dropping it if the sum cancels to zero.
  void add(int r, int c, const Rat& v);
  void set(int r, int c, const Rat& v);
  Rat at(int r, int c) const;  // zero when absent

  const std::map<std::pair<int, int>, Rat>& cells() const { return cells_; }
  std::size_t nonzeros() const { return cells_.size(); }

  ExactMatrix transpose() const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;  // M x

 private:
  void check(int r, int c) const;
  int rows_;
  int cols_;
  std::map<std::pair<int, int>, Rat> cells_;
};

// Exact rank. Over the rationals the generic path is fraction-free (Bareiss)
// elimination on a denominator-cleared integer matrix; a full-rank result
// certified mod p short-circuits it (a nonzero minor mod p is nonzero over Q).
// Over F_p, plain modular elimination.
long long rank(const ExactMatrix& m, const Field& f);

// Basis of the right null space, each vector normalized so that its first
// nonzero coordinate is 1. Deterministic: columns are eliminated left to
// right, pivoting on the first nonzero row.
std::vector<std::vector<Rat>> kernel_basis(const ExactMatrix& m, const Field& f);

}  // namespace coinv
