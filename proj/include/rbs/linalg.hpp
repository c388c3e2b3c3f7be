#pragma once

#include <vector>

#include "rbs/numbers.hpp"

namespace rbs {

// Dense matrix over Q. Row-major; acts on column vectors (y = M x).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  QMatrix operator*(const QMatrix& o) const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  bool operator==(const QMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

int rank_of(QMatrix m);

// Rows form a basis of { y : y^T m = 0 }; result has m.rows() - rank(m) rows.
QMatrix left_null_basis(const QMatrix& m);

// For m with full row rank, a section s with m * s = identity.
QMatrix right_inverse(const QMatrix& m);

// Inverse of a square invertible matrix.
QMatrix inverse(const QMatrix& m);

}  // namespace rbs
