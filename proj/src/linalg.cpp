#include "rbs/linalg.hpp"

#include "rbs/errors.hpp"

namespace rbs {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  check_internal(cols_ == o.rows_, "matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& x) const {
  check_internal(static_cast<int>(x.size()) == cols_,
                 "matrix apply shape mismatch");
  std::vector<Rat> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
  return y;
}

namespace {

// Row-reduce m in place; returns the pivot columns. aug counts trailing
// columns excluded from pivot selection (augmented part).
std::vector<int> row_reduce(QMatrix& m, int aug = 0) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() - aug && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = m.at(row, col);
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(row, c) != 0) m.at(row, c) /= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c)
        if (m.at(row, c) != 0) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_of(QMatrix m) { return static_cast<int>(row_reduce(m).size()); }

QMatrix left_null_basis(const QMatrix& m) {
  // Reduce [m | I]; rows whose m-part vanished carry the null combinations.
  QMatrix aug(m.rows(), m.cols() + m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols() + r) = 1;
  }
  int rank = static_cast<int>(row_reduce(aug, m.rows()).size());
  QMatrix out(m.rows() - rank, m.rows());
  for (int r = rank; r < m.rows(); ++r)
    for (int c = 0; c < m.rows(); ++c)
      out.at(r - rank, c) = aug.at(r, m.cols() + c);
  return out;
}

QMatrix right_inverse(const QMatrix& m) {
  QMatrix aug(m.rows(), m.cols() + m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols() + r) = 1;
  }
  std::vector<int> pivots = row_reduce(aug, m.rows());
  check_internal(static_cast<int>(pivots.size()) == m.rows(),
                 "right_inverse needs full row rank");
  QMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.rows(); ++c)
      out.at(pivots[r], c) = aug.at(r, m.cols() + c);
  return out;
}

QMatrix inverse(const QMatrix& m) {
  check_internal(m.rows() == m.cols(), "inverse needs a square matrix");
  QMatrix out = right_inverse(m);
  check_internal(out.rows() == m.cols() && out.cols() == m.rows(),
                 "inverse shape");
  return out;
}

}  // namespace rbs
