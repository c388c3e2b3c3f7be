#include <vector>

#include "doctest.h"
#include "rbs/linalg.hpp"

using namespace rbs;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  QMatrix m(static_cast<int>(rows.size()),
            rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("matrix product and vector application") {
  const QMatrix a = from_rows({{1, 2}, {3, 4}});
  const QMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a * QMatrix::identity(2) == a);
  const auto y = a.apply({Rat(1), Rat(-1)});
  CHECK(y == std::vector<Rat>{Rat(-1), Rat(-1)});
}

TEST_CASE("rank of rational matrices") {
  CHECK(rank_of(QMatrix::identity(3)) == 3);
  CHECK(rank_of(QMatrix(2, 2)) == 0);
  CHECK(rank_of(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_of(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  QMatrix half(1, 1);
  half.at(0, 0) = Rat(1, 2);
  CHECK(rank_of(half) == 1);
}

TEST_CASE("inverse of an invertible matrix") {
  const QMatrix a = from_rows({{2, 1}, {1, 1}});
  CHECK(a * inverse(a) == QMatrix::identity(2));
  CHECK(inverse(a) * a == QMatrix::identity(2));
}

TEST_CASE("left null basis spans the cokernel") {
  const QMatrix m = from_rows({{1, 2}, {2, 4}, {0, 1}});
  const QMatrix nb = left_null_basis(m);
  CHECK(nb.rows() == m.rows() - rank_of(m));
  CHECK(nb.cols() == m.rows());
  for (int r = 0; r < nb.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      Rat dot = 0;
      for (int k = 0; k < m.rows(); ++k) dot += nb.at(r, k) * m.at(k, c);
      CHECK(dot == 0);
    }
  // The rows must themselves be independent.
  CHECK(rank_of(nb) == nb.rows());
  // Zero map: every row direction survives.
  CHECK(left_null_basis(QMatrix(3, 2)).rows() == 3);
}

TEST_CASE("right inverse of a surjective map") {
  const QMatrix m = from_rows({{1, 2, 0}, {0, 1, 1}});
  const QMatrix s = right_inverse(m);
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 2);
  CHECK(m * s == QMatrix::identity(2));
}
