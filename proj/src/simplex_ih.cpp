#include "rbs/simplex_ih.hpp"

#include <algorithm>

#include "rbs/errors.hpp"
#include "rbs/linalg.hpp"

namespace rbs {

namespace {

bool face_leq(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Bounded complex of elementary injective sheaves on the face poset. Each
// scalar basis coordinate in degree n carries a face label q (the summand
// I_q, constant on the closure of q). A differential entry from a degree-n
// coordinate labeled p to a degree-(n+1) coordinate labeled q can be nonzero
// only when q <= p: maps of elementary injectives exist only toward smaller
// labels.
struct InjComplex {
  std::vector<std::vector<Face>> labels;  // labels[n][i], n = 0..top
  std::vector<QMatrix> d;  // d[n] : degree n -> n+1; rows = dim(n+1)

  int top() const { return static_cast<int>(labels.size()) - 1; }
  int dim(int n) const {
    return (n < 0 || n > top()) ? 0 : static_cast<int>(labels[n].size());
  }
};

void validate(const InjComplex& J) {
  for (int n = 0; n + 1 <= J.top(); ++n) {
    check_internal(J.d[n].rows() == J.dim(n + 1) && J.d[n].cols() == J.dim(n),
                   "differential shape mismatch");
    for (int r = 0; r < J.d[n].rows(); ++r)
      for (int c = 0; c < J.d[n].cols(); ++c)
        if (J.d[n].at(r, c) != 0)
          check_internal(face_leq(J.labels[n + 1][r], J.labels[n][c]),
                         "differential entry violates the label order");
    if (n + 2 <= J.top()) {
      QMatrix sq = J.d[n + 1] * J.d[n];
      for (int r = 0; r < sq.rows(); ++r)
        for (int c = 0; c < sq.cols(); ++c)
          check_internal(sq.at(r, c) == 0, "differential does not square to 0");
    }
  }
}

// Remove a contractible pair: coordinates (n, c) and (n+1, r) with equal
// labels and a unit entry between them. The Schur complement stays within
// the label order; adjacent differentials only lose the row/column.
void cancel_units(InjComplex& J) {
  bool again = true;
  while (again) {
    again = false;
    for (int n = 0; n + 1 <= J.top() && !again; ++n) {
      QMatrix& D = J.d[n];
      for (int r = 0; r < D.rows() && !again; ++r)
        for (int c = 0; c < D.cols() && !again; ++c) {
          if (D.at(r, c) == 0) continue;
          if (!(J.labels[n][c] == J.labels[n + 1][r])) continue;
          Rat pivot = D.at(r, c);
          // d' = e - b m^{-1} c on the remaining coordinates.
          for (int r2 = 0; r2 < D.rows(); ++r2) {
            if (r2 == r || D.at(r2, c) == 0) continue;
            Rat f = D.at(r2, c) / pivot;
            for (int c2 = 0; c2 < D.cols(); ++c2) {
              if (c2 == c || D.at(r, c2) == 0) continue;
              D.at(r2, c2) -= f * D.at(r, c2);
            }
          }
          // Drop column c of degree n and row r of degree n+1.
          auto drop_col = [](const QMatrix& m, int col) {
            QMatrix out(m.rows(), m.cols() - 1);
            for (int i = 0; i < m.rows(); ++i)
              for (int j = 0, k = 0; j < m.cols(); ++j) {
                if (j == col) continue;
                out.at(i, k++) = m.at(i, j);
              }
            return out;
          };
          auto drop_row = [](const QMatrix& m, int row) {
            QMatrix out(m.rows() - 1, m.cols());
            for (int i = 0, k = 0; i < m.rows(); ++i) {
              if (i == row) continue;
              for (int j = 0; j < m.cols(); ++j) out.at(k, j) = m.at(i, j);
              ++k;
            }
            return out;
          };
          QMatrix nd = drop_row(drop_col(D, c), r);
          J.d[n] = nd;
          if (n - 1 >= 0) J.d[n - 1] = drop_row(J.d[n - 1], c);
          if (n + 1 < J.top()) J.d[n + 1] = drop_col(J.d[n + 1], r);
          J.labels[n].erase(J.labels[n].begin() + c);
          J.labels[n + 1].erase(J.labels[n + 1].begin() + r);
          again = true;
        }
    }
  }
  // Trim empty top degrees.
  while (!J.labels.empty() && J.labels.back().empty()) {
    J.labels.pop_back();
    if (!J.d.empty()) J.d.pop_back();
  }
}

// Indices of the coordinates whose label contains sigma, per degree: the
// stalk of the complex at the face sigma.
std::vector<std::vector<int>> stalk_indices(const InjComplex& J,
                                            const Face& sigma) {
  std::vector<std::vector<int>> idx(J.top() + 1);
  for (int n = 0; n <= J.top(); ++n)
    for (int i = 0; i < J.dim(n); ++i)
      if (face_leq(sigma, J.labels[n][i])) idx[n].push_back(i);
  return idx;
}

QMatrix submatrix(const QMatrix& m, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  QMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return out;
}

// One Deligne attachment step: present the pushforward to the poset enlarged
// by sigma (a relabeling no-op for elementary injectives), then replace the
// stalk at sigma by its truncation below cutoff. Implemented as the fiber of
// the evident map J -> I_sigma(tau_{> cutoff} J(sigma)).
void deligne_step(InjComplex& J, const Face& sigma, int cutoff) {
  std::vector<std::vector<int>> idx = stalk_indices(J, sigma);
  int topC = -1;
  for (int n = 0; n <= J.top(); ++n)
    if (!idx[n].empty()) topC = n;
  int m = std::max(cutoff + 1, 0);  // lowest surviving stalk degree
  if (topC < m) return;             // truncation removes nothing

  // Stalk complex C and its truncation Q = tau_{>= m} C (as a quotient in
  // degree m, identity above). pi[n] maps C^n onto Q^n.
  std::vector<QMatrix> C(topC + 1);  // C[n] : stalk differential n -> n+1
  for (int n = 0; n < topC; ++n)
    C[n] = submatrix(J.d[n], idx[n + 1], idx[n]);
  std::vector<QMatrix> pi(topC + 1), dQ(topC + 1);
  std::vector<int> qdim(topC + 1, 0);
  for (int n = m; n <= topC; ++n) {
    int cn = static_cast<int>(idx[n].size());
    if (n == m && m - 1 >= 0 && m - 1 <= topC && !idx[m - 1].empty()) {
      pi[n] = left_null_basis(C[m - 1]);
      check_internal(pi[n].cols() == cn, "truncation quotient shape");
    } else {
      pi[n] = QMatrix::identity(cn);
    }
    qdim[n] = pi[n].rows();
  }
  for (int n = m; n < topC; ++n) {
    if (n == m && pi[n].rows() != pi[n].cols()) {
      // Induced differential on the quotient: dQ * pi = pi_{n+1} * C[n].
      QMatrix s = right_inverse(pi[n]);
      dQ[n] = pi[n + 1] * C[n] * s;
    } else {
      dQ[n] = pi[n + 1] * C[n];
    }
  }

  // Fib(f)^n = J^n + Q^{n-1}; d(a, b) = (d a, f(a) - dQ b).
  InjComplex out;
  int newtop = std::max(J.top(), topC + 1);
  out.labels.resize(newtop + 1);
  for (int n = 0; n <= newtop; ++n) {
    if (n <= J.top()) out.labels[n] = J.labels[n];
    int qn = (n - 1 >= m && n - 1 <= topC) ? qdim[n - 1] : 0;
    for (int k = 0; k < qn; ++k) out.labels[n].push_back(sigma);
  }
  out.d.resize(newtop);
  for (int n = 0; n < newtop; ++n) {
    int rows = static_cast<int>(out.labels[n + 1].size());
    int cols = static_cast<int>(out.labels[n].size());
    QMatrix D(rows, cols);
    int jrows = (n + 1 <= J.top()) ? J.dim(n + 1) : 0;
    int jcols = (n <= J.top()) ? J.dim(n) : 0;
    if (n < J.top())
      for (int r = 0; r < jrows; ++r)
        for (int c = 0; c < jcols; ++c) D.at(r, c) = J.d[n].at(r, c);
    // f^n : J^n -> Q^n (project to the stalk coordinates, then pi).
    if (n >= m && n <= topC)
      for (int r = 0; r < qdim[n]; ++r)
        for (size_t k = 0; k < idx[n].size(); ++k) {
          const Rat& v = pi[n].at(r, static_cast<int>(k));
          if (v != 0) D.at(jrows + r, idx[n][k]) = v;
        }
    // -dQ^{n-1} : Q^{n-1} -> Q^n.
    if (n - 1 >= m && n - 1 < topC)
      for (int r = 0; r < qdim[n]; ++r)
        for (int c = 0; c < qdim[n - 1]; ++c) {
          const Rat& v = dQ[n - 1].at(r, c);
          if (v != 0) D.at(jrows + r, jcols + c) = -v;
        }
    out.d[n] = std::move(D);
  }
  J = std::move(out);
  cancel_units(J);
  validate(J);
}

std::vector<Face> proper_faces(const StratifiedSimplex& sx) {
  std::vector<Face> out;
  for (const auto& [f, pv] : sx.perversity) out.push_back(f);
  return out;
}

void validate_simplex(const StratifiedSimplex& sx) {
  require(sx.vertex_count >= 1, "simplex needs at least one vertex");
  require(sx.vertex_count <= 20, "simplex too large");
  int expected = (1 << sx.vertex_count) - 1;
  require(static_cast<int>(sx.strata.size()) == expected,
          "every nonempty vertex subset must carry a stratum");
  Face full;
  for (int v = 0; v < sx.vertex_count; ++v) full.push_back(v);
  for (const auto& [f, q] : sx.strata) {
    require(!f.empty() && std::is_sorted(f.begin(), f.end()) &&
                std::adjacent_find(f.begin(), f.end()) == f.end() &&
                f.front() >= 0 && f.back() < sx.vertex_count,
            "malformed face");
    if (f == full)
      require(!sx.perversity.count(f),
              "the dense stratum carries no perversity");
    else
      require(sx.perversity.count(f) != 0,
              "every proper face needs a perversity value");
  }
  require(sx.perversity.size() == sx.strata.size() - 1,
          "perversity map must cover exactly the proper faces");
}

}  // namespace

GradedRanks ih_simplex(const StratifiedSimplex& sx,
                       const std::vector<Face>* order) {
  validate_simplex(sx);

  std::vector<Face> faces;
  if (order) {
    faces = *order;
    std::vector<Face> want = proper_faces(sx), got = faces;
    std::sort(got.begin(), got.end());
    require(got == want,
            "order must be a permutation of the proper faces");
    for (size_t i = 0; i + 1 < faces.size(); ++i)
      require(faces[i].size() >= faces[i + 1].size(),
              "order must refine decreasing face dimension");
  } else {
    faces = proper_faces(sx);
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
  }

  // Start: constant sheaf in degree 0 on the open top face.
  InjComplex J;
  Face full;
  for (int v = 0; v < sx.vertex_count; ++v) full.push_back(v);
  J.labels.push_back({full});
  validate(J);

  for (const Face& f : faces) deligne_step(J, f, sx.perversity.at(f));

  // Global sections of a complex of elementary injectives: total complex of
  // the summand spaces with the same matrices.
  GradedRanks out;
  std::vector<int> rk(std::max(J.top(), 0) + 1, 0);
  for (int n = 0; n < J.top(); ++n) rk[n] = rank_of(J.d[n]);
  for (int n = 0; n <= J.top(); ++n) {
    int h = J.dim(n) - (n < J.top() ? rk[n] : 0) - (n > 0 ? rk[n - 1] : 0);
    check_internal(h >= 0, "negative cohomology rank");
    if (h > 0) {
      check_internal(0 <= n && n <= sx.vertex_count - 1,
                     "cohomology degree out of range");
      out.ranks[n] = h;
    }
  }
  return out;
}

GradedRanks ih_simplex_depth2(int pv1, int pv2) {
  GradedRanks g;
  if (pv1 >= 0 && pv2 >= 0)
    g.ranks[0] = 1;
  else if (pv1 < 0 && pv2 < 0)
    g.ranks[1] = 1;
  return g;
}

}  // namespace rbs
