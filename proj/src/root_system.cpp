#include "rbs/root_system.hpp"

#include <algorithm>
#include <cctype>

#include "rbs/errors.hpp"
#include "rbs/linalg.hpp"

namespace rbs {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> axpy(const Rat& c, const std::vector<Rat>& x,
                      const std::vector<Rat>& y) {
  std::vector<Rat> r = y;
  for (size_t i = 0; i < r.size(); ++i) r[i] += c * x[i];
  return r;
}

// Euclidean simple roots of the classical families and G2, F4.
std::vector<std::vector<Rat>> euclidean_simple_roots(char family, int rank,
                                                     int& ambient) {
  std::vector<std::vector<Rat>> s;
  auto basis = [&](int dim, int i) {
    std::vector<Rat> v(dim);
    v[i] = 1;
    return v;
  };
  switch (family) {
    case 'A': {
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i) {
        std::vector<Rat> v(ambient);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        std::vector<Rat> v(ambient);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      if (family == 'B') {
        s.push_back(basis(ambient, rank - 1));
      } else if (family == 'C') {
        std::vector<Rat> v(ambient);
        v[rank - 1] = 2;
        s.push_back(v);
      } else {
        std::vector<Rat> v(ambient);
        v[rank - 2] = 1;
        v[rank - 1] = 1;
        s.push_back(v);
      }
      break;
    }
    case 'G': {
      ambient = 3;
      s.push_back({Rat(1), Rat(-1), Rat(0)});
      s.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
    case 'F': {
      ambient = 4;
      s.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
      s.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
      s.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
      s.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    default:
      check_internal(false, "unhandled family");
  }
  return s;
}

int expected_positive_count(char family, int rank) {
  switch (family) {
    case 'A':
      return rank * (rank + 1) / 2;
    case 'B':
    case 'C':
      return rank * rank;
    case 'D':
      return rank * (rank - 1);
    case 'G':
      return 6;
    case 'F':
      return 24;
  }
  return -1;
}

}  // namespace

RootSystem build_root_system(const std::string& type_label, int max_rank) {
  require(type_label.size() >= 2, "type label too short: '" + type_label +
                                      "' (expected e.g. A2, C2, G2)");
  char family = static_cast<char>(std::toupper(type_label[0]));
  for (size_t i = 1; i < type_label.size(); ++i)
    require(std::isdigit(type_label[i]) != 0,
            "malformed type label '" + type_label + "': rank must be numeric");
  int rank = std::stoi(type_label.substr(1));
  require(family != 'E',
          "type E" + std::to_string(rank) +
              " is not supported by this engine (A, B, C, D, G2, F4 only)");
  require(family == 'A' || family == 'B' || family == 'C' || family == 'D' ||
              family == 'G' || family == 'F',
          "unknown family '" + std::string(1, family) +
              "' (expected A, B, C, D, G or F)");
  require(rank >= 1, "rank must be positive in '" + type_label + "'");
  require(rank <= max_rank, "rank " + std::to_string(rank) +
                                " exceeds the configured ceiling " +
                                std::to_string(max_rank));
  if (family == 'A') require(rank >= 1, "A_n needs n >= 1");
  if (family == 'B' || family == 'C')
    require(rank >= 2, std::string(1, family) + "_n needs n >= 2");
  if (family == 'D') require(rank >= 3, "D_n needs n >= 3");
  if (family == 'G') require(rank == 2, "G family exists only as G2");
  if (family == 'F') require(rank == 4, "F family exists only as F4");

  RootSystem R;
  R.family = family;
  R.rank = rank;
  R.type_label = std::string(1, family) + std::to_string(rank);
  R.simple_roots = euclidean_simple_roots(family, rank, R.ambient);

  // Cartan matrix: cartan[i][j] = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i).
  R.cartan.assign(rank, std::vector<Int>(rank));
  for (int i = 0; i < rank; ++i) {
    Rat nii = dot(R.simple_roots[i], R.simple_roots[i]);
    for (int j = 0; j < rank; ++j) {
      Rat v = 2 * dot(R.simple_roots[j], R.simple_roots[i]) / nii;
      R.cartan[i][j] = as_integer(v);
    }
  }

  // Positive roots: reflection closure of the simple roots.
  std::set<std::vector<Rat>> all(R.simple_roots.begin(), R.simple_roots.end());
  for (const auto& a : R.simple_roots) {
    std::vector<Rat> neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    all.insert(neg);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Rat>> snapshot(all.begin(), all.end());
    for (const auto& v : snapshot)
      for (int i = 0; i < rank; ++i) {
        const auto& a = R.simple_roots[i];
        Rat c = -2 * dot(v, a) / dot(a, a);
        std::vector<Rat> w = axpy(c, a, v);
        if (all.insert(w).second) grew = true;
      }
  }

  // Expansion of each root in the simple-root basis (exact solve).
  QMatrix gram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      gram.at(i, j) = dot(R.simple_roots[i], R.simple_roots[j]);
  QMatrix gram_inv = inverse(gram);

  auto expand_on_simple = [&](const std::vector<Rat>& v) {
    std::vector<Rat> rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = dot(R.simple_roots[i], v);
    return gram_inv.apply(rhs);
  };

  for (const auto& v : all) {
    std::vector<Rat> c = expand_on_simple(v);
    bool nonneg = true, nonpos = true;
    for (const Rat& x : c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    check_internal(nonneg || nonpos, "root with mixed simple-root signs");
    if (!nonneg) continue;
    RootSystem::Root root;
    root.euclidean = v;
    for (const Rat& x : c) root.on_simple.push_back(as_integer(x));
    for (int i = 0; i < rank; ++i) {
      const auto& a = R.simple_roots[i];
      root.fw.push_back(as_integer(2 * dot(v, a) / dot(a, a)));
    }
    // Coroot 2v/(v,v) expanded in the simple coroots 2 alpha_j/(alpha_j,
    // alpha_j): with v = sum c_j alpha_j, the coroot coefficients are
    // c_j (alpha_j, alpha_j) / (v, v).
    Rat nv = dot(v, v);
    for (int j = 0; j < rank; ++j) {
      Rat cj = c[j] * dot(R.simple_roots[j], R.simple_roots[j]) / nv;
      root.coroot_on_simple_coroots.push_back(as_integer(cj));
    }
    R.positive_roots.push_back(root);
  }
  std::sort(R.positive_roots.begin(), R.positive_roots.end(),
            [](const RootSystem::Root& a, const RootSystem::Root& b) {
              return a.on_simple < b.on_simple;
            });
  check_internal(static_cast<int>(R.positive_roots.size()) ==
                     expected_positive_count(family, rank),
                 "positive root count mismatch for " + R.type_label);
  for (const auto& r : R.positive_roots) R.positive_fw.insert(r.fw);

  // Fundamental weights: column i of cartan^{-1} gives varpi_i on the
  // simple-root basis; realized inside the span of the roots.
  QMatrix cart(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cart.at(i, j) = Rat(R.cartan[i][j]);
  QMatrix cart_inv = inverse(cart);
  R.fundamental_weights.assign(rank, std::vector<Rat>(R.ambient));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int d = 0; d < R.ambient; ++d)
        R.fundamental_weights[i][d] +=
            cart_inv.at(j, i) * R.simple_roots[j][d];

  R.rho = Weight::numeric(std::vector<Rat>(rank, Rat(1)));

  // rho is the half sum of the positive roots: cross-check the pairings.
  std::vector<Rat> half_sum(R.ambient);
  for (const auto& r : R.positive_roots)
    for (int d = 0; d < R.ambient; ++d)
      half_sum[d] += r.euclidean[d] / 2;
  for (int i = 0; i < rank; ++i) {
    const auto& a = R.simple_roots[i];
    check_internal(2 * dot(half_sum, a) / dot(a, a) == 1,
                   "rho pairing sanity failed");
  }
  return R;
}

std::vector<int> positive_roots_of_subset(const RootSystem& R,
                                          const std::vector<int>& J) {
  std::vector<bool> in(R.rank, false);
  for (int j : J) {
    require(0 <= j && j < R.rank, "simple root index out of range");
    in[j] = true;
  }
  std::vector<int> out;
  for (size_t k = 0; k < R.positive_roots.size(); ++k) {
    bool ok = true;
    const auto& c = R.positive_roots[k].on_simple;
    for (int j = 0; j < R.rank; ++j)
      if (c[j] != 0 && !in[j]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<int>(k));
  }
  return out;
}

}  // namespace rbs
