#include "rbs/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rbs/errors.hpp"

namespace rbs {

namespace {

std::vector<Rat> flatten(const QMatrix& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

std::vector<Rat> alpha_fw(const RootSystem& R, int i) {
  std::vector<Rat> v(R.rank);
  for (int r = 0; r < R.rank; ++r) v[r] = Rat(R.cartan[r][i]);
  return v;
}

// Sign of a root given by fw coordinates (must be a root).
bool fw_is_positive_root(const RootSystem& R, const std::vector<Rat>& v) {
  std::vector<Int> iv(v.size()), nv(v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    iv[k] = as_integer(v[k]);
    nv[k] = -iv[k];
  }
  if (R.positive_fw.count(iv)) return true;
  check_internal(R.positive_fw.count(nv) != 0,
                 "vector is not a root in sign test");
  return false;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Greedy left-descent descent produces the (length, lex)-minimal reduced word.
std::vector<int> canonical_word(const RootSystem& R, QMatrix m) {
  QMatrix inv = inverse(m);
  QMatrix id = QMatrix::identity(R.rank);
  std::vector<int> word;
  int guard = static_cast<int>(R.positive_roots.size()) + 1;
  while (!(m == id)) {
    check_internal(guard-- > 0, "canonical word descent did not terminate");
    int found = -1;
    for (int i = 0; i < R.rank; ++i) {
      if (!fw_is_positive_root(R, inv.apply(alpha_fw(R, i)))) {
        found = i;
        break;
      }
    }
    check_internal(found >= 0, "no left descent on a non-identity element");
    QMatrix s = simple_reflection_matrix(R, found);
    m = s * m;
    inv = inv * s;
    word.push_back(found);
  }
  return word;
}

WeylElement make_element(const RootSystem& R, QMatrix m) {
  WeylElement w;
  w.action = std::move(m);
  w.reduced_word = canonical_word(R, w.action);
  w.length = static_cast<int>(w.reduced_word.size());
  return w;
}

struct BfsNode {
  QMatrix m, inv;
  std::vector<int> word;
};

// Enumerate W(J) level by level; parents are visited in lex order of their
// canonical word and children in ascending generator order, so the first
// word found for an element is its (length, lex)-minimal reduced word.
std::vector<BfsNode> enumerate_subgroup(const RootSystem& R,
                                        const std::vector<int>& J) {
  std::vector<QMatrix> gens;
  for (int j : J) gens.push_back(simple_reflection_matrix(R, j));
  std::set<std::vector<Rat>> seen;
  std::vector<BfsNode> out;
  std::vector<BfsNode> level;
  QMatrix id = QMatrix::identity(R.rank);
  seen.insert(flatten(id));
  level.push_back({id, id, {}});
  while (!level.empty()) {
    for (const BfsNode& n : level) out.push_back(n);
    std::vector<BfsNode> next;
    for (const BfsNode& n : level) {
      for (size_t g = 0; g < J.size(); ++g) {
        QMatrix m2 = n.m * gens[g];
        auto key = flatten(m2);
        if (seen.count(key)) continue;
        seen.insert(key);
        BfsNode n2;
        n2.m = std::move(m2);
        n2.inv = gens[g] * n.inv;
        n2.word = n.word;
        n2.word.push_back(J[g]);
        next.push_back(std::move(n2));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const BfsNode& a, const BfsNode& b) { return a.word < b.word; });
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::string word_string(const WeylElement& w) {
  if (w.reduced_word.empty()) return "e";
  std::string s;
  for (int i : w.reduced_word) s += "s" + std::to_string(i + 1);
  return s;
}

QMatrix simple_reflection_matrix(const RootSystem& R, int i) {
  check_internal(0 <= i && i < R.rank, "generator index out of range");
  QMatrix m = QMatrix::identity(R.rank);
  for (int r = 0; r < R.rank; ++r) m.at(r, i) -= Rat(R.cartan[r][i]);
  return m;
}

Weight reflect(const RootSystem& R, int i, const Weight& mu) {
  require(0 <= i && i < R.rank, "reflection index out of range");
  require(mu.rank() == R.rank, "weight rank mismatch");
  return apply_matrix(simple_reflection_matrix(R, i), mu);
}

WeylElement weyl_identity(const RootSystem& R) {
  WeylElement w;
  w.action = QMatrix::identity(R.rank);
  return w;
}

WeylElement compose(const RootSystem& R, const WeylElement& a,
                    const WeylElement& b) {
  return make_element(R, a.action * b.action);
}

WeylElement inverse_of(const RootSystem& R, const WeylElement& w) {
  return make_element(R, inverse(w.action));
}

int inversion_count(const RootSystem& R, const QMatrix& action) {
  int count = 0;
  for (const auto& root : R.positive_roots) {
    std::vector<Rat> v(root.fw.size());
    for (size_t k = 0; k < root.fw.size(); ++k) v[k] = Rat(root.fw[k]);
    if (!fw_is_positive_root(R, action.apply(v))) ++count;
  }
  return count;
}

std::vector<WeylElement> weyl_elements(const RootSystem& R) {
  std::vector<int> all(R.rank);
  for (int i = 0; i < R.rank; ++i) all[i] = i;
  std::vector<WeylElement> out;
  for (const BfsNode& n : enumerate_subgroup(R, all)) {
    WeylElement w;
    w.action = n.m;
    w.reduced_word = n.word;
    w.length = static_cast<int>(n.word.size());
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<WeylElement> min_coset_reps(const RootSystem& R,
                                        const std::vector<int>& I,
                                        const std::vector<int>& J) {
  std::vector<int> Is = sorted_unique(I), Js = sorted_unique(J);
  for (int j : Js)
    require(0 <= j && j < R.rank, "simple root index out of range");
  require(is_subset(Is, Js),
          "min_coset_reps requires I to be a subset of J");
  std::vector<WeylElement> out;
  for (const BfsNode& n : enumerate_subgroup(R, Js)) {
    bool ok = true;
    for (int i : Is)
      if (!fw_is_positive_root(R, n.inv.apply(alpha_fw(R, i)))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    WeylElement w;
    w.action = n.m;
    w.reduced_word = n.word;
    w.length = static_cast<int>(n.word.size());
    out.push_back(std::move(w));
  }
  // BFS emits by level with lex-sorted words inside each level.
  return out;
}

Decomposition decompose_at(const RootSystem& R, const WeylElement& w,
                           const std::vector<int>& K) {
  std::vector<int> all(R.rank);
  for (int i = 0; i < R.rank; ++i) all[i] = i;
  return decompose_at(R, w, K, {}, all);
}

Decomposition decompose_at(const RootSystem& R, const WeylElement& w,
                           const std::vector<int>& K,
                           const std::vector<int>& I,
                           const std::vector<int>& J) {
  std::vector<int> Is = sorted_unique(I), Ks = sorted_unique(K),
                   Js = sorted_unique(J);
  require(is_subset(Is, Ks) && is_subset(Ks, Js),
          "decompose_at requires I subset K subset J");
  for (int j : Js)
    require(0 <= j && j < R.rank, "simple root index out of range");

  // Membership in W(J): the action must fix every varpi_i with i outside J.
  QMatrix inv = inverse(w.action);
  std::vector<bool> inJ(R.rank, false);
  for (int j : Js) inJ[j] = true;
  for (int i = 0; i < R.rank; ++i) {
    if (inJ[i]) continue;
    for (int r = 0; r < R.rank; ++r)
      require(w.action.at(r, i) == (r == i ? 1 : 0),
              "decompose_at: element does not lie in W(J)");
  }
  for (int i : Is)
    require(fw_is_positive_root(R, inv.apply(alpha_fw(R, i))),
            "decompose_at: element is not a minimal representative for (I, J)");

  // Sift to the minimal representative of the coset W(K) * w.
  QMatrix lower = w.action, lower_inv = inv;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k : Ks) {
      if (!fw_is_positive_root(R, lower_inv.apply(alpha_fw(R, k)))) {
        QMatrix s = simple_reflection_matrix(R, k);
        lower = s * lower;
        lower_inv = lower_inv * s;
        moved = true;
        break;
      }
    }
  }
  QMatrix upper = w.action * lower_inv;

  Decomposition d;
  d.lower = make_element(R, lower);
  d.upper = make_element(R, upper);

  // upper must lie in W(K) and be a minimal representative for (I, K).
  std::vector<bool> inK(R.rank, false);
  for (int k : Ks) inK[k] = true;
  for (int i = 0; i < R.rank; ++i) {
    if (inK[i]) continue;
    for (int r = 0; r < R.rank; ++r)
      check_internal(d.upper.action.at(r, i) == (r == i ? 1 : 0),
                     "decompose_at: upper factor escapes W(K)");
  }
  QMatrix upper_inv = inverse(d.upper.action);
  for (int i : Is)
    check_internal(fw_is_positive_root(R, upper_inv.apply(alpha_fw(R, i))),
                   "decompose_at: upper factor is not a minimal rep");
  check_internal(d.upper.length + d.lower.length == inversion_count(R, w.action),
                 "decompose_at: lengths are not additive");
  return d;
}

}  // namespace rbs
