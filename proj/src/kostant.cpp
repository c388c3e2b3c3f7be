#include "rbs/kostant.hpp"

#include <algorithm>

#include "rbs/errors.hpp"

namespace rbs {

Weight rho_levi(const RootSystem& R, const Subset& J) {
  std::vector<Rat> fw(R.rank);
  for (int idx : positive_roots_of_subset(R, J))
    for (int i = 0; i < R.rank; ++i)
      fw[i] += Rat(R.positive_roots[idx].fw[i], 2);
  return Weight::numeric(std::move(fw));
}

bool is_dominant(const RootSystem& R, const Subset& J, const Weight& mu) {
  require(mu.rank() == R.rank, "weight rank mismatch");
  for (int j : J) {
    require(0 <= j && j < R.rank, "simple root index out of range");
    if (!form_nonneg(mu.coords[j], mu.symbols)) return false;
  }
  return true;
}

std::vector<KostantModule> kostant_modules(const RootSystem& R,
                                           const Subset& S, const Subset& T,
                                           const Weight& lambda) {
  require(std::includes(T.begin(), T.end(), S.begin(), S.end()),
          "kostant_modules requires S <= T");
  require(is_integral(lambda), "highest weight must be integral");
  require(is_dominant(R, T, lambda),
          "highest weight must be dominant for the larger stratum");

  std::vector<Rat> rhoT = rho_levi(R, T).numeric_coords();
  Weight shifted = add_numeric(lambda, rhoT);

  int degree_bound =
      static_cast<int>(positive_roots_of_subset(R, T).size()) -
      static_cast<int>(positive_roots_of_subset(R, S).size());

  std::vector<KostantModule> out;
  for (const WeylElement& w : min_coset_reps(R, S, T)) {
    KostantModule m;
    m.w = w;
    m.degree = w.length;
    m.weight = sub_numeric(apply_matrix(w.action, shifted), rhoT);
    m.levi = S;
    check_internal(m.degree >= 0 && m.degree <= degree_bound,
                   "Kostant degree out of range");
    check_internal(is_integral(m.weight), "Kostant weight not integral");
    check_internal(is_dominant(R, S, m.weight),
                   "Kostant weight not Levi-dominant");
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const KostantModule& a, const KostantModule& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.w.reduced_word < b.w.reduced_word;
            });
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      check_internal(!weight_equal(out[i].weight, out[j].weight),
                     "Kostant weights must be pairwise distinct");
  return out;
}

Int weyl_dim(const RootSystem& R, const Subset& J, const Weight& mu) {
  require(mu.is_numeric(),
          "weyl_dim requires a numeric weight (symbolic input rejected)");
  require(is_dominant(R, J, mu), "weyl_dim requires a J-dominant weight");
  std::vector<Rat> v = mu.numeric_coords();
  std::vector<Rat> rhoJ = rho_levi(R, J).numeric_coords();
  Rat num = 1, den = 1;
  for (int idx : positive_roots_of_subset(R, J)) {
    const auto& d = R.positive_roots[idx].coroot_on_simple_coroots;
    Rat a = 0, b = 0;
    for (int i = 0; i < R.rank; ++i) {
      if (d[i] == 0) continue;
      a += Rat(d[i]) * (v[i] + rhoJ[i]);
      b += Rat(d[i]) * rhoJ[i];
    }
    num *= a;
    den *= b;
  }
  Rat dim = num / den;
  check_internal(is_integer(dim) && dim > 0, "weyl_dim must be a positive integer");
  return as_integer(dim);
}

}  // namespace rbs
