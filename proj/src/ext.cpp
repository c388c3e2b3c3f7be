#include "rbs/ext.hpp"

#include <algorithm>

#include "rbs/errors.hpp"

namespace rbs {

namespace {

bool contained(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void validate_object(const RootSystem& R, const Subset& T,
                     const Weight& lambda) {
  require(is_integral(lambda), "highest weight must be integral");
  require(is_dominant(R, T, lambda),
          "highest weight must be dominant for the Levi of stratum " +
              StratumId{T}.literal(R.rank));
}

bool same_parameterization(const Weight& a, const Weight& b) {
  return a.symbols == b.symbols;
}

// Proper subsets of `lower`, deepest strata first (dimension descending,
// then lexicographic). The order is cosmetic: each obstruction is a
// standalone Hom computation.
std::vector<Subset> obstruction_strata(const RootSystem& R,
                                       const Perversity& p,
                                       const Subset& lower) {
  std::vector<Subset> out;
  for (const auto& S : all_subsets(R.rank))
    if (S != lower && contained(S, lower)) out.push_back(S);
  std::sort(out.begin(), out.end(), [&](const Subset& a, const Subset& b) {
    const int da = p.dim_at(a), db = p.dim_at(b);
    if (da != db) return da > db;
    return a < b;
  });
  return out;
}

std::string word_condition(const std::string& lhs, const WeylElement& w,
                           const std::string& rhs) {
  if (w.length == 0) return lhs + " = " + rhs;
  return lhs + " = " + word_string(w) + "(" + rhs + "+rho)-rho";
}

// A fresh dominant symbolic weight for the Levi of Tp, with symbol names
// derived from the base weight's names by priming.
Weight primed_dominant_weight(const RootSystem& R, const Subset& Tp,
                              const Weight& base) {
  Weight out;
  const int n = R.rank;
  out.symbols.resize(n);
  out.coords.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string name = i < static_cast<int>(base.symbols.size())
                           ? base.symbols[i].name
                           : "x" + std::to_string(i + 1);
    out.symbols[i] = {name + "'",
                      std::binary_search(Tp.begin(), Tp.end(), i)};
    LinForm f;
    f.constant = 0;
    f.coeffs.assign(n, Rat(0));
    f.coeffs[i] = 1;
    out.coords[i] = std::move(f);
  }
  return out;
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equal:
      return "equal";
    case Relation::less:
      return "less";
    case Relation::greater:
      return "greater";
    case Relation::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

int hom_dim(const GradedModuleList& a, int deg_a, const GradedModuleList& b,
            int deg_b) {
  require(a.levi == b.levi,
          "hom_dim needs graded modules over the same Levi stratum");
  int total = 0;
  for (const auto& ea : a.entries) {
    if (ea.degree != deg_a) continue;
    for (const auto& eb : b.entries) {
      if (eb.degree != deg_b) continue;
      if (weight_equal(ea.weight, eb.weight))
        total += ea.multiplicity * eb.multiplicity;
    }
  }
  return total;
}

ExtResult ext1(const RootSystem& R, const Perversity& p, const Subset& T,
               const Weight& lambda, const Subset& Tp, const Weight& lambdap) {
  require(same_parameterization(lambda, lambdap),
          "the two weights must be numeric together or share one symbol list");
  validate_object(R, T, lambda);
  validate_object(R, Tp, lambdap);

  ExtResult out;
  out.source = {T, lambda, p.kind};
  out.target = {Tp, lambdap, p.kind};
  if (T == Tp)
    out.relation = Relation::equal;
  else if (contained(T, Tp))
    out.relation = Relation::less;
  else if (contained(Tp, T))
    out.relation = Relation::greater;
  else
    out.relation = Relation::incomparable;

  if (out.relation == Relation::equal ||
      out.relation == Relation::incomparable) {
    out.candidate_dim = 0;
    out.certified = true;
    out.value_lo = out.value_hi = 0;
    return out;
  }

  if (out.relation == Relation::less) {
    const auto link = link_cohomology(R, p, T, Tp, lambdap);
    out.candidate_dim = multiplicity_at(link, p.at(T), lambda);
  } else {
    const auto link = link_cohomology(R, p, Tp, T, lambda);
    out.candidate_dim = multiplicity_at(link, p.at(Tp) - 1, lambdap);
  }

  const Subset& lower = out.relation == Relation::less ? T : Tp;
  bool all_zero = true;
  for (const auto& S : obstruction_strata(R, p, lower)) {
    const auto src = link_cohomology(R, p, S, T, lambda);
    const auto tgt = link_cohomology(R, p, S, Tp, lambdap);
    const int h = hom_dim(src, p.at(S) - 1, tgt, p.at(S));
    out.obstructions.push_back({S, h});
    all_zero = all_zero && h == 0;
  }
  out.certified = out.candidate_dim == 0 || all_zero;
  out.value_lo = out.certified ? out.candidate_dim : 0;
  out.value_hi = out.candidate_dim;
  return out;
}

std::vector<ExtFamily> ext_partners(const RootSystem& R, const Perversity& p,
                                    const Subset& T, const Weight& lambda) {
  validate_object(R, T, lambda);
  std::vector<ExtFamily> out;
  for (const auto& Tp : all_subsets(R.rank)) {
    if (Tp == T) continue;
    if (contained(Tp, T)) {
      // Partners strictly below T: candidate weights are the link entries
      // of (T, lambda) along Tp in degree p(Tp) - 1, one family per Weyl
      // label (the weights are pairwise distinct).
      const auto link = link_cohomology(R, p, Tp, T, lambda);
      for (const auto& km : kostant_modules(R, Tp, T, lambda)) {
        if (multiplicity_at(link, p.at(Tp) - 1, km.weight) == 0) continue;
        ExtFamily fam;
        fam.target = Tp;
        fam.condition = lambda.is_numeric()
                            ? "lambda' = " + to_string(km.weight)
                            : word_condition("lambda'", km.w, "lambda");
        fam.result = ext1(R, p, T, lambda, Tp, km.weight);
        if (fam.result.candidate_dim > 0) out.push_back(std::move(fam));
      }
    } else if (contained(T, Tp)) {
      if (lambda.is_numeric()) {
        // Solve w(lambda' + rho^{Tp}) - rho^{Tp} = lambda per Weyl label and
        // keep the dominant integral solutions.
        const auto rho = rho_levi(R, Tp).numeric_coords();
        for (const auto& w : min_coset_reps(R, T, Tp)) {
          const auto winv = inverse_of(R, w);
          const Weight cand = sub_numeric(
              apply_matrix(winv.action, add_numeric(lambda, rho)), rho);
          if (!is_integral(cand) || !is_dominant(R, Tp, cand)) continue;
          ExtFamily fam;
          fam.target = Tp;
          fam.condition = "lambda' = " + to_string(cand);
          fam.result = ext1(R, p, T, lambda, Tp, cand);
          if (fam.result.candidate_dim > 0) out.push_back(std::move(fam));
        }
      } else {
        // Re-parameterize over a fresh dominant weight for Tp; the source
        // weight is then pinned by the Weyl label.
        const Weight lp = primed_dominant_weight(R, Tp, lambda);
        const auto rho = rho_levi(R, Tp).numeric_coords();
        for (const auto& w : min_coset_reps(R, T, Tp)) {
          const Weight mu =
              sub_numeric(apply_matrix(w.action, add_numeric(lp, rho)), rho);
          if (!is_dominant(R, T, mu)) continue;
          ExtFamily fam;
          fam.target = Tp;
          fam.condition = word_condition("lambda", w, "lambda'");
          fam.result = ext1(R, p, T, mu, Tp, lp);
          if (fam.result.candidate_dim > 0) out.push_back(std::move(fam));
        }
      }
    }
  }
  return out;
}

std::vector<Subset> middle_self_extension_detector(const RootSystem& R,
                                                   const Perversity& p,
                                                   const Subset& T,
                                                   const Weight& lambda) {
  validate_object(R, T, lambda);
  std::vector<Subset> out;
  for (const auto& S : all_subsets(R.rank)) {
    if (S == T || !contained(S, T)) continue;
    const int codim = p.dim_at(T) - p.dim_at(S);
    if (codim % 2 == 0) continue;
    const int k = (codim - 1) / 2 + p.at(T);
    const auto link = link_cohomology(R, p, S, T, lambda);
    bool nonzero = false;
    for (const auto& e : entries_at(link, k)) nonzero |= e.multiplicity > 0;
    if (nonzero) out.push_back(S);
  }
  return out;
}

}  // namespace rbs
