#pragma once

#include <string>
#include <vector>

#include "rbs/link_cohomology.hpp"

namespace rbs {

enum class Relation { equal, less, greater, incomparable };

std::string to_string(Relation r);

struct Obstruction {
  Subset stratum;
  int hom_dim = 0;
};

// First extension group between two simple perverse objects: candidate
// dimension from the appropriate link degree, together with the vanishing
// obstructions collected at every stratum strictly below both endpoints.
// When certification fails the honest answer is the interval
// [value_lo, value_hi] = [0, candidate_dim].
struct ExtResult {
  SimpleObjectLabel source;
  SimpleObjectLabel target;
  Relation relation = Relation::incomparable;
  int candidate_dim = 0;
  std::vector<Obstruction> obstructions;
  bool certified = true;
  int value_lo = 0;
  int value_hi = 0;
};

// Dimension of Hom between the degree-deg_a part of a and the degree-deg_b
// part of b, as modules over the common Levi: sum over matching highest
// weights of the multiplicity products. The two lists must live on the same
// Levi stratum.
int hom_dim(const GradedModuleList& a, int deg_a, const GradedModuleList& b,
            int deg_b);

// Ext^1 between the simple objects attached to (T, lambda) and (T', lambda').
// Weights must be simultaneously numeric or share one symbol list.
ExtResult ext1(const RootSystem& R, const Perversity& p, const Subset& T,
               const Weight& lambda, const Subset& Tp, const Weight& lambdap);

// One family of extension partners: the target stratum, the weight condition
// tying the partner weight to the given one, and the full ext1 result for
// that parameterization.
struct ExtFamily {
  Subset target;
  std::string condition;
  ExtResult result;
};

// All strata T' and weight families lambda' with a nonzero Ext^1 candidate
// from (T, lambda). For partners below T the families are read off the link
// of (T, lambda); for partners above T the family is parameterized by a
// fresh dominant weight for T' (symbolic mode) or solved per Weyl label
// (numeric mode).
std::vector<ExtFamily> ext_partners(const RootSystem& R, const Perversity& p,
                                    const Subset& T, const Weight& lambda);

// Strata S strictly below T of odd codimension whose link carries a nonzero
// middle degree (codim-1)/2 + p(T): exactly the places where a middle
// self-extension obstruction can live.
std::vector<Subset> middle_self_extension_detector(const RootSystem& R,
                                                   const Perversity& p,
                                                   const Subset& T,
                                                   const Weight& lambda);

}  // namespace rbs
