#pragma once

#include <string>
#include <vector>

#include "rbs/kostant.hpp"
#include "rbs/simplex_ih.hpp"
#include "rbs/strata.hpp"

namespace rbs {

// Multiset of (degree, highest weight, multiplicity) entries describing a
// graded Levi module; entries with equal degree and weight are merged and
// the list is kept sorted by (degree, weight).
struct GradedEntry {
  int degree = 0;
  Weight weight;
  int multiplicity = 0;
};

struct GradedModuleList {
  std::vector<GradedEntry> entries;
  Subset levi;
};

void add_entry(GradedModuleList& list, int degree, const Weight& w, int mult);
int multiplicity_at(const GradedModuleList& list, int degree, const Weight& w);
std::vector<GradedEntry> entries_at(const GradedModuleList& list, int degree);

// A simple perverse object: the stratum it is attached to, the highest
// weight of its coefficient system, and the perversity used to build it.
struct SimpleObjectLabel {
  Subset stratum;
  Weight weight;
  PerversityKind perversity_kind = PerversityKind::minus;
};

// Link cohomology of the simple object attached to (T, lambda) along the
// smaller stratum S: for each w in W_S^T the stratified-simplex engine runs
// on the link simplex with perversities pbar_{T,w}, contributing entries in
// degree ell(w) + p(T) + j with weight w(lambda + rho^T) - rho^T.
// Requires S strictly below T and lambda T-dominant.
GradedModuleList link_cohomology(const RootSystem& R, const Perversity& p,
                                 const Subset& S, const Subset& T,
                                 const Weight& lambda);

// Stalk cohomology H^k(i_S^*): link degrees k < p(S); at S = T the single
// entry (p(T), lambda); empty when S is not below T.
GradedModuleList local_star(const RootSystem& R, const Perversity& p,
                            const Subset& S, const Subset& T,
                            const Weight& lambda);

// Costalk cohomology H^k(i_S^!): link degree k contributes in degree k + 1
// when k + 1 > p(S); at S = T the single entry (p(T), lambda); empty when S
// is not below T.
GradedModuleList local_shriek(const RootSystem& R, const Perversity& p,
                              const Subset& S, const Subset& T,
                              const Weight& lambda);

struct PerverseCheck {
  bool ok = true;
  struct Violation {
    Subset stratum;
    std::string kind;  // "star" or "shriek"
    int degree = 0;    // shifted degree that broke the bound
  };
  std::vector<Violation> violations;
};

// Does the simple object built with perversity q on stratum T, shifted by
// q(T) - p(T), satisfy the p-perverse bounds (stalk degrees <= p(S), costalk
// degrees >= p(S)) at every stratum?
PerverseCheck check_perverse_conditions(const RootSystem& R,
                                        const Perversity& p,
                                        const Perversity& q, const Subset& T,
                                        const Weight& lambda);

}  // namespace rbs
