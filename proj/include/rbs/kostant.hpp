#pragma once

#include <vector>

#include "rbs/strata.hpp"
#include "rbs/weights.hpp"
#include "rbs/weyl.hpp"

namespace rbs {

// One irreducible Levi constituent of nilradical cohomology: degree ell(w),
// highest weight w(lambda + rho^T) - rho^T, a representation of the Levi
// attached to S.
struct KostantModule {
  WeylElement w;
  int degree = 0;
  Weight weight;
  Subset levi;
};

// Half sum of the positive roots of the J-subsystem, in fw coordinates
// (rational in general).
Weight rho_levi(const RootSystem& R, const Subset& J);

// Coordinates in J are >= 0 for every admissible symbol value.
bool is_dominant(const RootSystem& R, const Subset& J, const Weight& mu);

// The modules for the pair S <= T at T-dominant integral lambda, sorted by
// (degree, word). One module per w in W_S^T; weights are pairwise distinct.
std::vector<KostantModule> kostant_modules(const RootSystem& R,
                                           const Subset& S, const Subset& T,
                                           const Weight& lambda);

// Dimension of the irreducible J-representation with highest weight mu
// (numeric mu only; the central coordinates outside J do not contribute).
Int weyl_dim(const RootSystem& R, const Subset& J, const Weight& mu);

}  // namespace rbs
