#pragma once

#include <string>
#include <vector>

#include "rbs/root_system.hpp"
#include "rbs/weights.hpp"

namespace rbs {

// Weyl group element. Canonical data is the action on fundamental-weight
// coordinates; the stored word is the (length, lex)-minimal reduced word.
struct WeylElement {
  std::vector<int> reduced_word;  // 0-based simple reflection indices
  int length = 0;
  QMatrix action;  // rank x rank integer matrix on fw coordinates
};

// "e" or e.g. "s2s1" (1-based generator names).
std::string word_string(const WeylElement& w);

// Matrix of the simple reflection s_i on fw coordinates.
QMatrix simple_reflection_matrix(const RootSystem& R, int i);

// reflect(R, i, mu) = mu - <mu, alpha_i^vee> alpha_i.
Weight reflect(const RootSystem& R, int i, const Weight& mu);

WeylElement weyl_identity(const RootSystem& R);
WeylElement compose(const RootSystem& R, const WeylElement& a,
                    const WeylElement& b);
WeylElement inverse_of(const RootSystem& R, const WeylElement& w);

// Number of positive roots sent to negative roots by the action.
int inversion_count(const RootSystem& R, const QMatrix& action);

// All of W, sorted by (length, lex word); each with its canonical word.
std::vector<WeylElement> weyl_elements(const RootSystem& R);

// Minimal coset representatives W_I^J = { w in W(J) : w^{-1} alpha_i > 0 for
// all i in I }, sorted by (length, lex word). Requires I subset of J.
std::vector<WeylElement> min_coset_reps(const RootSystem& R,
                                        const std::vector<int>& I,
                                        const std::vector<int>& J);

struct Decomposition {
  WeylElement upper;  // in W_I^K
  WeylElement lower;  // in W_K^J
};

// For w in W_I^J and I subset K subset J, the unique factorization
// w = upper * lower with upper in W_I^K, lower in W_K^J and additive
// lengths. Rejects w that is not a minimal representative for (I, J).
// Defaults: I = {}, J = all simple roots.
Decomposition decompose_at(const RootSystem& R, const WeylElement& w,
                           const std::vector<int>& K);
Decomposition decompose_at(const RootSystem& R, const WeylElement& w,
                           const std::vector<int>& K,
                           const std::vector<int>& I,
                           const std::vector<int>& J);

}  // namespace rbs
