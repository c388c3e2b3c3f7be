#pragma once

#include <set>
#include <string>
#include <vector>

#include "rbs/numbers.hpp"
#include "rbs/weights.hpp"

namespace rbs {

// Split root system data, built from an explicit Euclidean realization.
// Working coordinates everywhere else are fundamental-weight coordinates:
// a weight v is stored as (<v, alpha_1^vee>, ..., <v, alpha_r^vee>).
struct RootSystem {
  std::string type_label;  // canonical form, e.g. "C2", "A3", "G2"
  char family = 0;         // 'A'..'G'
  int rank = 0;
  int ambient = 0;  // dimension of the Euclidean realization

  std::vector<std::vector<Rat>> simple_roots;  // rank x ambient

  // cartan[i][j] = <alpha_j, alpha_i^vee>; column j = alpha_j in fw coords.
  std::vector<std::vector<Int>> cartan;

  struct Root {
    std::vector<Rat> euclidean;
    std::vector<Int> fw;              // pairings with the simple coroots
    std::vector<Int> on_simple;       // expansion in simple roots
    std::vector<Int> coroot_on_simple_coroots;  // coroot in simple coroots
  };
  std::vector<Root> positive_roots;

  std::vector<std::vector<Rat>> fundamental_weights;  // in span(simple roots)
  Weight rho;  // fw coordinates (1,...,1)

  // Positive roots as fw vectors, for sign tests under the Weyl action.
  std::set<std::vector<Int>> positive_fw;
};

// Accepted labels: A1.., B2.., C2.., D3.., G2, F4, with rank <= max_rank.
// Exceptional E types and out-of-range ranks are rejected with a
// descriptive error.
RootSystem build_root_system(const std::string& type_label, int max_rank = 6);

// Positive roots of the sub-root-system spanned by the simple roots in J
// (indices into R's positive root list).
std::vector<int> positive_roots_of_subset(const RootSystem& R,
                                          const std::vector<int>& J);

}  // namespace rbs
