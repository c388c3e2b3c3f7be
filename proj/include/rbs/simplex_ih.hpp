#pragma once

#include <map>
#include <vector>

#include "rbs/strata.hpp"

namespace rbs {

// Face of a simplex: a sorted nonempty set of 0-based vertex indices.
using Face = std::vector<int>;

// Closed (d-1)-simplex stratified by its open faces. Every nonempty vertex
// subset is a face and carries the stratum it belongs to; every proper face
// (everything except the full vertex set) carries a perversity value. The
// dense stratum (the open top face) needs no perversity.
struct StratifiedSimplex {
  int vertex_count = 0;
  std::map<Face, StratumId> strata;
  std::map<Face, int> perversity;
};

// Cohomology ranks by degree; only nonzero ranks are stored. Degrees lie in
// [0, vertex_count - 1].
struct GradedRanks {
  std::map<int, int> ranks;
  bool operator==(const GradedRanks&) const = default;
};

// Hypercohomology of the perversity-truncated construction over the
// stratified simplex: start from the constant sheaf on the open top face and
// attach the remaining faces one at a time (pushforward, then truncate the
// stalk at the new face above its perversity value), then take global
// sections. The attachment order may be supplied; it must refine decreasing
// face dimension. The result is order-independent.
GradedRanks ih_simplex(const StratifiedSimplex& sx,
                       const std::vector<Face>* order = nullptr);

// Closed form for vertex_count = 2: rank 1 in degree 0 when both vertex
// perversities are >= 0, rank 1 in degree 1 when both are < 0, zero
// otherwise.
GradedRanks ih_simplex_depth2(int pv1, int pv2);

}  // namespace rbs
