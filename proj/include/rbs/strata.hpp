#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbs/root_system.hpp"
#include "rbs/weyl.hpp"

namespace rbs {

// A boundary stratum, indexed by a subset of the simple roots (the standard
// parabolic whose Levi it is attached to). Indices are 0-based internally;
// literals ("{}", "{1}", "{1,2}", "full") are 1-based.
struct StratumId {
  std::vector<int> subset;  // sorted

  static StratumId parse(const std::string& literal, int rank);
  std::string literal(int rank) const;
  bool operator==(const StratumId&) const = default;
};

struct StratumInfo {
  StratumId id;
  int dim = 0;
  int split_torus_dim = 0;
  int depth = 0;
};

struct ParabolicLattice {
  std::vector<StratumInfo> strata;              // sorted by (size, lex)
  std::vector<std::pair<int, int>> covers;      // (smaller, larger) indices
};

using Subset = std::vector<int>;
using DimMap = std::map<Subset, int>;

// All subsets of {0..rank-1}, sorted by (size, lex).
std::vector<Subset> all_subsets(int rank);

// Default stratum dimension |Phi^+(I)| + |I|.
int stratum_dim(const RootSystem& R, const Subset& I);

// Dimension table; overrides must cover every stratum (all-or-nothing) and
// be strictly monotone along strict containment, else rejection.
DimMap stratum_dims(const RootSystem& R, const DimMap& overrides = {});

ParabolicLattice parabolic_lattice(const RootSystem& R,
                                   const DimMap& dims = {});

enum class PerversityKind { minus, plus, custom };

std::string to_string(PerversityKind k);

// Perversity function on the stratum lattice, together with the dimension
// table it was built from.
struct Perversity {
  PerversityKind kind = PerversityKind::minus;
  DimMap dims;
  std::map<Subset, int> values;

  int at(const Subset& S) const;
  int dim_at(const Subset& S) const;
};

// kind = minus: p(S) = -floor((dim S + 1)/2); plus: -floor(dim S / 2);
// custom: explicit values (must be monotone: S <= T implies p(S) >= p(T)).
Perversity perversity(const RootSystem& R, PerversityKind kind,
                      const DimMap& dims,
                      const std::map<Subset, int>& custom_values = {});

// p*(S) = -p(S) - dim S; kind reported as minus/plus when it coincides with
// a middle perversity, custom otherwise.
Perversity dual_perversity(const RootSystem& R, const Perversity& p);

// pbar_T(S) = p(S) - p(T) - 1 for S <= T (equal strata give -1).
int pbar(const Perversity& p, const Subset& S, const Subset& T);

// ell_Q(w) = length of the lower factor of w at Q, for w in W_S^T and
// S <= Q <= T.
int ell_Q(const RootSystem& R, const WeylElement& w, const Subset& S,
          const Subset& Q, const Subset& T);

// pbar_{T,w}(Q) = pbar_T(Q) - ell_Q(w).
int pbar_tw(const RootSystem& R, const Perversity& p, const Subset& S,
            const Subset& T, const WeylElement& w, const Subset& Q);

}  // namespace rbs
