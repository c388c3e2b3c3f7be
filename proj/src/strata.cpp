#include "rbs/strata.hpp"

#include <algorithm>

#include "rbs/errors.hpp"

namespace rbs {

StratumId StratumId::parse(const std::string& literal, int rank) {
  StratumId id;
  if (literal == "full") {
    for (int i = 0; i < rank; ++i) id.subset.push_back(i);
    return id;
  }
  require(literal.size() >= 2 && literal.front() == '{' &&
              literal.back() == '}',
          "malformed stratum literal '" + literal +
              "' (expected '{}', '{1,2}', or 'full')");
  std::string body = literal.substr(1, literal.size() - 2);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    require(!tok.empty() && tok.find_first_not_of("0123456789") ==
                                std::string::npos,
            "malformed stratum literal '" + literal + "'");
    int v = std::stoi(tok);
    require(1 <= v && v <= rank, "simple root index " + std::to_string(v) +
                                     " out of range in '" + literal + "'");
    id.subset.push_back(v - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
    require(pos < body.size(),
            "malformed stratum literal '" + literal + "' (trailing comma)");
  }
  std::sort(id.subset.begin(), id.subset.end());
  require(std::adjacent_find(id.subset.begin(), id.subset.end()) ==
              id.subset.end(),
          "repeated index in stratum literal '" + literal + "'");
  return id;
}

std::string StratumId::literal(int rank) const {
  if (static_cast<int>(subset.size()) == rank) return "full";
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i] + 1);
  }
  return s + "}";
}

std::vector<Subset> all_subsets(int rank) {
  std::vector<Subset> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    Subset s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

int stratum_dim(const RootSystem& R, const Subset& I) {
  return static_cast<int>(positive_roots_of_subset(R, I).size()) +
         static_cast<int>(I.size());
}

namespace {

bool subset_leq(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void validate_monotone_dims(const RootSystem& R, const DimMap& dims) {
  std::vector<Subset> subs = all_subsets(R.rank);
  for (const Subset& a : subs)
    for (const Subset& b : subs) {
      if (a.size() >= b.size() || !subset_leq(a, b)) continue;
      require(dims.at(a) < dims.at(b),
              "stratum dimensions must strictly increase along containment: "
              "dim " +
                  StratumId{a}.literal(R.rank) + " = " +
                  std::to_string(dims.at(a)) + " vs dim " +
                  StratumId{b}.literal(R.rank) + " = " +
                  std::to_string(dims.at(b)));
    }
}

}  // namespace

DimMap stratum_dims(const RootSystem& R, const DimMap& overrides) {
  std::vector<Subset> subs = all_subsets(R.rank);
  DimMap dims;
  if (overrides.empty()) {
    for (const Subset& s : subs) dims[s] = stratum_dim(R, s);
  } else {
    for (const auto& [k, v] : overrides)
      require(std::binary_search(subs.begin(), subs.end(), k) ||
                  std::find(subs.begin(), subs.end(), k) != subs.end(),
              "dimension override for unknown stratum");
    for (const Subset& s : subs) {
      auto it = overrides.find(s);
      require(it != overrides.end(),
              "dimension overrides are all-or-nothing; missing stratum " +
                  StratumId{s}.literal(R.rank));
      dims[s] = it->second;
    }
    require(overrides.size() == subs.size(),
            "dimension overrides contain extra entries");
  }
  validate_monotone_dims(R, dims);
  return dims;
}

ParabolicLattice parabolic_lattice(const RootSystem& R, const DimMap& dims_in) {
  DimMap dims = dims_in.empty() ? stratum_dims(R) : dims_in;
  ParabolicLattice lat;
  for (const Subset& s : all_subsets(R.rank)) {
    StratumInfo info;
    info.id = StratumId{s};
    info.dim = dims.at(s);
    info.split_torus_dim = R.rank - static_cast<int>(s.size());
    info.depth = R.rank - static_cast<int>(s.size());
    lat.strata.push_back(std::move(info));
  }
  for (size_t i = 0; i < lat.strata.size(); ++i)
    for (size_t j = 0; j < lat.strata.size(); ++j) {
      const Subset& a = lat.strata[i].id.subset;
      const Subset& b = lat.strata[j].id.subset;
      if (a.size() + 1 == b.size() && subset_leq(a, b))
        lat.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return lat;
}

std::string to_string(PerversityKind k) {
  switch (k) {
    case PerversityKind::minus:
      return "minus";
    case PerversityKind::plus:
      return "plus";
    case PerversityKind::custom:
      return "custom";
  }
  return "?";
}

int Perversity::at(const Subset& S) const {
  auto it = values.find(S);
  check_internal(it != values.end(), "perversity queried off the lattice");
  return it->second;
}

int Perversity::dim_at(const Subset& S) const {
  auto it = dims.find(S);
  check_internal(it != dims.end(), "dimension queried off the lattice");
  return it->second;
}

namespace {

int middle_value(PerversityKind kind, int dim) {
  // minus: -floor((dim+1)/2); plus: -floor(dim/2).
  if (kind == PerversityKind::minus) return -((dim + 1) / 2);
  return -(dim / 2);
}

void validate_monotone_values(const RootSystem& R,
                              const std::map<Subset, int>& values) {
  std::vector<Subset> subs = all_subsets(R.rank);
  for (const Subset& a : subs)
    for (const Subset& b : subs) {
      if (a.size() >= b.size() || !subset_leq(a, b)) continue;
      require(values.at(a) >= values.at(b),
              "perversity must be monotone (p(S) >= p(T) for S <= T); "
              "violated at " +
                  StratumId{a}.literal(R.rank) + " < " +
                  StratumId{b}.literal(R.rank));
    }
}

}  // namespace

Perversity perversity(const RootSystem& R, PerversityKind kind,
                      const DimMap& dims_in,
                      const std::map<Subset, int>& custom_values) {
  Perversity p;
  p.kind = kind;
  p.dims = dims_in.empty() ? stratum_dims(R) : dims_in;
  std::vector<Subset> subs = all_subsets(R.rank);
  if (kind == PerversityKind::custom) {
    for (const Subset& s : subs)
      require(custom_values.count(s),
              "custom perversity must assign a value to every stratum");
    p.values = custom_values;
  } else {
    require(custom_values.empty(),
            "explicit values are only accepted for custom perversities");
    for (const Subset& s : subs)
      p.values[s] = middle_value(kind, p.dims.at(s));
  }
  validate_monotone_values(R, p.values);
  return p;
}

Perversity dual_perversity(const RootSystem& R, const Perversity& p) {
  std::map<Subset, int> dual;
  for (const auto& [s, v] : p.values) dual[s] = -v - p.dims.at(s);
  Perversity q;
  q.dims = p.dims;
  q.values = dual;
  q.kind = PerversityKind::custom;
  // Duality exchanges the two middle perversities, so when both labels fit
  // (all strata even-dimensional) report the one opposite to the input.
  const PerversityKind first = p.kind == PerversityKind::plus
                                   ? PerversityKind::minus
                                   : PerversityKind::plus;
  const PerversityKind second = first == PerversityKind::plus
                                    ? PerversityKind::minus
                                    : PerversityKind::plus;
  for (PerversityKind k : {first, second}) {
    bool match = true;
    for (const auto& [s, v] : dual)
      if (v != middle_value(k, p.dims.at(s))) {
        match = false;
        break;
      }
    if (match) {
      q.kind = k;
      break;
    }
  }
  validate_monotone_values(R, q.values);
  return q;
}

int pbar(const Perversity& p, const Subset& S, const Subset& T) {
  require(subset_leq(S, T), "pbar requires S <= T");
  return p.at(S) - p.at(T) - 1;
}

int ell_Q(const RootSystem& R, const WeylElement& w, const Subset& S,
          const Subset& Q, const Subset& T) {
  require(subset_leq(S, Q) && subset_leq(Q, T),
          "ell_Q requires S <= Q <= T");
  Decomposition d = decompose_at(R, w, Q, S, T);
  return d.lower.length;
}

int pbar_tw(const RootSystem& R, const Perversity& p, const Subset& S,
            const Subset& T, const WeylElement& w, const Subset& Q) {
  return pbar(p, Q, T) - ell_Q(R, w, S, Q, T);
}

}  // namespace rbs
