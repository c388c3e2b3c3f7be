#include "rbs/link_cohomology.hpp"

#include <algorithm>

#include "rbs/errors.hpp"

namespace rbs {

namespace {

bool contained(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool entry_before(const GradedEntry& a, const GradedEntry& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return weight_less(a.weight, b.weight);
}

void validate_object(const RootSystem& R, const Subset& T,
                     const Weight& lambda) {
  require(is_integral(lambda), "highest weight must be integral");
  require(is_dominant(R, T, lambda),
          "highest weight must be dominant for the Levi of stratum " +
              StratumId{T}.literal(R.rank));
}

std::vector<Face> nonempty_faces(int d) {
  std::vector<Face> out;
  for (int mask = 1; mask < (1 << d); ++mask) {
    Face f;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) f.push_back(i);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

void add_entry(GradedModuleList& list, int degree, const Weight& w, int mult) {
  if (mult == 0) return;
  for (auto& e : list.entries) {
    if (e.degree == degree && weight_equal(e.weight, w)) {
      e.multiplicity += mult;
      return;
    }
  }
  GradedEntry fresh{degree, w, mult};
  auto it = std::lower_bound(list.entries.begin(), list.entries.end(), fresh,
                             entry_before);
  list.entries.insert(it, std::move(fresh));
}

int multiplicity_at(const GradedModuleList& list, int degree,
                    const Weight& w) {
  for (const auto& e : list.entries)
    if (e.degree == degree && weight_equal(e.weight, w))
      return e.multiplicity;
  return 0;
}

std::vector<GradedEntry> entries_at(const GradedModuleList& list, int degree) {
  std::vector<GradedEntry> out;
  for (const auto& e : list.entries)
    if (e.degree == degree) out.push_back(e);
  return out;
}

GradedModuleList link_cohomology(const RootSystem& R, const Perversity& p,
                                 const Subset& S, const Subset& T,
                                 const Weight& lambda) {
  require(contained(S, T) && S != T,
          "link cohomology needs the first stratum strictly below the second");
  const auto modules = kostant_modules(R, S, T, lambda);

  Subset vertices;
  for (int i : T)
    if (!std::binary_search(S.begin(), S.end(), i)) vertices.push_back(i);
  const int d = static_cast<int>(vertices.size());
  const auto faces = nonempty_faces(d);

  GradedModuleList out;
  out.levi = S;
  for (const auto& km : modules) {
    StratifiedSimplex sx;
    sx.vertex_count = d;
    for (const auto& f : faces) {
      Subset Q = S;
      for (int i : f) Q.push_back(vertices[i]);
      std::sort(Q.begin(), Q.end());
      sx.strata[f] = StratumId{Q};
      if (static_cast<int>(f.size()) < d)
        sx.perversity[f] = pbar_tw(R, p, S, T, km.w, Q);
    }
    const GradedRanks ih = ih_simplex(sx);
    for (const auto& [j, r] : ih.ranks)
      add_entry(out, km.degree + p.at(T) + j, km.weight, r);
  }
  return out;
}

GradedModuleList local_star(const RootSystem& R, const Perversity& p,
                            const Subset& S, const Subset& T,
                            const Weight& lambda) {
  validate_object(R, T, lambda);
  GradedModuleList out;
  out.levi = S;
  if (S == T) {
    add_entry(out, p.at(T), lambda, 1);
    return out;
  }
  if (!contained(S, T)) return out;
  const auto link = link_cohomology(R, p, S, T, lambda);
  for (const auto& e : link.entries)
    if (e.degree < p.at(S)) add_entry(out, e.degree, e.weight, e.multiplicity);
  return out;
}

GradedModuleList local_shriek(const RootSystem& R, const Perversity& p,
                              const Subset& S, const Subset& T,
                              const Weight& lambda) {
  validate_object(R, T, lambda);
  GradedModuleList out;
  out.levi = S;
  if (S == T) {
    add_entry(out, p.at(T), lambda, 1);
    return out;
  }
  if (!contained(S, T)) return out;
  const auto link = link_cohomology(R, p, S, T, lambda);
  for (const auto& e : link.entries)
    if (e.degree + 1 > p.at(S))
      add_entry(out, e.degree + 1, e.weight, e.multiplicity);
  return out;
}

PerverseCheck check_perverse_conditions(const RootSystem& R,
                                        const Perversity& p,
                                        const Perversity& q, const Subset& T,
                                        const Weight& lambda) {
  validate_object(R, T, lambda);
  const int shift = q.at(T) - p.at(T);
  PerverseCheck out;
  for (const auto& S : all_subsets(R.rank)) {
    const auto star = local_star(R, q, S, T, lambda);
    for (const auto& e : star.entries) {
      const int sd = e.degree - shift;
      if (e.multiplicity > 0 && sd > p.at(S))
        out.violations.push_back({S, "star", sd});
    }
    const auto shriek = local_shriek(R, q, S, T, lambda);
    for (const auto& e : shriek.entries) {
      const int sd = e.degree - shift;
      if (e.multiplicity > 0 && sd < p.at(S))
        out.violations.push_back({S, "shriek", sd});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace rbs
