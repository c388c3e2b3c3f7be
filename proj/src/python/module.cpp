// Python bindings for the stratification calculator: thin wrappers that
// return plain dicts/lists mirroring the CLI's JSON schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rbs/errors.hpp"
#include "rbs/ext.hpp"
#include "rbs/link_cohomology.hpp"
#include "rbs/reference.hpp"
#include "rbs/root_system.hpp"
#include "rbs/strata.hpp"

namespace py = pybind11;
using namespace rbs;

namespace {

using Overrides = std::map<std::string, int>;
using Coords = std::vector<long long>;

struct Session {
  RootSystem R;
  DimMap dims;
  Perversity p;
};

PerversityKind kind_of(const std::string& s) {
  if (s == "minus") return PerversityKind::minus;
  if (s == "plus") return PerversityKind::plus;
  throw invalid_input("perversity must be 'minus' or 'plus', got '" + s +
                      "'");
}

Session make_session(const std::string& group, const std::string& perv,
                     const Overrides& overrides) {
  Session s{build_root_system(group), {}, {}};
  DimMap over;
  for (const auto& [lit, d] : overrides)
    over[StratumId::parse(lit, s.R.rank).subset] = d;
  s.dims = stratum_dims(s.R, over);
  s.p = perversity(s.R, kind_of(perv), s.dims);
  return s;
}

Subset parse_stratum(const RootSystem& R, const std::string& lit) {
  return StratumId::parse(lit, R.rank).subset;
}

std::string literal(const RootSystem& R, const Subset& S) {
  return StratumId{S}.literal(R.rank);
}

Weight numeric_weight(const RootSystem& R, const Coords& c) {
  require(static_cast<int>(c.size()) == R.rank,
          "weight needs one coordinate per simple root");
  return Weight::from_ints(c);
}

Weight symbolic_weight(const RootSystem& R, const Subset& T) {
  static const char* names[] = {"a", "b", "c", "d", "g", "h"};
  Weight out;
  out.symbols.resize(R.rank);
  out.coords.resize(R.rank);
  for (int i = 0; i < R.rank; ++i) {
    out.symbols[i] = {names[i], std::binary_search(T.begin(), T.end(), i)};
    LinForm f;
    f.constant = 0;
    f.coeffs.assign(R.rank, Rat(0));
    f.coeffs[i] = 1;
    out.coords[i] = std::move(f);
  }
  return out;
}

py::list entries_list(const GradedModuleList& g) {
  py::list out;
  for (const auto& e : g.entries) {
    py::dict d;
    d["degree"] = e.degree;
    d["weight"] = to_string(e.weight);
    d["multiplicity"] = e.multiplicity;
    out.append(d);
  }
  return out;
}

py::dict ext_dict(const RootSystem& R, const ExtResult& r) {
  py::dict d;
  d["source_stratum"] = literal(R, r.source.stratum);
  d["source_weight"] = to_string(r.source.weight);
  d["target_stratum"] = literal(R, r.target.stratum);
  d["target_weight"] = to_string(r.target.weight);
  d["relation"] = to_string(r.relation);
  d["candidate_dim"] = r.candidate_dim;
  py::list obs;
  for (const auto& o : r.obstructions) {
    py::dict od;
    od["stratum"] = literal(R, o.stratum);
    od["hom_dim"] = o.hom_dim;
    obs.append(od);
  }
  d["obstructions"] = obs;
  d["certified"] = r.certified;
  d["value_lo"] = r.value_lo;
  d["value_hi"] = r.value_hi;
  return d;
}

}  // namespace

PYBIND11_MODULE(rbscalc, m) {
  m.doc() =
      "exact stratification calculator for reductive Borel-Serre "
      "boundaries: link cohomology, perverse bounds, Ext^1 tables";

  py::register_exception<invalid_input>(m, "InvalidInput");

  m.def(
      "describe",
      [](const std::string& group, const std::string& perv,
         const Overrides& overrides) {
        const Session s = make_session(group, perv, overrides);
        const auto lat = parabolic_lattice(s.R, s.dims);
        py::dict d;
        d["group"] = s.R.type_label;
        d["rank"] = s.R.rank;
        d["perversity"] = to_string(s.p.kind);
        py::list strata;
        for (const auto& st : lat.strata) {
          py::dict sd;
          sd["stratum"] = st.id.literal(s.R.rank);
          sd["dim"] = st.dim;
          sd["split_torus_dim"] = st.split_torus_dim;
          sd["depth"] = st.depth;
          sd["perversity"] = s.p.at(st.id.subset);
          strata.append(sd);
        }
        d["strata"] = strata;
        py::list covers;
        for (const auto& [i, j] : lat.covers) {
          py::dict cd;
          cd["smaller"] = lat.strata[i].id.literal(s.R.rank);
          cd["larger"] = lat.strata[j].id.literal(s.R.rank);
          covers.append(cd);
        }
        d["covers"] = covers;
        return d;
      },
      py::arg("group"), py::arg("perversity") = "minus",
      py::arg("dim_overrides") = Overrides{},
      "Stratum lattice, dimensions, and perversity values for a group.");

  m.def(
      "link",
      [](const std::string& group, const std::string& stratum,
         const std::string& target, const Coords& weight,
         const std::string& perv, const Overrides& overrides) {
        const Session s = make_session(group, perv, overrides);
        const Subset S = parse_stratum(s.R, stratum);
        const Subset T = parse_stratum(s.R, target);
        const Weight lam = numeric_weight(s.R, weight);
        const bool strictly_below =
            S != T && std::includes(T.begin(), T.end(), S.begin(), S.end());
        GradedModuleList lk;
        lk.levi = S;
        if (strictly_below) lk = link_cohomology(s.R, s.p, S, T, lam);
        py::dict d;
        d["group"] = s.R.type_label;
        d["perversity"] = to_string(s.p.kind);
        d["stratum"] = literal(s.R, S);
        d["target"] = literal(s.R, T);
        d["weight"] = to_string(lam);
        d["link"] = entries_list(lk);
        d["star"] = entries_list(local_star(s.R, s.p, S, T, lam));
        d["shriek"] = entries_list(local_shriek(s.R, s.p, S, T, lam));
        return d;
      },
      py::arg("group"), py::arg("stratum"), py::arg("target"),
      py::arg("weight"), py::arg("perversity") = "minus",
      py::arg("dim_overrides") = Overrides{},
      "Link cohomology of P(target, weight) along a smaller stratum, with "
      "its stalk/costalk tables.");

  m.def(
      "ext",
      [](const std::string& group, const std::string& source,
         const Coords& source_weight, const std::string& target,
         const Coords& target_weight, const std::string& perv,
         const Overrides& overrides) {
        const Session s = make_session(group, perv, overrides);
        const Subset T = parse_stratum(s.R, source);
        const Subset Tp = parse_stratum(s.R, target);
        const ExtResult r =
            ext1(s.R, s.p, T, numeric_weight(s.R, source_weight), Tp,
                 numeric_weight(s.R, target_weight));
        return ext_dict(s.R, r);
      },
      py::arg("group"), py::arg("source"), py::arg("source_weight"),
      py::arg("target"), py::arg("target_weight"),
      py::arg("perversity") = "minus",
      py::arg("dim_overrides") = Overrides{},
      "Certified Ext^1 between two simple perverse objects at numeric "
      "weights.");

  m.def(
      "ext_table",
      [](const std::string& group, const py::object& stratum,
         const py::object& weight, const std::string& perv,
         const Overrides& overrides) {
        const Session s = make_session(group, perv, overrides);
        std::vector<Subset> sources;
        if (stratum.is_none())
          sources = all_subsets(s.R.rank);
        else
          sources.push_back(
              parse_stratum(s.R, py::cast<std::string>(stratum)));
        py::list fams;
        for (const auto& T : sources) {
          const Weight lam =
              weight.is_none() ? symbolic_weight(s.R, T)
                               : numeric_weight(s.R, py::cast<Coords>(weight));
          for (const auto& f : ext_partners(s.R, s.p, T, lam)) {
            py::dict fd;
            fd["source"] = literal(s.R, T);
            fd["target"] = literal(s.R, f.target);
            fd["condition"] = f.condition;
            fd["result"] = ext_dict(s.R, f.result);
            fams.append(fd);
          }
        }
        return fams;
      },
      py::arg("group"), py::arg("stratum") = py::none(),
      py::arg("weight") = py::none(), py::arg("perversity") = "minus",
      py::arg("dim_overrides") = Overrides{},
      "All nonzero Ext^1 partner families; weight=None runs each source "
      "with a fresh symbolic dominant weight.");

  m.def(
      "detect_middle",
      [](const std::string& group, const std::string& target,
         const Coords& weight, const std::string& perv,
         const Overrides& overrides) {
        const Session s = make_session(group, perv, overrides);
        const Subset T = parse_stratum(s.R, target);
        py::list out;
        for (const auto& S : middle_self_extension_detector(
                 s.R, s.p, T, numeric_weight(s.R, weight)))
          out.append(literal(s.R, S));
        return out;
      },
      py::arg("group"), py::arg("target"), py::arg("weight"),
      py::arg("perversity") = "minus",
      py::arg("dim_overrides") = Overrides{},
      "Odd-codimension strata whose link is nonzero in the middle degree.");

  m.def(
      "reference_checks",
      []() {
        py::list out;
        for (const auto& c : reference_checks()) {
          py::dict d;
          d["name"] = c.name;
          d["ok"] = c.ok;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      "Run the built-in reproduction suite; returns one record per check.");
}
