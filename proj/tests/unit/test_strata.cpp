#include <vector>

#include "doctest.h"
#include "rbs/strata.hpp"

using namespace rbs;

TEST_CASE("stratum literals parse and print") {
  CHECK(StratumId::parse("{}", 2).subset == Subset{});
  CHECK(StratumId::parse("{1}", 2).subset == Subset{0});
  CHECK(StratumId::parse("{2}", 2).subset == Subset{1});
  CHECK(StratumId::parse("{1,2}", 2).subset == Subset{0, 1});
  CHECK(StratumId::parse("full", 3).subset == Subset{0, 1, 2});
  CHECK(StratumId{{0}}.literal(2) == "{1}");
  CHECK(StratumId{{}}.literal(2) == "{}");
  CHECK(StratumId{{0, 1}}.literal(2) == "full");
  for (const char* bad : {"{0}", "{3}", "{1,1}", "x", "{", "{1,}", "{a}"})
    CHECK_THROWS_AS(StratumId::parse(bad, 2), invalid_input);
}

TEST_CASE("subset enumeration order") {
  const auto subs = all_subsets(2);
  CHECK(subs == std::vector<Subset>{{}, {0}, {1}, {0, 1}});
}

TEST_CASE("stratum dimensions") {
  const auto C2 = build_root_system("C2");
  const auto dims = stratum_dims(C2);
  CHECK(dims.at({}) == 0);
  CHECK(dims.at({0}) == 2);
  CHECK(dims.at({1}) == 2);
  CHECK(dims.at({0, 1}) == 6);
  const auto A1 = build_root_system("A1");
  const auto d1 = stratum_dims(A1);
  CHECK(d1.at({}) == 0);
  CHECK(d1.at({0}) == 2);
}

TEST_CASE("dimension overrides are all-or-nothing and monotone") {
  const auto R = build_root_system("B2");
  DimMap good = {{{}, 0}, {{0}, 2}, {{1}, 3}, {{0, 1}, 6}};
  CHECK(stratum_dims(R, good).at({1}) == 3);
  DimMap missing = {{{}, 0}, {{0}, 2}};
  CHECK_THROWS_AS(stratum_dims(R, missing), invalid_input);
  DimMap nonmono = {{{}, 5}, {{0}, 2}, {{1}, 3}, {{0, 1}, 6}};
  CHECK_THROWS_AS(stratum_dims(R, nonmono), invalid_input);
  DimMap equal_dims = {{{}, 0}, {{0}, 2}, {{1}, 2}, {{0, 1}, 2}};
  CHECK_THROWS_AS(stratum_dims(R, equal_dims), invalid_input);
}

TEST_CASE("parabolic lattice shape") {
  const auto R = build_root_system("C2");
  const auto lat = parabolic_lattice(R);
  REQUIRE(lat.strata.size() == 4);
  CHECK(lat.strata[0].id.literal(2) == "{}");
  CHECK(lat.strata[0].depth == 2);
  CHECK(lat.strata[0].split_torus_dim == 2);
  CHECK(lat.strata[3].id.literal(2) == "full");
  CHECK(lat.strata[3].depth == 0);
  CHECK(lat.covers.size() == 4);
}

TEST_CASE("middle perversities") {
  const auto R = build_root_system("C2");
  const auto dims = stratum_dims(R);
  const auto pm = perversity(R, PerversityKind::minus, dims);
  CHECK(pm.at({}) == 0);
  CHECK(pm.at({0}) == -1);
  CHECK(pm.at({1}) == -1);
  CHECK(pm.at({0, 1}) == -3);
  const auto pp = perversity(R, PerversityKind::plus, dims);
  CHECK(pp.values == pm.values);  // all C2 dimensions are even
  const auto A1 = build_root_system("A1");
  const auto p1 = perversity(A1, PerversityKind::minus, stratum_dims(A1));
  CHECK(p1.at({0}) == -1);
  CHECK(p1.at({}) == 0);
  // Odd dimensions separate the two middles.
  const auto B2 = build_root_system("B2");
  DimMap odd = {{{}, 0}, {{0}, 2}, {{1}, 3}, {{0, 1}, 6}};
  const auto bm = perversity(B2, PerversityKind::minus, stratum_dims(B2, odd));
  const auto bp = perversity(B2, PerversityKind::plus, stratum_dims(B2, odd));
  CHECK(bm.at({1}) == -2);
  CHECK(bp.at({1}) == -1);
}

TEST_CASE("custom perversities must be monotone and total") {
  const auto R = build_root_system("C2");
  const auto dims = stratum_dims(R);
  std::map<Subset, int> vals = {{{}, 5}, {{0}, -1}, {{1}, -1}, {{0, 1}, -3}};
  const auto q = perversity(R, PerversityKind::custom, dims, vals);
  CHECK(q.at({}) == 5);
  std::map<Subset, int> increasing = {
      {{}, -5}, {{0}, -1}, {{1}, -1}, {{0, 1}, -3}};
  CHECK_THROWS_AS(perversity(R, PerversityKind::custom, dims, increasing),
                  invalid_input);
  std::map<Subset, int> partial = {{{}, 0}};
  CHECK_THROWS_AS(perversity(R, PerversityKind::custom, dims, partial),
                  invalid_input);
}

TEST_CASE("dual perversity") {
  for (const char* label : {"C2", "A3", "B3"}) {
    const auto R = build_root_system(label);
    const auto dims = stratum_dims(R);
    const auto pm = perversity(R, PerversityKind::minus, dims);
    const auto pp = perversity(R, PerversityKind::plus, dims);
    CHECK(dual_perversity(R, pm).values == pp.values);
    CHECK(dual_perversity(R, pp).values == pm.values);
    CHECK(dual_perversity(R, pm).kind == PerversityKind::plus);
  }
}

TEST_CASE("shifted perversities") {
  const auto R = build_root_system("C2");
  const auto p = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Subset full = {0, 1};
  CHECK(pbar(p, {}, full) == 2);
  CHECK(pbar(p, {0}, full) == 1);
  CHECK(pbar(p, {1}, full) == 1);
  CHECK(pbar(p, full, full) == -1);
  CHECK(pbar(p, {}, {0}) == 0);
  CHECK(pbar(p, {}, {1}) == 0);
  CHECK_THROWS_AS(pbar(p, {0}, {1}), invalid_input);
}

TEST_CASE("twisted shifted perversities subtract relative lengths") {
  const auto R = build_root_system("C2");
  const auto p = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Subset full = {0, 1};
  for (const auto& w : min_coset_reps(R, {}, full)) {
    for (const Subset& Q : {Subset{0}, Subset{1}}) {
      const int expect = pbar(p, Q, full) - ell_Q(R, w, {}, Q, full);
      CHECK(pbar_tw(R, p, {}, full, w, Q) == expect);
    }
    // At Q = T nothing is subtracted beyond the full relative length 0.
    CHECK(pbar_tw(R, p, {}, full, w, full) == -1 - 0);
  }
}
