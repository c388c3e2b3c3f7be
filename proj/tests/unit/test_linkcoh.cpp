#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "rbs/errors.hpp"
#include "rbs/kostant.hpp"
#include "rbs/link_cohomology.hpp"
#include "rbs/root_system.hpp"
#include "rbs/strata.hpp"
#include "rbs/weyl.hpp"

using namespace rbs;

namespace {

Weight symbolic_dominant(const RootSystem& R, const Subset& T) {
  static const char* names[] = {"a", "b", "c", "d", "g", "h"};
  Weight w;
  for (int i = 0; i < R.rank; ++i)
    w.symbols.push_back(
        {names[i], std::binary_search(T.begin(), T.end(), i)});
  for (int i = 0; i < R.rank; ++i) {
    LinForm f;
    f.constant = 0;
    f.coeffs.assign(R.rank, Rat(0));
    f.coeffs[i] = 1;
    w.coords.push_back(std::move(f));
  }
  return w;
}

const Subset kEmpty{};
const Subset kOne{0};
const Subset kTwo{1};
const Subset kFull{0, 1};

}  // namespace

TEST_CASE("graded module lists merge equal entries and stay sorted") {
  const Weight u = Weight::from_ints({1, 2});
  const Weight v = Weight::from_ints({0, 0});
  GradedModuleList g;
  g.levi = kEmpty;
  add_entry(g, 2, u, 1);
  add_entry(g, 2, u, 3);
  add_entry(g, 1, v, 2);
  add_entry(g, 3, v, 0);  // zero multiplicity never creates an entry
  REQUIRE(g.entries.size() == 2);
  CHECK(g.entries[0].degree == 1);
  CHECK(g.entries[1].degree == 2);
  CHECK(multiplicity_at(g, 2, u) == 4);
  CHECK(multiplicity_at(g, 1, v) == 2);
  CHECK(multiplicity_at(g, 5, u) == 0);
  CHECK(entries_at(g, 2).size() == 1);
  add_entry(g, 2, v, 1);
  const auto deg2 = entries_at(g, 2);
  REQUIRE(deg2.size() == 2);
  CHECK(weight_less(deg2[0].weight, deg2[1].weight));
}

TEST_CASE("a depth-one link lists the Kostant modules shifted by the top perversity") {
  const auto R = build_root_system("C2");
  const auto pm = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Weight lam = Weight::from_ints({1, 1});
  const auto link = link_cohomology(R, pm, kOne, kFull, lam);
  const auto kms = kostant_modules(R, kOne, kFull, lam);
  CHECK(link.levi == kOne);
  REQUIRE(kms.size() == 4);
  REQUIRE(link.entries.size() == kms.size());
  // One vertex, no proper truncation: each module sits in degree
  // ell(w) + p(T) with multiplicity one.
  for (const auto& km : kms)
    CHECK(multiplicity_at(link, km.degree + pm.at(kFull), km.weight) == 1);
}

TEST_CASE("the full C2 link places every Weyl contribution as predicted") {
  const auto R = build_root_system("C2");
  const auto pm = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Weight lam = symbolic_dominant(R, kFull);
  const auto link = link_cohomology(R, pm, kEmpty, kFull, lam);
  CHECK(link.levi == kEmpty);
  REQUIRE(link.entries.size() == 6);
  for (const auto& e : link.entries) CHECK(e.multiplicity == 1);

  // Degrees carried by each Weyl label; the two length-two labels are
  // truncated away on both sides of the middle.
  const std::map<std::string, std::vector<int>> placement = {
      {"e", {-3}},     {"s1", {-2}},     {"s2", {-2}},
      {"s1s2", {}},    {"s2s1", {}},     {"s1s2s1", {1}},
      {"s2s1s2", {1}}, {"s1s2s1s2", {2}}};
  const auto kms = kostant_modules(R, kEmpty, kFull, lam);
  REQUIRE(kms.size() == 8);
  for (const auto& km : kms) {
    std::vector<int> got;
    for (int d = -5; d <= 5; ++d)
      if (multiplicity_at(link, d, km.weight) > 0) got.push_back(d);
    const auto it = placement.find(word_string(km.w));
    REQUIRE(it != placement.end());
    CHECK_MESSAGE(got == it->second,
                  "misplaced contribution of " << it->first);
  }

  CHECK(entries_at(link, -1).empty());
  CHECK(entries_at(link, 0).empty());
  CHECK(multiplicity_at(link, -3, lam) == 1);
}

TEST_CASE("star and shriek split the subregular link at the boundary perversity") {
  const auto R = build_root_system("C2");
  const auto pm = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Weight lam = symbolic_dominant(R, kFull);

  const auto star = local_star(R, pm, kOne, kFull, lam);
  CHECK(star.levi == kOne);
  REQUIRE(star.entries.size() == 2);
  CHECK(star.entries[0].degree == -3);
  CHECK(to_string(star.entries[0].weight) == "(a,b)");
  CHECK(star.entries[1].degree == -2);
  CHECK(to_string(star.entries[1].weight) == "(a+2b+2,-b-2)");

  const auto shriek = local_shriek(R, pm, kOne, kFull, lam);
  REQUIRE(shriek.entries.size() == 2);
  CHECK(shriek.entries[0].degree == 0);
  CHECK(to_string(shriek.entries[0].weight) == "(a+2b+2,-a-b-3)");
  CHECK(shriek.entries[1].degree == 1);
  CHECK(to_string(shriek.entries[1].weight) == "(a,-a-b-3)");

  // The local triangle is exact: each link entry lands on exactly one side.
  const auto link = link_cohomology(R, pm, kOne, kFull, lam);
  CHECK(link.entries.size() == star.entries.size() + shriek.entries.size());
}

TEST_CASE("stalk and costalk on the stratum itself reduce to the shifted local system") {
  const auto R = build_root_system("C2");
  const auto pm = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Weight lam = Weight::from_ints({3, -7});  // dominant for the {1} Levi
  using LocalFn = GradedModuleList (*)(const RootSystem&, const Perversity&,
                                       const Subset&, const Subset&,
                                       const Weight&);
  for (LocalFn fn : {LocalFn(&local_star), LocalFn(&local_shriek)}) {
    const auto at_self = fn(R, pm, kOne, kOne, lam);
    REQUIRE(at_self.entries.size() == 1);
    CHECK(at_self.entries[0].degree == pm.at(kOne));
    CHECK(weight_equal(at_self.entries[0].weight, lam));
    CHECK(at_self.entries[0].multiplicity == 1);
    // A stratum not below the support sees nothing.
    CHECK(fn(R, pm, kTwo, kOne, lam).entries.empty());
  }
}

TEST_CASE("link cohomology rejects equal, unrelated, and bad-weight inputs") {
  const auto R = build_root_system("C2");
  const auto pm = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Weight lam = Weight::from_ints({1, 1});
  CHECK_THROWS_AS(link_cohomology(R, pm, kFull, kFull, lam), invalid_input);
  CHECK_THROWS_AS(link_cohomology(R, pm, kOne, kTwo, lam), invalid_input);
  CHECK_THROWS_AS(
      link_cohomology(R, pm, kEmpty, kFull, Weight::from_ints({-1, 0})),
      invalid_input);
  CHECK_THROWS_AS(link_cohomology(R, pm, kEmpty, kFull,
                                  Weight::numeric({Rat(1, 2), Rat(0)})),
                  invalid_input);
}

TEST_CASE("the A1 boundary link and its two halves") {
  const auto R = build_root_system("A1");
  const auto pm = perversity(R, PerversityKind::minus, stratum_dims(R));
  const Subset none{};
  const Subset full{0};
  const Weight lam = Weight::from_ints({5});
  const auto link = link_cohomology(R, pm, none, full, lam);
  REQUIRE(link.entries.size() == 2);
  CHECK(multiplicity_at(link, -1, lam) == 1);
  CHECK(multiplicity_at(link, 0, Weight::from_ints({-7})) == 1);

  const auto star = local_star(R, pm, none, full, lam);
  REQUIRE(star.entries.size() == 1);
  CHECK(star.entries[0].degree == -1);
  CHECK(weight_equal(star.entries[0].weight, lam));

  const auto shriek = local_shriek(R, pm, none, full, lam);
  REQUIRE(shriek.entries.size() == 1);
  CHECK(shriek.entries[0].degree == 1);
  CHECK(weight_equal(shriek.entries[0].weight, Weight::from_ints({-7})));
}

TEST_CASE("perverse bounds hold for middle objects and flag a lopsided perversity") {
  const auto R = build_root_system("C2");
  const auto dims = stratum_dims(R);
  const auto pm = perversity(R, PerversityKind::minus, dims);
  const Weight lam = Weight::from_ints({1, 1});
  for (const auto& T : all_subsets(R.rank))
    CHECK(check_perverse_conditions(R, pm, pm, T, lam).ok);

  // Slack at the smallest stratum lets stalk degrees climb past the bound.
  const std::map<Subset, int> lopsided = {
      {Subset{}, 5}, {Subset{0}, -1}, {Subset{1}, -1}, {Subset{0, 1}, -3}};
  const auto q = perversity(R, PerversityKind::custom, dims, lopsided);
  const auto res = check_perverse_conditions(R, pm, q, kFull, lam);
  CHECK_FALSE(res.ok);
  REQUIRE(res.violations.size() == 3);
  for (const auto& v : res.violations) {
    CHECK(v.stratum == kEmpty);
    CHECK(v.kind == "star");
  }
  CHECK(res.violations[0].degree == 1);
  CHECK(res.violations[1].degree == 1);
  CHECK(res.violations[2].degree == 2);
}
