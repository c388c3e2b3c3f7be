#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rbs/root_system.hpp"
#include "rbs/strata.hpp"
#include "rbs/weyl.hpp"

using namespace rbs;

namespace {

std::string key_of(const QMatrix& m) {
  std::string k;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      std::ostringstream os;
      os << m.at(r, c);
      k += os.str();
      k += ",";
    }
  return k;
}

// Independent (length, lex)-minimal word per element: enumerate all words in
// lexicographic order within each length and keep the first word reaching
// each action matrix.
std::map<std::string, std::vector<int>> brute_minimal_words(
    const RootSystem& R, int max_len) {
  std::map<std::string, std::vector<int>> out;
  std::vector<std::vector<int>> frontier = {{}};
  out[key_of(QMatrix::identity(R.rank))] = {};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int i = 0; i < R.rank; ++i) {
        auto nw = w;
        nw.push_back(i);
        next.push_back(std::move(nw));
      }
    std::sort(next.begin(), next.end());
    for (const auto& w : next) {
      QMatrix m = QMatrix::identity(R.rank);
      for (int i : w) m = m * simple_reflection_matrix(R, i);
      out.emplace(key_of(m), w);  // first (lex-least) word wins
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::string> words_of(const std::vector<WeylElement>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(word_string(w));
  return out;
}

WeylElement from_word(const RootSystem& R, const std::vector<int>& word) {
  WeylElement w = weyl_identity(R);
  for (int i : word) {
    WeylElement s;
    s.reduced_word = {i};
    s.length = 1;
    s.action = simple_reflection_matrix(R, i);
    w = compose(R, w, s);
  }
  return w;
}

}  // namespace

TEST_CASE("root system construction and counts") {
  const struct {
    const char* label;
    int positive;
  } cases[] = {{"A1", 1}, {"A2", 3},  {"B2", 4}, {"C2", 4},
               {"G2", 6}, {"A3", 6},  {"B3", 9}, {"C3", 9},
               {"D4", 12}, {"F4", 24}};
  for (const auto& c : cases) {
    const auto R = build_root_system(c.label);
    CHECK_MESSAGE(static_cast<int>(R.positive_roots.size()) == c.positive,
                  c.label);
  }
}

TEST_CASE("invalid labels are rejected") {
  for (const char* bad :
       {"E6", "E7", "E8", "A0", "B1", "C1", "D2", "D1", "G3", "F3", "X2",
        "A7", "B9", "", "C", "22"})
    CHECK_THROWS_AS(build_root_system(bad), invalid_input);
  CHECK_NOTHROW(build_root_system("A7", 8));  // explicit rank ceiling
}

TEST_CASE("C2 Cartan matrix") {
  const auto R = build_root_system("C2");
  REQUIRE(R.rank == 2);
  CHECK(R.cartan[0][0] == 2);
  CHECK(R.cartan[0][1] == -2);
  CHECK(R.cartan[1][0] == -1);
  CHECK(R.cartan[1][1] == 2);
  // B2 is the transpose-convention partner.
  const auto B = build_root_system("B2");
  CHECK(B.cartan[0][1] == -1);
  CHECK(B.cartan[1][0] == -2);
}

TEST_CASE("Weyl group orders") {
  const struct {
    const char* label;
    size_t order;
  } cases[] = {{"A1", 2},  {"A2", 6},  {"B2", 8},
               {"C2", 8},  {"G2", 12}, {"A3", 24}, {"B3", 48}};
  for (const auto& c : cases) {
    const auto R = build_root_system(c.label);
    CHECK_MESSAGE(weyl_elements(R).size() == c.order, c.label);
  }
}

TEST_CASE("length equals inversion count and words are minimal") {
  for (const char* label : {"A2", "C2", "G2"}) {
    const auto R = build_root_system(label);
    const auto all = weyl_elements(R);
    const int top = static_cast<int>(R.positive_roots.size());
    const auto brute = brute_minimal_words(R, top);
    for (const auto& w : all) {
      CHECK(w.length == inversion_count(R, w.action));
      CHECK(w.length == static_cast<int>(w.reduced_word.size()));
      const auto it = brute.find(key_of(w.action));
      REQUIRE(it != brute.end());
      CHECK(w.reduced_word == it->second);
    }
    // Longest element inverts every positive root.
    CHECK(all.back().length == top);
  }
}

TEST_CASE("A2 length multiset") {
  const auto R = build_root_system("A2");
  std::vector<int> lens;
  for (const auto& w : weyl_elements(R)) lens.push_back(w.length);
  CHECK(lens == std::vector<int>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("minimal coset representatives for C2 parabolics") {
  const auto R = build_root_system("C2");
  CHECK(words_of(min_coset_reps(R, {}, {0})) ==
        std::vector<std::string>{"e", "s1"});
  CHECK(words_of(min_coset_reps(R, {}, {1})) ==
        std::vector<std::string>{"e", "s2"});
  CHECK(words_of(min_coset_reps(R, {0}, {0, 1})) ==
        std::vector<std::string>{"e", "s2", "s2s1", "s2s1s2"});
  CHECK(words_of(min_coset_reps(R, {1}, {0, 1})) ==
        std::vector<std::string>{"e", "s1", "s1s2", "s1s2s1"});
  CHECK(min_coset_reps(R, {}, {0, 1}).size() == 8);
  CHECK(min_coset_reps(R, {0, 1}, {0, 1}).size() == 1);
  CHECK_THROWS_AS(min_coset_reps(R, {0}, {1}), invalid_input);
}

TEST_CASE("coset factorization is a bijection with additive lengths") {
  for (const char* label : {"C2", "A3"}) {
    const auto R = build_root_system(label);
    const auto all = weyl_elements(R);
    std::vector<int> full;
    for (int i = 0; i < R.rank; ++i) full.push_back(i);
    for (const auto& K : all_subsets(R.rank)) {
      const auto uppers = min_coset_reps(R, {}, K);
      const auto lowers = min_coset_reps(R, K, full);
      CHECK(uppers.size() * lowers.size() == all.size());
      for (const auto& w : all) {
        const auto d = decompose_at(R, w, K);
        CHECK(d.upper.length + d.lower.length == w.length);
        CHECK(compose(R, d.upper, d.lower).action == w.action);
        const auto in_set = [](const std::vector<WeylElement>& v,
                               const WeylElement& x) {
          for (const auto& y : v)
            if (y.action == x.action) return true;
          return false;
        };
        CHECK(in_set(uppers, d.upper));
        CHECK(in_set(lowers, d.lower));
      }
    }
  }
}

TEST_CASE("relative lengths at the C2 parabolics") {
  const auto R = build_root_system("C2");
  const Subset full = {0, 1};
  const auto s1s2 = from_word(R, {0, 1});
  const auto s2s1 = from_word(R, {1, 0});
  const auto s1s2s1 = from_word(R, {0, 1, 0});
  CHECK(ell_Q(R, s1s2, {}, {0}, full) == 1);
  CHECK(ell_Q(R, s1s2, {}, {1}, full) == 2);
  CHECK(ell_Q(R, s2s1, {}, {0}, full) == 2);
  CHECK(ell_Q(R, s2s1, {}, {1}, full) == 1);
  CHECK(ell_Q(R, s1s2s1, {}, {0}, full) == 2);
  CHECK(ell_Q(R, s1s2s1, {}, {1}, full) == 3);
  // Boundary strata: at Q = S the lower factor is w itself; at Q = T it is e.
  CHECK(ell_Q(R, s1s2, {}, {}, full) == 2);
  CHECK(ell_Q(R, s1s2, {}, full, full) == 0);
}

TEST_CASE("decompose_at validates its arguments") {
  const auto R = build_root_system("C2");
  const auto s1 = from_word(R, {0});
  // s1 is not a minimal representative once alpha_1 must stay positive.
  CHECK_THROWS_AS(decompose_at(R, s1, {1}, {0}, {0, 1}), invalid_input);
  // K must sit between I and J.
  CHECK_THROWS_AS(decompose_at(R, s1, {1}, {0}, {0}), invalid_input);
  // w must lie in W(J).
  CHECK_THROWS_AS(decompose_at(R, s1, {}, {}, {1}), invalid_input);
}

TEST_CASE("reflections act correctly on fundamental weights") {
  const auto R = build_root_system("C2");
  const Weight rho = Weight::from_ints({1, 1});
  const Weight r1 = reflect(R, 0, rho);
  // s1(1,1) = (1,1) - 1 * alpha_1, alpha_1 = (2,-1) in fw coordinates.
  CHECK(weight_equal(r1, Weight::from_ints({-1, 2})));
  const Weight r2 = reflect(R, 1, rho);
  // alpha_2 = (-2,2) in fw coordinates.
  CHECK(weight_equal(r2, Weight::from_ints({3, -1})));
  // Involution.
  CHECK(weight_equal(reflect(R, 0, r1), rho));
}
