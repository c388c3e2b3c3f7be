#include <vector>

#include "doctest.h"
#include "rbs/weights.hpp"

using namespace rbs;

namespace {

// (a + 2b + 2, -b - 2) over symbols a, b (both nonnegative).
Weight sample_symbolic() {
  Weight w;
  w.symbols = {{"a", true}, {"b", true}};
  w.coords.resize(2);
  w.coords[0].constant = 2;
  w.coords[0].coeffs = {Rat(1), Rat(2)};
  w.coords[1].constant = -2;
  w.coords[1].coeffs = {Rat(0), Rat(-1)};
  return w;
}

}  // namespace

TEST_CASE("numeric weights round-trip") {
  const Weight w = Weight::from_ints({3, -1});
  CHECK(w.is_numeric());
  CHECK(w.rank() == 2);
  CHECK(w.numeric_coords() == std::vector<Rat>{Rat(3), Rat(-1)});
  CHECK_THROWS_AS(sample_symbolic().numeric_coords(), invalid_input);
}

TEST_CASE("weight arithmetic") {
  const Weight a = Weight::from_ints({1, 2});
  const Weight b = Weight::from_ints({3, 4});
  CHECK(weight_equal(add(a, b), Weight::from_ints({4, 6})));
  CHECK(weight_equal(sub(b, a), Weight::from_ints({2, 2})));
  CHECK(weight_equal(add_numeric(a, {Rat(1), Rat(1)}),
                     Weight::from_ints({2, 3})));
  const Weight s = sample_symbolic();
  const Weight back = sub_numeric(add_numeric(s, {Rat(5), Rat(7)}),
                                  {Rat(5), Rat(7)});
  CHECK(weight_equal(back, s));
}

TEST_CASE("matrix action on symbolic coordinates") {
  QMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  const Weight s = sample_symbolic();
  const Weight t = apply_matrix(swap, s);
  CHECK(to_string(t) == "(-b-2,a+2b+2)");
}

TEST_CASE("evaluation substitutes symbol values") {
  const Weight s = sample_symbolic();
  const Weight v = evaluate(s, {Rat(1), Rat(1)});
  CHECK(v.is_numeric());
  CHECK(v.numeric_coords() == std::vector<Rat>{Rat(5), Rat(-3)});
}

TEST_CASE("integrality detection") {
  CHECK(is_integral(Weight::from_ints({0, -7})));
  CHECK(is_integral(sample_symbolic()));
  Weight frac = Weight::numeric({Rat(1, 2), Rat(1)});
  CHECK_FALSE(is_integral(frac));
  Weight w = sample_symbolic();
  w.coords[0].coeffs[1] = Rat(3, 2);
  CHECK_FALSE(is_integral(w));
}

TEST_CASE("nonnegativity of affine forms") {
  const std::vector<Symbol> syms = {{"a", true}, {"x", false}};
  LinForm f;
  f.coeffs = {Rat(2), Rat(0)};
  f.constant = 1;
  CHECK(form_nonneg(f, syms));       // 2a + 1 with a >= 0
  f.constant = -1;
  CHECK_FALSE(form_nonneg(f, syms)); // 2a - 1 can be negative at a = 0
  f.constant = 0;
  f.coeffs = {Rat(0), Rat(1)};
  CHECK_FALSE(form_nonneg(f, syms)); // a free symbol can go negative
  f.coeffs = {Rat(-1), Rat(0)};
  CHECK_FALSE(form_nonneg(f, syms)); // -a goes negative for large a
  f.coeffs = {Rat(0), Rat(0)};
  f.constant = 0;
  CHECK(form_nonneg(f, syms));
}

TEST_CASE("rendering of affine forms") {
  const Weight s = sample_symbolic();
  CHECK(to_string(s) == "(a+2b+2,-b-2)");
  Weight w;
  w.symbols = {{"b", false}};
  w.coords.resize(1);
  w.coords[0].coeffs = {Rat(3, 2)};
  CHECK(to_string(w) == "((3/2)b)");
  CHECK(to_string(Weight::from_ints({0, -1})) == "(0,-1)");
}

TEST_CASE("deterministic weight order") {
  const Weight a = Weight::from_ints({1, 2});
  const Weight b = Weight::from_ints({1, 3});
  CHECK(weight_less(a, b));
  CHECK_FALSE(weight_less(b, a));
  CHECK_FALSE(weight_less(a, a));
}
