#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbs/linalg.hpp"
#include "rbs/numbers.hpp"

namespace rbs {

// A named parameter of a symbolic weight. nonneg marks symbols whose value is
// known to range over nonnegative integers (a dominance-constrained
// coordinate); other symbols range over all integers.
struct Symbol {
  std::string name;
  bool nonneg = false;
  bool operator==(const Symbol&) const = default;
};

// Affine-linear form constant + sum_k coeffs[k] * symbol_k over Q.
struct LinForm {
  Rat constant;
  std::vector<Rat> coeffs;  // one per symbol of the owning weight
  bool operator==(const LinForm&) const = default;
};

// Weight in fundamental-weight coordinates. All coordinates share one symbol
// list; a numeric weight has an empty list.
struct Weight {
  std::vector<LinForm> coords;
  std::vector<Symbol> symbols;

  static Weight numeric(std::vector<Rat> c);
  static Weight from_ints(const std::vector<long long>& c);

  bool is_numeric() const { return symbols.empty(); }
  int rank() const { return static_cast<int>(coords.size()); }

  // Numeric value of each coordinate; rejects symbolic weights.
  std::vector<Rat> numeric_coords() const;
};

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight add_numeric(const Weight& a, const std::vector<Rat>& v);
Weight sub_numeric(const Weight& a, const std::vector<Rat>& v);

// y = m * coords, coordinate-wise on the affine forms.
Weight apply_matrix(const QMatrix& m, const Weight& w);

bool weight_equal(const Weight& a, const Weight& b);
// Deterministic total order (same symbol list required).
bool weight_less(const Weight& a, const Weight& b);

// True when every constant and coefficient is an integer.
bool is_integral(const Weight& w);

// Substitute numeric values for all symbols.
Weight evaluate(const Weight& w, const std::vector<Rat>& values);

// True when the affine form is >= 0 for every admissible symbol value:
// free-symbol coefficients must vanish, nonneg-symbol coefficients and the
// constant must be >= 0. Exact test for numeric forms.
bool form_nonneg(const LinForm& f, const std::vector<Symbol>& symbols);

std::string to_string(const LinForm& f, const std::vector<Symbol>& symbols);
std::string to_string(const Weight& w);

}  // namespace rbs
