#include "rbs/weights.hpp"

#include <sstream>

#include "rbs/errors.hpp"

namespace rbs {

Weight Weight::numeric(std::vector<Rat> c) {
  Weight w;
  w.coords.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) w.coords[i].constant = std::move(c[i]);
  return w;
}

Weight Weight::from_ints(const std::vector<long long>& c) {
  std::vector<Rat> v(c.begin(), c.end());
  return numeric(std::move(v));
}

std::vector<Rat> Weight::numeric_coords() const {
  require(is_numeric(), "weight is symbolic where a numeric weight is required");
  std::vector<Rat> v(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) v[i] = coords[i].constant;
  return v;
}

namespace {

void check_compatible(const Weight& a, const Weight& b) {
  check_internal(a.symbols == b.symbols && a.coords.size() == b.coords.size(),
                 "weight arithmetic across different symbol universes");
}

LinForm form_zero(size_t nsym) {
  LinForm f;
  f.coeffs.assign(nsym, Rat(0));
  return f;
}

}  // namespace

Weight add(const Weight& a, const Weight& b) {
  check_compatible(a, b);
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i].constant += b.coords[i].constant;
    for (size_t k = 0; k < r.coords[i].coeffs.size(); ++k)
      r.coords[i].coeffs[k] += b.coords[i].coeffs[k];
  }
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  check_compatible(a, b);
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i].constant -= b.coords[i].constant;
    for (size_t k = 0; k < r.coords[i].coeffs.size(); ++k)
      r.coords[i].coeffs[k] -= b.coords[i].coeffs[k];
  }
  return r;
}

Weight add_numeric(const Weight& a, const std::vector<Rat>& v) {
  check_internal(a.coords.size() == v.size(), "weight/vector size mismatch");
  Weight r = a;
  for (size_t i = 0; i < v.size(); ++i) r.coords[i].constant += v[i];
  return r;
}

Weight sub_numeric(const Weight& a, const std::vector<Rat>& v) {
  check_internal(a.coords.size() == v.size(), "weight/vector size mismatch");
  Weight r = a;
  for (size_t i = 0; i < v.size(); ++i) r.coords[i].constant -= v[i];
  return r;
}

Weight apply_matrix(const QMatrix& m, const Weight& w) {
  check_internal(m.cols() == w.rank() && m.rows() == w.rank(),
                 "weight matrix action shape mismatch");
  Weight r;
  r.symbols = w.symbols;
  r.coords.assign(w.coords.size(), form_zero(w.symbols.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& c = m.at(i, j);
      if (c == 0) continue;
      r.coords[i].constant += c * w.coords[j].constant;
      for (size_t k = 0; k < r.coords[i].coeffs.size(); ++k)
        r.coords[i].coeffs[k] += c * w.coords[j].coeffs[k];
    }
  return r;
}

bool weight_equal(const Weight& a, const Weight& b) {
  check_compatible(a, b);
  return a.coords == b.coords;
}

bool weight_less(const Weight& a, const Weight& b) {
  check_compatible(a, b);
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].constant != b.coords[i].constant)
      return a.coords[i].constant < b.coords[i].constant;
    if (a.coords[i].coeffs != b.coords[i].coeffs)
      return a.coords[i].coeffs < b.coords[i].coeffs;
  }
  return false;
}

bool is_integral(const Weight& w) {
  for (const LinForm& f : w.coords) {
    if (!is_integer(f.constant)) return false;
    for (const Rat& c : f.coeffs)
      if (!is_integer(c)) return false;
  }
  return true;
}

Weight evaluate(const Weight& w, const std::vector<Rat>& values) {
  check_internal(values.size() == w.symbols.size(),
                 "evaluate: one value per symbol required");
  Weight r;
  r.coords.resize(w.coords.size());
  for (size_t i = 0; i < w.coords.size(); ++i) {
    Rat v = w.coords[i].constant;
    for (size_t k = 0; k < values.size(); ++k)
      v += w.coords[i].coeffs[k] * values[k];
    r.coords[i].constant = v;
  }
  return r;
}

bool form_nonneg(const LinForm& f, const std::vector<Symbol>& symbols) {
  for (size_t k = 0; k < f.coeffs.size(); ++k) {
    if (f.coeffs[k] == 0) continue;
    if (!symbols[k].nonneg) return false;
    if (f.coeffs[k] < 0) return false;
  }
  return f.constant >= 0;
}

namespace {

std::string rat_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string to_string(const LinForm& f, const std::vector<Symbol>& symbols) {
  std::string out;
  for (size_t k = 0; k < f.coeffs.size(); ++k) {
    const Rat& c = f.coeffs[k];
    if (c == 0) continue;
    if (c > 0 && !out.empty()) out += "+";
    if (c == -1)
      out += "-";
    else if (c != 1) {
      if (is_integer(c))
        out += rat_string(c);
      else
        out += "(" + rat_string(c) + ")";
    }
    out += symbols[k].name;
  }
  if (f.constant != 0 || out.empty()) {
    if (f.constant > 0 && !out.empty()) out += "+";
    out += rat_string(f.constant);
  }
  return out;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(w.coords[i], w.symbols);
  }
  return out + ")";
}

}  // namespace rbs
