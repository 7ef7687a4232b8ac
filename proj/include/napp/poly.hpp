#ifndef NAPP_POLY_HPP
#define NAPP_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "napp/field.hpp"

namespace napp {

// Exponent tuple (m_1, ..., m_d). Ordered lexicographically; the partial
// order used by chains (coordinatewise <=) is exposed as dominates().
class MultiExponent {
 public:
  MultiExponent() = default;
  explicit MultiExponent(std::size_t d) : m_(d, 0) {}
  explicit MultiExponent(std::vector<std::int64_t> m) : m_(std::move(m)) {}
  MultiExponent(std::initializer_list<std::int64_t> m) : m_(m) {}

  std::size_t size() const { return m_.size(); }
  std::int64_t operator[](std::size_t i) const { return m_[i]; }
  std::int64_t& operator[](std::size_t i) { return m_[i]; }
  const std::vector<std::int64_t>& exponents() const { return m_; }

  std::int64_t total_degree() const;
  bool is_zero() const;

  bool operator==(const MultiExponent& o) const { return m_ == o.m_; }
  bool operator!=(const MultiExponent& o) const { return m_ != o.m_; }
  bool operator<(const MultiExponent& o) const { return m_ < o.m_; }  // lex

  std::string str() const;  // "(m1,m2,...)"
  static MultiExponent parse(std::string_view text);

 private:
  std::vector<std::int64_t> m_;
};

// a >= b coordinatewise
bool dominates(const MultiExponent& a, const MultiExponent& b);
MultiExponent subtract(const MultiExponent& a, const MultiExponent& b);

using Point = std::vector<FieldElement>;

// Sparse multivariate polynomial with exact coefficients. Zero coefficients
// are never stored; terms iterate in lexicographic exponent order.
class SparsePolynomial {
 public:
  SparsePolynomial(const FieldSpec& spec, int dim);
  static SparsePolynomial monomial(const FieldSpec& spec, const MultiExponent& m,
                                   const FieldElement& coeff);

  const FieldSpec& field() const { return *spec_; }
  int dim() const { return dim_; }
  const std::map<MultiExponent, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // merges with any existing term and drops the entry if it cancels
  void add_term(const MultiExponent& m, const FieldElement& coeff);
  FieldElement coeff(const MultiExponent& m) const;
  FieldElement constant_term() const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial scaled(const FieldElement& c) const;
  SparsePolynomial pow(std::int64_t k) const;
  bool operator==(const SparsePolynomial& o) const;
  bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

  // exact evaluation with the convention 0^0 = 1
  FieldElement eval(std::span<const FieldElement> point) const;

  std::int64_t degree() const;    // max total degree; -1 for the zero polynomial
  std::int64_t p_degree() const;  // max sum of p-weights of exponents; -1 for zero

  std::string str() const;
  std::string str(const std::function<std::string(int)>& var_name) const;

 private:
  const FieldSpec* spec_;
  int dim_;
  std::map<MultiExponent, FieldElement> terms_;
};

// Grammar: terms joined by '+'; term = optional coefficient literal followed
// by '*'-separated powers xK^E (E omitted means 1); whitespace ignored.
SparsePolynomial parse_poly(std::string_view text, const FieldSpec& spec, int dim);
// largest variable index mentioned in a polynomial text, at least 1
int max_variable_index(std::string_view text);

// Unique representative with every exponent below q: positive exponents map
// to the residue in [1, q-1] mod (q-1), exponent 0 stays 0. Identity over Q.
SparsePolynomial reduce(const SparsePolynomial& f);
bool is_reduced(const SparsePolynomial& f);

// every exponent strictly below the characteristic (always true over Q)
bool is_totally_reduced(const SparsePolynomial& f);
bool is_totally_reduced(const MultiExponent& m, const FieldSpec& spec);

bool is_homogeneous_of_degree(const SparsePolynomial& f, std::int64_t n);

// Dense value table of a mapping F^d -> F, indexed in lexicographic order of
// the coordinate encodings (first coordinate most significant).
class FunctionTable {
 public:
  FunctionTable(const FieldSpec& spec, int dim, std::vector<FieldElement> values);

  const FieldSpec& field() const { return *spec_; }
  int dim() const { return dim_; }
  std::uint64_t size() const { return values_.size(); }
  const std::vector<FieldElement>& values() const { return values_; }

  const FieldElement& at(std::uint64_t index) const { return values_[index]; }
  const FieldElement& at(std::span<const FieldElement> point) const;
  std::uint64_t index_of(std::span<const FieldElement> point) const;
  Point point_at(std::uint64_t index) const;

  bool operator==(const FunctionTable& o) const;

 private:
  const FieldSpec* spec_;
  int dim_;
  std::vector<FieldElement> values_;
};

// number of points q^d, guarded by the budget
std::uint64_t space_size(const FieldSpec& spec, int dim, std::uint64_t budget);

FunctionTable to_table(const SparsePolynomial& f, std::uint64_t budget = Budget{}.table_points);
// the unique reduced polynomial realizing the table (Lagrange interpolation)
SparsePolynomial interpolate(const FunctionTable& table);

// Realizes the same mapping with respect to the basis e_i* = sum_j C[i][j] e_j:
// substitutes the linear forms, expands exactly, reduces. C must be invertible.
SparsePolynomial change_of_basis(const SparsePolynomial& f,
                                 const std::vector<std::vector<FieldElement>>& C);

// Membership tests for the spaces of mappings with combinatorial degree <= n
// (pl), with totally reduced top monomials (tpl), and with all monomial
// degrees nonzero and congruent to n mod q-1 (dpl; degree exactly n over Q).
// pl/tpl require f(0) = 0.
bool pl_member(const SparsePolynomial& f, std::int64_t n);
bool tpl_member(const SparsePolynomial& f, std::int64_t n);
bool dpl_member(const SparsePolynomial& f, std::int64_t n);
// offending monomial when membership fails
std::optional<MultiExponent> tpl_offender(const SparsePolynomial& f, std::int64_t n);
std::optional<MultiExponent> dpl_offender(const SparsePolynomial& f, std::int64_t n);

// point helpers for V = F^d
Point zero_point(const FieldSpec& spec, int dim);
Point unit_point(const FieldSpec& spec, int dim, int coord);  // coord is 0-based
Point add_points(const Point& a, const Point& b);
Point scale_point(const FieldElement& c, const Point& a);
std::uint64_t point_index(const Point& p);
Point point_at_index(const FieldSpec& spec, int dim, std::uint64_t index);
std::string point_str(const Point& p);

}  // namespace napp

#endif
