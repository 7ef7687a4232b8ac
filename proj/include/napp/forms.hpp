#ifndef NAPP_FORMS_HPP
#define NAPP_FORMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "napp/polarize.hpp"

namespace napp {

// Symmetric n-linear form V^n -> F stored by its values on basis tuples.
// Keys are non-decreasing index tuples (i_1 <= ... <= i_n) with 1-based
// indices; the map always holds all C(d+n-1, n) entries.
class SymmetricForm {
 public:
  SymmetricForm(const FieldSpec& spec, int n, int d);  // zero form

  const FieldSpec& field() const { return *spec_; }
  int arity() const { return n_; }
  int dim() const { return d_; }
  const std::map<std::vector<int>, FieldElement>& values() const { return values_; }

  // index tuples are sorted before lookup, so any order is accepted
  const FieldElement& basis_value(std::vector<int> idx) const;
  void set_basis_value(std::vector<int> idx, const FieldElement& v);

  // full multilinear expansion; args.size() == n, each of dimension d
  FieldElement eval(std::span<const Point> args) const;

  bool operator==(const SymmetricForm& o) const;
  bool operator!=(const SymmetricForm& o) const { return !(*this == o); }

  static std::vector<std::vector<int>> canonical_tuples(int n, int d);

 private:
  const FieldSpec* spec_;
  int n_;
  int d_;
  std::map<std::vector<int>, FieldElement> values_;
};

// Result of the characteristic test: vanishing of phi(p*u, v_1, ..., v_{n-p})
// for every u (full space) and basis tuples in the free slots. Forms of arity
// below the characteristic are characteristic outright, as is everything
// over Q.
struct CharacteristicWitness {
  Point u;
  std::vector<int> rest;  // basis indices of the free slots
  std::string describe() const;
};

struct CharacteristicCheck {
  bool ok = false;
  std::optional<CharacteristicWitness> witness;
};

CharacteristicCheck is_characteristic(const SymmetricForm& phi,
                                      std::uint64_t budget = Budget{}.exhaustive_points);

// The homogeneous degree-n polynomial with all exponents below the
// characteristic whose n-th defect is phi. Coefficients arise from the
// multinomial n!/(t_1!...t_d!) by formally dividing n! out: both sides are
// stripped of their p-adic part (equal by construction when every t_i < p)
// and the unit parts are divided in F.
SparsePolynomial realize(const SymmetricForm& phi);

// phi(n*u)/n!, expanded symbolically; requires n < char F
SparsePolynomial recover_small_arity(const SymmetricForm& phi);

// Failure evidence for n-linearity of a table defect.
struct LinearityWitness {
  enum class Kind { additivity, homogeneity };
  Kind kind = Kind::additivity;
  Point u;
  Point w;              // additivity only
  FieldElement scalar;  // homogeneity only
  std::vector<Point> rest;
  std::string describe() const;
};

struct DefectFormResult {
  std::optional<SymmetricForm> form;
  std::optional<LinearityWitness> witness;
  bool ok() const { return form.has_value(); }
};

// Computes the n-th defect of the table on basis tuples, then verifies
// n-linearity semantically: additivity in the first slot over all point
// pairs and homogeneity over all scalars and points, with basis tuples in
// the remaining slots (symmetry covers the rest). Returns the form on
// success or a concrete witness on failure.
DefectFormResult defect_as_form(const FunctionTable& table, int n,
                                std::uint64_t budget = Budget{}.exhaustive_points);

// Basis of the space of characteristic n-linear forms over a finite field,
// via the null space of the vanishing constraints on basis values. Over Q
// every symmetric form qualifies, so the basis has one form per canonical
// tuple.
std::vector<SymmetricForm> characteristic_form_basis(const FieldSpec& spec, int d, int n,
                                                     std::uint64_t budget = Budget{}.exhaustive_points);

}  // namespace napp

#endif
