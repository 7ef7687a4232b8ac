#ifndef NAPP_CLASSIFY_HPP
#define NAPP_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "napp/forms.hpp"

namespace napp {

// n-th defect of a polynomial evaluated at explicit points (inclusion-
// exclusion over subset sums); no table required.
FieldElement poly_defect_at(const SparsePolynomial& f, std::span<const Point> args);

// Semantic verification of the n-application laws, independent of the
// syntactic tests: the scaling law f(a u) = a^n f(u), exhaustively when q^d
// fits the budget and by seeded sampling otherwise, and n-linearity of the
// n-th defect, via the full table sweep when q^{(n+1)d} fits the budget and
// by seeded sampling otherwise.
struct SemanticCheckResult {
  enum class Status { passed, failed, skipped };
  Status status = Status::skipped;
  std::string scaling_mode;    // "exhaustive" or "sampled"
  std::string linearity_mode;  // "full" or "sampled"
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // per sampled law
  std::string witness;        // populated when status == failed
  std::string skip_reason;    // populated when status == skipped
};

SemanticCheckResult semantic_napp_check(const SparsePolynomial& f, int n,
                                        const Budget& budget = Budget{},
                                        std::uint64_t seed = 0);

struct ClassificationReport {
  int n = 0;
  std::int64_t degree = -1;
  std::int64_t comb_degree = -1;
  bool pl = false;
  bool tpl = false;
  bool dpl = false;
  std::optional<MultiExponent> tpl_offending;
  std::optional<MultiExponent> dpl_offending;
  bool is_n_application = false;  // = tpl && dpl
  bool homogeneous_of_degree_n = false;
  SemanticCheckResult semantic;
};

// Requires reduced input with f(0) = 0.
ClassificationReport classify(const SparsePolynomial& f, int n,
                              const Budget& budget = Budget{}, std::uint64_t seed = 0);

// Inhomogeneous n-application of degree n + q - 1: the product of the first
// n variables plus a second monomial whose exponents are powers of p chosen
// from the lexicographically least digit vector (a_0, ..., a_{e-1}) with
// sum_i a_i p^i = n + q - 1 and sum_i a_i < n. Requires e >= 2,
// n >= max(5, q), d >= n.
SparsePolynomial construct_counterexample(const FieldSpec& spec, int n, int d);

// Quadratic correspondence at n = 2: enumerate symmetric bilinear forms
// (alternating forms in characteristic two), realize each as a polynomial,
// and compare against the enumerated 2-applications.
struct QuadraticDemoReport {
  std::string field;
  int dim = 0;
  bool char_two = false;
  std::uint64_t form_count = 0;    // symmetric bilinear / alternating forms
  std::uint64_t napp_count = 0;    // reduced 2-applications with f(0) = 0
  std::uint64_t kernel_count = 0;  // 2-applications with vanishing second defect
  bool mapped_all_are_napps = false;
  bool all_recovered = false;  // second defect of each realization equals its form
  bool injective = false;
  bool bijective = false;  // realized set equals the 2-application set
  bool fibered = false;    // napp_count == form_count * kernel_count
  std::string nonuniqueness;  // char 2: witness pair with identical defects
};

QuadraticDemoReport quadratic_correspondence_demo(const FieldSpec& spec, int d,
                                                  const Budget& budget = Budget{});

// Dimension bookkeeping for the quotient correspondence: the dimension of the
// space of characteristic n-linear forms must match the count of admissible
// monomials in tpl∩dpl minus those already in pl_{n-1}∩dpl.
struct DimensionReport {
  std::string field;
  int dim = 0;
  int n = 0;
  std::uint64_t dim_characteristic_forms = 0;
  std::uint64_t dim_tpl_dpl = 0;
  std::uint64_t dim_pl_dpl = 0;
  bool equal = false;
};

DimensionReport correspondence_dimension_check(const FieldSpec& spec, int d, int n,
                                               const Budget& budget = Budget{});

}  // namespace napp

#endif
