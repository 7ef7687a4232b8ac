#ifndef NAPP_POLARIZE_HPP
#define NAPP_POLARIZE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "napp/poly.hpp"

namespace napp {

// digit sum of t in base p (p prime)
std::int64_t p_weight(std::int64_t t, std::int64_t p);
// p-weight with respect to a field's characteristic; over Q this is t itself
std::int64_t p_weight(std::int64_t t, const FieldSpec& spec);
// sum of p-weights of the exponents, the p-degree of the monomial x^m
std::int64_t p_degree_of(const MultiExponent& m, const FieldSpec& spec);

// binom(a, b) mod p via the digit-product rule
std::int64_t lucas_binom(std::int64_t a, std::int64_t b, std::int64_t p);
// generalized binomial prod_i binom(m_i, n_i) as an element of the field
FieldElement multi_binom(const MultiExponent& m, const MultiExponent& n,
                         const FieldSpec& spec);

// n-th defect of a polynomial, expanded formally over n blocks of the base
// variables: variable (block i, coordinate j) lives at flat index (i-1)*d + j-1.
struct FormalDefect {
  int n = 0;
  int base_dim = 0;
  SparsePolynomial poly;

  static int var_index(int block, int coord, int base_dim) {
    return (block - 1) * base_dim + (coord - 1);
  }
  bool is_zero() const { return poly.is_zero(); }
  std::string str() const;  // block naming x{i}_{j}
};

// inclusion-exclusion expansion over nonempty subsets of the blocks;
// requires f(0) = 0
FormalDefect formal_defect(const SparsePolynomial& f, int n);

// Same defect computed from the chain expansion for a single monomial:
// sum over chains m = m_1 > ... > m_s > 0 of the product of consecutive
// generalized binomials times x_1^{m_s} x_2^{m_{s-1}-m_s} ... x_s^{m_1-m_2}.
FormalDefect formal_defect_via_chains(const SparsePolynomial& monomial, int s,
                                      std::uint64_t budget = Budget{}.chain_count);

// Strictly decreasing multiexponents m_1 > ... > m_s > 0 with every
// consecutive generalized binomial nonzero in the field.
struct RegularChain {
  std::vector<MultiExponent> links;
  std::string str() const;  // "(7,4)>(4,4)>...>(0,0)" with the zero terminal shown
};

struct ChainsResult {
  std::int64_t length = 0;  // sum of the p-weights of the exponents
  std::vector<RegularChain> chains;  // empty unless enumeration was requested
};

// Longest regular chains for m != 0. Enumeration proceeds by decrementing a
// single base-p digit per step; every emitted chain is re-checked against the
// binomial condition.
ChainsResult longest_regular_chains(const MultiExponent& m, const FieldSpec& spec,
                                    bool enumerate_all,
                                    std::uint64_t budget = Budget{}.chain_count);

// Terminal one-hot multiexponents (0,..,p^j,..,0) reachable by longest
// regular chains: one entry per nonzero base-p digit of m. Only j = 0
// terminals occur exactly when x^m is totally reduced.
struct LastLink {
  int coord = 0;   // 0-based coordinate carrying the terminal power
  int digit = 0;   // j in p^j
  std::int64_t power = 0;  // p^j
  bool operator==(const LastLink& o) const {
    return coord == o.coord && digit == o.digit && power == o.power;
  }
};
std::vector<LastLink> last_link_profile(const MultiExponent& m, const FieldSpec& spec);

// Dense table of an n-argument form V^n -> F; index = concatenation of the
// n point indices, first argument most significant.
struct DefectTable {
  const FieldSpec* spec = nullptr;
  int dim = 0;
  int n = 0;
  std::vector<FieldElement> values;

  std::uint64_t tuple_count() const { return values.size(); }
  bool operator==(const DefectTable& o) const {
    return spec == o.spec && dim == o.dim && n == o.n && values == o.values;
  }
};

// single defect value by inclusion-exclusion; args.size() == n
FieldElement defect_at(const FunctionTable& table, std::span<const Point> args);
// defect values on an explicit tuple list
std::vector<FieldElement> defect_on_tuples(const FunctionTable& table, int n,
                                           std::span<const std::vector<Point>> tuples);

// full dense n-th defect by inclusion-exclusion (requires table(0) = 0)
DefectTable defect_table(const FunctionTable& table, int n,
                         std::uint64_t budget = Budget{}.table_points);
// same table built level by level from the three-term recurrence
DefectTable defect_table_recurrence(const FunctionTable& table, int n,
                                    std::uint64_t budget = Budget{}.table_points);

// combinatorial degree via the p-degree formula; -1 for the zero polynomial,
// requires f(0) = 0
std::int64_t comb_degree(const SparsePolynomial& f);
// independent oracle: expand defects symbolically until they vanish
std::int64_t comb_degree_oracle(const SparsePolynomial& f, int cap = 32);

}  // namespace napp

#endif
