#ifndef NAPP_TEST_UTIL_HPP
#define NAPP_TEST_UTIL_HPP

#include <vector>

#include "napp/linalg.hpp"
#include "napp/poly.hpp"

namespace napp::testutil {

inline FieldElement random_element(const FieldSpec& spec, Rng& rng) {
  return spec.element(static_cast<std::int64_t>(rng.below(spec.q())));
}

inline Point random_point(const FieldSpec& spec, int d, Rng& rng) {
  Point p;
  for (int i = 0; i < d; ++i) p.push_back(random_element(spec, rng));
  return p;
}

// random polynomial over a finite field; exponents < max_exp per variable
inline SparsePolynomial random_poly(const FieldSpec& spec, int d, Rng& rng,
                                    int max_terms, std::int64_t max_exp,
                                    bool zero_at_origin = true) {
  SparsePolynomial f(spec, d);
  const int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < terms; ++t) {
    MultiExponent m(d);
    for (int i = 0; i < d; ++i) m[i] = static_cast<std::int64_t>(rng.below(max_exp));
    if (zero_at_origin && m.is_zero()) continue;
    f.add_term(m, random_element(spec, rng));
  }
  return f;
}

// random reduced polynomial with f(0) = 0
inline SparsePolynomial random_reduced_poly(const FieldSpec& spec, int d, Rng& rng,
                                            int max_terms) {
  return random_poly(spec, d, rng, max_terms, spec.q());
}

inline FunctionTable random_table(const FieldSpec& spec, int d, Rng& rng) {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) n *= static_cast<std::uint64_t>(spec.q());
  std::vector<FieldElement> values;
  values.push_back(spec.zero());  // value 0 at the origin
  for (std::uint64_t i = 1; i < n; ++i) values.push_back(random_element(spec, rng));
  return FunctionTable(spec, d, std::move(values));
}

inline Matrix random_invertible_matrix(const FieldSpec& spec, int d, Rng& rng) {
  while (true) {
    Matrix m(d, std::vector<FieldElement>(d, spec.zero()));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = random_element(spec, rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace napp::testutil

#endif
