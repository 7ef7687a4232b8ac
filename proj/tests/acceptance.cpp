// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "napp/classify.hpp"
#include "napp/io.hpp"
#include "test_util.hpp"

using namespace napp;
using namespace napp::testutil;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
            << elapsed / 1000.0 << " s)";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

const FieldSpec& F2 = FieldSpec::finite(2, 1);
const FieldSpec& F3 = FieldSpec::finite(3, 1);
const FieldSpec& F4 = FieldSpec::finite(2, 2);

bool defect_paths_agree(std::string& detail) {
  Rng rng(1001);
  struct Case { const FieldSpec* spec; int d; std::vector<int> arities; };
  const std::vector<Case> cases{{&F2, 3, {2, 3, 4}}, {&F3, 2, {2, 3}}};
  for (const auto& c : cases) {
    for (int i = 0; i < 50; ++i) {
      auto tab = random_table(*c.spec, c.d, rng);
      for (int n : c.arities) {
        if (!(defect_table(tab, n) == defect_table_recurrence(tab, n))) {
          detail = "mismatch over " + c.spec->name() + " at n = " + std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

SparsePolynomial random_monomial_instance(Rng& rng, const FieldSpec*& spec_out) {
  const std::int64_t primes[] = {2, 3, 5};
  while (true) {
    const FieldSpec& spec = FieldSpec::finite(primes[rng.below(3)],
                                              1 + static_cast<int>(rng.below(2)));
    const int d = 1 + static_cast<int>(rng.below(3));
    MultiExponent m(d);
    std::int64_t total = 0;
    for (int j = 0; j < d; ++j) {
      m[j] = static_cast<std::int64_t>(rng.below(9));
      total += m[j];
    }
    if (m.is_zero() || total > 8) continue;
    spec_out = &spec;
    FieldElement c = spec.element(1 + static_cast<std::int64_t>(rng.below(spec.q() - 1)));
    return SparsePolynomial::monomial(spec, m, c);
  }
}

bool comb_degree_oracle_agrees(std::string& detail) {
  Rng rng(1002);
  for (int i = 0; i < 100; ++i) {
    const FieldSpec* spec = nullptr;
    auto f = random_monomial_instance(rng, spec);
    if (comb_degree(f) != comb_degree_oracle(f)) {
      detail = "monomial " + f.str() + " over " + spec->name();
      return false;
    }
  }
  for (int i = 0; i < 50; ++i) {
    const FieldSpec* spec = nullptr;
    auto f = random_monomial_instance(rng, spec);
    const int extra = static_cast<int>(rng.below(3));
    for (int t = 0; t < extra; ++t) {
      MultiExponent m(f.dim());
      std::int64_t total = 0;
      for (int j = 0; j < f.dim(); ++j) {
        m[j] = static_cast<std::int64_t>(rng.below(5));
        total += m[j];
      }
      if (m.is_zero() || total > 8) continue;
      f.add_term(m, spec->element(1 + static_cast<std::int64_t>(rng.below(spec->q() - 1))));
    }
    if (comb_degree(f) != comb_degree_oracle(f)) {
      detail = "polynomial " + f.str() + " over " + spec->name();
      return false;
    }
  }
  return true;
}

bool chain_example_golden(std::string& detail) {
  auto result = longest_regular_chains(MultiExponent{7, 4}, F3, true);
  if (result.length != 5) {
    detail = "length " + std::to_string(result.length);
    return false;
  }
  bool found = false;
  for (const auto& chain : result.chains) {
    if (chain.str() == "(7,4)>(4,4)>(1,4)>(0,4)>(0,1)>(0,0)") found = true;
    // re-verify regularity directly through the digit-product binomials
    for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
      std::int64_t prod = 1;
      for (std::size_t j = 0; j < chain.links[i].size(); ++j)
        prod = prod * lucas_binom(chain.links[i][j], chain.links[i + 1][j], 3) % 3;
      if (prod == 0) {
        detail = "non-regular chain " + chain.str();
        return false;
      }
    }
  }
  if (!found) detail = "the expected chain is missing from the enumeration";
  return found;
}

bool cube_defect_golden(std::string& detail) {
  auto d2 = formal_defect(parse_poly("x1^3", F4, 1), 2);
  SparsePolynomial expected(F4, 2);
  expected.add_term(MultiExponent{1, 2}, F4.one());
  expected.add_term(MultiExponent{2, 1}, F4.one());
  if (d2.poly != expected) {
    detail = "formal defect is " + d2.str();
    return false;
  }
  auto result = defect_as_form(to_table(parse_poly("x1^3", F4, 1)), 2);
  if (result.ok()) {
    detail = "defect_as_form unexpectedly succeeded";
    return false;
  }
  if (result.witness->kind != LinearityWitness::Kind::homogeneity ||
      result.witness->scalar.code() < 2) {
    detail = "witness not a proper-extension scalar: " + result.witness->describe();
    return false;
  }
  return true;
}

bool realization_roundtrip(std::string& detail) {
  // full enumeration over GF(2)^2, filtered by the characteristic test
  for (int n = 2; n <= 3; ++n) {
    const auto tuples = SymmetricForm::canonical_tuples(n, 2);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << tuples.size()); ++code) {
      SymmetricForm phi(F2, n, 2);
      std::uint64_t rem = code;
      for (const auto& idx : tuples) {
        phi.set_basis_value(idx, F2.element(static_cast<std::int64_t>(rem % 2)));
        rem /= 2;
      }
      if (!is_characteristic(phi).ok) continue;
      auto alpha = realize(phi);
      if (!is_homogeneous_of_degree(alpha, n) || !is_totally_reduced(alpha)) {
        detail = "realization shape violated over GF(2)^2";
        return false;
      }
      auto back = defect_as_form(to_table(alpha), n);
      if (!back.ok() || !(*back.form == phi)) {
        detail = "round-trip failed over GF(2)^2 at n = " + std::to_string(n);
        return false;
      }
    }
  }
  // seeded random characteristic forms
  Rng rng(1005);
  struct Case { const FieldSpec* spec; int n; };
  for (auto [spec, n] : {Case{&F3, 3}, Case{&F4, 2}, Case{&F4, 3}}) {
    auto basis = characteristic_form_basis(*spec, 2, n);
    for (int i = 0; i < 50; ++i) {
      SymmetricForm phi(*spec, n, 2);
      for (const auto& b : basis) {
        FieldElement c = random_element(*spec, rng);
        for (const auto& [idx, val] : b.values())
          phi.set_basis_value(idx, phi.basis_value(idx) + c * val);
      }
      auto alpha = realize(phi);
      if (!is_homogeneous_of_degree(alpha, n) || !is_totally_reduced(alpha)) {
        detail = "realization shape violated over " + spec->name();
        return false;
      }
      auto back = defect_as_form(to_table(alpha), n);
      if (!back.ok() || !(*back.form == phi)) {
        detail = "round-trip failed over " + spec->name() + " at n = " + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool strange_form_classification(std::string& detail) {
  auto f = parse_poly("x1*x2*x3*x4*x5 + x1^2*x2^2*x3^2*x4^2", F4, 5);
  auto report = classify(f, 5, Budget{}, 2026);
  if (!report.is_n_application || report.degree != 8 || report.comb_degree != 5) {
    detail = "report fields wrong";
    return false;
  }
  if (report.semantic.status != SemanticCheckResult::Status::passed) {
    detail = "semantic check did not pass: " + report.semantic.witness;
    return false;
  }
  if (report.semantic.scaling_mode != "exhaustive") {
    detail = "scaling law was not checked exhaustively";
    return false;
  }
  if (report.semantic.linearity_mode != "sampled" || report.semantic.samples != 1000) {
    detail = "linearity sampling was not 1000 seeded tuples";
    return false;
  }
  return true;
}

bool counterexample_constructor(std::string& detail) {
  auto five = construct_counterexample(F4, 5, 5);
  if (five != parse_poly("x1*x2*x3*x4*x5 + x1^2*x2^2*x3^2*x4^2", F4, 5)) {
    detail = "(q=4, n=5) is not the two-term degree-8 polynomial";
    return false;
  }
  struct Case { const FieldSpec* spec; int n; };
  for (auto [spec, n] : {Case{&F4, 6}, Case{&FieldSpec::finite(3, 2), 9}}) {
    auto f = construct_counterexample(*spec, n, n);
    auto report = classify(f, n, Budget{}, 2027);
    const std::int64_t expected_degree = n + spec->q() - 1;
    if (!report.is_n_application || report.degree != expected_degree ||
        report.comb_degree != n) {
      detail = "classification wrong over " + spec->name() + " at n = " + std::to_string(n);
      return false;
    }
    if (report.semantic.status == SemanticCheckResult::Status::failed) {
      detail = "semantic check failed over " + spec->name();
      return false;
    }
  }
  try {
    construct_counterexample(F4, 4, 5);
    detail = "n = 4 was not rejected";
    return false;
  } catch (const error& e) {
    if (std::string(e.what()).find("4 < 5") == std::string::npos) {
      detail = std::string("diagnostic does not cite n < 5: ") + e.what();
      return false;
    }
  }
  return true;
}

bool repeated_argument_vanishing(std::string& detail) {
  Rng rng(1008);
  for (int i = 0; i < 50; ++i) {
    auto tab = random_table(F2, 3, rng);
    for (std::uint64_t u = 0; u < 8; ++u) {
      Point pu = point_at_index(F2, 3, u);
      if (!defect_at(tab, std::vector<Point>{pu, pu}).is_zero()) {
        detail = "second defect nonzero on a repeated pair over GF(2)^3";
        return false;
      }
      for (std::uint64_t v = 0; v < 8; ++v) {
        Point pv = point_at_index(F2, 3, v);
        if (!defect_at(tab, std::vector<Point>{pu, pu, pv}).is_zero()) {
          detail = "third defect nonzero on a repeated pair over GF(2)^3";
          return false;
        }
      }
    }
  }
  for (int i = 0; i < 50; ++i) {
    auto tab = random_table(F3, 2, rng);
    for (std::uint64_t u = 0; u < 9; ++u) {
      Point pu = point_at_index(F3, 2, u);
      if (!defect_at(tab, std::vector<Point>{pu, pu, pu}).is_zero()) {
        detail = "third defect nonzero on a tripled argument over GF(3)^2";
        return false;
      }
    }
  }
  return true;
}

bool reduction_function_equivalence(std::string& detail) {
  Rng rng(1009);
  struct Case { const FieldSpec* spec; int d; };
  for (auto [spec, d] : {Case{&F3, 2}, Case{&F4, 1}}) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_poly(*spec, d, rng, 3, 2 * spec->q(), false);
      auto g = random_poly(*spec, d, rng, 3, 2 * spec->q(), false);
      if ((reduce(f) == reduce(g)) != (to_table(f) == to_table(g))) {
        detail = "equivalence broken over " + spec->name();
        return false;
      }
    }
  }
  return true;
}

bool basis_change_invariance(std::string& detail) {
  Rng rng(1010);
  for (const FieldSpec* spec : {&F3, &F4}) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_reduced_poly(*spec, 2, rng, 4);
      Matrix C = random_invertible_matrix(*spec, 2, rng);
      auto g = change_of_basis(f, C);
      if (g.degree() != f.degree() || g.p_degree() != f.p_degree()) {
        detail = "degree drift over " + spec->name();
        return false;
      }
      for (std::int64_t n = 1; n <= 5; ++n) {
        if (tpl_member(g, n) != tpl_member(f, n) || dpl_member(g, n) != dpl_member(f, n)) {
          detail = "membership drift over " + spec->name() + " at n = " + std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

bool biconditionals(std::string& detail) {
  auto scaling_law = [](const SparsePolynomial& f, int n) {
    const FieldSpec& spec = f.field();
    std::uint64_t points = 1;
    for (int i = 0; i < f.dim(); ++i) points *= static_cast<std::uint64_t>(spec.q());
    for (std::uint64_t ui = 0; ui < points; ++ui) {
      Point u = point_at_index(spec, f.dim(), ui);
      for (const FieldElement& a : spec.elements())
        if (f.eval(scale_point(a, u)) != a.pow(n) * f.eval(u)) return false;
    }
    return true;
  };
  auto check_one = [&](const SparsePolynomial& f, int n, std::string& why) {
    if (dpl_member(f, n) != scaling_law(f, n)) {
      why = "scaling biconditional fails for " + f.str();
      return false;
    }
    if (f.p_degree() <= n) {
      if (tpl_member(f, n) != defect_as_form(to_table(f), n).ok()) {
        why = "linearity biconditional fails for " + f.str();
        return false;
      }
    }
    return true;
  };
  // exhaustive corpus over GF(2)^2
  for (int mask = 0; mask < 8; ++mask) {
    SparsePolynomial f(F2, 2);
    if (mask & 1) f.add_term(MultiExponent{1, 0}, F2.one());
    if (mask & 2) f.add_term(MultiExponent{0, 1}, F2.one());
    if (mask & 4) f.add_term(MultiExponent{1, 1}, F2.one());
    for (int n = 2; n <= 3; ++n)
      if (!check_one(f, n, detail)) return false;
  }
  // 200 seeded random reduced polynomials over GF(4)^2
  Rng rng(1011);
  for (int i = 0; i < 200; ++i) {
    auto f = random_reduced_poly(F4, 2, rng, 4);
    for (int n = 2; n <= 3; ++n)
      if (!check_one(f, n, detail)) return false;
  }
  return true;
}

bool lucas_against_bigint(std::string& detail) {
  const int limit = 200;
  // Pascal triangle with exact big integers
  std::vector<std::vector<BigInt>> pascal(limit + 1);
  for (int a = 0; a <= limit; ++a) {
    pascal[a].resize(a + 1, 1);
    for (int b = 1; b < a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t a = 0; a <= limit; ++a) {
      for (std::int64_t b = 0; b <= limit; ++b) {
        BigInt exact = b > a ? BigInt(0) : pascal[a][b] % p;
        if (lucas_binom(a, b, p) != exact.convert_to<std::int64_t>()) {
          detail = "binom(" + std::to_string(a) + "," + std::to_string(b) + ") mod " +
                   std::to_string(p);
          return false;
        }
      }
    }
  }
  return true;
}

bool quadratic_demo(std::string& detail) {
  auto odd = quadratic_correspondence_demo(F3, 2);
  if (!(odd.form_count == 27 && odd.napp_count == 27 && odd.injective && odd.bijective &&
        odd.mapped_all_are_napps && odd.all_recovered)) {
    detail = "GF(3)^2 bijection violated";
    return false;
  }
  auto even = quadratic_correspondence_demo(F2, 3);
  if (!(even.form_count == 8 && even.all_recovered && even.fibered)) {
    detail = "GF(2)^3 alternating recovery violated";
    return false;
  }
  if (even.nonuniqueness.empty()) {
    detail = "missing non-uniqueness witness pair";
    return false;
  }
  // the recorded witness pair: distinct reduced polynomials, equal defects
  auto alpha = parse_poly("x1*x2", F2, 3);
  auto alpha2 = parse_poly("x1*x2 + x1", F2, 3);
  if (!(alpha != alpha2 &&
        defect_table(to_table(alpha), 2) == defect_table(to_table(alpha2), 2))) {
    detail = "witness pair does not share its second defect";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "inclusion-exclusion defect equals the recurrence defect", defect_paths_agree);
  criterion(2, "combinatorial degree formula matches the symbolic oracle", comb_degree_oracle_agrees);
  criterion(3, "longest regular chains of (7,4) in characteristic 3", chain_example_golden);
  criterion(4, "second defect of the cube over GF(4)", cube_defect_golden);
  criterion(5, "realization round-trip for characteristic forms", realization_roundtrip);
  criterion(6, "the two-term degree-8 polynomial is a 5-application", strange_form_classification);
  criterion(7, "inhomogeneous counterexample constructor", counterexample_constructor);
  criterion(8, "defects vanish on characteristic-fold repeated arguments", repeated_argument_vanishing);
  criterion(9, "reduction equality coincides with function equality", reduction_function_equivalence);
  criterion(10, "degrees and memberships are basis-change invariant", basis_change_invariance);
  criterion(11, "syntactic memberships match their semantic laws", biconditionals);
  criterion(12, "digit-product binomials match exact binomials", lucas_against_bigint);
  criterion(13, "quadratic correspondence over GF(3)^2 and GF(2)^3", quadratic_demo);
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures;
}
