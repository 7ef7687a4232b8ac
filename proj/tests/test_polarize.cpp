#include <doctest.h>

#include <algorithm>
#include <set>

#include "napp/polarize.hpp"
#include "test_util.hpp"

using namespace napp;
using namespace napp::testutil;

namespace {
const FieldSpec& F2 = FieldSpec::finite(2, 1);
const FieldSpec& F3 = FieldSpec::finite(3, 1);
const FieldSpec& F4 = FieldSpec::finite(2, 2);
const FieldSpec& QQ = FieldSpec::rationals();

SparsePolynomial mono(const FieldSpec& spec, std::initializer_list<std::int64_t> e) {
  return SparsePolynomial::monomial(spec, MultiExponent(e), spec.one());
}
}  // namespace

TEST_CASE("p-weight goldens") {
  CHECK(p_weight(7, 3) == 3);
  CHECK(p_weight(4, 3) == 2);
  CHECK(p_weight(0, 2) == 0);
  CHECK(p_weight(42, QQ) == 42);
  CHECK(p_weight(7, F3) == 3);
}

TEST_CASE("lucas binomials match exact big-integer binomials") {
  CHECK(lucas_binom(7, 4, 3) == 2);  // 35 mod 3
  CHECK(lucas_binom(9, 0, 5) == 1);
  CHECK(lucas_binom(2, 1, 2) == 0);
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t a = 0; a <= 60; ++a) {
      for (std::int64_t b = 0; b <= a; ++b) {
        BigInt exact = binomial(a, b) % p;
        CHECK(lucas_binom(a, b, p) == exact.convert_to<std::int64_t>());
      }
    }
  }
}

TEST_CASE("longest regular chains for (7,4) in characteristic 3") {
  auto result = longest_regular_chains(MultiExponent{7, 4}, F3, true);
  CHECK(result.length == 5);
  bool found = false;
  for (const auto& chain : result.chains) {
    CHECK(chain.links.size() == 5);
    // every consecutive binomial is nonzero in F
    for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
      CHECK(dominates(chain.links[i], chain.links[i + 1]));
      CHECK(!multi_binom(chain.links[i], chain.links[i + 1], F3).is_zero());
    }
    if (chain.str() == "(7,4)>(4,4)>(1,4)>(0,4)>(0,1)>(0,0)") found = true;
  }
  CHECK(found);
}

TEST_CASE("chains for the exponent 3 in characteristic 2") {
  auto result = longest_regular_chains(MultiExponent{3}, F4, true);
  CHECK(result.length == 2);
  std::set<std::string> strs;
  for (const auto& c : result.chains) strs.insert(c.str());
  CHECK(strs == std::set<std::string>{"(3)>(2)>(0)", "(3)>(1)>(0)"});
}

TEST_CASE("all-ones multiexponents have chains of full length") {
  auto result = longest_regular_chains(MultiExponent{1, 1, 1}, F2, true);
  CHECK(result.length == 3);
  CHECK(result.chains.size() == 6);  // orderings of clearing three coordinates
  auto rational = longest_regular_chains(MultiExponent{2, 1}, QQ, true);
  CHECK(rational.length == 3);
  CHECK_THROWS_AS(longest_regular_chains(MultiExponent{0, 0}, F2, false), error);
}

TEST_CASE("last links are the nonzero digit positions") {
  auto profile = last_link_profile(MultiExponent{3}, F4);
  REQUIRE(profile.size() == 2);
  CHECK(profile[0] == LastLink{0, 0, 1});
  CHECK(profile[1] == LastLink{0, 1, 2});

  auto ones = last_link_profile(MultiExponent{1, 1}, F3);
  for (const auto& l : ones) CHECK(l.power == 1);

  auto two = last_link_profile(MultiExponent{2}, F3);
  REQUIRE(two.size() == 1);
  CHECK(two[0].power == 1);
}

TEST_CASE("last links agree with enumerated chain terminals") {
  Rng rng(21);
  for (const FieldSpec* spec : {&F2, &F3, &F4}) {
    for (int i = 0; i < 20; ++i) {
      MultiExponent m(2);
      m[0] = static_cast<std::int64_t>(rng.below(7));
      m[1] = static_cast<std::int64_t>(rng.below(7));
      if (m.is_zero()) continue;
      auto chains = longest_regular_chains(m, *spec, true);
      std::set<std::pair<int, std::int64_t>> terminals;
      for (const auto& c : chains.chains) {
        const MultiExponent& last = c.links.back();
        for (std::size_t j = 0; j < last.size(); ++j)
          if (last[j] != 0) terminals.insert({static_cast<int>(j), last[j]});
      }
      std::set<std::pair<int, std::int64_t>> profile;
      for (const auto& l : last_link_profile(m, *spec))
        profile.insert({l.coord, l.power});
      CHECK(terminals == profile);
      // only unit powers exactly when the monomial is totally reduced
      bool all_unit = std::all_of(profile.begin(), profile.end(),
                                  [](const auto& t) { return t.second == 1; });
      CHECK(all_unit == is_totally_reduced(m, *spec));
    }
  }
}

TEST_CASE("the first defect is the map itself") {
  Rng rng(22);
  auto tab = random_table(F3, 2, rng);
  auto d1 = defect_table(tab, 1);
  CHECK(d1.values == tab.values());
}

TEST_CASE("second defect of u^2 over GF(3) is 2uv") {
  auto tab = to_table(parse_poly("x1^2", F3, 1));
  auto d2 = defect_table(tab, 2);
  for (std::int64_t u = 0; u < 3; ++u) {
    for (std::int64_t v = 0; v < 3; ++v) {
      FieldElement expected = F3.element(2) * F3.element(u) * F3.element(v);
      CHECK(d2.values[static_cast<std::size_t>(u * 3 + v)] == expected);
    }
  }
}

TEST_CASE("second defect of u^3 over GF(4) matches xy^2 + x^2y as a function") {
  auto tab = to_table(parse_poly("x1^3", F4, 1));
  auto d2 = defect_table(tab, 2);
  auto g = parse_poly("x1*x2^2 + x1^2*x2", F4, 2);
  for (std::int64_t x = 0; x < 4; ++x)
    for (std::int64_t y = 0; y < 4; ++y)
      CHECK(d2.values[static_cast<std::size_t>(x * 4 + y)] ==
            g.eval(Point{F4.element(x), F4.element(y)}));
}

TEST_CASE("defects vanish for additive maps") {
  // linear polynomial
  auto lin = to_table(parse_poly("x1 + 2*x2", F3, 2));
  for (const auto& v : defect_table(lin, 2).values) CHECK(v.is_zero());
  // u^2 over GF(2) is additive
  auto sq = to_table(parse_poly("x1^2", F2, 1));
  for (const auto& v : defect_table(sq, 2).values) CHECK(v.is_zero());
}

TEST_CASE("inclusion-exclusion and the recurrence agree exhaustively") {
  Rng rng(23);
  struct Case { const FieldSpec* spec; int d; int nmax; };
  for (auto [spec, d, nmax] : {Case{&F2, 3, 4}, Case{&F3, 2, 3}, Case{&F4, 2, 3}}) {
    for (int i = 0; i < 6; ++i) {
      auto tab = random_table(*spec, d, rng);
      for (int n = 2; n <= nmax; ++n)
        CHECK(defect_table(tab, n) == defect_table_recurrence(tab, n));
    }
  }
  auto bad = FunctionTable(F2, 1, {F2.one(), F2.zero()});
  CHECK_THROWS_AS(defect_table(bad, 2), error);
}

TEST_CASE("explicit tuple lists evaluate single defects") {
  auto tab = to_table(parse_poly("x1^2", F3, 1));
  std::vector<std::vector<Point>> tuples{{Point{F3.element(1)}, Point{F3.element(2)}}};
  auto values = defect_on_tuples(tab, 2, tuples);
  REQUIRE(values.size() == 1);
  CHECK(values[0] == F3.element(1));  // 2*1*2 = 4 = 1 mod 3
}

TEST_CASE("polarization is linear") {
  Rng rng(24);
  for (int i = 0; i < 10; ++i) {
    auto alpha = random_table(F3, 1, rng);
    auto beta = random_table(F3, 1, rng);
    for (const auto& c : F3.elements()) {
      for (const auto& d : F3.elements()) {
        std::vector<FieldElement> mixed;
        for (std::size_t k = 0; k < alpha.size(); ++k)
          mixed.push_back(c * alpha.at(k) + d * beta.at(k));
        FunctionTable gamma(F3, 1, mixed);
        auto dg = defect_table(gamma, 2);
        auto da = defect_table(alpha, 2);
        auto db = defect_table(beta, 2);
        for (std::size_t k = 0; k < dg.values.size(); ++k)
          CHECK(dg.values[k] == c * da.values[k] + d * db.values[k]);
      }
    }
  }
}

TEST_CASE("defects are symmetric in their arguments") {
  Rng rng(25);
  auto tab = random_table(F3, 2, rng);
  const int n = 3;
  std::vector<Point> args{random_point(F3, 2, rng), random_point(F3, 2, rng),
                          random_point(F3, 2, rng)};
  FieldElement base = defect_at(tab, args);
  std::vector<int> perm{0, 1, 2};
  do {
    std::vector<Point> permuted;
    for (int i = 0; i < n; ++i) permuted.push_back(args[perm[i]]);
    CHECK(defect_at(tab, permuted) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("defects vanish on p-fold repeated arguments") {
  Rng rng(26);
  // GF(2)^3, n = 2 and 3
  for (int i = 0; i < 10; ++i) {
    auto tab = random_table(F2, 3, rng);
    for (std::uint64_t u = 0; u < 8; ++u) {
      Point pu = point_at_index(F2, 3, u);
      CHECK(defect_at(tab, std::vector<Point>{pu, pu}).is_zero());
      for (std::uint64_t v = 0; v < 8; ++v)
        CHECK(defect_at(tab, std::vector<Point>{pu, pu, point_at_index(F2, 3, v)})
                  .is_zero());
    }
  }
  // GF(3)^2, n = 3
  for (int i = 0; i < 10; ++i) {
    auto tab = random_table(F3, 2, rng);
    for (std::uint64_t u = 0; u < 9; ++u) {
      Point pu = point_at_index(F3, 2, u);
      CHECK(defect_at(tab, std::vector<Point>{pu, pu, pu}).is_zero());
    }
  }
}

TEST_CASE("formal defect of x^3 in characteristic 2") {
  auto d2 = formal_defect(mono(F4, {3}), 2);
  SparsePolynomial expected(F4, 2);
  expected.add_term(MultiExponent{1, 2}, F4.one());  // C(3,1) = 3 = 1 in char 2
  expected.add_term(MultiExponent{2, 1}, F4.one());  // C(3,2) = 3 = 1
  CHECK(d2.poly == expected);
  CHECK(d2.str() == "x1_1*x2_1^2 + x1_1^2*x2_1");
}

TEST_CASE("formal defect of a bilinear monomial polarizes across blocks") {
  for (const FieldSpec* spec : {&F3, &F4, &QQ}) {
    auto d2 = formal_defect(mono(*spec, {1, 1}), 2);
    SparsePolynomial expected(*spec, 4);
    expected.add_term(MultiExponent{1, 0, 0, 1}, spec->one());  // x1_1 * x2_2
    expected.add_term(MultiExponent{0, 1, 1, 0}, spec->one());  // x1_2 * x2_1
    CHECK(d2.poly == expected);
  }
}

TEST_CASE("formal defects beyond the combinatorial degree vanish") {
  auto f = parse_poly("x1^3", F4, 1);  // p-degree 2
  CHECK(formal_defect(f, 3).is_zero());
  CHECK_FALSE(formal_defect(f, 2).is_zero());
  CHECK_THROWS_AS(formal_defect(parse_poly("1 + x1", F4, 1), 2), error);
}

TEST_CASE("formal defects of reduced polynomials stay reduced") {
  Rng rng(27);
  for (const FieldSpec* spec : {&F2, &F4}) {
    for (int i = 0; i < 10; ++i) {
      auto f = random_reduced_poly(*spec, 2, rng, 3);
      for (int n = 1; n <= 3; ++n) CHECK(is_reduced(formal_defect(f, n).poly));
    }
  }
}

TEST_CASE("formal defects are symmetric under block permutation") {
  auto d3 = formal_defect(parse_poly("x1^2*x2", F3, 2), 3);
  const int d = 2, n = 3;
  std::vector<int> perm{1, 2, 0};
  SparsePolynomial permuted(F3, n * d);
  for (const auto& [m, c] : d3.poly.terms()) {
    MultiExponent pm(n * d);
    for (int block = 0; block < n; ++block)
      for (int j = 0; j < d; ++j) pm[perm[block] * d + j] = m[block * d + j];
    permuted.add_term(pm, c);
  }
  CHECK(permuted == d3.poly);
}

TEST_CASE("defects of distinct monomials share no multiexponent") {
  Rng rng(28);
  for (int i = 0; i < 15; ++i) {
    MultiExponent a(2), b(2);
    for (int j = 0; j < 2; ++j) {
      a[j] = static_cast<std::int64_t>(rng.below(4));
      b[j] = static_cast<std::int64_t>(rng.below(4));
    }
    if (a == b || a.is_zero() || b.is_zero()) continue;
    for (int n = 1; n <= 3; ++n) {
      auto da = formal_defect(SparsePolynomial::monomial(F3, a, F3.one()), n);
      auto db = formal_defect(SparsePolynomial::monomial(F3, b, F3.one()), n);
      for (const auto& [m, c] : da.poly.terms())
        CHECK(db.poly.coeff(m).is_zero());
    }
  }
}

TEST_CASE("chain expansion reproduces the formal defect of monomials") {
  auto via_chains = formal_defect_via_chains(mono(F4, {3}), 2);
  CHECK(via_chains.poly == formal_defect(mono(F4, {3}), 2).poly);

  auto bilinear = formal_defect_via_chains(mono(F3, {1, 1}), 2);
  CHECK(bilinear.poly == formal_defect(mono(F3, {1, 1}), 2).poly);

  auto identity = formal_defect_via_chains(mono(F3, {2, 1}), 1);
  CHECK(identity.poly == formal_defect(mono(F3, {2, 1}), 1).poly);

  Rng rng(29);
  for (const FieldSpec* spec : {&F2, &F3, &F4, &QQ}) {
    for (int i = 0; i < 10; ++i) {
      MultiExponent m(2);
      m[0] = static_cast<std::int64_t>(rng.below(4));
      m[1] = static_cast<std::int64_t>(rng.below(3));
      if (m.is_zero()) continue;
      auto monomial = SparsePolynomial::monomial(*spec, m, spec->one());
      for (int s = 1; s <= 3; ++s)
        CHECK(formal_defect_via_chains(monomial, s).poly ==
              formal_defect(monomial, s).poly);
    }
  }
  CHECK_THROWS_AS(formal_defect_via_chains(parse_poly("x1 + x2", F3, 2), 2), error);
}

TEST_CASE("combinatorial degree formula and oracle goldens") {
  CHECK(comb_degree(parse_poly("x1*x2*x3*x4*x5 + x1^2*x2^2*x3^2*x4^2", F4, 5)) == 5);
  CHECK(comb_degree(parse_poly("x1^7*x2^4", F3, 2)) == 5);
  CHECK(comb_degree(SparsePolynomial(F3, 1)) == -1);
  CHECK(comb_degree_oracle(SparsePolynomial(F3, 1)) == -1);
  CHECK(comb_degree_oracle(parse_poly("x1 + x1^2", F2, 1)) == 1);
  CHECK_THROWS_AS(comb_degree(parse_poly("1 + x1", F3, 1)), error);
}

TEST_CASE("combinatorial degree equals the total degree over prime fields and Q") {
  Rng rng(30);
  for (int i = 0; i < 10; ++i) {
    auto f = reduce(random_reduced_poly(F3, 2, rng, 3));
    if (f.is_zero()) continue;
    CHECK(comb_degree(f) == f.degree());
  }
  auto g = parse_poly("x1^3*x2 + x1^2", QQ, 2);
  CHECK(comb_degree(g) == 4);
}

TEST_CASE("formula matches the symbolic oracle on a random corpus") {
  Rng rng(31);
  for (std::int64_t p : {2, 3, 5}) {
    for (int e = 1; e <= 2; ++e) {
      const FieldSpec& spec = FieldSpec::finite(p, e);
      for (int i = 0; i < 5; ++i) {
        const int d = 1 + static_cast<int>(rng.below(2));
        MultiExponent m(d);
        std::int64_t total = 0;
        for (int j = 0; j < d; ++j) {
          m[j] = static_cast<std::int64_t>(rng.below(5));
          total += m[j];
        }
        if (m.is_zero() || total > 6) continue;
        auto f = SparsePolynomial::monomial(spec, m, spec.one());
        CHECK(comb_degree(f) == comb_degree_oracle(f));
      }
    }
  }
}

TEST_CASE("the top defect is additive in its first slot") {
  Rng rng(32);
  for (int i = 0; i < 10; ++i) {
    auto tab = random_table(F3, 1, rng);
    const std::int64_t n = comb_degree(interpolate(tab));
    if (n < 1) continue;
    auto top = defect_table(tab, static_cast<int>(n));
    // additivity of the n-th defect over the whole space
    const std::uint64_t points = tab.size();
    std::uint64_t rest = 1;
    for (int k = 1; k < n; ++k) rest *= points;
    for (std::uint64_t u = 0; u < points; ++u)
      for (std::uint64_t w = 0; w < points; ++w) {
        Point pu = point_at_index(F3, 1, u);
        Point pw = point_at_index(F3, 1, w);
        std::uint64_t sum = point_index(add_points(pu, pw));
        for (std::uint64_t r = 0; r < rest; ++r)
          CHECK(top.values[sum * rest + r] ==
                top.values[u * rest + r] + top.values[w * rest + r]);
      }
  }
}

TEST_CASE("distinct additive characteristic forms differ on distinct tuples") {
  Rng rng(33);
  // third defects of mappings with combinatorial degree 3 over GF(3)^2 are
  // characteristic 3-additive forms; when two differ at all, they differ
  // already on a pairwise-distinct argument tuple
  auto degree3_table = [&] {
    while (true) {
      auto f = random_reduced_poly(F3, 2, rng, 4);
      if (f.p_degree() == 3) return to_table(f);
    }
  };
  int checked = 0;
  for (int i = 0; i < 20 && checked < 5; ++i) {
    auto da = defect_table(degree3_table(), 3);
    auto db = defect_table(degree3_table(), 3);
    if (da == db) continue;
    ++checked;
    bool found_distinct_tuple = false;
    const std::uint64_t points = 9;
    for (std::uint64_t t = 0; t < da.values.size(); ++t) {
      if (da.values[t] == db.values[t]) continue;
      std::uint64_t i1 = t / (points * points), i2 = t / points % points,
                    i3 = t % points;
      if (i1 != i2 && i1 != i3 && i2 != i3) {
        found_distinct_tuple = true;
        break;
      }
    }
    CHECK(found_distinct_tuple);
  }
  CHECK(checked > 0);
}
