#include "napp/classify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace napp {

FieldElement poly_defect_at(const SparsePolynomial& f, std::span<const Point> args) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw error("defect arity must be >= 1");
  FieldElement acc = f.field().zero();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    Point sum = zero_point(f.field(), f.dim());
    for (int i = 0; i < n; ++i)
      if (subset & (std::uint64_t{1} << i)) sum = add_points(sum, args[i]);
    const FieldElement v = f.eval(sum);
    if ((n - std::popcount(subset)) % 2 == 0) acc += v;
    else acc -= v;
  }
  return acc;
}

namespace {

// q^d truncated at cap+1 (no overflow)
std::uint64_t power_capped(std::uint64_t q, int d, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < d; ++i) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v;
}

Point random_point(const FieldSpec& spec, int d, Rng& rng) {
  Point p;
  p.reserve(d);
  for (int i = 0; i < d; ++i)
    p.push_back(spec.element(static_cast<std::int64_t>(rng.below(spec.q()))));
  return p;
}

}  // namespace

SemanticCheckResult semantic_napp_check(const SparsePolynomial& f, int n,
                                        const Budget& budget, std::uint64_t seed) {
  SemanticCheckResult r;
  r.seed = seed;
  if (f.field().is_rational()) {
    r.status = SemanticCheckResult::Status::skipped;
    r.skip_reason = "semantic check enumerates points; it requires a finite field";
    return r;
  }
  const FieldSpec& spec = f.field();
  const int d = f.dim();
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  const std::uint64_t points = power_capped(q, d, budget.exhaustive_points);
  const auto elems = spec.elements();
  Rng rng(seed);
  r.samples = budget.sample_count;

  // scaling law f(a u) = a^n f(u)
  std::string scaling_witness;
  auto scaling_violation = [&](const FieldElement& a, const Point& u) -> bool {
    return f.eval(scale_point(a, u)) != a.pow(n) * f.eval(u);
  };
  if (points <= budget.exhaustive_points) {
    r.scaling_mode = "exhaustive";
    for (std::uint64_t ui = 0; ui < points && scaling_witness.empty(); ++ui) {
      Point u = point_at_index(spec, d, ui);
      for (const FieldElement& a : elems) {
        if (scaling_violation(a, u)) {
          scaling_witness = "f(a*u) != a^n*f(u) at a = " + a.str() + ", u = " + point_str(u);
          break;
        }
      }
    }
  } else {
    r.scaling_mode = "sampled";
    for (std::uint64_t s = 0; s < budget.sample_count && scaling_witness.empty(); ++s) {
      FieldElement a = elems[rng.below(q)];
      Point u = random_point(spec, d, rng);
      if (scaling_violation(a, u))
        scaling_witness = "f(a*u) != a^n*f(u) at a = " + a.str() + ", u = " + point_str(u);
    }
  }

  // n-linearity of the n-th defect, checked regardless of the scaling outcome
  std::string linearity_witness;
  const std::uint64_t full = power_capped(q, (n + 1) * d, budget.exhaustive_points);
  if (full <= budget.exhaustive_points) {
    r.linearity_mode = "full";
    auto result = defect_as_form(to_table(f, budget.table_points), n,
                                 budget.exhaustive_points);
    if (!result.ok()) linearity_witness = result.witness->describe();
  } else {
    r.linearity_mode = "sampled";
    std::vector<Point> rest(n - 1, zero_point(spec, d));
    for (std::uint64_t s = 0; s < budget.sample_count && linearity_witness.empty(); ++s) {
      for (auto& v : rest) v = random_point(spec, d, rng);
      Point u = random_point(spec, d, rng);
      std::vector<Point> args(1, u);
      args.insert(args.end(), rest.begin(), rest.end());
      if (s % 2 == 0) {
        Point w = random_point(spec, d, rng);
        std::vector<Point> args_sum = args, args_w = args;
        args_sum[0] = add_points(u, w);
        args_w[0] = w;
        if (poly_defect_at(f, args_sum) !=
            poly_defect_at(f, args) + poly_defect_at(f, args_w)) {
          LinearityWitness lw;
          lw.kind = LinearityWitness::Kind::additivity;
          lw.u = u;
          lw.w = w;
          lw.rest = rest;
          linearity_witness = lw.describe();
        }
      } else {
        FieldElement a = elems[rng.below(q)];
        std::vector<Point> args_scaled = args;
        args_scaled[0] = scale_point(a, u);
        if (poly_defect_at(f, args_scaled) != a * poly_defect_at(f, args)) {
          LinearityWitness lw;
          lw.kind = LinearityWitness::Kind::homogeneity;
          lw.u = u;
          lw.scalar = a;
          lw.rest = rest;
          linearity_witness = lw.describe();
        }
      }
    }
  }

  if (!scaling_witness.empty()) r.witness = "scaling: " + scaling_witness;
  if (!linearity_witness.empty()) {
    if (!r.witness.empty()) r.witness += "; ";
    r.witness += "linearity: " + linearity_witness;
  }
  r.status = r.witness.empty() ? SemanticCheckResult::Status::passed
                               : SemanticCheckResult::Status::failed;
  return r;
}

ClassificationReport classify(const SparsePolynomial& f, int n, const Budget& budget,
                              std::uint64_t seed) {
  if (n < 1) throw error("classification arity must be >= 1");
  if (!is_reduced(f))
    throw error("classify requires reduced input; reduce the polynomial first");
  if (!f.constant_term().is_zero())
    throw error("classify requires f(0) = 0 (constant term present)");
  ClassificationReport r;
  r.n = n;
  r.degree = f.degree();
  r.comb_degree = comb_degree(f);
  r.pl = pl_member(f, n);
  r.tpl_offending = tpl_offender(f, n);
  r.tpl = !r.tpl_offending.has_value();
  r.dpl_offending = dpl_offender(f, n);
  r.dpl = !r.dpl_offending.has_value();
  r.is_n_application = r.tpl && r.dpl;
  r.homogeneous_of_degree_n = is_homogeneous_of_degree(f, n);
  r.semantic = semantic_napp_check(f, n, budget, seed);
  return r;
}

namespace {

// lexicographically least (a_0, ..., a_{e-1}) with sum a_i p^i = target and
// sum a_i < n; DFS in increasing digit order returns the least first
bool least_digit_vector(std::int64_t target, std::int64_t p, int e, std::int64_t n,
                        std::vector<std::int64_t>& digits, int pos, std::int64_t power,
                        std::int64_t sum) {
  if (pos == e - 1) {
    if (target % power != 0) return false;
    const std::int64_t a = target / power;
    if (sum + a >= n) return false;
    digits[pos] = a;
    return true;
  }
  const std::int64_t base = target / power % p;
  for (std::int64_t a = base; a * power <= target; a += p) {
    if (sum + a >= n) break;
    digits[pos] = a;
    if (least_digit_vector(target - a * power, p, e, n, digits, pos + 1, power * p,
                           sum + a))
      return true;
  }
  return false;
}

}  // namespace

SparsePolynomial construct_counterexample(const FieldSpec& spec, int n, int d) {
  if (!spec.is_finite()) throw error("counterexample construction requires a finite field");
  const std::int64_t q = spec.q();
  const std::int64_t p = spec.p();
  const int e = spec.e();
  if (n < 5)
    throw error("no counterexample for n = " + std::to_string(n) +
                " < 5: every such space of n-applications consists of homogeneous "
                "polynomials of degree n");
  if (e < 2)
    throw error("counterexample construction requires an extension field (e >= 2)");
  if (n < q)
    throw error("counterexample construction requires n >= q = " + std::to_string(q));
  if (d < n)
    throw error("counterexample construction requires d >= n");

  const std::int64_t target = n + q - 1;
  std::vector<std::int64_t> digits(e, 0);
  if (!least_digit_vector(target, p, e, n, digits, 0, 1, 0))
    throw error("internal: no digit vector found for n + q - 1");

  SparsePolynomial f(spec, d);
  MultiExponent lead(d);
  for (int i = 0; i < n; ++i) lead[i] = 1;
  f.add_term(lead, spec.one());

  MultiExponent tail(d);
  int var = 0;
  std::int64_t power = 1;
  for (int i = 0; i < e; ++i) {
    for (std::int64_t k = 0; k < digits[i]; ++k) tail[var++] = power;
    power *= p;
  }
  f.add_term(tail, spec.one());

  if (comb_degree(f) != n || f.degree() != target || !tpl_member(f, n) ||
      !dpl_member(f, n) || is_homogeneous_of_degree(f, n))
    throw error("internal: constructed polynomial fails its defining properties");
  return f;
}

namespace {

// all reduced polynomials with f(0) = 0 supported on the given monomials
template <typename Fn>
void enumerate_polys(const FieldSpec& spec, const std::vector<MultiExponent>& monos,
                     std::uint64_t budget, Fn&& fn) {
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (total > budget / q) throw budget_error("polynomial enumeration exceeds budget");
    total *= q;
  }
  const auto elems = spec.elements();
  const int d = monos.empty() ? 1 : static_cast<int>(monos[0].size());
  for (std::uint64_t code = 0; code < total; ++code) {
    SparsePolynomial f(spec, d);
    std::uint64_t rem = code;
    for (const MultiExponent& m : monos) {
      f.add_term(m, elems[rem % q]);
      rem /= q;
    }
    fn(f);
  }
}

std::vector<MultiExponent> reduced_monomials(const FieldSpec& spec, int d) {
  const std::int64_t q = spec.q();
  std::vector<MultiExponent> out;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(q);
  for (std::uint64_t idx = 1; idx < total; ++idx) {  // skip the constant monomial
    MultiExponent m(d);
    std::uint64_t rem = idx;
    for (int i = d - 1; i >= 0; --i) {
      m[i] = static_cast<std::int64_t>(rem % q);
      rem /= q;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

QuadraticDemoReport quadratic_correspondence_demo(const FieldSpec& spec, int d,
                                                  const Budget& budget) {
  if (!spec.is_finite()) throw error("the quadratic demo enumerates a finite field");
  if (d < 1) throw error("demo dimension must be >= 1");
  QuadraticDemoReport r;
  r.field = spec.name();
  r.dim = d;
  r.char_two = spec.p() == 2;
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  const auto elems = spec.elements();

  // enumerate the relevant bilinear forms by their free basis values
  std::vector<std::vector<int>> slots;  // index tuples that may be nonzero
  for (auto& idx : SymmetricForm::canonical_tuples(2, d)) {
    if (r.char_two && idx[0] == idx[1]) continue;  // alternating: zero diagonal
    slots.push_back(idx);
  }
  std::uint64_t form_total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (form_total > budget.exhaustive_points / q)
      throw budget_error("form enumeration exceeds budget");
    form_total *= q;
  }

  std::set<std::string> realized;
  r.mapped_all_are_napps = true;
  r.all_recovered = true;
  for (std::uint64_t code = 0; code < form_total; ++code) {
    SymmetricForm phi(spec, 2, d);
    std::uint64_t rem = code;
    for (const auto& idx : slots) {
      phi.set_basis_value(idx, elems[rem % q]);
      rem /= q;
    }
    SparsePolynomial alpha = realize(phi);
    realized.insert(alpha.str());
    if (!(tpl_member(alpha, 2) && dpl_member(alpha, 2))) r.mapped_all_are_napps = false;
    auto back = defect_as_form(to_table(alpha, budget.table_points), 2,
                               budget.exhaustive_points);
    if (!back.ok() || *back.form != phi) r.all_recovered = false;
  }
  r.form_count = form_total;
  r.injective = realized.size() == form_total;

  // enumerate every reduced polynomial with f(0) = 0 and count 2-applications
  const auto monos = reduced_monomials(spec, d);
  std::set<std::string> napps;
  std::uint64_t kernel = 0;
  enumerate_polys(spec, monos, budget.exhaustive_points, [&](const SparsePolynomial& f) {
    if (!(tpl_member(f, 2) && dpl_member(f, 2))) return;
    napps.insert(f.str());
    if (f.p_degree() <= 1) ++kernel;
  });
  r.napp_count = napps.size();
  r.kernel_count = kernel;
  r.bijective = realized == napps;
  r.fibered = r.napp_count == r.form_count * r.kernel_count;

  if (r.char_two) {
    // two distinct reduced polynomials sharing a second defect: any realized
    // quadratic plus an additive monomial
    SparsePolynomial alpha(spec, d);
    if (d >= 2) {
      MultiExponent m(d);
      m[0] = m[1] = 1;
      alpha.add_term(m, spec.one());
    }
    MultiExponent lin(d);
    lin[0] = 1;
    SparsePolynomial alpha2 = alpha;
    alpha2.add_term(lin, spec.one());
    DefectTable d1 = defect_table(to_table(alpha, budget.table_points), 2,
                                  budget.table_points);
    DefectTable d2 = defect_table(to_table(alpha2, budget.table_points), 2,
                                  budget.table_points);
    if (alpha != alpha2 && d1 == d2)
      r.nonuniqueness = alpha.str() + " and " + alpha2.str() +
                        " are distinct with identical second defects";
    else
      throw error("internal: non-uniqueness witness pair failed");
  }
  return r;
}

DimensionReport correspondence_dimension_check(const FieldSpec& spec, int d, int n,
                                               const Budget& budget) {
  if (n < 1) throw error("dimension check arity must be >= 1");
  DimensionReport r;
  r.field = spec.name();
  r.dim = d;
  r.n = n;
  r.dim_characteristic_forms = characteristic_form_basis(spec, d, n,
                                                         budget.exhaustive_points).size();
  if (spec.is_rational()) {
    // dpl pins the degree to exactly n; cdeg = deg, so pl_{n-1} ∩ dpl is empty
    std::uint64_t count = 1;  // monomials of total degree n in d variables
    for (int i = 1; i < d; ++i) count = count * (n + i) / i;
    r.dim_tpl_dpl = count;
    r.dim_pl_dpl = 0;
  } else {
    space_size(spec, d, budget.exhaustive_points);
    for (const MultiExponent& m : reduced_monomials(spec, d)) {
      const std::int64_t deg = m.total_degree();
      const std::int64_t step = spec.q() - 1;
      if (((deg - n) % step + step) % step != 0) continue;  // outside dpl
      const std::int64_t cdeg = p_degree_of(m, spec);
      if (cdeg <= n && (cdeg < n || is_totally_reduced(m, spec))) ++r.dim_tpl_dpl;
      if (cdeg <= n - 1) ++r.dim_pl_dpl;
    }
  }
  r.equal = r.dim_characteristic_forms == r.dim_tpl_dpl - r.dim_pl_dpl;
  return r;
}

}  // namespace napp
