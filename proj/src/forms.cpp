#include "napp/forms.hpp"

#include <algorithm>
#include <functional>

#include "napp/linalg.hpp"

namespace napp {

SymmetricForm::SymmetricForm(const FieldSpec& spec, int n, int d)
    : spec_(&spec), n_(n), d_(d) {
  if (n < 1) throw error("form arity must be >= 1");
  if (d < 1) throw error("form dimension must be >= 1");
  for (auto& idx : canonical_tuples(n, d)) values_.emplace(std::move(idx), spec.zero());
}

std::vector<std::vector<int>> SymmetricForm::canonical_tuples(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int low) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = low; i <= d; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(1);
  return out;  // n == 0 yields the single empty tuple
}

const FieldElement& SymmetricForm::basis_value(std::vector<int> idx) const {
  std::sort(idx.begin(), idx.end());
  auto it = values_.find(idx);
  if (it == values_.end()) throw error("basis tuple out of range for this form");
  return it->second;
}

void SymmetricForm::set_basis_value(std::vector<int> idx, const FieldElement& v) {
  std::sort(idx.begin(), idx.end());
  auto it = values_.find(idx);
  if (it == values_.end()) throw error("basis tuple out of range for this form");
  it->second = v;
}

FieldElement SymmetricForm::eval(std::span<const Point> args) const {
  if (static_cast<int>(args.size()) != n_)
    throw error("form of arity " + std::to_string(n_) + " applied to " +
                std::to_string(args.size()) + " arguments");
  for (const Point& a : args)
    if (static_cast<int>(a.size()) != d_) throw error("form argument dimension mismatch");
  FieldElement acc = spec_->zero();
  std::vector<int> idx(n_);
  std::function<void(int, const FieldElement&)> rec = [&](int k, const FieldElement& prod) {
    if (k == n_) {
      acc += prod * basis_value(idx);
      return;
    }
    for (int j = 0; j < d_; ++j) {
      if (args[k][j].is_zero()) continue;  // zero coordinates contribute nothing
      idx[k] = j + 1;
      rec(k + 1, prod * args[k][j]);
    }
  };
  rec(0, spec_->one());
  return acc;
}

bool SymmetricForm::operator==(const SymmetricForm& o) const {
  return spec_ == o.spec_ && n_ == o.n_ && d_ == o.d_ && values_ == o.values_;
}

std::string CharacteristicWitness::describe() const {
  std::string s = "phi(p*u";
  for (int i : rest) s += ", e" + std::to_string(i);
  s += ") != 0 at u = " + point_str(u);
  return s;
}

CharacteristicCheck is_characteristic(const SymmetricForm& phi, std::uint64_t budget) {
  const FieldSpec& spec = phi.field();
  if (spec.is_rational() || phi.arity() < spec.p()) return {true, std::nullopt};
  const std::int64_t p = spec.p();
  const int d = phi.dim();
  const int free = phi.arity() - static_cast<int>(p);
  const std::uint64_t points = space_size(spec, d, budget);
  const auto rest_tuples = SymmetricForm::canonical_tuples(free, d);
  for (std::uint64_t ui = 0; ui < points; ++ui) {
    Point u = point_at_index(spec, d, ui);
    for (const auto& rest : rest_tuples) {
      std::vector<Point> args(static_cast<std::size_t>(p), u);
      for (int i : rest) args.push_back(unit_point(spec, d, i - 1));
      if (!phi.eval(args).is_zero())
        return {false, CharacteristicWitness{std::move(u), rest}};
    }
  }
  return {true, std::nullopt};
}

namespace {

// coefficient of x^t in the realization: the multinomial n!/(t_1!...t_d!)
// formally divided by n!
FieldElement realization_coefficient(const std::vector<std::int64_t>& t, int n,
                                     const FieldSpec& spec) {
  BigInt multinom = factorial(n);
  for (std::int64_t ti : t) multinom /= factorial(ti);
  BigInt n_fact = factorial(n);
  if (spec.is_rational()) return spec.element(Rational(multinom) / Rational(n_fact));
  const std::int64_t p = spec.p();
  auto strip = [p](BigInt v) {
    int count = 0;
    while (v % p == 0) {
      v /= p;
      ++count;
    }
    return std::pair<BigInt, int>(v, count);
  };
  auto [m_unit, a] = strip(multinom);
  auto [f_unit, b] = strip(n_fact);
  if (a != b)
    throw error("internal: p-adic valuations of multinomial and n! differ");
  return spec.from_integer(m_unit % p) * spec.from_integer(f_unit % p).inverse();
}

}  // namespace

SparsePolynomial realize(const SymmetricForm& phi) {
  const FieldSpec& spec = phi.field();
  const int n = phi.arity();
  const int d = phi.dim();
  const std::int64_t limit = spec.is_finite() ? spec.p() : n + 1;  // exponents < char F
  SparsePolynomial result(spec, d);
  std::vector<std::int64_t> t(d, 0);
  std::function<void(int, std::int64_t)> rec = [&](int coord, std::int64_t remaining) {
    if (coord == d - 1) {
      if (remaining >= limit) return;
      t[coord] = remaining;
      std::vector<int> idx;
      for (int i = 0; i < d; ++i)
        idx.insert(idx.end(), static_cast<std::size_t>(t[i]), i + 1);
      const FieldElement& v = phi.basis_value(idx);
      if (!v.is_zero())
        result.add_term(MultiExponent(t), realization_coefficient(t, n, spec) * v);
      return;
    }
    for (std::int64_t ti = 0; ti <= remaining && ti < limit; ++ti) {
      t[coord] = ti;
      rec(coord + 1, remaining - ti);
    }
  };
  rec(0, n);
  return result;
}

SparsePolynomial recover_small_arity(const SymmetricForm& phi) {
  const FieldSpec& spec = phi.field();
  const int n = phi.arity();
  const int d = phi.dim();
  if (spec.is_finite() && n >= spec.p())
    throw error("recover_small_arity requires arity below the characteristic (n = " +
                std::to_string(n) + " >= " + std::to_string(spec.p()) + ")");
  // phi(n*u) expanded over all d^n index tuples
  SparsePolynomial acc(spec, d);
  std::vector<int> idx(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      MultiExponent m(d);
      for (int i : idx) ++m[i - 1];
      acc.add_term(m, phi.basis_value(idx));
      return;
    }
    for (int j = 1; j <= d; ++j) {
      idx[k] = j;
      rec(k + 1);
    }
  };
  rec(0);
  FieldElement n_fact = spec.is_rational() ? spec.element(Rational(factorial(n)))
                                           : spec.from_integer(factorial(n));
  return acc.scaled(n_fact.inverse());
}

std::string LinearityWitness::describe() const {
  std::string tail;
  for (const Point& r : rest) tail += ", " + point_str(r);
  if (kind == Kind::additivity)
    return "additivity fails: D(u+w" + tail + ") != D(u" + tail + ") + D(w" + tail +
           ") at u = " + point_str(u) + ", w = " + point_str(w);
  return "homogeneity fails: D(a*u" + tail + ") != a*D(u" + tail + ") at a = " +
         scalar.str() + ", u = " + point_str(u);
}

DefectFormResult defect_as_form(const FunctionTable& table, int n, std::uint64_t budget) {
  if (n < 1) throw error("defect arity must be >= 1");
  if (!table.at(std::uint64_t{0}).is_zero())
    throw error("defect requires a table with value 0 at the origin");
  const FieldSpec& spec = table.field();
  const int d = table.dim();
  const std::uint64_t points = table.size();
  if (points > budget / points)
    throw budget_error("defect linearity sweep needs q^2d = " + std::to_string(points) +
                       "^2 pairs, over budget " + std::to_string(budget));

  const auto rest_tuples = SymmetricForm::canonical_tuples(n - 1, d);
  SymmetricForm form(spec, n, d);

  // index arithmetic tables
  const auto elems = spec.elements();
  std::vector<std::uint64_t> sum_idx(points * points);
  for (std::uint64_t a = 0; a < points; ++a) {
    Point pa = point_at_index(spec, d, a);
    for (std::uint64_t b = 0; b < points; ++b)
      sum_idx[a * points + b] = point_index(add_points(pa, point_at_index(spec, d, b)));
  }
  std::vector<std::uint64_t> scale_idx(static_cast<std::uint64_t>(spec.q()) * points);
  for (std::uint64_t ai = 0; ai < elems.size(); ++ai)
    for (std::uint64_t ui = 0; ui < points; ++ui)
      scale_idx[ai * points + ui] =
          point_index(scale_point(elems[ai], point_at_index(spec, d, ui)));

  for (const auto& rest : rest_tuples) {
    std::vector<Point> rest_points;
    for (int i : rest) rest_points.push_back(unit_point(spec, d, i - 1));
    // slice of the defect with the free slots pinned to this basis tuple
    std::vector<FieldElement> g;
    g.reserve(points);
    std::vector<Point> args(1, zero_point(spec, d));
    args.insert(args.end(), rest_points.begin(), rest_points.end());
    for (std::uint64_t ui = 0; ui < points; ++ui) {
      args[0] = point_at_index(spec, d, ui);
      g.push_back(defect_at(table, args));
    }
    // record the basis values of the candidate form
    for (int i = 1; i <= d; ++i) {
      std::vector<int> idx{i};
      idx.insert(idx.end(), rest.begin(), rest.end());
      form.set_basis_value(idx, g[point_index(unit_point(spec, d, i - 1))]);
    }
    // additivity in the first slot over the whole space
    for (std::uint64_t ui = 0; ui < points; ++ui) {
      for (std::uint64_t wi = 0; wi < points; ++wi) {
        if (g[sum_idx[ui * points + wi]] != g[ui] + g[wi]) {
          LinearityWitness w;
          w.kind = LinearityWitness::Kind::additivity;
          w.u = point_at_index(spec, d, ui);
          w.w = point_at_index(spec, d, wi);
          w.rest = rest_points;
          return {std::nullopt, std::move(w)};
        }
      }
    }
    // homogeneity over all scalars and the whole space
    for (std::uint64_t ai = 0; ai < elems.size(); ++ai) {
      for (std::uint64_t ui = 0; ui < points; ++ui) {
        if (g[scale_idx[ai * points + ui]] != elems[ai] * g[ui]) {
          LinearityWitness w;
          w.kind = LinearityWitness::Kind::homogeneity;
          w.u = point_at_index(spec, d, ui);
          w.scalar = elems[ai];
          w.rest = rest_points;
          return {std::nullopt, std::move(w)};
        }
      }
    }
  }
  return {std::move(form), std::nullopt};
}

std::vector<SymmetricForm> characteristic_form_basis(const FieldSpec& spec, int d, int n,
                                                     std::uint64_t budget) {
  const auto tuples = SymmetricForm::canonical_tuples(n, d);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t i = 0; i < tuples.size(); ++i) column[tuples[i]] = i;

  auto form_from = [&](const std::vector<FieldElement>& coords) {
    SymmetricForm f(spec, n, d);
    for (std::size_t i = 0; i < tuples.size(); ++i) f.set_basis_value(tuples[i], coords[i]);
    return f;
  };

  if (spec.is_rational() || n < spec.p()) {
    // every symmetric form is characteristic
    std::vector<SymmetricForm> basis;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::vector<FieldElement> coords(tuples.size(), spec.zero());
      coords[i] = spec.one();
      basis.push_back(form_from(coords));
    }
    return basis;
  }

  const std::int64_t p = spec.p();
  const int free = n - static_cast<int>(p);
  const std::uint64_t points = space_size(spec, d, budget);
  const auto rest_tuples = SymmetricForm::canonical_tuples(free, d);

  // linear constraints phi(p*u, e_rest) = 0, expanded over basis values
  Matrix rows;
  for (std::uint64_t ui = 0; ui < points; ++ui) {
    Point u = point_at_index(spec, d, ui);
    for (const auto& rest : rest_tuples) {
      std::vector<FieldElement> row(tuples.size(), spec.zero());
      std::vector<int> idx(static_cast<std::size_t>(p));
      std::function<void(int, const FieldElement&)> rec = [&](int k, const FieldElement& prod) {
        if (prod.is_zero()) return;
        if (k == static_cast<int>(p)) {
          std::vector<int> full = idx;
          full.insert(full.end(), rest.begin(), rest.end());
          std::sort(full.begin(), full.end());
          row[column.at(full)] += prod;
          return;
        }
        for (int j = 0; j < d; ++j) {
          if (u[j].is_zero()) continue;
          idx[k] = j + 1;
          rec(k + 1, prod * u[j]);
        }
      };
      rec(0, spec.one());
      bool nonzero = std::any_of(row.begin(), row.end(),
                                 [](const FieldElement& x) { return !x.is_zero(); });
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  std::vector<SymmetricForm> basis;
  if (rows.empty()) {
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::vector<FieldElement> coords(tuples.size(), spec.zero());
      coords[i] = spec.one();
      basis.push_back(form_from(coords));
    }
    return basis;
  }
  for (auto& v : null_space_basis(std::move(rows), spec, tuples.size()))
    basis.push_back(form_from(v));
  return basis;
}

}  // namespace napp
