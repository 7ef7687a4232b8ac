#include "napp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "napp/linalg.hpp"
#include "napp/polarize.hpp"

namespace napp {

namespace {
constexpr std::int64_t kMaxExponent = 1'000'000;
}

std::int64_t MultiExponent::total_degree() const {
  return std::accumulate(m_.begin(), m_.end(), std::int64_t{0});
}

bool MultiExponent::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](std::int64_t x) { return x == 0; });
}

std::string MultiExponent::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m_[i]);
  }
  return s + ")";
}

MultiExponent MultiExponent::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw error("empty multiexponent literal");
  std::vector<std::int64_t> m;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(part, &used);
      if (used != part.size() || v < 0) throw error("");
      m.push_back(v);
    } catch (const std::logic_error&) {
      throw error("invalid multiexponent component '" + part + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MultiExponent(std::move(m));
}

bool dominates(const MultiExponent& a, const MultiExponent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

MultiExponent subtract(const MultiExponent& a, const MultiExponent& b) {
  MultiExponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

SparsePolynomial::SparsePolynomial(const FieldSpec& spec, int dim)
    : spec_(&spec), dim_(dim) {
  if (dim < 1) throw error("polynomial dimension must be >= 1");
}

SparsePolynomial SparsePolynomial::monomial(const FieldSpec& spec, const MultiExponent& m,
                                            const FieldElement& coeff) {
  SparsePolynomial f(spec, static_cast<int>(m.size()));
  f.add_term(m, coeff);
  return f;
}

void SparsePolynomial::add_term(const MultiExponent& m, const FieldElement& coeff) {
  if (static_cast<int>(m.size()) != dim_)
    throw error("multiexponent arity " + std::to_string(m.size()) +
                " does not match dimension " + std::to_string(dim_));
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement SparsePolynomial::coeff(const MultiExponent& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? spec_->zero() : it->second;
}

FieldElement SparsePolynomial::constant_term() const { return coeff(MultiExponent(dim_)); }

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  SparsePolynomial r(*spec_, dim_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      MultiExponent m(dim_);
      for (int i = 0; i < dim_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SparsePolynomial SparsePolynomial::scaled(const FieldElement& c) const {
  SparsePolynomial r(*spec_, dim_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

SparsePolynomial SparsePolynomial::pow(std::int64_t k) const {
  if (k < 0) throw error("negative polynomial power");
  SparsePolynomial result(*spec_, dim_);
  result.add_term(MultiExponent(dim_), spec_->one());
  SparsePolynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    if (k >>= 1) base = base * base;
  }
  return result;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  return spec_ == o.spec_ && dim_ == o.dim_ && terms_ == o.terms_;
}

FieldElement SparsePolynomial::eval(std::span<const FieldElement> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw error("evaluation point has arity " + std::to_string(point.size()) +
                ", polynomial has dimension " + std::to_string(dim_));
  FieldElement acc = spec_->zero();
  for (const auto& [m, c] : terms_) {
    FieldElement prod = c;
    for (int i = 0; i < dim_ && !prod.is_zero(); ++i)
      if (m[i] > 0) prod *= point[i].pow(m[i]);
    acc += prod;
  }
  return acc;
}

std::int64_t SparsePolynomial::degree() const {
  std::int64_t deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

std::int64_t SparsePolynomial::p_degree() const {
  std::int64_t deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, p_degree_of(m, *spec_));
  return deg;
}

std::string SparsePolynomial::str() const {
  return str([](int i) { return "x" + std::to_string(i + 1); });
}

std::string SparsePolynomial::str(const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    bool has_vars = !m.is_zero();
    bool coeff_shown = !c.is_one() || !has_vars;
    if (coeff_shown) out += c.str();
    bool first = !coeff_shown;
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += var_name(i);
      if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

namespace {

struct Token {
  std::string text;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

SparsePolynomial parse_poly(std::string_view text, const FieldSpec& spec, int dim) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw error("empty polynomial text");
  SparsePolynomial f(spec, dim);
  for (const std::string& term_text : split(s, '+')) {
    if (term_text.empty()) throw error("empty term in polynomial text");
    FieldElement coeff = spec.one();
    MultiExponent m(dim);
    auto pieces = split(term_text, '*');
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string& piece = pieces[i];
      if (piece.empty()) throw error("empty factor in term '" + term_text + "'");
      if (piece[0] == 'x') {
        auto caret = piece.find('^');
        std::string idx_str = piece.substr(1, caret == std::string::npos ? caret : caret - 1);
        std::string exp_str = caret == std::string::npos ? "1" : piece.substr(caret + 1);
        std::int64_t idx, exp;
        try {
          std::size_t used = 0;
          idx = std::stoll(idx_str, &used);
          if (used != idx_str.size()) throw error("");
          used = 0;
          exp = std::stoll(exp_str, &used);
          if (used != exp_str.size()) throw error("");
        } catch (const std::logic_error&) {
          throw error("invalid power '" + piece + "'");
        }
        if (idx < 1 || idx > dim)
          throw error("variable index " + std::to_string(idx) + " out of range [1, " +
                      std::to_string(dim) + "]");
        if (exp < 0 || exp > kMaxExponent)
          throw error("exponent out of range in '" + piece + "'");
        m[idx - 1] += exp;
      } else {
        if (i != 0)
          throw error("coefficient literal must lead its term: '" + term_text + "'");
        coeff = spec.parse_element(piece);
      }
    }
    f.add_term(m, coeff);
  }
  return f;
}

int max_variable_index(std::string_view text) {
  int best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::int64_t v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      any = true;
      ++j;
      if (v > 1'000'000) throw error("variable index too large");
    }
    if (any) best = std::max<int>(best, static_cast<int>(v));
  }
  return best;
}

SparsePolynomial reduce(const SparsePolynomial& f) {
  if (f.field().is_rational()) return f;
  const std::int64_t q = f.field().q();
  SparsePolynomial r(f.field(), f.dim());
  for (const auto& [m, c] : f.terms()) {
    MultiExponent rm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      rm[i] = m[i] == 0 ? 0 : 1 + (m[i] - 1) % (q - 1);
    r.add_term(rm, c);
  }
  return r;
}

bool is_reduced(const SparsePolynomial& f) {
  if (f.field().is_rational()) return true;
  const std::int64_t q = f.field().q();
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] >= q) return false;
  return true;
}

bool is_totally_reduced(const MultiExponent& m, const FieldSpec& spec) {
  if (spec.is_rational()) return true;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] >= spec.p()) return false;
  return true;
}

bool is_totally_reduced(const SparsePolynomial& f) {
  for (const auto& [m, c] : f.terms())
    if (!is_totally_reduced(m, f.field())) return false;
  return true;
}

bool is_homogeneous_of_degree(const SparsePolynomial& f, std::int64_t n) {
  for (const auto& [m, c] : f.terms())
    if (m.total_degree() != n) return false;
  return true;
}

FunctionTable::FunctionTable(const FieldSpec& spec, int dim, std::vector<FieldElement> values)
    : spec_(&spec), dim_(dim), values_(std::move(values)) {
  if (!spec.is_finite()) throw error("function tables require a finite field");
  std::uint64_t expected = 1;
  for (int i = 0; i < dim; ++i) expected *= static_cast<std::uint64_t>(spec.q());
  if (values_.size() != expected)
    throw error("table has " + std::to_string(values_.size()) + " entries, expected " +
                std::to_string(expected));
}

std::uint64_t FunctionTable::index_of(std::span<const FieldElement> point) const {
  std::uint64_t idx = 0;
  for (const FieldElement& x : point)
    idx = idx * static_cast<std::uint64_t>(spec_->q()) + static_cast<std::uint64_t>(x.code());
  return idx;
}

const FieldElement& FunctionTable::at(std::span<const FieldElement> point) const {
  return values_[index_of(point)];
}

Point FunctionTable::point_at(std::uint64_t index) const {
  return point_at_index(*spec_, dim_, index);
}

bool FunctionTable::operator==(const FunctionTable& o) const {
  return spec_ == o.spec_ && dim_ == o.dim_ && values_ == o.values_;
}

std::uint64_t space_size(const FieldSpec& spec, int dim, std::uint64_t budget) {
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  std::uint64_t size = 1;
  for (int i = 0; i < dim; ++i) {
    if (size > budget / q + 1) size = budget + 1;
    else size *= q;
    if (size > budget)
      throw budget_error("point space of size q^d = " + std::to_string(spec.q()) + "^" +
                         std::to_string(dim) + " exceeds budget " + std::to_string(budget));
  }
  return size;
}

FunctionTable to_table(const SparsePolynomial& f, std::uint64_t budget) {
  const FieldSpec& spec = f.field();
  if (!spec.is_finite()) throw error("cannot tabulate over the rational field");
  const std::uint64_t n = space_size(spec, f.dim(), budget);
  std::vector<FieldElement> values;
  values.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    Point pt = point_at_index(spec, f.dim(), i);
    values.push_back(f.eval(pt));
  }
  return FunctionTable(spec, f.dim(), std::move(values));
}

namespace {

// Coefficients of the interpolating polynomial through (c, ys[enc(c)]) for
// all c in F. Uses prod_{a in F} (x - a) = x^q - x, whose derivative is the
// constant -1, so the Lagrange denominators are all -1.
std::vector<FieldElement> univariate_interp(const std::vector<FieldElement>& ys,
                                            const FieldSpec& spec,
                                            const std::vector<FieldElement>& elems) {
  const std::size_t q = ys.size();
  std::vector<FieldElement> coeffs(q, spec.zero());
  std::vector<FieldElement> b(q, spec.zero());
  const FieldElement minus_one = -spec.one();
  for (std::size_t ci = 0; ci < q; ++ci) {
    if (ys[ci].is_zero()) continue;
    const FieldElement& c = elems[ci];
    // synthetic division of x^q - x by (x - c)
    b[q - 1] = spec.one();
    for (std::size_t i = q - 1; i >= 1; --i) {
      FieldElement a_i = (i == 1) ? minus_one : spec.zero();
      b[i - 1] = a_i + c * b[i];
    }
    for (std::size_t i = 0; i < q; ++i) coeffs[i] -= ys[ci] * b[i];
  }
  return coeffs;
}

}  // namespace

SparsePolynomial interpolate(const FunctionTable& table) {
  const FieldSpec& spec = table.field();
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  const int d = table.dim();
  const auto elems = spec.elements();
  std::vector<FieldElement> work = table.values();
  std::vector<FieldElement> slice(q, spec.zero());
  std::uint64_t stride = 1;
  for (int axis = d - 1; axis >= 0; --axis) {
    const std::uint64_t block = stride * q;
    for (std::uint64_t high = 0; high < work.size() / block; ++high) {
      for (std::uint64_t low = 0; low < stride; ++low) {
        const std::uint64_t base = high * block + low;
        for (std::uint64_t c = 0; c < q; ++c) slice[c] = work[base + c * stride];
        auto coeffs = univariate_interp(slice, spec, elems);
        for (std::uint64_t c = 0; c < q; ++c) work[base + c * stride] = coeffs[c];
      }
    }
    stride = block;
  }
  SparsePolynomial f(spec, d);
  for (std::uint64_t idx = 0; idx < work.size(); ++idx) {
    if (work[idx].is_zero()) continue;
    MultiExponent m(d);
    std::uint64_t rem = idx;
    for (int i = d - 1; i >= 0; --i) {
      m[i] = static_cast<std::int64_t>(rem % q);
      rem /= q;
    }
    f.add_term(m, work[idx]);
  }
  return f;
}

SparsePolynomial change_of_basis(const SparsePolynomial& f,
                                 const std::vector<std::vector<FieldElement>>& C) {
  const FieldSpec& spec = f.field();
  const int d = f.dim();
  if (static_cast<int>(C.size()) != d)
    throw error("basis-change matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  for (const auto& row : C)
    if (static_cast<int>(row.size()) != d)
      throw error("basis-change matrix must be square");
  if (!is_invertible(C)) throw error("basis-change matrix is singular");

  SparsePolynomial g = spec.is_finite() ? reduce(f) : f;
  // linear form replacing x_j: sum_i C[i][j] * x_i
  std::vector<SparsePolynomial> forms;
  forms.reserve(d);
  for (int j = 0; j < d; ++j) {
    SparsePolynomial lf(spec, d);
    for (int i = 0; i < d; ++i) {
      MultiExponent m(d);
      m[i] = 1;
      lf.add_term(m, C[i][j]);
    }
    forms.push_back(std::move(lf));
  }
  SparsePolynomial result(spec, d);
  for (const auto& [m, c] : g.terms()) {
    SparsePolynomial term(spec, d);
    term.add_term(MultiExponent(d), c);
    for (int j = 0; j < d; ++j)
      if (m[j] > 0) term = term * forms[j].pow(m[j]);
    result = result + term;
  }
  return reduce(result);
}

namespace {

void require_reduced_zero_at_origin(const SparsePolynomial& f, const char* what) {
  if (!is_reduced(f))
    throw error(std::string(what) + " requires a reduced polynomial");
  if (!f.constant_term().is_zero())
    throw error(std::string(what) + " requires f(0) = 0 (nonzero constant term)");
}

}  // namespace

bool pl_member(const SparsePolynomial& f, std::int64_t n) {
  require_reduced_zero_at_origin(f, "pl membership");
  return f.p_degree() <= n;
}

std::optional<MultiExponent> tpl_offender(const SparsePolynomial& f, std::int64_t n) {
  require_reduced_zero_at_origin(f, "tpl membership");
  for (const auto& [m, c] : f.terms()) {
    std::int64_t cdeg = p_degree_of(m, f.field());
    if (cdeg > n) return m;
    if (cdeg == n && !is_totally_reduced(m, f.field())) return m;
  }
  return std::nullopt;
}

bool tpl_member(const SparsePolynomial& f, std::int64_t n) { return !tpl_offender(f, n); }

std::optional<MultiExponent> dpl_offender(const SparsePolynomial& f, std::int64_t n) {
  if (!is_reduced(f)) throw error("dpl membership requires a reduced polynomial");
  for (const auto& [m, c] : f.terms()) {
    const std::int64_t deg = m.total_degree();
    if (f.field().is_rational()) {
      if (deg != n) return m;
    } else {
      const std::int64_t step = f.field().q() - 1;
      if (deg == 0 || ((deg - n) % step + step) % step != 0) return m;
    }
  }
  return std::nullopt;
}

bool dpl_member(const SparsePolynomial& f, std::int64_t n) { return !dpl_offender(f, n); }

Point zero_point(const FieldSpec& spec, int dim) { return Point(dim, spec.zero()); }

Point unit_point(const FieldSpec& spec, int dim, int coord) {
  Point p(dim, spec.zero());
  p[coord] = spec.one();
  return p;
}

Point add_points(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Point scale_point(const FieldElement& c, const Point& a) {
  Point r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::uint64_t point_index(const Point& p) {
  if (p.empty()) return 0;
  const std::uint64_t q = static_cast<std::uint64_t>(p[0].field().q());
  std::uint64_t idx = 0;
  for (const FieldElement& x : p) idx = idx * q + static_cast<std::uint64_t>(x.code());
  return idx;
}

Point point_at_index(const FieldSpec& spec, int dim, std::uint64_t index) {
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  Point p(dim, spec.zero());
  for (int i = dim - 1; i >= 0; --i) {
    p[i] = spec.element(static_cast<std::int64_t>(index % q));
    index /= q;
  }
  return p;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

}  // namespace napp
