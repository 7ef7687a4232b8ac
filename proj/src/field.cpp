#include "napp/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace napp {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// coefficient vectors over GF(p), little-endian (index = power of t)

void trim(std::vector<std::int64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a mod b, both over GF(p), b nonzero
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
  trim(a);
  const std::int64_t lead = b.back();
  std::int64_t lead_inv = 1;
  for (std::int64_t k = 1; k < p; ++k)
    if (lead * k % p == 1) { lead_inv = k; break; }
  while (a.size() >= b.size()) {
    std::int64_t factor = a.back() * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool divides(const std::vector<std::int64_t>& divisor,
             const std::vector<std::int64_t>& f, std::int64_t p) {
  return poly_mod(f, divisor, p).empty();
}

// Trial division by every monic polynomial of degree <= deg(f)/2.
bool is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e == 1) return true;
  for (int d = 1; 2 * d <= e; ++d) {
    // enumerate monic divisors of degree d by their low coefficients
    std::vector<std::int64_t> g(d + 1, 0);
    g[d] = 1;
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t k = 0; k < count; ++k) {
      std::int64_t v = k;
      for (int i = 0; i < d; ++i) { g[i] = v % p; v /= p; }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Lexicographically least monic irreducible of degree e over GF(p), ordering
// candidates by the tuple (c_0, ..., c_{e-1}).
std::vector<std::int64_t> least_irreducible(std::int64_t p, int e) {
  std::vector<std::int64_t> f(e + 1, 0);
  f[e] = 1;
  std::vector<std::int64_t> digits(e, 0);
  while (true) {
    for (int i = 0; i < e; ++i) f[i] = digits[i];
    if (is_irreducible(f, p)) return f;
    // next tuple in lex order: last coordinate varies fastest
    int i = e - 1;
    while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
    if (i < 0) throw error("no irreducible polynomial found (unreachable)");
    ++digits[i];
  }
}

std::vector<std::int64_t> decode(std::int64_t code, std::int64_t p, int e) {
  std::vector<std::int64_t> c(e, 0);
  for (int i = 0; i < e && code != 0; ++i) { c[i] = code % p; code /= p; }
  return c;
}

std::int64_t encode(const std::vector<std::int64_t>& c, std::int64_t p) {
  std::int64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

const FieldSpec& FieldSpec::finite(std::int64_t p, int e) {
  if (!is_prime(p)) throw error("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw error("extension degree must be >= 1, got " + std::to_string(e));
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::unique_ptr<FieldSpec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, e}];
  if (!slot) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) {
      if (q > (std::int64_t{1} << 62) / p) throw error("field size p^e overflows");
      q *= p;
    }
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec());
    spec->finite_ = true;
    spec->p_ = p;
    spec->e_ = e;
    spec->q_ = q;
    spec->modulus_ = least_irreducible(p, e);
    slot = std::move(spec);
  }
  return *slot;
}

const FieldSpec& FieldSpec::rationals() {
  static const FieldSpec* instance = [] {
    auto* s = new FieldSpec();
    s->finite_ = false;
    s->e_ = 1;
    return s;
  }();
  return *instance;
}

const FieldSpec& FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  auto caret = text.find('^');
  std::string p_str(text.substr(0, caret));
  std::string e_str = caret == std::string_view::npos ? "1" : std::string(text.substr(caret + 1));
  try {
    std::size_t used = 0;
    std::int64_t p = std::stoll(p_str, &used);
    if (used != p_str.size()) throw error("");
    int e = std::stoi(e_str, &used);
    if (used != e_str.size()) throw error("");
    return finite(p, e);
  } catch (const std::logic_error&) {
    throw error("invalid field spec '" + std::string(text) + "': expected p^e or Q");
  }
}

std::int64_t FieldSpec::p() const {
  if (!finite_) throw error("rational field has characteristic infinity");
  return p_;
}

int FieldSpec::e() const { return e_; }

std::int64_t FieldSpec::q() const {
  if (!finite_) throw error("rational field is infinite");
  return q_;
}

const std::vector<std::int64_t>& FieldSpec::modulus() const {
  if (!finite_) throw error("rational field has no modulus");
  return modulus_;
}

std::string FieldSpec::name() const {
  if (!finite_) return "Q";
  return std::to_string(p_) + "^" + std::to_string(e_);
}

FieldElement FieldSpec::zero() const {
  return finite_ ? FieldElement(this, std::int64_t{0}) : FieldElement(this, Rational(0));
}

FieldElement FieldSpec::one() const {
  return finite_ ? FieldElement(this, std::int64_t{1}) : FieldElement(this, Rational(1));
}

FieldElement FieldSpec::element(std::int64_t code) const {
  if (!finite_) throw error("integer encoding is for finite fields; use a rational literal");
  if (code < 0 || code >= q_)
    throw error("element encoding " + std::to_string(code) + " out of range [0, " +
                std::to_string(q_) + ")");
  return FieldElement(this, code);
}

FieldElement FieldSpec::element(Rational value) const {
  if (finite_) throw error("rational value supplied for finite field element");
  return FieldElement(this, std::move(value));
}

FieldElement FieldSpec::from_integer(std::int64_t k) const {
  if (!finite_) return FieldElement(this, Rational(k));
  std::int64_t r = k % p_;
  if (r < 0) r += p_;
  return FieldElement(this, r);
}

FieldElement FieldSpec::from_integer(const BigInt& k) const {
  if (!finite_) return FieldElement(this, Rational(k));
  BigInt r = k % p_;
  if (r < 0) r += p_;
  return FieldElement(this, r.convert_to<std::int64_t>());
}

FieldElement FieldSpec::parse_element(std::string_view text) const {
  if (text.empty()) throw error("empty element literal");
  if (finite_) {
    try {
      std::size_t used = 0;
      std::string s(text);
      std::int64_t code = std::stoll(s, &used);
      if (used != s.size()) throw error("");
      return element(code);
    } catch (const std::logic_error&) {
      throw error("invalid element literal '" + std::string(text) + "' for " + name());
    }
  }
  auto slash = text.find('/');
  try {
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(text.substr(slash + 1)));
    if (den == 0) throw error("zero denominator in rational literal '" + std::string(text) + "'");
    return FieldElement(this, Rational(num, den));
  } catch (const std::runtime_error& e) {
    throw error(std::string("invalid rational literal '") + std::string(text) + "': " + e.what());
  }
}

std::vector<FieldElement> FieldSpec::elements() const {
  if (!finite_) throw error("cannot enumerate the rational field");
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (std::int64_t k = 0; k < q_; ++k) out.push_back(FieldElement(this, k));
  return out;
}

const FieldSpec& FieldElement::field() const {
  if (!spec_) throw error("use of detached field element");
  return *spec_;
}

bool FieldElement::is_zero() const {
  return field().is_finite() ? code_ == 0 : rat_ == 0;
}

bool FieldElement::is_one() const {
  return field().is_finite() ? code_ == 1 : rat_ == 1;
}

std::int64_t FieldElement::code() const {
  if (!field().is_finite()) throw error("rational element has no integer encoding");
  return code_;
}

const Rational& FieldElement::value() const {
  if (field().is_finite()) throw error("finite-field element has no rational value");
  return rat_;
}

std::string FieldElement::str() const {
  if (field().is_finite()) return std::to_string(code_);
  std::ostringstream os;
  os << rat_;
  return os.str();
}

namespace {

const FieldSpec& common_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field())
    throw error("mixed-field operands: " + a.field().name() + " vs " + b.field().name());
  return a.field();
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldSpec& f = common_field(*this, o);
  if (!f.is_finite()) return f.element(rat_ + o.rat_);
  if (f.e() == 1) return FieldElement(spec_, (code_ + o.code_) % f.p());
  auto a = decode(code_, f.p(), f.e());
  auto b = decode(o.code_, f.p(), f.e());
  for (int i = 0; i < f.e(); ++i) a[i] = (a[i] + b[i]) % f.p();
  return FieldElement(spec_, encode(a, f.p()));
}

FieldElement FieldElement::operator-() const {
  const FieldSpec& f = field();
  if (!f.is_finite()) return f.element(-rat_);
  if (f.e() == 1) return FieldElement(spec_, (f.p() - code_) % f.p());
  auto a = decode(code_, f.p(), f.e());
  for (int i = 0; i < f.e(); ++i) a[i] = (f.p() - a[i]) % f.p();
  return FieldElement(spec_, encode(a, f.p()));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldSpec& f = common_field(*this, o);
  if (!f.is_finite()) return f.element(rat_ * o.rat_);
  const std::int64_t p = f.p();
  if (f.e() == 1) return FieldElement(spec_, code_ * o.code_ % p);
  auto a = decode(code_, p, f.e());
  auto b = decode(o.code_, p, f.e());
  std::vector<std::int64_t> prod(2 * f.e() - 1, 0);
  for (int i = 0; i < f.e(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f.e(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  auto rem = poly_mod(std::move(prod), f.modulus(), p);
  rem.resize(f.e(), 0);
  return FieldElement(spec_, encode(rem, p));
}

FieldElement FieldElement::inverse() const {
  const FieldSpec& f = field();
  if (is_zero()) throw error("division by zero in " + f.name());
  if (!f.is_finite()) return f.element(Rational(1) / rat_);
  return pow(f.q() - 2);  // a^(q-2) = a^{-1} for a != 0
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  common_field(*this, o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(std::int64_t k) const {
  const FieldSpec& f = field();
  if (k < 0) return inverse().pow(-k);
  if (!f.is_finite()) {
    Rational r(1);
    Rational base = rat_;
    std::int64_t n = k;
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return f.element(r);
  }
  FieldElement result = f.one();
  FieldElement base = *this;
  std::int64_t n = k;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
  const FieldSpec& f = common_field(*this, o);
  return f.is_finite() ? code_ == o.code_ : rat_ == o.rat_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.str(); }

BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace napp
