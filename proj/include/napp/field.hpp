#ifndef NAPP_FIELD_HPP
#define NAPP_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "napp/common.hpp"

namespace napp {

class FieldElement;

// A field: GF(p^e) for prime p and e >= 1, or the rational field Q, which
// serves as the field of characteristic infinity. Instances are interned and
// immutable, so two requests for the same (p, e) return the same object and
// element operations can compare field identity by pointer.
//
// The finite-field model is GF(p)[t]/(modulus) where modulus is the
// lexicographically least monic irreducible of degree e, ordered by the
// coefficient tuple (c_0, ..., c_{e-1}). Elements are encoded as integers
// k in [0, q) with base-p digits of k giving the coefficient vector.
class FieldSpec {
 public:
  static const FieldSpec& finite(std::int64_t p, int e);
  static const FieldSpec& rationals();
  // "p^e", bare "p", or "Q"
  static const FieldSpec& parse(std::string_view text);

  bool is_finite() const { return finite_; }
  bool is_rational() const { return !finite_; }
  // true when the characteristic is finite (i.e. a prime)
  bool has_finite_char() const { return finite_; }
  std::int64_t p() const;
  int e() const;
  std::int64_t q() const;
  // modulus coefficients c_0..c_e with c_e = 1 (finite fields only)
  const std::vector<std::int64_t>& modulus() const;
  std::string name() const;  // canonical spec string: "p^e" or "Q"

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::int64_t code) const;   // finite; 0 <= code < q
  FieldElement element(Rational value) const;      // rational field
  // image of an integer under Z -> F (reduces mod p for finite fields)
  FieldElement from_integer(std::int64_t k) const;
  FieldElement from_integer(const BigInt& k) const;
  FieldElement parse_element(std::string_view text) const;

  // all q elements in encoding order 0, 1, ..., q-1 (finite fields only)
  std::vector<FieldElement> elements() const;

  bool operator==(const FieldSpec& other) const { return this == &other; }
  bool operator!=(const FieldSpec& other) const { return this != &other; }

 private:
  FieldSpec() = default;

  bool finite_ = false;
  std::int64_t p_ = 0;  // prime; unset for Q
  int e_ = 1;
  std::int64_t q_ = 0;  // p^e
  std::vector<std::int64_t> modulus_;  // c_0..c_e, monic

  friend class FieldElement;
};

// Immutable element of a FieldSpec. Finite-field elements carry their
// integer encoding; rational elements carry an exact fraction in lowest
// terms (cpp_rational keeps the denominator positive).
class FieldElement {
 public:
  FieldElement() = default;  // detached; unusable until assigned

  const FieldSpec& field() const;
  bool is_zero() const;
  bool is_one() const;
  std::int64_t code() const;        // finite fields
  const Rational& value() const;    // rational field
  std::string str() const;          // element literal

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t k) const;  // k may be negative for nonzero base

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldElement(const FieldSpec* spec, std::int64_t code) : spec_(spec), code_(code) {}
  FieldElement(const FieldSpec* spec, Rational r) : spec_(spec), rat_(std::move(r)) {}

  const FieldSpec* spec_ = nullptr;
  std::int64_t code_ = 0;
  Rational rat_;

  friend class FieldSpec;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace napp

#endif
