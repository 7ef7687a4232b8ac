#ifndef NAPP_COMMON_HPP
#define NAPP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace napp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for all errors raised by the library. The CLI maps these to
// exit status 2 with the message as a one-line diagnostic.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation would exceed its configured enumeration budget.
class budget_error : public error {
 public:
  using error::error;
};

// Enumeration budgets. Exhaustive checks fall back to seeded sampling (or
// refuse outright, depending on the operation) once these are exceeded.
struct Budget {
  std::uint64_t table_points = std::uint64_t{1} << 20;      // dense tables: q^d, q^{nd}
  std::uint64_t exhaustive_points = std::uint64_t{1} << 16; // semantic sweeps
  std::uint64_t sample_count = 1000;                        // seeded sampling size
  std::uint64_t chain_count = std::uint64_t{1} << 20;       // chain enumeration cap
};

// splitmix64: deterministic across platforms, unlike std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform-ish value in [0, n); n must be positive
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

BigInt factorial(std::int64_t n);
BigInt binomial(std::int64_t a, std::int64_t b);

}  // namespace napp

#endif
