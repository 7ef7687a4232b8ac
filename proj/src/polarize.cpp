#include "napp/polarize.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace napp {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

// binom(a, b) mod p for 0 <= a, b < p
std::int64_t small_binom_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t num = 1, den = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * mod_pow(den, p - 2, p) % p;
}

}  // namespace

std::int64_t p_weight(std::int64_t t, std::int64_t p) {
  if (t < 0) throw error("p-weight of a negative integer");
  if (p < 2) throw error("p-weight base must be a prime >= 2");
  std::int64_t w = 0;
  while (t > 0) {
    w += t % p;
    t /= p;
  }
  return w;
}

std::int64_t p_weight(std::int64_t t, const FieldSpec& spec) {
  if (spec.is_rational()) {
    if (t < 0) throw error("p-weight of a negative integer");
    return t;  // the single base-infinity digit is t itself
  }
  return p_weight(t, spec.p());
}

std::int64_t p_degree_of(const MultiExponent& m, const FieldSpec& spec) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += p_weight(m[i], spec);
  return s;
}

std::int64_t lucas_binom(std::int64_t a, std::int64_t b, std::int64_t p) {
  if (a < 0 || b < 0) throw error("lucas_binom requires non-negative arguments");
  if (p < 2) throw error("lucas_binom requires a prime modulus");
  std::int64_t r = 1;
  while (a > 0 || b > 0) {
    std::int64_t ai = a % p, bi = b % p;
    if (bi > ai) return 0;
    r = r * small_binom_mod(ai, bi, p) % p;
    a /= p;
    b /= p;
  }
  return r;
}

FieldElement multi_binom(const MultiExponent& m, const MultiExponent& n,
                         const FieldSpec& spec) {
  if (m.size() != n.size()) throw error("multi_binom arity mismatch");
  if (spec.is_rational()) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < m.size(); ++i) prod *= binomial(m[i], n[i]);
    return spec.element(Rational(prod));
  }
  std::int64_t prod = 1;
  for (std::size_t i = 0; i < m.size() && prod != 0; ++i)
    prod = prod * lucas_binom(m[i], n[i], spec.p()) % spec.p();
  return spec.from_integer(prod);
}

std::string FormalDefect::str() const {
  const int d = base_dim;
  return poly.str([d](int v) {
    return "x" + std::to_string(v / d + 1) + "_" + std::to_string(v % d + 1);
  });
}

FormalDefect formal_defect(const SparsePolynomial& f, int n) {
  if (n < 1) throw error("defect arity must be >= 1");
  if (!f.constant_term().is_zero())
    throw error("formal defect requires f(0) = 0 (constant term present)");
  const FieldSpec& spec = f.field();
  const int d = f.dim();
  const int nd = n * d;
  SparsePolynomial acc(spec, nd);
  for (unsigned subset = 1; subset < (1u << n); ++subset) {
    const int used = std::popcount(subset);
    const bool negative = ((n - used) % 2) != 0;
    // powers of the block sums, shared across the terms of f
    std::map<std::pair<int, std::int64_t>, SparsePolynomial> pow_cache;
    for (const auto& [m, c] : f.terms()) {
      SparsePolynomial term(spec, nd);
      term.add_term(MultiExponent(nd), negative ? -c : c);
      for (int j = 0; j < d; ++j) {
        if (m[j] == 0) continue;
        auto key = std::make_pair(j, m[j]);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) {
          SparsePolynomial lf(spec, nd);
          for (int i = 1; i <= n; ++i) {
            if (!(subset & (1u << (i - 1)))) continue;
            MultiExponent e(nd);
            e[FormalDefect::var_index(i, j + 1, d)] = 1;
            lf.add_term(e, spec.one());
          }
          it = pow_cache.emplace(key, lf.pow(m[j])).first;
        }
        term = term * it->second;
      }
      for (const auto& [tm, tc] : term.terms()) acc.add_term(tm, tc);
    }
  }
  return FormalDefect{n, d, std::move(acc)};
}

namespace {

void chain_expansion(const MultiExponent& cur, int remaining, const FieldSpec& spec,
                     const FieldElement& coeff, std::vector<MultiExponent>& stack,
                     SparsePolynomial& acc, int n, int d, std::uint64_t budget,
                     std::uint64_t& visited) {
  if (remaining == 0) {
    if (++visited > budget) throw budget_error("chain expansion exceeds budget");
    // stack holds m_1 > ... > m_s; block k receives m_{s-k+1} - m_{s-k+2}
    MultiExponent e(n * d);
    const int s = static_cast<int>(stack.size());
    for (int k = 1; k <= s; ++k) {
      const MultiExponent& hi = stack[s - k];
      for (int j = 0; j < d; ++j) {
        std::int64_t lo = (k == 1) ? 0 : stack[s - k + 1][j];
        e[FormalDefect::var_index(k, j + 1, d)] = hi[j] - lo;
      }
    }
    acc.add_term(e, coeff);
    return;
  }
  // enumerate all nonzero successors strictly below cur, coordinatewise
  MultiExponent next(cur.size());
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == cur.size()) {
      if (next == cur || next.is_zero()) return;
      FieldElement step = multi_binom(cur, next, spec);
      if (step.is_zero()) return;  // non-regular link contributes nothing
      stack.push_back(next);
      chain_expansion(next, remaining - 1, spec, coeff * step, stack, acc, n, d,
                      budget, visited);
      stack.pop_back();
      return;
    }
    for (std::int64_t v = 0; v <= cur[i]; ++v) {
      next[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
}

}  // namespace

FormalDefect formal_defect_via_chains(const SparsePolynomial& monomial, int s,
                                      std::uint64_t budget) {
  if (s < 1) throw error("defect arity must be >= 1");
  if (monomial.term_count() != 1)
    throw error("chain expansion expects a single monomial");
  const auto& [m, c] = *monomial.terms().begin();
  if (m.is_zero()) throw error("chain expansion expects a nonconstant monomial");
  const FieldSpec& spec = monomial.field();
  const int d = monomial.dim();
  SparsePolynomial acc(spec, s * d);
  std::vector<MultiExponent> stack{m};
  std::uint64_t visited = 0;
  chain_expansion(m, s - 1, spec, c, stack, acc, s, d, budget, visited);
  return FormalDefect{s, d, std::move(acc)};
}

std::string RegularChain::str() const {
  std::string out;
  for (const auto& link : links) {
    if (!out.empty()) out += ">";
    out += link.str();
  }
  if (!links.empty()) out += ">" + MultiExponent(links[0].size()).str();
  return out;
}

namespace {

// nonzero base-p digit positions of every coordinate; over Q the whole value
// sits in position 0
std::vector<std::pair<int, int>> nonzero_digits(const MultiExponent& m,
                                                const FieldSpec& spec) {
  std::vector<std::pair<int, int>> out;  // (coord, digit position)
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (spec.is_rational()) {
      if (m[i] > 0) out.emplace_back(static_cast<int>(i), 0);
      continue;
    }
    std::int64_t t = m[i];
    int pos = 0;
    while (t > 0) {
      if (t % spec.p() != 0) out.emplace_back(static_cast<int>(i), pos);
      t /= spec.p();
      ++pos;
    }
  }
  return out;
}

std::int64_t power_of(const FieldSpec& spec, int digit) {
  if (spec.is_rational()) return 1;
  std::int64_t v = 1;
  for (int i = 0; i < digit; ++i) v *= spec.p();
  return v;
}

void enumerate_longest_chains(const MultiExponent& cur, std::int64_t remaining,
                              const FieldSpec& spec, std::vector<MultiExponent>& stack,
                              std::vector<RegularChain>& out, std::uint64_t budget) {
  if (remaining == 0) {
    if (out.size() >= budget) throw budget_error("chain enumeration exceeds budget");
    out.push_back(RegularChain{stack});
    return;
  }
  for (const auto& [coord, digit] : nonzero_digits(cur, spec)) {
    MultiExponent next = cur;
    next[coord] -= power_of(spec, digit);
    if (next.is_zero()) continue;  // chains stop strictly above zero
    stack.push_back(next);
    enumerate_longest_chains(next, remaining - 1, spec, stack, out, budget);
    stack.pop_back();
  }
}

}  // namespace

ChainsResult longest_regular_chains(const MultiExponent& m, const FieldSpec& spec,
                                    bool enumerate_all, std::uint64_t budget) {
  if (m.is_zero()) throw error("chains of the zero multiexponent are undefined");
  ChainsResult result;
  result.length = p_degree_of(m, spec);
  if (!enumerate_all) return result;
  std::vector<MultiExponent> stack{m};
  enumerate_longest_chains(m, result.length - 1, spec, stack, result.chains, budget);
  for (const RegularChain& chain : result.chains) {
    if (static_cast<std::int64_t>(chain.links.size()) != result.length)
      throw error("internal: chain of wrong length enumerated");
    for (std::size_t i = 0; i + 1 < chain.links.size(); ++i)
      if (multi_binom(chain.links[i], chain.links[i + 1], spec).is_zero())
        throw error("internal: non-regular chain enumerated: " + chain.str());
  }
  return result;
}

std::vector<LastLink> last_link_profile(const MultiExponent& m, const FieldSpec& spec) {
  if (m.is_zero()) throw error("last links of the zero multiexponent are undefined");
  std::vector<LastLink> out;
  for (const auto& [coord, digit] : nonzero_digits(m, spec))
    out.push_back(LastLink{coord, digit, power_of(spec, digit)});
  return out;
}

namespace {

void require_zero_at_origin(const FunctionTable& table) {
  if (!table.at(std::uint64_t{0}).is_zero())
    throw error("defect requires a table with value 0 at the origin");
}

std::uint64_t checked_tuple_count(const FunctionTable& table, int n,
                                  std::uint64_t budget) {
  const std::uint64_t points = table.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / points + 1) total = budget + 1;
    else total *= points;
    if (total > budget)
      throw budget_error("dense defect table of " + std::to_string(points) + "^" +
                         std::to_string(n) + " tuples exceeds budget " +
                         std::to_string(budget) + "; supply an explicit tuple list");
  }
  return total;
}

// index of the pointwise sum of two points given by their indices
std::uint64_t add_indices(const FieldSpec& spec, int dim, std::uint64_t a,
                          std::uint64_t b) {
  const std::uint64_t q = static_cast<std::uint64_t>(spec.q());
  if (spec.e() == 1) {
    // digitwise addition mod p
    std::uint64_t out = 0, mult = 1;
    for (int i = 0; i < dim; ++i) {
      out += (a % q + b % q) % q * mult;
      a /= q;
      b /= q;
      mult *= q;
    }
    return out;
  }
  Point pa = point_at_index(spec, dim, a);
  Point pb = point_at_index(spec, dim, b);
  return point_index(add_points(pa, pb));
}

}  // namespace

FieldElement defect_at(const FunctionTable& table, std::span<const Point> args) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw error("defect arity must be >= 1");
  FieldElement acc = table.field().zero();
  std::vector<std::uint64_t> arg_idx(n);
  for (int i = 0; i < n; ++i) arg_idx[i] = table.index_of(args[i]);
  std::vector<std::uint64_t> sums(std::size_t{1} << n, 0);
  for (std::uint64_t subset = 1; subset < sums.size(); ++subset) {
    const std::uint64_t low = subset & (~subset + 1);
    const int bit = std::countr_zero(low);
    sums[subset] = subset == low
                       ? arg_idx[bit]
                       : add_indices(table.field(), table.dim(), sums[subset ^ low],
                                     arg_idx[bit]);
    const int used = std::popcount(subset);
    const FieldElement& v = table.at(sums[subset]);
    if ((n - used) % 2 == 0) acc += v;
    else acc -= v;
  }
  return acc;
}

std::vector<FieldElement> defect_on_tuples(const FunctionTable& table, int n,
                                           std::span<const std::vector<Point>> tuples) {
  require_zero_at_origin(table);
  std::vector<FieldElement> out;
  out.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    if (static_cast<int>(tuple.size()) != n)
      throw error("argument tuple arity mismatch");
    out.push_back(defect_at(table, tuple));
  }
  return out;
}

DefectTable defect_table(const FunctionTable& table, int n, std::uint64_t budget) {
  if (n < 1) throw error("defect arity must be >= 1");
  require_zero_at_origin(table);
  const FieldSpec& spec = table.field();
  const std::uint64_t points = table.size();
  const std::uint64_t total = checked_tuple_count(table, n, budget);

  // pairwise sum table, when affordable
  std::vector<std::uint32_t> add;
  const bool addtab = points <= (std::uint64_t{1} << 12);
  if (addtab) {
    add.resize(points * points);
    for (std::uint64_t a = 0; a < points; ++a)
      for (std::uint64_t b = 0; b < points; ++b)
        add[a * points + b] =
            static_cast<std::uint32_t>(add_indices(spec, table.dim(), a, b));
  }

  std::vector<FieldElement> values(total, spec.zero());
  std::vector<std::uint64_t> arg_idx(n);
  std::vector<std::uint64_t> sums(std::size_t{1} << n, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rem = t;
    for (int i = n - 1; i >= 0; --i) {
      arg_idx[i] = rem % points;
      rem /= points;
    }
    FieldElement acc = spec.zero();
    for (std::uint64_t subset = 1; subset < sums.size(); ++subset) {
      const std::uint64_t low = subset & (~subset + 1);
      const int bit = std::countr_zero(low);
      if (subset == low) sums[subset] = arg_idx[bit];
      else if (addtab) sums[subset] = add[sums[subset ^ low] * points + arg_idx[bit]];
      else sums[subset] = add_indices(spec, table.dim(), sums[subset ^ low], arg_idx[bit]);
      const FieldElement& v = table.at(sums[subset]);
      if ((n - std::popcount(subset)) % 2 == 0) acc += v;
      else acc -= v;
    }
    values[t] = acc;
  }
  return DefectTable{&spec, table.dim(), n, std::move(values)};
}

DefectTable defect_table_recurrence(const FunctionTable& table, int n,
                                    std::uint64_t budget) {
  if (n < 1) throw error("defect arity must be >= 1");
  require_zero_at_origin(table);
  const FieldSpec& spec = table.field();
  const std::uint64_t points = table.size();
  checked_tuple_count(table, n, budget);

  std::vector<FieldElement> level = table.values();  // the first defect is the map itself
  std::uint64_t level_size = points;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t rest = level_size / points;  // points^{k-2} tuples of the tail
    const std::uint64_t next_size = level_size * points;
    std::vector<FieldElement> next(next_size, spec.zero());
    for (std::uint64_t u1 = 0; u1 < points; ++u1) {
      for (std::uint64_t u2 = 0; u2 < points; ++u2) {
        const std::uint64_t sum12 = add_indices(spec, table.dim(), u1, u2);
        for (std::uint64_t r = 0; r < rest; ++r) {
          next[(u1 * points + u2) * rest + r] = level[sum12 * rest + r] -
                                                level[u1 * rest + r] -
                                                level[u2 * rest + r];
        }
      }
    }
    level = std::move(next);
    level_size = next_size;
  }
  return DefectTable{&spec, table.dim(), n, std::move(level)};
}

std::int64_t comb_degree(const SparsePolynomial& f) {
  if (!f.constant_term().is_zero())
    throw error("combinatorial degree requires f(0) = 0 (constant term present)");
  return f.p_degree();
}

std::int64_t comb_degree_oracle(const SparsePolynomial& f, int cap) {
  if (!f.constant_term().is_zero())
    throw error("combinatorial degree requires f(0) = 0 (constant term present)");
  if (f.is_zero()) return -1;
  FormalDefect current = formal_defect(f, 1);  // equals f, nonzero here
  for (int n = 1; n <= cap; ++n) {
    FormalDefect next = formal_defect(f, n + 1);
    if (next.is_zero()) {
      if (current.is_zero()) throw error("internal: defect vanished before its successor");
      return n;
    }
    current = std::move(next);
  }
  throw budget_error("combinatorial degree oracle exceeded expansion cap");
}

}  // namespace napp
