#include "cobham/numeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "cobham/error.hpp"

namespace cobham {

namespace {

std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t value) {
  std::map<std::uint64_t, std::uint64_t> exponents;
  for (std::uint64_t prime = 2; prime <= value / prime; ++prime) {
    while (value % prime == 0) {
      ++exponents[prime];
      value /= prime;
    }
  }
  if (value > 1)
    ++exponents[value];
  return exponents;
}

long double log_of(const BigInt& value) {
  // Shift large values into long double range before taking the log.
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
  const unsigned shift = bits > 60 ? bits - 60 : 0;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<long double>()) +
         static_cast<long double>(shift) * std::log(2.0L);
}

void check_query(const KroneckerQuery& query) {
  check_base(query.p);
  check_base(query.q);
  if (query.n < 1 || query.m < 1)
    throw Error(ErrorKind::InvalidArgument, "m and n must be positive");
  if (query.a < 1 || query.b < 1 || query.c < 1 || query.d < 1)
    throw Error(ErrorKind::InvalidArgument, "a, b, c, d must be positive");
  if (!(query.n < query.m))
    throw Error(ErrorKind::Precondition, "kronecker witness requires n < m");
  const auto verdict = mult_independent(query.p, query.q);
  if (!verdict.independent)
    throw Error(ErrorKind::Precondition,
                "bases " + std::to_string(query.p) + " and " + std::to_string(query.q) +
                    " are multiplicatively dependent");
}

} // namespace

void check_base(std::uint64_t base) {
  if (base < 2)
    throw Error(ErrorKind::InvalidArgument, "base must be at least 2, got " + std::to_string(base));
  if (base > UINT32_MAX)
    throw Error(ErrorKind::InvalidArgument, "base too large: " + std::to_string(base));
}

bool radix_less(const DigitWord& lhs, const DigitWord& rhs) {
  if (lhs.digits.size() != rhs.digits.size())
    return lhs.digits.size() < rhs.digits.size();
  return lhs.digits < rhs.digits;
}

DigitWord encode(const BigInt& n, std::uint32_t base) {
  check_base(base);
  if (n < 0)
    throw Error(ErrorKind::InvalidArgument, "cannot encode a negative integer");
  DigitWord word{base, {}};
  BigInt rest = n;
  while (rest > 0) {
    word.digits.push_back(static_cast<Digit>(rest % base));
    rest /= base;
  }
  std::reverse(word.digits.begin(), word.digits.end());
  return word;
}

BigInt decode(const DigitWord& word) {
  check_base(word.base);
  BigInt value = 0;
  for (Digit digit : word.digits) {
    if (digit >= word.base)
      throw Error(ErrorKind::InvalidArgument, "digit " + std::to_string(digit) +
                                                  " out of range for base " +
                                                  std::to_string(word.base));
    value *= word.base;
    value += digit;
  }
  return value;
}

IndependenceVerdict mult_independent(std::uint64_t p, std::uint64_t q) {
  check_base(p);
  check_base(q);
  const auto fp = factorize(p);
  const auto fq = factorize(q);

  IndependenceVerdict verdict;
  bool proportional = fp.size() == fq.size();
  if (proportional) {
    const auto [p0, ep0] = *fp.begin();
    const auto [q0, eq0] = *fq.begin();
    for (auto ip = fp.begin(), iq = fq.begin(); ip != fp.end(); ++ip, ++iq) {
      if (ip->first != iq->first || ip->second * eq0 != iq->second * ep0) {
        proportional = false;
        break;
      }
    }
    if (proportional) {
      const std::uint64_t g = std::gcd(ep0, eq0);
      const std::uint64_t k = eq0 / g;
      const std::uint64_t l = ep0 / g;
      if (power(p, k) != power(q, l))
        throw std::logic_error("dependence witness failed exact check");
      verdict.independent = false;
      verdict.dependence_witness = std::make_pair(k, l);
    }
  }
  return verdict;
}

bool verify_kronecker(const KroneckerQuery& query, const KroneckerWitness& witness) {
  if (witness.k < 1 || witness.l < 1)
    return false;
  const BigInt p_pow = power(query.p, query.a + query.b * witness.k);
  const BigInt q_pow = power(query.q, query.c + query.d * witness.l);
  return query.n * q_pow <= query.m * p_pow &&
         query.m * p_pow < (query.m + 1) * p_pow &&
         (query.m + 1) * p_pow <= (query.n + 1) * q_pow;
}

KroneckerWitness kronecker_witness(const KroneckerQuery& query, std::uint64_t cap) {
  check_query(query);

  const long double ln_p = std::log(static_cast<long double>(query.p));
  const long double ln_q = std::log(static_cast<long double>(query.q));
  const long double ln_m = log_of(query.m);
  const long double ln_n = log_of(query.n);
  const long double ln_m1 = log_of(query.m + 1);
  const long double ln_n1 = log_of(query.n + 1);
  const auto a = static_cast<long double>(query.a);
  const auto b = static_cast<long double>(query.b);

  // For fixed l the admissible window for p^(a+bk) is narrower than a factor
  // of 2 <= p, so at most one k works: the least k meeting the lower bound.
  for (std::uint64_t l = 1; l <= cap; ++l) {
    const long double q_exp = static_cast<long double>(query.c + query.d * l);
    const long double target = ln_n + q_exp * ln_q - ln_m - a * ln_p;
    const long double estimate = std::ceil(target / (b * ln_p));
    const std::int64_t k_est = estimate < 1 ? 1 : static_cast<std::int64_t>(estimate);

    for (std::int64_t k = std::max<std::int64_t>(1, k_est - 1); k <= k_est + 1; ++k) {
      const long double p_exp = a + b * static_cast<long double>(k);
      const long double lower = ln_m + p_exp * ln_p - ln_n - q_exp * ln_q;
      const long double upper = ln_n1 + q_exp * ln_q - ln_m1 - p_exp * ln_p;
      const long double tolerance =
          1e-12L * (1 + q_exp * ln_q + p_exp * ln_p + std::fabs(ln_m) + std::fabs(ln_n1));
      if (lower < -tolerance || upper < -tolerance)
        continue;
      const KroneckerWitness candidate{static_cast<std::uint64_t>(k), l};
      if (verify_kronecker(query, candidate))
        return candidate;
    }
  }
  throw CapExceeded("no kronecker witness with l <= cap", cap);
}

} // namespace cobham
