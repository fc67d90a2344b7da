#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cobham/bigint.hpp"

namespace cobham {

using Digit = std::uint32_t;

// A finite word over {0, ..., base-1}, most-significant digit first.
struct DigitWord {
  std::uint32_t base = 2;
  std::vector<Digit> digits;

  // No leading zero (or empty).
  bool canonical() const { return digits.empty() || digits.front() != 0; }
  std::size_t size() const { return digits.size(); }

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

// Radix (shortlex) order: shorter words first, then lexicographic.
bool radix_less(const DigitWord& lhs, const DigitWord& rhs);

// Canonical base-p representation. encode(0, p) is the empty word.
DigitWord encode(const BigInt& n, std::uint32_t base);

// Leading zeros are accepted and ignored.
BigInt decode(const DigitWord& word);

void check_base(std::uint64_t base);

struct IndependenceVerdict {
  bool independent = true;
  // (k, l) with p^k == q^l, present iff !independent.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> dependence_witness;
};

// p and q are dependent iff their prime-exponent vectors are proportional.
// The returned witness is the smallest one: p^k == q^l with gcd(k, l) == 1.
IndependenceVerdict mult_independent(std::uint64_t p, std::uint64_t q);

struct KroneckerQuery {
  BigInt m;
  BigInt n;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t c = 1;
  std::uint64_t d = 1;
  std::uint64_t p = 2;
  std::uint64_t q = 3;
};

struct KroneckerWitness {
  std::uint64_t k = 1;
  std::uint64_t l = 1;

  friend bool operator==(const KroneckerWitness&, const KroneckerWitness&) = default;
};

inline constexpr std::uint64_t kDefaultKroneckerCap = 10'000;

// Finds (k, l), both >= 1, with
//   n q^(c+dl) <= m p^(a+bk) < (m+1) p^(a+bk) <= (n+1) q^(c+dl).
// Minimises l first, then k. Logarithms only prune candidates whose
// floating-point slack is far outside the rounding error; every accepted
// witness is checked with exact integers.
KroneckerWitness kronecker_witness(const KroneckerQuery& query,
                                   std::uint64_t cap = kDefaultKroneckerCap);

// Exact check of the inequality chain.
bool verify_kronecker(const KroneckerQuery& query, const KroneckerWitness& witness);

} // namespace cobham
