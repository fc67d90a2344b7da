#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cobham/bigint.hpp"
#include "cobham/dfa.hpp"

namespace cobham {

enum class CanonicalPolicy {
  Strict,   // reject automata accepting a word with a leading zero
  Lenient,  // intersect with the canonical-word language instead
};

// X subset of N: X = decode(L(dfa)) together with 0 when contains_zero.
//
// The automaton never accepts a word with a leading zero. Accepting the empty
// word means 0 is in X, so it forces contains_zero (a mismatch is rejected in
// strict mode and repaired in lenient mode). contains_zero may be set without
// the automaton accepting the empty word.
class RecognizableSet {
public:
  RecognizableSet(Dfa dfa, bool contains_zero, CanonicalPolicy policy = CanonicalPolicy::Strict);

  const Dfa& dfa() const noexcept { return dfa_; }
  std::uint32_t base() const noexcept { return dfa_.alphabet_size(); }
  bool contains_zero() const noexcept { return contains_zero_; }

private:
  Dfa dfa_;
  bool contains_zero_;
};

bool member(const RecognizableSet& set, const BigInt& n);

bool is_finite(const RecognizableSet& set);

RecognizableSet trim(const RecognizableSet& set);
RecognizableSet minimize(const RecognizableSet& set);

// Same subset of N.
bool equivalent(const RecognizableSet& lhs, const RecognizableSet& rhs);

// Every u in digits* extends to some uv in 0* rho_p(X).
bool right_dense(const RecognizableSet& set);

// Least element >= lower whose representation has at most max_digits digits,
// or nullopt when there is none.
std::optional<BigInt> next_member(const RecognizableSet& set, const BigInt& lower,
                                  std::size_t max_digits = SIZE_MAX);

// Visits elements in increasing order until the visitor returns false or the
// set is exhausted. Words are generated length by length, lexicographically
// within a length, pruned by exact-length reachability.
void for_each_member(const RecognizableSet& set,
                     const std::function<bool(const BigInt&)>& visit);

std::vector<BigInt> enumerate(const RecognizableSet& set, std::size_t limit);
std::vector<BigInt> enumerate_up_to(const RecognizableSet& set, const BigInt& horizon);

// Union over i >= 0 of [4^i, 2*4^i), i.e. rho_2(X) = 1{00,01,10,11}*.
RecognizableSet example1();

// Small library of sets used by the regression corpus.
RecognizableSet naturals(std::uint32_t base);
RecognizableSet multiples_of(std::uint32_t modulus, std::uint32_t base);
RecognizableSet powers_of_base(std::uint32_t base);
RecognizableSet finite_set(const std::vector<BigInt>& elements, std::uint32_t base);

} // namespace cobham
