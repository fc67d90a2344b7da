#pragma once

// Test-only reference implementations. Nothing here calls into the code paths
// it is used to check: reachability is recomputed with plain std::set layers,
// Example 1 membership comes from its closed form, and the Kronecker oracle
// enumerates exponents exhaustively.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cobham/bigint.hpp"
#include "cobham/dfa.hpp"
#include "cobham/numeration.hpp"
#include "cobham/recognizable_set.hpp"

namespace oracle {

using cobham::BigInt;
using cobham::Dfa;
using cobham::State;

// x in union over i of [4^i, 2*4^i)  <=>  x > 0 and its bit length is odd.
inline bool in_example1(const BigInt& x) {
  if (x <= 0)
    return false;
  const auto bits = boost::multiprecision::msb(x) + 1;
  return bits % 2 == 1;
}

inline std::vector<std::uint64_t> example1_up_to(std::uint64_t horizon) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t lo = 1; lo <= horizon; lo *= 4)
    for (std::uint64_t x = lo; x < 2 * lo && x <= horizon; ++x)
      out.push_back(x);
  return out;
}

// Bits 1_{L_s}(n) for n < count, by n-fold layered reachability.
inline std::vector<bool> length_bits(const Dfa& dfa, State s, std::size_t count) {
  std::vector<bool> bits;
  std::set<State> layer;
  if (s != cobham::kNoState)
    layer.insert(s);
  for (std::size_t n = 0; n < count; ++n) {
    bool hit = false;
    for (State t : layer)
      hit = hit || dfa.is_final(t);
    bits.push_back(hit);
    std::set<State> next;
    for (State t : layer)
      for (cobham::Digit d = 0; d < dfa.alphabet_size(); ++d)
        if (State u = dfa.next(t, d); u != cobham::kNoState)
          next.insert(u);
    layer = std::move(next);
  }
  return bits;
}

// Membership by walking the automaton digit by digit on the decoded value.
inline bool scan_member(const cobham::RecognizableSet& set, std::uint64_t n) {
  if (n == 0)
    return set.contains_zero();
  std::vector<cobham::Digit> digits;
  for (std::uint64_t r = n; r > 0; r /= set.base())
    digits.insert(digits.begin(), static_cast<cobham::Digit>(r % set.base()));
  State s = set.dfa().initial();
  for (auto d : digits) {
    s = set.dfa().next(s, d);
    if (s == cobham::kNoState)
      return false;
  }
  return set.dfa().is_final(s);
}

inline std::vector<std::uint64_t> scan_members(const cobham::RecognizableSet& set,
                                               std::uint64_t horizon) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n <= horizon; ++n)
    if (scan_member(set, n))
      out.push_back(n);
  return out;
}

// Least l, then k, within the given ranges.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
brute_kronecker(const cobham::KroneckerQuery& q, std::uint64_t max_k, std::uint64_t max_l) {
  for (std::uint64_t l = 1; l <= max_l; ++l) {
    const BigInt qq = cobham::power(q.q, q.c + q.d * l);
    for (std::uint64_t k = 1; k <= max_k; ++k) {
      const BigInt pp = cobham::power(q.p, q.a + q.b * k);
      if (q.n * qq <= q.m * pp && (q.m + 1) * pp <= (q.n + 1) * qq)
        return std::make_pair(k, l);
    }
  }
  return std::nullopt;
}

// Random partial automaton with up to max_states states.
inline Dfa random_dfa(std::mt19937_64& rng, std::uint32_t max_states, std::uint32_t alphabet,
                      double edge_probability = 0.75, double final_probability = 0.35) {
  std::uniform_int_distribution<std::uint32_t> count(1, max_states);
  const std::uint32_t n = count(rng);
  std::uniform_int_distribution<State> any_state(0, n - 1);
  std::bernoulli_distribution edge(edge_probability), final(final_probability);
  Dfa dfa(alphabet, n, 0);
  for (State s = 0; s < n; ++s) {
    dfa.set_final(s, final(rng));
    for (cobham::Digit d = 0; d < alphabet; ++d)
      if (edge(rng))
        dfa.set_transition(s, d, any_state(rng));
  }
  return dfa;
}

inline Dfa random_trimmed_dfa(std::mt19937_64& rng, std::uint32_t max_states,
                              std::uint32_t alphabet) {
  while (true) {
    Dfa dfa = cobham::trim(random_dfa(rng, max_states, alphabet));
    if (!cobham::is_empty(dfa))
      return dfa;
  }
}

inline cobham::RecognizableSet random_infinite_set(std::mt19937_64& rng, std::uint32_t max_states,
                                                   std::uint32_t alphabet) {
  while (true) {
    cobham::RecognizableSet set(random_dfa(rng, max_states, alphabet, 0.8, 0.4),
                                std::bernoulli_distribution(0.5)(rng),
                                cobham::CanonicalPolicy::Lenient);
    if (!cobham::is_finite(set))
      return set;
  }
}

// States reached by words with a nonzero first digit, found by exhausting all
// such words up to `max_length` digits.
inline std::set<State> qualifying_by_words(const Dfa& dfa, std::size_t max_length) {
  std::set<State> found;
  std::set<State> layer;
  for (cobham::Digit d = 1; d < dfa.alphabet_size(); ++d)
    if (State t = dfa.next(dfa.initial(), d); t != cobham::kNoState)
      layer.insert(t);
  for (std::size_t len = 1; len <= max_length; ++len) {
    found.insert(layer.begin(), layer.end());
    std::set<State> next;
    for (State t : layer)
      for (cobham::Digit d = 0; d < dfa.alphabet_size(); ++d)
        if (State u = dfa.next(t, d); u != cobham::kNoState)
          next.insert(u);
    layer = std::move(next);
  }
  return found;
}

} // namespace oracle
