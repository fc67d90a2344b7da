#include "cobham/recognizable_set.hpp"

#include <map>
#include <string>

#include "cobham/error.hpp"

namespace cobham {

namespace {

// Copy of `dfa` with a fresh initial state that mirrors the old initial
// state's transitions and accepts the empty word iff `accept_empty`.
Dfa with_empty_word(const Dfa& dfa, bool accept_empty) {
  Dfa result = dfa;
  const State start = result.add_state(accept_empty);
  for (Digit d = 0; d < dfa.alphabet_size(); ++d)
    if (State t = dfa.next(dfa.initial(), d); t != kNoState)
      result.set_transition(start, d, t);
  result.set_initial(start);
  return result;
}

void check_same_base(const RecognizableSet& lhs, const RecognizableSet& rhs) {
  if (lhs.base() != rhs.base())
    throw Error(ErrorKind::InvalidArgument, "base mismatch: " + std::to_string(lhs.base()) +
                                                " vs " + std::to_string(rhs.base()));
}

// Smallest word of exactly `length` digits from `from` into the final set,
// appended to `word`. Requires layers.feasible(from, length).
void append_least_completion(const Dfa& dfa, LengthLayers& layers, State from,
                             std::size_t length, std::vector<Digit>& word) {
  State s = from;
  for (std::size_t remaining = length; remaining > 0; --remaining) {
    for (Digit d = 0; d < dfa.alphabet_size(); ++d) {
      const State t = dfa.next(s, d);
      if (layers.feasible(t, remaining - 1)) {
        word.push_back(d);
        s = t;
        break;
      }
    }
  }
}

} // namespace

RecognizableSet::RecognizableSet(Dfa dfa, bool contains_zero, CanonicalPolicy policy)
    : dfa_(std::move(dfa)), contains_zero_(contains_zero) {
  const bool accepts_empty = dfa_.is_final(dfa_.initial());
  if (policy == CanonicalPolicy::Strict) {
    const State after_zero = dfa_.next(dfa_.initial(), 0);
    if (after_zero != kNoState && coaccessible_states(dfa_)[after_zero])
      throw Error(ErrorKind::LeadingZero,
                  "automaton accepts a word with a leading zero (state " +
                      std::to_string(dfa_.initial()) + " --0--> state " +
                      std::to_string(after_zero) + " reaches a final state)");
    if (accepts_empty && !contains_zero_)
      throw Error(ErrorKind::Validation,
                  "automaton accepts the empty word (the representation of 0) but "
                  "contains_zero is false");
  } else {
    dfa_ = trim(product(dfa_, canonical_words(dfa_.alphabet_size()), BoolOp::Intersection));
    contains_zero_ = contains_zero_ || accepts_empty;
  }
}

bool member(const RecognizableSet& set, const BigInt& n) {
  if (n < 0)
    return false;
  if (n == 0)
    return set.contains_zero();
  return accepts(set.dfa(), encode(n, set.base()));
}

bool is_finite(const RecognizableSet& set) { return !is_infinite(set.dfa()); }

RecognizableSet trim(const RecognizableSet& set) {
  return RecognizableSet(trim(set.dfa()), set.contains_zero());
}

RecognizableSet minimize(const RecognizableSet& set) {
  return RecognizableSet(minimize(set.dfa()), set.contains_zero());
}

bool equivalent(const RecognizableSet& lhs, const RecognizableSet& rhs) {
  check_same_base(lhs, rhs);
  return equivalent(with_empty_word(lhs.dfa(), lhs.contains_zero()),
                    with_empty_word(rhs.dfa(), rhs.contains_zero()));
}

bool right_dense(const RecognizableSet& set) {
  // Automaton for 0* rho_p(X): a new start state loops on 0 and otherwise
  // behaves like the old initial state. Words of rho_p(X) never start with 0,
  // so this stays deterministic.
  const Dfa& dfa = set.dfa();
  Dfa padded = dfa;
  const State start = padded.add_state(set.contains_zero() || dfa.is_final(dfa.initial()));
  padded.set_transition(start, 0, start);
  for (Digit d = 1; d < dfa.alphabet_size(); ++d)
    if (State t = dfa.next(dfa.initial(), d); t != kNoState)
      padded.set_transition(start, d, t);
  padded.set_initial(start);

  const Dfa full = complete(padded);
  const auto acc = accessible_states(full);
  const auto coacc = coaccessible_states(full);
  for (State s = 0; s < full.state_count(); ++s)
    if (acc[s] && !coacc[s])
      return false;
  return true;
}

std::optional<BigInt> next_member(const RecognizableSet& set, const BigInt& lower,
                                  std::size_t max_digits) {
  if (lower <= 0 && set.contains_zero())
    return BigInt(0);

  const Dfa dfa = trim(set.dfa());
  LengthLayers layers(dfa);
  const std::uint32_t base = dfa.alphabet_size();
  const BigInt start = lower <= 0 ? BigInt(1) : lower;
  const DigitWord bound = encode(start, base);
  const std::size_t length = bound.size();
  if (length > max_digits)
    return std::nullopt;

  // Same length: keep the longest prefix of `bound` we can, then bump one
  // digit and complete with the least feasible suffix.
  std::vector<State> prefix_states{dfa.initial()};
  for (Digit d : bound.digits) {
    const State t = dfa.next(prefix_states.back(), d);
    if (t == kNoState)
      break;
    prefix_states.push_back(t);
  }
  if (prefix_states.size() == length + 1 && dfa.is_final(prefix_states.back()))
    return start;
  for (std::size_t i = std::min(prefix_states.size(), length) ; i-- > 0;) {
    for (Digit d = bound.digits[i] + 1; d < base; ++d) {
      const State t = dfa.next(prefix_states[i], d);
      if (!layers.feasible(t, length - i - 1))
        continue;
      DigitWord word{base, {bound.digits.begin(), bound.digits.begin() + static_cast<std::ptrdiff_t>(i)}};
      word.digits.push_back(d);
      append_least_completion(dfa, layers, t, length - i - 1, word.digits);
      return decode(word);
    }
  }

  // Longer words: the least word of each successive length.
  const bool finite = !is_infinite(dfa);
  for (std::size_t len = length + 1;; ++len) {
    if ((finite && len > dfa.state_count()) || len > max_digits)
      return std::nullopt;
    if (!layers.feasible(dfa.initial(), len))
      continue;
    for (Digit d = 1; d < base; ++d) {
      const State t = dfa.next(dfa.initial(), d);
      if (!layers.feasible(t, len - 1))
        continue;
      DigitWord word{base, {d}};
      append_least_completion(dfa, layers, t, len - 1, word.digits);
      return decode(word);
    }
  }
}

void for_each_member(const RecognizableSet& set,
                     const std::function<bool(const BigInt&)>& visit) {
  if (set.contains_zero() && !visit(BigInt(0)))
    return;

  const Dfa dfa = trim(set.dfa());
  LengthLayers layers(dfa);
  const std::uint32_t base = dfa.alphabet_size();
  const bool finite = !is_infinite(dfa);

  for (std::size_t length = 1;; ++length) {
    if (finite && length > dfa.state_count())
      return;
    if (!layers.feasible(dfa.initial(), length))
      continue;

    // Depth-first, digits ascending, so values come out in increasing order.
    bool keep_going = true;
    std::function<void(std::size_t, State, const BigInt&)> descend =
        [&](std::size_t position, State s, const BigInt& value) {
          if (position == length) {
            keep_going = visit(value);
            return;
          }
          for (Digit d = position == 0 ? 1 : 0; d < base && keep_going; ++d) {
            const State t = dfa.next(s, d);
            if (layers.feasible(t, length - position - 1))
              descend(position + 1, t, value * base + d);
          }
        };
    descend(0, dfa.initial(), BigInt(0));
    if (!keep_going)
      return;
  }
}

std::vector<BigInt> enumerate(const RecognizableSet& set, std::size_t limit) {
  std::vector<BigInt> result;
  if (limit == 0)
    return result;
  for_each_member(set, [&](const BigInt& x) {
    result.push_back(x);
    return result.size() < limit;
  });
  return result;
}

std::vector<BigInt> enumerate_up_to(const RecognizableSet& set, const BigInt& horizon) {
  std::vector<BigInt> result;
  for_each_member(set, [&](const BigInt& x) {
    if (x > horizon)
      return false;
    result.push_back(x);
    return true;
  });
  return result;
}

RecognizableSet example1() {
  Dfa dfa(2, 3, 0);
  dfa.set_final(1);
  dfa.set_transition(0, 1, 1);
  dfa.set_transition(1, 0, 2);
  dfa.set_transition(1, 1, 2);
  dfa.set_transition(2, 0, 1);
  dfa.set_transition(2, 1, 1);
  return RecognizableSet(std::move(dfa), false);
}

RecognizableSet naturals(std::uint32_t base) {
  Dfa dfa(base, 2, 0);
  dfa.set_final(1);
  for (Digit d = 0; d < base; ++d) {
    if (d != 0)
      dfa.set_transition(0, d, 1);
    dfa.set_transition(1, d, 1);
  }
  return RecognizableSet(std::move(dfa), true);
}

RecognizableSet multiples_of(std::uint32_t modulus, std::uint32_t base) {
  if (modulus == 0)
    throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  // State 0 is the start; state 1 + r tracks the residue r.
  Dfa dfa(base, modulus + 1, 0);
  dfa.set_final(1);
  for (Digit d = 0; d < base; ++d) {
    if (d != 0)
      dfa.set_transition(0, d, 1 + d % modulus);
    for (std::uint32_t r = 0; r < modulus; ++r)
      dfa.set_transition(1 + r, d,
                         1 + static_cast<State>((static_cast<std::uint64_t>(r) * base + d) % modulus));
  }
  return RecognizableSet(minimize(dfa), true);
}

RecognizableSet powers_of_base(std::uint32_t base) {
  Dfa dfa(base, 2, 0);
  dfa.set_final(1);
  dfa.set_transition(0, 1, 1);
  dfa.set_transition(1, 0, 1);
  return RecognizableSet(std::move(dfa), false);
}

RecognizableSet finite_set(const std::vector<BigInt>& elements, std::uint32_t base) {
  Dfa trie(base, 1, 0);
  bool zero = false;
  for (const BigInt& x : elements) {
    if (x < 0)
      throw Error(ErrorKind::InvalidArgument, "negative element");
    if (x == 0) {
      zero = true;
      continue;
    }
    State s = trie.initial();
    for (Digit d : encode(x, base).digits) {
      State t = trie.next(s, d);
      if (t == kNoState) {
        t = trie.add_state();
        trie.set_transition(s, d, t);
      }
      s = t;
    }
    trie.set_final(s);
  }
  return RecognizableSet(minimize(trie), zero);
}

} // namespace cobham
