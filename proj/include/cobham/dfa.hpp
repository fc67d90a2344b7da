#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cobham/numeration.hpp"

namespace cobham {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

// Deterministic automaton over the digit alphabet {0, ..., alphabet_size-1}.
// Transitions may be partial; a missing transition rejects immediately.
class Dfa {
public:
  Dfa(std::uint32_t alphabet_size, std::uint32_t state_count, State initial = 0);

  // One non-final state, no transitions.
  static Dfa empty(std::uint32_t alphabet_size);

  std::uint32_t alphabet_size() const noexcept { return alphabet_; }
  std::uint32_t state_count() const noexcept { return static_cast<std::uint32_t>(final_.size()); }
  State initial() const noexcept { return initial_; }

  bool is_final(State s) const { return final_.at(s); }
  std::vector<State> finals() const;

  // kNoState when undefined.
  State next(State s, Digit d) const { return delta_[index(s, d)]; }

  void set_initial(State s);
  void set_final(State s, bool accepting = true);
  void set_transition(State from, Digit d, State to);
  void clear_transition(State from, Digit d);
  State add_state(bool accepting = false);

  bool is_complete() const;
  std::size_t transition_count() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  std::size_t index(State s, Digit d) const;

  std::uint32_t alphabet_;
  State initial_;
  std::vector<bool> final_;
  std::vector<State> delta_;
};

// State reached from `from` after reading `word`, or kNoState.
State run(const Dfa& dfa, State from, std::span<const Digit> word);

// True iff delta(q0, w) is defined and final. Throws on digits >= alphabet.
bool accepts(const Dfa& dfa, const DigitWord& word);

std::vector<bool> accessible_states(const Dfa& dfa);
std::vector<bool> coaccessible_states(const Dfa& dfa);

// Adds a single non-final sink (state index = old state_count) if any
// transition is missing; returns the input unchanged otherwise.
Dfa complete(const Dfa& dfa);

// Keeps states that are both accessible and coaccessible, renumbered in
// breadth-first order from the initial state (digits ascending). An empty
// language yields Dfa::empty.
Dfa trim(const Dfa& dfa);

// Trimmed minimal automaton in canonical numbering: two automata accept the
// same language iff their minimized forms compare equal.
Dfa minimize(const Dfa& dfa);

enum class BoolOp { Union, Intersection, Difference };

// Product over completed inputs; only reachable pairs are built.
Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op);

Dfa complement(const Dfa& dfa);

bool is_empty(const Dfa& dfa);
bool is_infinite(const Dfa& dfa);

// Emptiness of the symmetric difference.
bool equivalent(const Dfa& lhs, const Dfa& rhs);

// All words without a leading zero, including the empty word.
Dfa canonical_words(std::uint32_t base);

// feasible(s, r): some word of length exactly r leads from s into the target
// set. Layers are built lazily by backward reachability.
class LengthLayers {
public:
  explicit LengthLayers(const Dfa& dfa);
  LengthLayers(const Dfa& dfa, std::vector<bool> target);

  bool feasible(State s, std::size_t length);

private:
  void extend_to(std::size_t length);

  const Dfa* dfa_;
  std::vector<std::vector<bool>> layers_;
};

} // namespace cobham
