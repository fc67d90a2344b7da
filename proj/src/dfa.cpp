#include "cobham/dfa.hpp"

#include <deque>
#include <map>
#include <string>

#include "cobham/error.hpp"

namespace cobham {

Dfa::Dfa(std::uint32_t alphabet_size, std::uint32_t state_count, State initial)
    : alphabet_(alphabet_size), initial_(initial), final_(state_count, false),
      delta_(static_cast<std::size_t>(state_count) * alphabet_size, kNoState) {
  check_base(alphabet_size);
  if (state_count == 0)
    throw Error(ErrorKind::InvalidArgument, "automaton needs at least one state");
  if (initial >= state_count)
    throw Error(ErrorKind::InvalidArgument, "initial state out of range");
}

Dfa Dfa::empty(std::uint32_t alphabet_size) { return Dfa(alphabet_size, 1, 0); }

std::size_t Dfa::index(State s, Digit d) const {
  if (s >= state_count())
    throw Error(ErrorKind::InvalidArgument, "state " + std::to_string(s) + " out of range");
  if (d >= alphabet_)
    throw Error(ErrorKind::InvalidArgument, "digit " + std::to_string(d) +
                                                " out of range for base " +
                                                std::to_string(alphabet_));
  return static_cast<std::size_t>(s) * alphabet_ + d;
}

std::vector<State> Dfa::finals() const {
  std::vector<State> result;
  for (State s = 0; s < state_count(); ++s)
    if (final_[s])
      result.push_back(s);
  return result;
}

void Dfa::set_initial(State s) {
  if (s >= state_count())
    throw Error(ErrorKind::InvalidArgument, "initial state out of range");
  initial_ = s;
}

void Dfa::set_final(State s, bool accepting) {
  if (s >= state_count())
    throw Error(ErrorKind::InvalidArgument, "final state out of range");
  final_[s] = accepting;
}

void Dfa::set_transition(State from, Digit d, State to) {
  if (to >= state_count())
    throw Error(ErrorKind::InvalidArgument, "transition target out of range");
  delta_[index(from, d)] = to;
}

void Dfa::clear_transition(State from, Digit d) { delta_[index(from, d)] = kNoState; }

State Dfa::add_state(bool accepting) {
  final_.push_back(accepting);
  delta_.resize(delta_.size() + alphabet_, kNoState);
  return state_count() - 1;
}

bool Dfa::is_complete() const {
  for (State t : delta_)
    if (t == kNoState)
      return false;
  return true;
}

std::size_t Dfa::transition_count() const {
  std::size_t count = 0;
  for (State t : delta_)
    if (t != kNoState)
      ++count;
  return count;
}

State run(const Dfa& dfa, State from, std::span<const Digit> word) {
  State s = from;
  for (Digit d : word) {
    if (s == kNoState)
      return kNoState;
    s = dfa.next(s, d);
  }
  return s;
}

bool accepts(const Dfa& dfa, const DigitWord& word) {
  for (Digit d : word.digits)
    if (d >= dfa.alphabet_size())
      throw Error(ErrorKind::InvalidArgument, "digit " + std::to_string(d) +
                                                  " out of range for base " +
                                                  std::to_string(dfa.alphabet_size()));
  const State s = run(dfa, dfa.initial(), word.digits);
  return s != kNoState && dfa.is_final(s);
}

std::vector<bool> accessible_states(const Dfa& dfa) {
  std::vector<bool> seen(dfa.state_count(), false);
  std::vector<State> stack{dfa.initial()};
  seen[dfa.initial()] = true;
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (Digit d = 0; d < dfa.alphabet_size(); ++d) {
      const State t = dfa.next(s, d);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible_states(const Dfa& dfa) {
  const std::uint32_t n = dfa.state_count();
  std::vector<std::vector<State>> reverse(n);
  for (State s = 0; s < n; ++s)
    for (Digit d = 0; d < dfa.alphabet_size(); ++d)
      if (State t = dfa.next(s, d); t != kNoState)
        reverse[t].push_back(s);

  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s)
    if (dfa.is_final(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    const State t = stack.back();
    stack.pop_back();
    for (State s : reverse[t])
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
  }
  return seen;
}

Dfa complete(const Dfa& dfa) {
  if (dfa.is_complete())
    return dfa;
  Dfa result = dfa;
  const State sink = result.add_state(false);
  for (State s = 0; s < result.state_count(); ++s)
    for (Digit d = 0; d < result.alphabet_size(); ++d)
      if (result.next(s, d) == kNoState)
        result.set_transition(s, d, sink);
  return result;
}

namespace {

// BFS renumbering restricted to `keep`; the initial state must be kept.
Dfa renumber(const Dfa& dfa, const std::vector<bool>& keep) {
  const std::uint32_t k = dfa.alphabet_size();
  std::vector<State> id(dfa.state_count(), kNoState);
  std::vector<State> order;
  std::deque<State> queue{dfa.initial()};
  id[dfa.initial()] = 0;
  order.push_back(dfa.initial());
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (Digit d = 0; d < k; ++d) {
      const State t = dfa.next(s, d);
      if (t != kNoState && keep[t] && id[t] == kNoState) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }

  Dfa result(k, static_cast<std::uint32_t>(order.size()), 0);
  for (State s : order) {
    result.set_final(id[s], dfa.is_final(s));
    for (Digit d = 0; d < k; ++d) {
      const State t = dfa.next(s, d);
      if (t != kNoState && keep[t])
        result.set_transition(id[s], d, id[t]);
    }
  }
  return result;
}

} // namespace

Dfa trim(const Dfa& dfa) {
  const auto acc = accessible_states(dfa);
  const auto coacc = coaccessible_states(dfa);
  std::vector<bool> keep(dfa.state_count());
  for (State s = 0; s < dfa.state_count(); ++s)
    keep[s] = acc[s] && coacc[s];
  if (!keep[dfa.initial()])
    return Dfa::empty(dfa.alphabet_size());
  return renumber(dfa, keep);
}

Dfa minimize(const Dfa& dfa) {
  const Dfa full = complete(trim(dfa));
  const std::uint32_t n = full.state_count();
  const std::uint32_t k = full.alphabet_size();

  // Moore refinement: split blocks by (block, successor blocks) until stable.
  std::vector<std::uint32_t> block(n);
  for (State s = 0; s < n; ++s)
    block[s] = full.is_final(s) ? 1 : 0;
  std::uint32_t block_count = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signatures;
    std::vector<std::uint32_t> refined(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::uint32_t> signature{block[s]};
      signature.reserve(k + 1);
      for (Digit d = 0; d < k; ++d)
        signature.push_back(block[full.next(s, d)]);
      auto [it, inserted] =
          signatures.emplace(std::move(signature), static_cast<std::uint32_t>(signatures.size()));
      refined[s] = it->second;
    }
    const auto refined_count = static_cast<std::uint32_t>(signatures.size());
    block = std::move(refined);
    if (refined_count == block_count)
      break;
    block_count = refined_count;
  }

  Dfa quotient(k, block_count, block[full.initial()]);
  for (State s = 0; s < n; ++s) {
    quotient.set_final(block[s], full.is_final(s));
    for (Digit d = 0; d < k; ++d)
      quotient.set_transition(block[s], d, block[full.next(s, d)]);
  }
  return trim(quotient);
}

Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op) {
  if (lhs.alphabet_size() != rhs.alphabet_size())
    throw Error(ErrorKind::InvalidArgument, "alphabet mismatch: " +
                                                std::to_string(lhs.alphabet_size()) + " vs " +
                                                std::to_string(rhs.alphabet_size()));
  const Dfa a = complete(lhs);
  const Dfa b = complete(rhs);
  const std::uint32_t k = a.alphabet_size();

  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State x, State y) {
    auto [it, inserted] = ids.emplace(std::make_pair(x, y), static_cast<State>(pairs.size()));
    if (inserted)
      pairs.emplace_back(x, y);
    return it->second;
  };
  intern(a.initial(), b.initial());

  std::vector<std::vector<State>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    std::vector<State> row(k);
    for (Digit d = 0; d < k; ++d)
      row[d] = intern(a.next(x, d), b.next(y, d));
    edges.push_back(std::move(row));
  }

  Dfa result(k, static_cast<std::uint32_t>(pairs.size()), 0);
  for (State s = 0; s < result.state_count(); ++s) {
    const bool in_a = a.is_final(pairs[s].first);
    const bool in_b = b.is_final(pairs[s].second);
    bool accepting = false;
    switch (op) {
    case BoolOp::Union: accepting = in_a || in_b; break;
    case BoolOp::Intersection: accepting = in_a && in_b; break;
    case BoolOp::Difference: accepting = in_a && !in_b; break;
    }
    result.set_final(s, accepting);
    for (Digit d = 0; d < k; ++d)
      result.set_transition(s, d, edges[s][d]);
  }
  return result;
}

Dfa complement(const Dfa& dfa) {
  Dfa result = complete(dfa);
  for (State s = 0; s < result.state_count(); ++s)
    result.set_final(s, !result.is_final(s));
  return result;
}

bool is_empty(const Dfa& dfa) {
  const auto acc = accessible_states(dfa);
  for (State s = 0; s < dfa.state_count(); ++s)
    if (acc[s] && dfa.is_final(s))
      return false;
  return true;
}

bool is_infinite(const Dfa& dfa) {
  // Infinite iff the trimmed automaton has a cycle.
  const Dfa t = trim(dfa);
  const std::uint32_t n = t.state_count();
  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  for (State root = 0; root < n; ++root) {
    if (colour[root] != White)
      continue;
    std::vector<std::pair<State, Digit>> stack{{root, 0}};
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [s, d] = stack.back();
      if (d == t.alphabet_size()) {
        colour[s] = Black;
        stack.pop_back();
        continue;
      }
      const State next = t.next(s, d++);
      if (next == kNoState)
        continue;
      if (colour[next] == Grey)
        return true;
      if (colour[next] == White) {
        colour[next] = Grey;
        stack.emplace_back(next, 0);
      }
    }
  }
  return false;
}

bool equivalent(const Dfa& lhs, const Dfa& rhs) {
  return is_empty(product(lhs, rhs, BoolOp::Difference)) &&
         is_empty(product(rhs, lhs, BoolOp::Difference));
}

Dfa canonical_words(std::uint32_t base) {
  Dfa dfa(base, 2, 0);
  dfa.set_final(0);
  dfa.set_final(1);
  for (Digit d = 1; d < base; ++d)
    dfa.set_transition(0, d, 1);
  for (Digit d = 0; d < base; ++d)
    dfa.set_transition(1, d, 1);
  return dfa;
}

LengthLayers::LengthLayers(const Dfa& dfa) : dfa_(&dfa) {
  std::vector<bool> target(dfa.state_count());
  for (State s = 0; s < dfa.state_count(); ++s)
    target[s] = dfa.is_final(s);
  layers_.push_back(std::move(target));
}

LengthLayers::LengthLayers(const Dfa& dfa, std::vector<bool> target) : dfa_(&dfa) {
  target.resize(dfa.state_count(), false);
  layers_.push_back(std::move(target));
}

bool LengthLayers::feasible(State s, std::size_t length) {
  if (s == kNoState)
    return false;
  extend_to(length);
  return layers_[length][s];
}

void LengthLayers::extend_to(std::size_t length) {
  const Dfa& dfa = *dfa_;
  while (layers_.size() <= length) {
    const auto& previous = layers_.back();
    std::vector<bool> layer(dfa.state_count(), false);
    for (State s = 0; s < dfa.state_count(); ++s)
      for (Digit d = 0; d < dfa.alphabet_size() && !layer[s]; ++d)
        if (State t = dfa.next(s, d); t != kNoState && previous[t])
          layer[s] = true;
    layers_.push_back(std::move(layer));
  }
}

} // namespace cobham
