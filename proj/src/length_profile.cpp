#include "cobham/length_profile.hpp"

#include <algorithm>
#include <unordered_map>

#include "cobham/error.hpp"

namespace cobham {

std::size_t SubsetStateHash::operator()(const SubsetState& subset) const noexcept {
  std::size_t h = subset.states.size();
  for (State s : subset.states)
    h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

SubsetState subset_step(const Dfa& dfa, const SubsetState& subset) {
  std::vector<bool> hit(dfa.state_count(), false);
  for (State s : subset.states)
    for (Digit d = 0; d < dfa.alphabet_size(); ++d)
      if (State t = dfa.next(s, d); t != kNoState)
        hit[t] = true;
  SubsetState next;
  for (State t = 0; t < dfa.state_count(); ++t)
    if (hit[t])
      next.states.push_back(t);
  return next;
}

bool UltimatePeriod::bit(std::uint64_t n) const {
  if (n < preperiod)
    return head_bits[n];
  return cycle_bits[(n - preperiod) % period];
}

bool UltimatePeriod::infinite() const {
  return std::find(cycle_bits.begin(), cycle_bits.end(), true) != cycle_bits.end();
}

UltimatePeriod canonical_profile(std::vector<bool> head, std::vector<bool> cycle) {
  if (cycle.empty())
    throw Error(ErrorKind::InvalidArgument, "cycle must be nonempty");

  // Smallest rotation period of the cycle; it divides the cycle length.
  const std::size_t length = cycle.size();
  std::size_t period = length;
  for (std::size_t candidate = 1; candidate < length; ++candidate) {
    if (length % candidate != 0)
      continue;
    bool periodic = true;
    for (std::size_t i = candidate; i < length && periodic; ++i)
      periodic = cycle[i] == cycle[i - candidate];
    if (periodic) {
      period = candidate;
      break;
    }
  }
  cycle.resize(period);

  // Pull the preperiod back while the sequence stays periodic.
  while (!head.empty() && head.back() == cycle.back()) {
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    head.pop_back();
  }

  UltimatePeriod profile;
  profile.preperiod = head.size();
  profile.period = period;
  profile.head_bits = std::move(head);
  profile.cycle_bits = std::move(cycle);
  return profile;
}

UltimatePeriod length_profile(const Dfa& dfa, State s, std::uint64_t cap) {
  SubsetState current;
  if (s != kNoState) {
    if (s >= dfa.state_count())
      throw Error(ErrorKind::InvalidArgument, "state " + std::to_string(s) + " out of range");
    current.states.push_back(s);
  }

  std::unordered_map<SubsetState, std::uint64_t, SubsetStateHash> first_seen;
  std::vector<bool> bits;
  for (std::uint64_t n = 0;; ++n) {
    if (auto it = first_seen.find(current); it != first_seen.end()) {
      const std::uint64_t start = it->second;
      std::vector<bool> head(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<bool> cycle(bits.begin() + static_cast<std::ptrdiff_t>(start), bits.end());
      UltimatePeriod profile = canonical_profile(std::move(head), std::move(cycle));
      profile.first_repeat_start = start;
      profile.first_repeat_end = n;
      return profile;
    }
    if (n >= cap)
      throw CapExceeded("subset sequence did not repeat", cap);
    first_seen.emplace(current, n);
    bits.push_back(std::any_of(current.states.begin(), current.states.end(),
                               [&](State t) { return dfa.is_final(t); }));
    current = subset_step(dfa, current);
  }
}

std::optional<std::uint64_t> cofinite_threshold(const UltimatePeriod& profile) {
  if (std::find(profile.cycle_bits.begin(), profile.cycle_bits.end(), false) !=
      profile.cycle_bits.end())
    return std::nullopt;
  std::uint64_t threshold = profile.preperiod;
  while (threshold > 0 && profile.head_bits[threshold - 1])
    --threshold;
  return threshold;
}

} // namespace cobham
