#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cobham/dfa.hpp"

namespace cobham {

// f_s(n): the set of states reachable from s by words of length n. Kept
// sorted so equal subsets compare and hash equal.
struct SubsetState {
  std::vector<State> states;

  bool empty() const { return states.empty(); }
  friend bool operator==(const SubsetState&, const SubsetState&) = default;
};

struct SubsetStateHash {
  std::size_t operator()(const SubsetState& subset) const noexcept;
};

// One step of the sequence f_s. Undefined transitions are dropped.
SubsetState subset_step(const Dfa& dfa, const SubsetState& subset);

// Ultimately periodic 0/1 sequence: head_bits[n] for n < preperiod, then
// cycle_bits[(n - preperiod) % period].
struct UltimatePeriod {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<bool> head_bits;
  std::vector<bool> cycle_bits{false};

  // First repeat f_s(first_repeat_start) == f_s(first_repeat_end) found while
  // profiling. Informational; (preperiod, period) are already minimal.
  std::uint64_t first_repeat_start = 0;
  std::uint64_t first_repeat_end = 1;

  bool bit(std::uint64_t n) const;
  bool infinite() const;  // some cycle bit set

  friend bool operator==(const UltimatePeriod&, const UltimatePeriod&) = default;
};

inline constexpr std::uint64_t kDefaultProfileCap = 1ULL << 20;

// Profile of 1_{L_s}, L_s = { |w| : delta(s, w) final }. Walks f_s until a
// subset repeats, then reduces to the minimal (preperiod, period).
// `s` may be kNoState, which stands for a rejecting sink.
UltimatePeriod length_profile(const Dfa& dfa, State s, std::uint64_t cap = kDefaultProfileCap);

// Reduces an arbitrary (head, cycle) description to minimal form.
UltimatePeriod canonical_profile(std::vector<bool> head, std::vector<bool> cycle);

// Least C with bit(n) == 1 for every n >= C; nullopt when L_s is coinfinite.
std::optional<std::uint64_t> cofinite_threshold(const UltimatePeriod& profile);

} // namespace cobham
