#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cobham/bigint.hpp"
#include "cobham/dfa.hpp"
#include "cobham/length_profile.hpp"
#include "cobham/numeration.hpp"
#include "cobham/recognizable_set.hpp"

namespace cobham {

struct WitnessOptions {
  std::uint64_t k_check = 8;                       // verification depth
  std::uint64_t cap = kDefaultKroneckerCap;        // search caps (l, extra digits)
  std::uint64_t profile_cap = kDefaultProfileCap;  // subset-sequence iterations
};

// A state of the normal form reachable as delta(q0, rho_p(n)) for some n > 0.
struct QualifyingState {
  State state = 0;
  BigInt least_m;  // least n > 0 with delta(q0, rho_p(n)) == state
  UltimatePeriod profile;
};

// Trimmed minimal automaton, completed with a rejecting sink when some
// transition is missing. Interval witnesses refer to states of this
// automaton; the numbering is canonical, so it is reproducible from the set.
struct NormalForm {
  Dfa dfa;
  std::optional<State> sink;
  std::vector<QualifyingState> qualifying;  // ordered by least_m
};

NormalForm normal_form(const RecognizableSet& set,
                       std::uint64_t profile_cap = kDefaultProfileCap);

enum class IntervalKind { Nonempty, Empty };

// Every interval [m p^(a+bk), (m+1) p^(a+bk)), k >= 0, meets X (Nonempty) or
// misses X (Empty). `state` is delta(q0, rho_p(m)) in the normal form.
struct IntervalWitness {
  std::uint32_t base = 2;
  BigInt m;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  State state = 0;
  IntervalKind kind = IntervalKind::Nonempty;

  std::uint64_t exponent(std::uint64_t k) const { return a + b * k; }
  BigInt low(std::uint64_t k) const;
  BigInt high(std::uint64_t k) const;  // exclusive

  friend bool operator==(const IntervalWitness&, const IntervalWitness&) = default;
};

// Least m >= m_min (smallest a, then b = period) whose state has an infinite
// length set. Throws NoWitness for finite sets, CapExceeded if rho_p(m) would
// need more than options.cap extra digits.
IntervalWitness nonempty_interval_witness(const RecognizableSet& set, const BigInt& m_min,
                                          const WitnessOptions& options = {});

// Least m whose state has a coinfinite length set, or nullopt when every
// qualifying state is cofinite. Throws Precondition for finite sets.
std::optional<IntervalWitness> empty_interval_witness(const RecognizableSet& set,
                                                      const WitnessOptions& options = {});

// Checks k = 0..k_check twice: exact-length reachability from `state`, and
// an integer search for the least element >= the interval's low end.
bool verify_interval_witness(const RecognizableSet& set, const IntervalWitness& witness,
                             std::uint64_t k_check);

struct SyndeticCertificate {
  std::uint32_t base = 2;
  std::uint64_t C = 0;
  BigInt bound;  // 2 * base^C
  std::map<State, std::uint64_t> per_state_thresholds;
};

struct FiniteSet {};
struct NotSyndetic {
  IntervalWitness witness;
};
struct Syndetic {
  SyndeticCertificate certificate;
};
using SyndeticVerdict = std::variant<FiniteSet, NotSyndetic, Syndetic>;

// Finite; NotSyndetic with the canonical empty-interval witness if some
// qualifying state is coinfinite; otherwise Syndetic with C the largest
// per-state cofiniteness threshold. Every n > 0 then has some t < p^C with
// n p^C + t in X, so every window of length 2 p^C meets X.
SyndeticVerdict syndetic_decide(const RecognizableSet& set, const WitnessOptions& options = {});

struct ContradictionCertificate {
  IntervalWitness base_p_witness;  // Nonempty, in setP's base
  IntervalWitness base_q_witness;  // Empty, in setQ's base
  KroneckerWitness kronecker;
  BigInt element;  // in setP, inside both nested intervals
};

// Refutation of setP == setQ by nested intervals. The empty witness always comes
// from setQ and the nonempty one from setP. nullopt means this route found
// nothing (every qualifying state of setQ is cofinite), not that the sets are
// equal.
std::optional<ContradictionCertificate> cross_base_refute(const RecognizableSet& setP,
                                                          const RecognizableSet& setQ,
                                                          const WitnessOptions& options = {});

bool verify_certificate(const RecognizableSet& setP, const RecognizableSet& setQ,
                        const ContradictionCertificate& certificate);

struct GapReport {
  BigInt max_gap;
  std::vector<std::pair<BigInt, BigInt>> positions;  // consecutive pairs at max_gap
  std::size_t element_count = 0;
};

// Consecutive-element gaps among the elements <= horizon.
GapReport gap_scan(const RecognizableSet& set, const BigInt& horizon);

} // namespace cobham
