#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cobham/recognizable_set.hpp"

namespace cobham {

inline constexpr int kFormatVersion = 1;

// On-disk automaton description; see docs/automaton-format.md.
struct AutomatonDocument {
  int format_version = kFormatVersion;
  std::uint32_t base = 2;
  std::uint32_t state_count = 1;
  State initial = 0;
  std::vector<State> finals;
  std::vector<std::array<std::uint32_t, 3>> transitions;  // (from, digit, to)
  bool contains_zero = false;
};

// Parses and validates. In strict mode unknown fields are rejected.
// Throws Error(Parse) with the byte offset, or Error(Validation) naming the
// violated invariant.
AutomatonDocument parse_document(std::string_view text, CanonicalPolicy policy);

// Strict mode rejects automata accepting a leading zero (LeadingZero);
// lenient mode intersects with the canonical-word language.
RecognizableSet to_set(const AutomatonDocument& document, CanonicalPolicy policy);

// Finals ascending, transitions ordered by (from, digit).
AutomatonDocument to_document(const RecognizableSet& set);

// Deterministic text: fixed key order, one transition per line.
std::string serialize(const AutomatonDocument& document);

RecognizableSet parse_automaton(std::string_view text, CanonicalPolicy policy);
RecognizableSet read_automaton(const std::string& path, CanonicalPolicy policy);
void write_automaton(const std::string& path, const RecognizableSet& set);

} // namespace cobham
