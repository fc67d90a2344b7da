#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobham {

enum class ErrorKind {
  InvalidArgument,   // bad base, digit out of range, bad state index
  Parse,             // malformed automaton document
  Validation,        // document violates a named invariant
  LeadingZero,       // automaton accepts a word with a leading zero (strict mode)
  Precondition,      // dependent bases, finite set, n >= m, ...
  NoWitness,         // the requested witness provably does not exist
  CapExceeded,       // a search hit its configured cap
  InsufficientData,  // gap scan found fewer than two elements
  Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Raised when a bounded search gives up. Carries the cap that was hit so the
// caller can retry with a larger one.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : Error(ErrorKind::CapExceeded, what + " (cap " + std::to_string(cap) + ")"),
        cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t cap_;
};

} // namespace cobham
