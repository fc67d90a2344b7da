#include "cobham/bigint.hpp"

#include "cobham/error.hpp"

namespace cobham {

BigInt parse_natural(std::string_view text) {
  if (text.empty())
    throw Error(ErrorKind::InvalidArgument, "expected a nonnegative integer, got an empty string");
  BigInt value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw Error(ErrorKind::InvalidArgument,
                  "expected a nonnegative integer, got '" + std::string(text) + "'");
    value *= 10;
    value += static_cast<unsigned>(ch - '0');
  }
  return value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt factor = base;
  while (exponent > 0) {
    if (exponent & 1U)
      result *= factor;
    exponent >>= 1U;
    if (exponent > 0)
      factor *= factor;
  }
  return result;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "invalid-argument";
  case ErrorKind::Parse: return "parse";
  case ErrorKind::Validation: return "validation";
  case ErrorKind::LeadingZero: return "leading-zero";
  case ErrorKind::Precondition: return "precondition";
  case ErrorKind::NoWitness: return "no-witness";
  case ErrorKind::CapExceeded: return "cap-exceeded";
  case ErrorKind::InsufficientData: return "insufficient-data";
  case ErrorKind::Io: return "io";
  }
  return "unknown";
}

} // namespace cobham
