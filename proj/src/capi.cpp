#include "cobham/cobham.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cobham/document.hpp"
#include "cobham/error.hpp"
#include "cobham/length_profile.hpp"
#include "cobham/witnesses.hpp"

struct cobham_set {
  cobham::RecognizableSet value;
};

namespace {

thread_local std::string last_error;

cobham_status status_of(cobham::ErrorKind kind) {
  using cobham::ErrorKind;
  switch (kind) {
  case ErrorKind::InvalidArgument: return COBHAM_INVALID_ARGUMENT;
  case ErrorKind::Parse: return COBHAM_PARSE_ERROR;
  case ErrorKind::Validation: return COBHAM_VALIDATION_ERROR;
  case ErrorKind::LeadingZero: return COBHAM_LEADING_ZERO;
  case ErrorKind::Precondition: return COBHAM_PRECONDITION;
  case ErrorKind::NoWitness: return COBHAM_NO_WITNESS;
  case ErrorKind::CapExceeded: return COBHAM_CAP_EXCEEDED;
  case ErrorKind::InsufficientData: return COBHAM_INSUFFICIENT_DATA;
  case ErrorKind::Io: return COBHAM_IO_ERROR;
  }
  return COBHAM_INTERNAL_ERROR;
}

template <typename Body>
cobham_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return COBHAM_OK;
  } catch (const cobham::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COBHAM_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COBHAM_INTERNAL_ERROR;
  }
}

void require(const void* pointer, const char* name) {
  if (pointer == nullptr)
    throw cobham::Error(cobham::ErrorKind::InvalidArgument, std::string(name) + " is NULL");
}

template <typename T>
T* allocate(std::size_t count) {
  if (count == 0)
    return nullptr;
  void* memory = std::calloc(count, sizeof(T));
  if (memory == nullptr)
    throw std::bad_alloc();
  return static_cast<T*>(memory);
}

char* duplicate(const std::string& text) {
  char* copy = allocate<char>(text.size() + 1);
  std::memcpy(copy, text.c_str(), text.size() + 1);
  return copy;
}

char* decimal(const cobham::BigInt& value) { return duplicate(cobham::to_decimal(value)); }

cobham::BigInt natural(const char* text, const char* name) {
  require(text, name);
  return cobham::parse_natural(text);
}

cobham::CanonicalPolicy policy(int strict) {
  return strict ? cobham::CanonicalPolicy::Strict : cobham::CanonicalPolicy::Lenient;
}

cobham_set* wrap(cobham::RecognizableSet set) { return new cobham_set{std::move(set)}; }

cobham::WitnessOptions options_of(const cobham_options* options) {
  cobham::WitnessOptions result;
  if (options != nullptr) {
    result.k_check = options->k_check;
    if (options->cap != 0)
      result.cap = options->cap;
    if (options->profile_cap != 0)
      result.profile_cap = options->profile_cap;
  }
  return result;
}

cobham::KroneckerQuery query_of(const cobham_kronecker_query* query) {
  require(query, "query");
  cobham::KroneckerQuery result;
  result.m = natural(query->m, "query->m");
  result.n = natural(query->n, "query->n");
  result.a = query->a;
  result.b = query->b;
  result.c = query->c;
  result.d = query->d;
  result.p = query->p;
  result.q = query->q;
  return result;
}

void export_witness(const cobham::IntervalWitness& witness, cobham_interval_witness* out) {
  out->base = witness.base;
  out->m = decimal(witness.m);
  out->a = witness.a;
  out->b = witness.b;
  out->state = witness.state;
  out->kind = witness.kind == cobham::IntervalKind::Nonempty ? COBHAM_INTERVAL_NONEMPTY
                                                             : COBHAM_INTERVAL_EMPTY;
}

cobham::IntervalWitness import_witness(const cobham_interval_witness* witness) {
  require(witness, "witness");
  cobham::IntervalWitness result;
  result.base = witness->base;
  result.m = natural(witness->m, "witness->m");
  result.a = witness->a;
  result.b = witness->b;
  result.state = witness->state;
  result.kind = witness->kind == COBHAM_INTERVAL_EMPTY ? cobham::IntervalKind::Empty
                                                       : cobham::IntervalKind::Nonempty;
  return result;
}

void clear_witness(cobham_interval_witness* witness) {
  std::free(witness->m);
  *witness = cobham_interval_witness{};
}

} // namespace

extern "C" {

const char* cobham_status_name(cobham_status status) {
  switch (status) {
  case COBHAM_OK: return "ok";
  case COBHAM_INVALID_ARGUMENT: return "invalid-argument";
  case COBHAM_PARSE_ERROR: return "parse";
  case COBHAM_VALIDATION_ERROR: return "validation";
  case COBHAM_LEADING_ZERO: return "leading-zero";
  case COBHAM_PRECONDITION: return "precondition";
  case COBHAM_NO_WITNESS: return "no-witness";
  case COBHAM_CAP_EXCEEDED: return "cap-exceeded";
  case COBHAM_INSUFFICIENT_DATA: return "insufficient-data";
  case COBHAM_IO_ERROR: return "io";
  case COBHAM_INTERNAL_ERROR: return "internal";
  }
  return "unknown";
}

const char* cobham_last_error(void) { return last_error.c_str(); }

void cobham_string_free(char* text) { std::free(text); }

void cobham_strings_free(char** values, size_t count) {
  if (values == nullptr)
    return;
  for (size_t i = 0; i < count; ++i)
    std::free(values[i]);
  std::free(values);
}

cobham_status cobham_encode(const char* n, uint32_t base, uint32_t** digits, size_t* length) {
  return guarded([&] {
    require(digits, "digits");
    require(length, "length");
    const cobham::DigitWord word = cobham::encode(natural(n, "n"), base);
    uint32_t* buffer = allocate<uint32_t>(word.size());
    std::copy(word.digits.begin(), word.digits.end(), buffer);
    *digits = buffer;
    *length = word.size();
  });
}

void cobham_digits_free(uint32_t* digits) { std::free(digits); }

cobham_status cobham_decode(const uint32_t* digits, size_t length, uint32_t base, char** n) {
  return guarded([&] {
    require(n, "n");
    if (length > 0)
      require(digits, "digits");
    cobham::DigitWord word{base, {}};
    if (length > 0)
      word.digits.assign(digits, digits + length);
    *n = decimal(cobham::decode(word));
  });
}

cobham_status cobham_mult_independent(uint64_t p, uint64_t q, int* independent, uint64_t* k,
                                       uint64_t* l) {
  return guarded([&] {
    require(independent, "independent");
    const auto verdict = cobham::mult_independent(p, q);
    *independent = verdict.independent ? 1 : 0;
    if (verdict.dependence_witness) {
      if (k != nullptr)
        *k = verdict.dependence_witness->first;
      if (l != nullptr)
        *l = verdict.dependence_witness->second;
    }
  });
}

cobham_status cobham_kronecker_witness(const cobham_kronecker_query* query, uint64_t cap,
                                       uint64_t* k, uint64_t* l) {
  return guarded([&] {
    require(k, "k");
    require(l, "l");
    const auto witness = cobham::kronecker_witness(
        query_of(query), cap == 0 ? cobham::kDefaultKroneckerCap : cap);
    *k = witness.k;
    *l = witness.l;
  });
}

cobham_status cobham_kronecker_verify(const cobham_kronecker_query* query, uint64_t k,
                                      uint64_t l, int* ok) {
  return guarded([&] {
    require(ok, "ok");
    *ok = cobham::verify_kronecker(query_of(query), {k, l}) ? 1 : 0;
  });
}

cobham_status cobham_set_read(const char* path, int strict, cobham_set** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(cobham::read_automaton(path, policy(strict)));
  });
}

cobham_status cobham_set_parse(const char* text, int strict, cobham_set** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(cobham::parse_automaton(text, policy(strict)));
  });
}

cobham_status cobham_set_write(const cobham_set* set, const char* path) {
  return guarded([&] {
    require(set, "set");
    require(path, "path");
    cobham::write_automaton(path, set->value);
  });
}

cobham_status cobham_set_serialize(const cobham_set* set, char** text) {
  return guarded([&] {
    require(set, "set");
    require(text, "text");
    *text = duplicate(cobham::serialize(cobham::to_document(set->value)));
  });
}

cobham_status cobham_set_example1(cobham_set** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(cobham::example1());
  });
}

void cobham_set_free(cobham_set* set) { delete set; }

uint32_t cobham_set_base(const cobham_set* set) { return set ? set->value.base() : 0; }

uint32_t cobham_set_state_count(const cobham_set* set) {
  return set ? set->value.dfa().state_count() : 0;
}

cobham_status cobham_set_member(const cobham_set* set, const char* n, int* out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = cobham::member(set->value, natural(n, "n")) ? 1 : 0;
  });
}

cobham_status cobham_set_enumerate(const cobham_set* set, size_t limit, char*** values,
                                   size_t* count) {
  return guarded([&] {
    require(set, "set");
    require(values, "values");
    require(count, "count");
    const auto elements = cobham::enumerate(set->value, limit);
    char** buffer = allocate<char*>(elements.size());
    try {
      for (size_t i = 0; i < elements.size(); ++i)
        buffer[i] = decimal(elements[i]);
    } catch (...) {
      cobham_strings_free(buffer, elements.size());
      throw;
    }
    *values = buffer;
    *count = elements.size();
  });
}

cobham_status cobham_set_trim(const cobham_set* set, cobham_set** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = wrap(cobham::trim(set->value));
  });
}

cobham_status cobham_set_minimize(const cobham_set* set, cobham_set** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = wrap(cobham::minimize(set->value));
  });
}

cobham_status cobham_set_equivalent(const cobham_set* lhs, const cobham_set* rhs, int* out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    *out = cobham::equivalent(lhs->value, rhs->value) ? 1 : 0;
  });
}

cobham_status cobham_set_right_dense(const cobham_set* set, int* out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = cobham::right_dense(set->value) ? 1 : 0;
  });
}

cobham_status cobham_set_profile(const cobham_set* set, uint32_t state, cobham_profile* out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    const cobham::UltimatePeriod profile = cobham::length_profile(set->value.dfa(), state);
    const auto threshold = cobham::cofinite_threshold(profile);
    cobham_profile result{};
    result.preperiod = profile.preperiod;
    result.period = profile.period;
    result.head_bits = allocate<uint8_t>(profile.head_bits.size());
    result.cycle_bits = allocate<uint8_t>(profile.cycle_bits.size());
    for (size_t i = 0; i < profile.head_bits.size(); ++i)
      result.head_bits[i] = profile.head_bits[i] ? 1 : 0;
    for (size_t i = 0; i < profile.cycle_bits.size(); ++i)
      result.cycle_bits[i] = profile.cycle_bits[i] ? 1 : 0;
    result.first_repeat_start = profile.first_repeat_start;
    result.first_repeat_end = profile.first_repeat_end;
    result.cofinite = threshold ? 1 : 0;
    result.cofinite_threshold = threshold.value_or(0);
    *out = result;
  });
}

void cobham_profile_release(cobham_profile* profile) {
  if (profile == nullptr)
    return;
  std::free(profile->head_bits);
  std::free(profile->cycle_bits);
  *profile = cobham_profile{};
}

cobham_options cobham_options_default(void) {
  const cobham::WitnessOptions defaults;
  return cobham_options{defaults.k_check, defaults.cap, defaults.profile_cap};
}

void cobham_interval_witness_release(cobham_interval_witness* witness) {
  if (witness != nullptr)
    clear_witness(witness);
}

cobham_status cobham_witness_nonempty(const cobham_set* set, const char* m_min,
                                      const cobham_options* options,
                                      cobham_interval_witness* out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    const cobham::BigInt lower = m_min ? natural(m_min, "m_min") : cobham::BigInt(1);
    const auto witness =
        cobham::nonempty_interval_witness(set->value, lower, options_of(options));
    export_witness(witness, out);
  });
}

cobham_status cobham_witness_empty(const cobham_set* set, const cobham_options* options,
                                   int* found, cobham_interval_witness* out) {
  return guarded([&] {
    require(set, "set");
    require(found, "found");
    require(out, "out");
    const auto witness = cobham::empty_interval_witness(set->value, options_of(options));
    *found = witness ? 1 : 0;
    *out = cobham_interval_witness{};
    if (witness)
      export_witness(*witness, out);
  });
}

cobham_status cobham_witness_verify(const cobham_set* set, const cobham_interval_witness* witness,
                                    uint64_t k_check, int* ok) {
  return guarded([&] {
    require(set, "set");
    require(ok, "ok");
    *ok = cobham::verify_interval_witness(set->value, import_witness(witness), k_check) ? 1 : 0;
  });
}

cobham_status cobham_syndetic_decide(const cobham_set* set, const cobham_options* options,
                                     cobham_syndetic_result* out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    const auto verdict = cobham::syndetic_decide(set->value, options_of(options));
    cobham_syndetic_result result{};
    if (std::holds_alternative<cobham::FiniteSet>(verdict)) {
      result.verdict = COBHAM_FINITE;
    } else if (const auto* no = std::get_if<cobham::NotSyndetic>(&verdict)) {
      result.verdict = COBHAM_NOT_SYNDETIC;
      export_witness(no->witness, &result.witness);
    } else {
      const auto& certificate = std::get<cobham::Syndetic>(verdict).certificate;
      result.verdict = COBHAM_SYNDETIC;
      result.C = certificate.C;
      result.bound = decimal(certificate.bound);
      result.threshold_count = certificate.per_state_thresholds.size();
      result.threshold_states = allocate<uint32_t>(result.threshold_count);
      result.thresholds = allocate<uint64_t>(result.threshold_count);
      size_t i = 0;
      for (const auto& [state, threshold] : certificate.per_state_thresholds) {
        result.threshold_states[i] = state;
        result.thresholds[i] = threshold;
        ++i;
      }
    }
    *out = result;
  });
}

void cobham_syndetic_result_release(cobham_syndetic_result* result) {
  if (result == nullptr)
    return;
  clear_witness(&result->witness);
  std::free(result->bound);
  std::free(result->threshold_states);
  std::free(result->thresholds);
  *result = cobham_syndetic_result{};
}

cobham_status cobham_cross_base_refute(const cobham_set* set_p, const cobham_set* set_q,
                                       const cobham_options* options, int* found,
                                       cobham_certificate* out) {
  return guarded([&] {
    require(set_p, "set_p");
    require(set_q, "set_q");
    require(found, "found");
    require(out, "out");
    const auto certificate =
        cobham::cross_base_refute(set_p->value, set_q->value, options_of(options));
    *found = certificate ? 1 : 0;
    *out = cobham_certificate{};
    if (!certificate)
      return;
    cobham_certificate result{};
    export_witness(certificate->base_p_witness, &result.base_p_witness);
    export_witness(certificate->base_q_witness, &result.base_q_witness);
    result.K = certificate->kronecker.k;
    result.L = certificate->kronecker.l;
    result.element = decimal(certificate->element);
    result.p_low = decimal(certificate->base_p_witness.low(result.K));
    result.p_high = decimal(certificate->base_p_witness.high(result.K));
    result.q_low = decimal(certificate->base_q_witness.low(result.L));
    result.q_high = decimal(certificate->base_q_witness.high(result.L));
    *out = result;
  });
}

cobham_status cobham_certificate_verify(const cobham_set* set_p, const cobham_set* set_q,
                                        const cobham_certificate* certificate, int* ok) {
  return guarded([&] {
    require(set_p, "set_p");
    require(set_q, "set_q");
    require(certificate, "certificate");
    require(ok, "ok");
    cobham::ContradictionCertificate value{
        import_witness(&certificate->base_p_witness),
        import_witness(&certificate->base_q_witness),
        {certificate->K, certificate->L},
        natural(certificate->element, "certificate->element")};
    *ok = cobham::verify_certificate(set_p->value, set_q->value, value) ? 1 : 0;
  });
}

void cobham_certificate_release(cobham_certificate* certificate) {
  if (certificate == nullptr)
    return;
  clear_witness(&certificate->base_p_witness);
  clear_witness(&certificate->base_q_witness);
  std::free(certificate->element);
  std::free(certificate->p_low);
  std::free(certificate->p_high);
  std::free(certificate->q_low);
  std::free(certificate->q_high);
  *certificate = cobham_certificate{};
}

cobham_status cobham_gap_scan(const cobham_set* set, const char* horizon,
                              cobham_gap_report* out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    const auto report = cobham::gap_scan(set->value, natural(horizon, "horizon"));
    cobham_gap_report result{};
    result.max_gap = decimal(report.max_gap);
    result.element_count = report.element_count;
    result.position_count = report.positions.size();
    result.gap_starts = allocate<char*>(result.position_count);
    result.gap_ends = allocate<char*>(result.position_count);
    for (size_t i = 0; i < result.position_count; ++i) {
      result.gap_starts[i] = decimal(report.positions[i].first);
      result.gap_ends[i] = decimal(report.positions[i].second);
    }
    *out = result;
  });
}

void cobham_gap_report_release(cobham_gap_report* report) {
  if (report == nullptr)
    return;
  std::free(report->max_gap);
  cobham_strings_free(report->gap_starts, report->position_count);
  cobham_strings_free(report->gap_ends, report->position_count);
  *report = cobham_gap_report{};
}

} // extern "C"
