#include "cobham/witnesses.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "cobham/error.hpp"

namespace cobham {

namespace {

void require_infinite(const RecognizableSet& set, ErrorKind kind) {
  if (is_finite(set))
    throw Error(kind, "set is finite");
}

// Least a > preperiod with bit(a) == wanted; exists whenever the cycle
// contains `wanted`.
std::uint64_t first_length_past_preperiod(const UltimatePeriod& profile, bool wanted) {
  for (std::uint64_t a = profile.preperiod + 1; a <= profile.preperiod + profile.period; ++a)
    if (profile.bit(a) == wanted)
      return a;
  throw std::logic_error("cycle does not contain the requested bit");
}

} // namespace

BigInt IntervalWitness::low(std::uint64_t k) const { return m * power(base, exponent(k)); }

BigInt IntervalWitness::high(std::uint64_t k) const {
  return (m + 1) * power(base, exponent(k));
}

NormalForm normal_form(const RecognizableSet& set, std::uint64_t profile_cap) {
  const Dfa minimal = minimize(set.dfa());
  NormalForm form{complete(minimal), std::nullopt, {}};
  const Dfa& dfa = form.dfa;
  // complete() appends the sink last.
  if (!minimal.is_complete())
    form.sink = dfa.state_count() - 1;

  // Breadth-first from the nonzero first digits, digits ascending: states are
  // discovered along shortlex-least access words, i.e. least m.
  const std::uint32_t base = dfa.alphabet_size();
  std::vector<bool> seen(dfa.state_count(), false);
  std::deque<std::pair<State, BigInt>> queue;
  for (Digit d = 1; d < base; ++d) {
    const State t = dfa.next(dfa.initial(), d);
    if (!seen[t]) {
      seen[t] = true;
      queue.emplace_back(t, BigInt(d));
    }
  }
  while (!queue.empty()) {
    auto [s, m] = std::move(queue.front());
    queue.pop_front();
    for (Digit d = 0; d < base; ++d) {
      const State t = dfa.next(s, d);
      if (!seen[t]) {
        seen[t] = true;
        queue.emplace_back(t, m * base + d);
      }
    }
    form.qualifying.push_back({s, std::move(m), length_profile(dfa, s, profile_cap)});
  }
  return form;
}

IntervalWitness nonempty_interval_witness(const RecognizableSet& set, const BigInt& m_min,
                                          const WitnessOptions& options) {
  require_infinite(set, ErrorKind::NoWitness);
  const NormalForm form = normal_form(set, options.profile_cap);

  // Y = { m > 0 : delta(q0, rho_p(m)) has an infinite length set }.
  Dfa targets = form.dfa;
  for (State s = 0; s < targets.state_count(); ++s)
    targets.set_final(s, false);
  for (const auto& q : form.qualifying)
    if (q.profile.infinite())
      targets.set_final(q.state, true);
  const RecognizableSet extendable(std::move(targets), true, CanonicalPolicy::Lenient);

  const BigInt lower = m_min < 1 ? BigInt(1) : m_min;
  const std::size_t max_digits = encode(lower, set.base()).size() + options.cap;
  const auto m = next_member(extendable, lower, max_digits);
  if (!m)
    throw CapExceeded("no m >= " + to_decimal(lower) + " with infinitely many extensions",
                      options.cap);

  const State s = run(form.dfa, form.dfa.initial(), encode(*m, set.base()).digits);
  const auto it = std::find_if(form.qualifying.begin(), form.qualifying.end(),
                               [&](const QualifyingState& q) { return q.state == s; });
  const UltimatePeriod& profile = it->profile;

  IntervalWitness witness;
  witness.base = set.base();
  witness.m = *m;
  witness.a = first_length_past_preperiod(profile, true);
  witness.b = profile.period;
  witness.state = s;
  witness.kind = IntervalKind::Nonempty;
  return witness;
}

std::optional<IntervalWitness> empty_interval_witness(const RecognizableSet& set,
                                                      const WitnessOptions& options) {
  require_infinite(set, ErrorKind::Precondition);
  const NormalForm form = normal_form(set, options.profile_cap);

  const QualifyingState* best = nullptr;
  for (const auto& q : form.qualifying)
    if (!cofinite_threshold(q.profile) && (best == nullptr || q.least_m < best->least_m))
      best = &q;
  if (best == nullptr)
    return std::nullopt;

  IntervalWitness witness;
  witness.base = set.base();
  witness.m = best->least_m;
  witness.a = first_length_past_preperiod(best->profile, false);
  witness.b = best->profile.period;
  witness.state = best->state;
  witness.kind = IntervalKind::Empty;
  return witness;
}

bool verify_interval_witness(const RecognizableSet& set, const IntervalWitness& witness,
                             std::uint64_t k_check) {
  if (witness.base != set.base() || witness.m < 1 || witness.a < 1 || witness.b < 1)
    return false;
  const NormalForm form = normal_form(set);
  if (witness.state >= form.dfa.state_count())
    return false;
  if (run(form.dfa, form.dfa.initial(), encode(witness.m, set.base()).digits) != witness.state)
    return false;

  LengthLayers layers(form.dfa);
  const bool want_nonempty = witness.kind == IntervalKind::Nonempty;
  for (std::uint64_t k = 0; k <= k_check; ++k) {
    if (layers.feasible(witness.state, witness.exponent(k)) != want_nonempty)
      return false;
    const BigInt high = witness.high(k);
    const auto next = next_member(set, witness.low(k));
    const bool meets = next && *next < high;
    if (meets != want_nonempty)
      return false;
    if (meets && !member(set, *next))
      return false;
  }
  return true;
}

SyndeticVerdict syndetic_decide(const RecognizableSet& set, const WitnessOptions& options) {
  if (is_finite(set))
    return FiniteSet{};

  if (auto witness = empty_interval_witness(set, options))
    return NotSyndetic{std::move(*witness)};

  const NormalForm form = normal_form(set, options.profile_cap);
  SyndeticCertificate certificate;
  certificate.base = set.base();
  for (const auto& q : form.qualifying) {
    const auto threshold = cofinite_threshold(q.profile);
    if (!threshold)
      throw std::logic_error("coinfinite state missed by the empty-interval search");
    certificate.per_state_thresholds[q.state] = *threshold;
    certificate.C = std::max(certificate.C, *threshold);
  }
  certificate.bound = 2 * power(set.base(), certificate.C);
  return Syndetic{std::move(certificate)};
}

std::optional<ContradictionCertificate> cross_base_refute(const RecognizableSet& setP,
                                                          const RecognizableSet& setQ,
                                                          const WitnessOptions& options) {
  const std::uint32_t p = setP.base();
  const std::uint32_t q = setQ.base();
  if (const auto verdict = mult_independent(p, q); !verdict.independent)
    throw Error(ErrorKind::Precondition, "bases " + std::to_string(p) + " and " +
                                             std::to_string(q) +
                                             " are multiplicatively dependent");
  require_infinite(setP, ErrorKind::Precondition);
  require_infinite(setQ, ErrorKind::Precondition);

  const auto empty = empty_interval_witness(setQ, options);
  if (!empty)
    return std::nullopt;
  IntervalWitness nonempty = nonempty_interval_witness(setP, empty->m + 1, options);

  KroneckerQuery query;
  query.m = nonempty.m;
  query.n = empty->m;
  query.a = nonempty.a;
  query.b = nonempty.b;
  query.c = empty->a;
  query.d = empty->b;
  query.p = p;
  query.q = q;
  const KroneckerWitness kronecker = kronecker_witness(query, options.cap);

  const auto element = next_member(setP, nonempty.low(kronecker.k));
  if (!element || !(*element < nonempty.high(kronecker.k)))
    throw std::logic_error("nonempty interval witness produced an empty interval");

  return ContradictionCertificate{std::move(nonempty), *empty, kronecker, *element};
}

bool verify_certificate(const RecognizableSet& setP, const RecognizableSet& setQ,
                        const ContradictionCertificate& certificate) {
  const IntervalWitness& wp = certificate.base_p_witness;
  const IntervalWitness& wq = certificate.base_q_witness;
  if (wp.kind != IntervalKind::Nonempty || wq.kind != IntervalKind::Empty)
    return false;
  if (wp.base != setP.base() || wq.base != setQ.base() || !(wq.m < wp.m))
    return false;

  const KroneckerQuery query{wp.m, wq.m, wp.a, wp.b, wq.a, wq.b, wp.base, wq.base};
  if (!verify_kronecker(query, certificate.kronecker))
    return false;

  const std::uint64_t K = certificate.kronecker.k;
  const std::uint64_t L = certificate.kronecker.l;
  const BigInt& x = certificate.element;
  if (!member(setP, x) || x < wp.low(K) || !(x < wp.high(K)))
    return false;
  if (x < wq.low(L) || !(x < wq.high(L)))
    return false;

  // The base-q interval at exponent c + dL must be certified empty.
  const NormalForm form = normal_form(setQ);
  if (wq.state >= form.dfa.state_count() ||
      run(form.dfa, form.dfa.initial(), encode(wq.m, setQ.base()).digits) != wq.state)
    return false;
  LengthLayers layers(form.dfa);
  if (layers.feasible(wq.state, wq.exponent(L)))
    return false;
  return !member(setQ, x);
}

GapReport gap_scan(const RecognizableSet& set, const BigInt& horizon) {
  if (horizon < 1)
    throw Error(ErrorKind::InvalidArgument, "horizon must be positive");
  GapReport report;
  std::optional<BigInt> previous;
  for_each_member(set, [&](const BigInt& x) {
    if (x > horizon)
      return false;
    ++report.element_count;
    if (previous) {
      const BigInt gap = x - *previous;
      if (report.positions.empty() || gap > report.max_gap) {
        report.max_gap = gap;
        report.positions.clear();
      }
      if (gap == report.max_gap)
        report.positions.emplace_back(*previous, x);
    }
    previous = x;
    return true;
  });
  if (report.element_count < 2)
    throw Error(ErrorKind::InsufficientData,
                "fewer than two elements <= " + to_decimal(horizon));
  return report;
}

} // namespace cobham
