#include <doctest.h>

#include <random>

#include "cobham/error.hpp"
#include "cobham/recognizable_set.hpp"
#include "oracles.hpp"

using namespace cobham;

namespace {

// 1{00,01,10,11}* with an explicit dead state: q0 -0-> dead.
Dfa example1_with_dead_state() {
  Dfa dfa(2, 4, 0);
  dfa.set_final(1);
  dfa.set_transition(0, 0, 3);
  dfa.set_transition(0, 1, 1);
  dfa.set_transition(1, 0, 2);
  dfa.set_transition(1, 1, 2);
  dfa.set_transition(2, 0, 1);
  dfa.set_transition(2, 1, 1);
  dfa.set_transition(3, 0, 3);
  dfa.set_transition(3, 1, 3);
  return dfa;
}

// Same language, built naively: separate states for "read 1", "odd after
// 00/01" and "odd after 10/11", plus a dead state.
Dfa example1_naive() {
  Dfa dfa(2, 5, 0);
  dfa.set_final(1);
  dfa.set_final(3);
  dfa.set_transition(0, 1, 1);
  dfa.set_transition(0, 0, 4);
  dfa.set_transition(1, 0, 2);
  dfa.set_transition(1, 1, 2);
  dfa.set_transition(2, 0, 3);
  dfa.set_transition(2, 1, 1);
  dfa.set_transition(3, 0, 2);
  dfa.set_transition(3, 1, 2);
  dfa.set_transition(4, 0, 4);
  dfa.set_transition(4, 1, 4);
  return dfa;
}

} // namespace

TEST_CASE("accepts on Example 1") {
  const auto set = example1();
  const Dfa& dfa = set.dfa();
  CHECK(accepts(dfa, {2, {1, 0, 1}}));
  CHECK_FALSE(accepts(dfa, {2, {1, 0}}));
  CHECK(accepts(dfa, {2, {}}) == dfa.is_final(dfa.initial()));
  CHECK_THROWS_AS(accepts(dfa, {2, {1, 2}}), Error);
}

TEST_CASE("member on Example 1 against the closed form") {
  const auto x = example1();
  CHECK(member(x, 5));
  CHECK_FALSE(member(x, 8));
  CHECK_FALSE(member(x, 0));
  for (int i = 0; i <= 10; ++i) {
    CHECK(member(x, power(4, i)));
    CHECK_FALSE(member(x, 2 * power(4, i)));
  }
  for (std::uint64_t n = 0; n <= 1'000'000; ++n)
    REQUIRE(member(x, n) == oracle::in_example1(n));
}

TEST_CASE("trim drops dead and unreachable states") {
  Dfa dfa = example1_with_dead_state();
  const Dfa trimmed = trim(dfa);
  CHECK(trimmed.state_count() == 3);
  CHECK(equivalent(trimmed, dfa));
  CHECK(trim(trimmed) == trimmed);

  // Unreachable state carrying a final flag.
  Dfa extra = dfa;
  const State orphan = extra.add_state(true);
  extra.set_transition(orphan, 0, 1);
  CHECK(trim(extra) == trimmed);

  Dfa none(2, 3, 0);
  none.set_transition(0, 1, 1);
  CHECK(trim(none) == Dfa::empty(2));
  CHECK(is_empty(trim(none)));
}

TEST_CASE("minimize gives the 3-state canonical Example 1 automaton") {
  const Dfa minimal = minimize(example1_naive());
  REQUIRE(minimal.state_count() == 3);
  CHECK(minimal.initial() == 0);
  CHECK(minimal.finals() == std::vector<State>{1});
  CHECK(minimal.next(0, 1) == 1);
  CHECK(minimal.next(0, 0) == kNoState);
  CHECK(minimal.next(1, 0) == 2);
  CHECK(minimal.next(1, 1) == 2);
  CHECK(minimal.next(2, 0) == 1);
  CHECK(minimal.next(2, 1) == 1);
  CHECK(equivalent(minimal, example1_naive()));
  CHECK(minimal == example1().dfa());
  CHECK(minimize(minimal) == minimal);
  CHECK(minimize(Dfa(2, 4, 0)) == Dfa::empty(2));
}

TEST_CASE("minimize on random automata: language, idempotence, canonicity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t alphabet = 2 + static_cast<std::uint32_t>(i % 2);
    const RecognizableSet set(oracle::random_dfa(rng, 6, alphabet), false,
                              CanonicalPolicy::Lenient);
    const RecognizableSet small = minimize(set);
    const Dfa& m = small.dfa();
    REQUIRE(minimize(m) == m);
    REQUIRE(m.state_count() <= trim(set.dfa()).state_count());
    for (std::uint64_t n = 0; n <= 10'000; ++n)
      REQUIRE(oracle::scan_member(small, n) == oracle::scan_member(set, n));
    // Canonical form decides equivalence.
    const RecognizableSet other(oracle::random_dfa(rng, 6, alphabet), false,
                                CanonicalPolicy::Lenient);
    REQUIRE((minimize(other.dfa()) == m) == equivalent(other.dfa(), set.dfa()));
  }
}

TEST_CASE("product obeys boolean algebra") {
  std::mt19937_64 rng(5);
  const Dfa canonical = canonical_words(2);
  for (int i = 0; i < 60; ++i) {
    const Dfa a = oracle::random_dfa(rng, 5, 2);
    const Dfa b = oracle::random_dfa(rng, 5, 2);
    const Dfa u = product(a, b, BoolOp::Union);
    const Dfa x = product(a, b, BoolOp::Intersection);
    const Dfa d = product(a, b, BoolOp::Difference);
    for (std::uint64_t n = 0; n < 512; ++n) {
      // Every binary word of length <= 9 (leading zeros included).
      for (std::size_t len = 0; len <= 9; ++len) {
        if (len < 9 && (n >> len) != 0)
          continue;
        DigitWord w{2, {}};
        for (std::size_t j = len; j-- > 0;)
          w.digits.push_back(static_cast<Digit>((n >> j) & 1U));
        const bool in_a = accepts(a, w), in_b = accepts(b, w);
        REQUIRE(accepts(u, w) == (in_a || in_b));
        REQUIRE(accepts(x, w) == (in_a && in_b));
        REQUIRE(accepts(d, w) == (in_a && !in_b));
      }
    }
  }
  const Dfa ex = example1().dfa();
  CHECK(equivalent(product(ex, ex, BoolOp::Intersection), ex));
  CHECK(is_empty(product(ex, ex, BoolOp::Difference)));
  const Dfa rest = product(canonical, ex, BoolOp::Difference);
  CHECK(equivalent(product(ex, rest, BoolOp::Union), canonical));
  CHECK_THROWS_AS(product(ex, canonical_words(3), BoolOp::Union), Error);
}

TEST_CASE("equivalent") {
  const Dfa ex = example1().dfa();
  CHECK(equivalent(ex, ex));
  CHECK(equivalent(ex, minimize(example1_naive())));
  CHECK_FALSE(equivalent(ex, Dfa::empty(2)));
  CHECK_THROWS_AS(equivalent(ex, Dfa::empty(3)), Error);
}

TEST_CASE("right density") {
  CHECK(right_dense(example1()));
  CHECK(right_dense(naturals(2)));
  CHECK(right_dense(naturals(5)));
  CHECK_FALSE(right_dense(finite_set({1, 2, 3}, 2)));
  CHECK_FALSE(right_dense(finite_set({}, 3)));
  CHECK(right_dense(multiples_of(3, 2)));
  // Powers of 2: after reading 11 nothing extends.
  CHECK_FALSE(right_dense(powers_of_base(2)));
}

TEST_CASE("enumerate in increasing order") {
  const auto first = enumerate(example1(), 7);
  const std::vector<BigInt> expected{1, 4, 5, 6, 7, 16, 17};
  CHECK(first == expected);
  CHECK(enumerate(finite_set({}, 2), 10).empty());
  CHECK(enumerate(finite_set({9, 0, 3}, 2), 10) == std::vector<BigInt>{0, 3, 9});
  CHECK(enumerate(example1(), 0).empty());

  const auto closed = oracle::example1_up_to(1'000'000);
  const auto listed = enumerate_up_to(example1(), 1'000'000);
  REQUIRE(listed.size() == closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    REQUIRE(listed[i] == closed[i]);
}

TEST_CASE("enumerate matches an integer scan on random sets") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const auto set = oracle::random_infinite_set(rng, 5, 2 + static_cast<std::uint32_t>(i % 2));
    const auto scanned = oracle::scan_members(set, 1'000'000);
    const auto listed = enumerate(set, 1000);
    const std::size_t n = std::min<std::size_t>(1000, scanned.size());
    REQUIRE(listed.size() >= n);
    for (std::size_t j = 0; j < n; ++j)
      REQUIRE(listed[j] == scanned[j]);
  }
}

TEST_CASE("next_member agrees with a linear scan") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto set = RecognizableSet(oracle::random_dfa(rng, 5, 3), false,
                                     CanonicalPolicy::Lenient);
    const auto members = oracle::scan_members(set, 3000);
    for (std::uint64_t lower = 0; lower <= 2000; lower += 7) {
      const auto next = next_member(set, lower);
      const auto it = std::lower_bound(members.begin(), members.end(), lower);
      if (it != members.end()) {
        INFO("lower=", lower, " expected=", *it, " got=", next ? to_decimal(*next) : "none");
        REQUIRE((next && *next == *it));
      }
      else if (next)
        REQUIRE(*next > 3000);
    }
  }
}

TEST_CASE("canonical-word invariant") {
  // Strict mode rejects an automaton that accepts "01".
  Dfa leading(2, 3, 0);
  leading.set_transition(0, 0, 1);
  leading.set_transition(1, 1, 2);
  leading.set_final(2);
  try {
    RecognizableSet bad(leading, false);
    FAIL("expected leading-zero error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LeadingZero);
  }
  const RecognizableSet repaired(leading, false, CanonicalPolicy::Lenient);
  CHECK(is_empty(repaired.dfa()));

  // Random words never starting accepted with 0, on random lenient sets.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const RecognizableSet set(oracle::random_dfa(rng, 6, 3), false, CanonicalPolicy::Lenient);
    for (int j = 0; j < 200; ++j) {
      DigitWord w{3, {0}};
      const int len = std::uniform_int_distribution<int>(0, 8)(rng);
      for (int t = 0; t < len; ++t)
        w.digits.push_back(std::uniform_int_distribution<Digit>(0, 2)(rng));
      REQUIRE_FALSE(accepts(set.dfa(), w));
    }
  }
}

TEST_CASE("empty word acceptance forces contains_zero") {
  Dfa eps(2, 1, 0);
  eps.set_final(0);
  CHECK_THROWS_AS(RecognizableSet(eps, false), Error);
  const RecognizableSet lenient(eps, false, CanonicalPolicy::Lenient);
  CHECK(lenient.contains_zero());
  CHECK(member(lenient, 0));
  CHECK(member(RecognizableSet(eps, true), 0));
}

TEST_CASE("set equivalence includes zero") {
  CHECK(equivalent(example1(), example1()));
  CHECK_FALSE(equivalent(naturals(2), example1()));
  CHECK(equivalent(multiples_of(3, 2), minimize(multiples_of(3, 2))));
  CHECK_FALSE(equivalent(finite_set({0, 1}, 2), finite_set({1}, 2)));
}
