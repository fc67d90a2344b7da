// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobham/cobham.h"

namespace {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kCap = 3 };

struct Failure {
  cobham_status status;
};

int exit_code_for(cobham_status status) {
  switch (status) {
  case COBHAM_OK: return kSuccess;
  case COBHAM_NO_WITNESS: return kNegative;
  case COBHAM_CAP_EXCEEDED: return kCap;
  default: return kUsage;
  }
}

void check(cobham_status status) {
  if (status != COBHAM_OK)
    throw Failure{status};
}

struct SetDeleter {
  void operator()(cobham_set* set) const { cobham_set_free(set); }
};
using SetHandle = std::unique_ptr<cobham_set, SetDeleter>;

struct GlobalOptions {
  std::uint64_t k_check = 8;
  std::uint64_t cap = 0;
  std::string horizon = "100000";
  bool lenient = false;
  std::string out;
};

SetHandle load(const std::string& path, const GlobalOptions& g) {
  cobham_set* raw = nullptr;
  check(cobham_set_read(path.c_str(), g.lenient ? 0 : 1, &raw));
  return SetHandle(raw);
}

cobham_options witness_options(const GlobalOptions& g) {
  cobham_options options = cobham_options_default();
  options.k_check = g.k_check;
  if (g.cap != 0)
    options.cap = g.cap;
  return options;
}

std::string owned(char* text) {
  std::string copy = text ? text : "";
  cobham_string_free(text);
  return copy;
}

std::string bits(const std::uint8_t* data, std::uint64_t count) {
  std::string text;
  for (std::uint64_t i = 0; i < count; ++i)
    text += data[i] ? '1' : '0';
  return text;
}

void print_witness(std::ostream& out, const std::string& prefix,
                   const cobham_interval_witness& w) {
  out << prefix << "kind: " << (w.kind == COBHAM_INTERVAL_EMPTY ? "empty" : "nonempty") << '\n'
      << prefix << "base: " << w.base << '\n'
      << prefix << "m: " << w.m << '\n'
      << prefix << "a: " << w.a << '\n'
      << prefix << "b: " << w.b << '\n'
      << prefix << "state: " << w.state << '\n';
}

void print_verified(std::ostream& out, const std::string& prefix, const cobham_set* set,
                    const cobham_interval_witness& w, std::uint64_t k_check) {
  int ok = 0;
  check(cobham_witness_verify(set, &w, k_check, &ok));
  out << prefix << "verified_k: 0.." << k_check << ' ' << (ok ? "ok" : "FAILED") << '\n';
  if (!ok)
    throw Failure{COBHAM_INTERNAL_ERROR};
}

void emit_document(const cobham_set* set, const GlobalOptions& g) {
  if (!g.out.empty()) {
    check(cobham_set_write(set, g.out.c_str()));
    return;
  }
  char* text = nullptr;
  check(cobham_set_serialize(set, &text));
  std::cout << owned(text);
}

std::string join_digits(const std::uint32_t* digits, std::size_t length) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < length; ++i)
    out << (i ? ", " : "") << digits[i];
  out << ']';
  return out.str();
}

std::vector<std::uint32_t> parse_digits(const std::string& text) {
  std::vector<std::uint32_t> digits;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("digits", "expected comma-separated digits, got '" + text + "'");
    digits.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return digits;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic sets of integers: witnesses, syndeticity, cross-base refutation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--k-check", g.k_check, "Witness verification depth")->default_val(8);
  app.add_option("--cap", g.cap, "Search cap (Kronecker l, extra digits)");
  app.add_option("--horizon", g.horizon, "Gap-scan horizon")->default_val("100000");
  auto* strict_flag = app.add_flag("--strict", "Reject leading-zero automata (default)");
  app.add_flag("--lenient", g.lenient, "Intersect with canonical words instead")
      ->excludes(strict_flag);
  app.add_option("--out", g.out, "Write the resulting automaton here");

  int code = kSuccess;

  std::string n_text, file, file2, m_min = "1";
  std::uint32_t base = 2;
  auto* encode = app.add_subcommand("encode", "Canonical digits of n");
  encode->add_option("n", n_text)->required();
  encode->add_option("base", base)->required();
  encode->callback([&] {
    std::uint32_t* digits = nullptr;
    std::size_t length = 0;
    check(cobham_encode(n_text.c_str(), base, &digits, &length));
    std::cout << "digits: " << join_digits(digits, length) << '\n';
    cobham_digits_free(digits);
  });

  std::string digits_text;
  auto* decode = app.add_subcommand("decode", "Integer value of a digit word (e.g. 1,0,1)");
  decode->add_option("digits", digits_text)->required();
  decode->add_option("base", base)->required();
  decode->callback([&] {
    const auto digits = parse_digits(digits_text);
    char* value = nullptr;
    check(cobham_decode(digits.data(), digits.size(), base, &value));
    std::cout << "value: " << owned(value) << '\n';
  });

  auto* member = app.add_subcommand("member", "Membership of n");
  member->add_option("file", file)->required();
  member->add_option("n", n_text)->required();
  member->callback([&] {
    const auto set = load(file, g);
    int in = 0;
    check(cobham_set_member(set.get(), n_text.c_str(), &in));
    std::cout << (in ? "true" : "false") << '\n';
    code = in ? kSuccess : kNegative;
  });

  std::size_t limit = 20;
  auto* enumerate = app.add_subcommand("enum", "First elements in increasing order");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("limit", limit)->default_val(20);
  enumerate->callback([&] {
    const auto set = load(file, g);
    char** values = nullptr;
    std::size_t count = 0;
    check(cobham_set_enumerate(set.get(), limit, &values, &count));
    for (std::size_t i = 0; i < count; ++i)
      std::cout << values[i] << '\n';
    cobham_strings_free(values, count);
  });

  auto* minimize = app.add_subcommand("minimize", "Trimmed minimal automaton");
  minimize->add_option("file", file)->required();
  minimize->callback([&] {
    const auto set = load(file, g);
    cobham_set* raw = nullptr;
    check(cobham_set_minimize(set.get(), &raw));
    emit_document(SetHandle(raw).get(), g);
  });

  auto* trim = app.add_subcommand("trim", "Accessible and coaccessible part");
  trim->add_option("file", file)->required();
  trim->callback([&] {
    const auto set = load(file, g);
    cobham_set* raw = nullptr;
    check(cobham_set_trim(set.get(), &raw));
    emit_document(SetHandle(raw).get(), g);
  });

  auto* dense = app.add_subcommand("right-dense", "Every word extends into 0* rho_p(X)");
  dense->add_option("file", file)->required();
  dense->callback([&] {
    const auto set = load(file, g);
    int result = 0;
    check(cobham_set_right_dense(set.get(), &result));
    std::cout << (result ? "true" : "false") << '\n';
    code = result ? kSuccess : kNegative;
  });

  std::optional<std::uint32_t> state;
  auto* profile = app.add_subcommand("profile", "Ultimate period of each state's length set");
  profile->add_option("file", file)->required();
  profile->add_option("--state", state, "Only this state");
  profile->callback([&] {
    const auto set = load(file, g);
    const std::uint32_t first = state.value_or(0);
    const std::uint32_t last = state ? *state + 1 : cobham_set_state_count(set.get());
    for (std::uint32_t s = first; s < last; ++s) {
      cobham_profile p{};
      check(cobham_set_profile(set.get(), s, &p));
      std::cout << "state: " << s << '\n'
                << "preperiod: " << p.preperiod << '\n'
                << "period: " << p.period << '\n'
                << "head_bits: " << bits(p.head_bits, p.preperiod) << '\n'
                << "cycle_bits: " << bits(p.cycle_bits, p.period) << '\n'
                << "first_repeat: " << p.first_repeat_start << ' ' << p.first_repeat_end << '\n'
                << "cofinite_threshold: "
                << (p.cofinite ? std::to_string(p.cofinite_threshold) : std::string("none"))
                << '\n';
      cobham_profile_release(&p);
    }
  });

  auto* nonempty = app.add_subcommand("witness-nonempty", "Intervals that always meet X");
  nonempty->add_option("file", file)->required();
  nonempty->add_option("--m-min", m_min, "Smallest admissible m")->default_val("1");
  nonempty->callback([&] {
    const auto set = load(file, g);
    const cobham_options options = witness_options(g);
    cobham_interval_witness w{};
    check(cobham_witness_nonempty(set.get(), m_min.c_str(), &options, &w));
    print_witness(std::cout, "witness.", w);
    print_verified(std::cout, "witness.", set.get(), w, g.k_check);
    cobham_interval_witness_release(&w);
  });

  auto* empty = app.add_subcommand("witness-empty", "Intervals that always miss X");
  empty->add_option("file", file)->required();
  empty->callback([&] {
    const auto set = load(file, g);
    const cobham_options options = witness_options(g);
    cobham_interval_witness w{};
    int found = 0;
    check(cobham_witness_empty(set.get(), &options, &found, &w));
    if (!found) {
      std::cout << "witness: none (every qualifying state has a cofinite length set)\n";
      code = kNegative;
      return;
    }
    print_witness(std::cout, "witness.", w);
    print_verified(std::cout, "witness.", set.get(), w, g.k_check);
    cobham_interval_witness_release(&w);
  });

  auto* syndetic = app.add_subcommand("syndetic", "Decide syndeticity with an explicit bound");
  syndetic->add_option("file", file)->required();
  syndetic->callback([&] {
    const auto set = load(file, g);
    const cobham_options options = witness_options(g);
    cobham_syndetic_result r{};
    check(cobham_syndetic_decide(set.get(), &options, &r));
    switch (r.verdict) {
    case COBHAM_FINITE:
      std::cout << "verdict: finite\n";
      code = kNegative;
      break;
    case COBHAM_NOT_SYNDETIC:
      std::cout << "verdict: not-syndetic\n";
      print_witness(std::cout, "witness.", r.witness);
      print_verified(std::cout, "witness.", set.get(), r.witness, g.k_check);
      std::cout << "reason: X misses every interval [m*p^(a+b*k), (m+1)*p^(a+b*k)), k >= 0; "
                   "their lengths p^(a+b*k) are unbounded and X is infinite, so gaps between "
                   "consecutive elements are unbounded\n";
      code = kNegative;
      break;
    case COBHAM_SYNDETIC:
      std::cout << "verdict: syndetic\n"
                << "C: " << r.C << '\n'
                << "bound: " << r.bound << '\n';
      for (std::size_t i = 0; i < r.threshold_count; ++i)
        std::cout << "threshold.state." << r.threshold_states[i] << ": " << r.thresholds[i]
                  << '\n';
      std::cout << "reason: every n > 0 has some t < p^C with n*p^C + t in X, so every "
                   "window of length 2*p^C meets X\n";
      break;
    }
    cobham_syndetic_result_release(&r);
  });

  std::string km, kn;
  std::uint64_t ka = 1, kb = 1, kc = 1, kd = 1, kp = 2, kq = 3;
  auto* kronecker =
      app.add_subcommand("kronecker", "Find k, l with n q^(c+dl) <= m p^(a+bk), (m+1) p^(a+bk) <= (n+1) q^(c+dl)");
  kronecker->add_option("m", km)->required();
  kronecker->add_option("n", kn)->required();
  kronecker->add_option("a", ka)->required();
  kronecker->add_option("b", kb)->required();
  kronecker->add_option("c", kc)->required();
  kronecker->add_option("d", kd)->required();
  kronecker->add_option("p", kp)->required();
  kronecker->add_option("q", kq)->required();
  kronecker->callback([&] {
    const cobham_kronecker_query query{km.c_str(), kn.c_str(), ka, kb, kc, kd, kp, kq};
    std::uint64_t k = 0, l = 0;
    check(cobham_kronecker_witness(&query, g.cap, &k, &l));
    int ok = 0;
    check(cobham_kronecker_verify(&query, k, l, &ok));
    std::cout << "k: " << k << '\n'
              << "l: " << l << '\n'
              << "verified: " << (ok ? "true" : "false") << '\n';
  });

  std::uint64_t ip = 2, iq = 3;
  auto* indep = app.add_subcommand("indep", "Multiplicative independence of p and q");
  indep->add_option("p", ip)->required();
  indep->add_option("q", iq)->required();
  indep->callback([&] {
    int independent = 0;
    std::uint64_t k = 0, l = 0;
    check(cobham_mult_independent(ip, iq, &independent, &k, &l));
    std::cout << "independent: " << (independent ? "true" : "false") << '\n';
    if (!independent) {
      std::cout << "witness: " << ip << '^' << k << " = " << iq << '^' << l << '\n';
      code = kNegative;
    }
  });

  auto* gaps = app.add_subcommand("gaps", "Largest gap between consecutive elements");
  gaps->add_option("file", file)->required();
  gaps->callback([&] {
    const auto set = load(file, g);
    cobham_gap_report report{};
    check(cobham_gap_scan(set.get(), g.horizon.c_str(), &report));
    std::cout << "horizon: " << g.horizon << '\n'
              << "elements: " << report.element_count << '\n'
              << "max_gap: " << report.max_gap << '\n';
    for (std::size_t i = 0; i < report.position_count; ++i)
      std::cout << "at: " << report.gap_starts[i] << ' ' << report.gap_ends[i] << '\n';
    cobham_gap_report_release(&report);
  });

  auto* refute = app.add_subcommand("refute", "Certificate that two automata in independent "
                                              "bases recognize different sets");
  refute->add_option("file_p", file)->required();
  refute->add_option("file_q", file2)->required();
  refute->callback([&] {
    const auto set_p = load(file, g);
    const auto set_q = load(file2, g);
    const cobham_options options = witness_options(g);
    cobham_certificate c{};
    int found = 0;
    check(cobham_cross_base_refute(set_p.get(), set_q.get(), &options, &found, &c));
    if (!found) {
      std::cout << "certificate: none (no refutation by this route; this does not imply "
                   "the sets are equal)\n";
      code = kNegative;
      return;
    }
    int ok = 0;
    check(cobham_certificate_verify(set_p.get(), set_q.get(), &c, &ok));
    std::cout << "certificate: found\n";
    print_witness(std::cout, "p_witness.", c.base_p_witness);
    print_witness(std::cout, "q_witness.", c.base_q_witness);
    std::cout << "K: " << c.K << '\n'
              << "L: " << c.L << '\n'
              << "q_interval: [" << c.q_low << ", " << c.q_high << ")\n"
              << "p_interval: [" << c.p_low << ", " << c.p_high << ")\n"
              << "element: " << c.element << '\n'
              << "verified: " << (ok ? "true" : "false") << '\n'
              << "reason: element is in the first set and inside an interval the second set "
                 "provably misses\n";
    cobham_certificate_release(&c);
    if (!ok)
      throw Failure{COBHAM_INTERNAL_ERROR};
  });

  auto* example = app.add_subcommand("example1", "Union of [4^i, 2*4^i): right dense, not syndetic");
  example->callback([&] {
    cobham_set* raw = nullptr;
    check(cobham_set_example1(&raw));
    emit_document(SetHandle(raw).get(), g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Failure& f) {
    const char* message = cobham_last_error();
    std::cerr << "error: " << cobham_status_name(f.status) << ": "
              << (*message ? message : "verification failed") << '\n';
    return exit_code_for(f.status);
  }
  return code;
}
