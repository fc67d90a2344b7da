#include "cobham/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cobham/error.hpp"

namespace cobham {

namespace {

using nlohmann::json;

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields{"format_version", "base",        "state_count",
                                            "initial",        "finals",      "transitions",
                                            "contains_zero"};
  return fields;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const json& field(const json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end())
    invalid(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t as_index(const json& value, const std::string& where) {
  if (!value.is_number_unsigned())
    invalid(where + " must be a nonnegative integer");
  return value.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& value, const std::string& where) {
  const std::uint64_t v = as_index(value, where);
  if (v > UINT32_MAX)
    invalid(where + " is too large");
  return static_cast<std::uint32_t>(v);
}

} // namespace

AutomatonDocument parse_document(std::string_view text, CanonicalPolicy policy) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object())
    invalid("document must be an object");
  if (policy == CanonicalPolicy::Strict)
    for (const auto& item : root.items())
      if (known_fields().count(item.key()) == 0)
        invalid("unknown field '" + item.key() + "'");

  AutomatonDocument doc;
  const json& version = field(root, "format_version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kFormatVersion)
    invalid("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  doc.base = as_u32(field(root, "base"), "base");
  if (doc.base < 2)
    invalid("base must be at least 2");
  doc.state_count = as_u32(field(root, "state_count"), "state_count");
  if (doc.state_count < 1)
    invalid("state_count must be at least 1");
  doc.initial = as_u32(field(root, "initial"), "initial");
  if (doc.initial >= doc.state_count)
    invalid("initial state " + std::to_string(doc.initial) + " out of range");

  const json& finals = field(root, "finals");
  if (!finals.is_array())
    invalid("finals must be an array");
  std::set<State> seen_finals;
  for (const json& f : finals) {
    const State s = as_u32(f, "final state");
    if (s >= doc.state_count)
      invalid("final state " + std::to_string(s) + " out of range");
    if (!seen_finals.insert(s).second)
      invalid("duplicate final state " + std::to_string(s));
    doc.finals.push_back(s);
  }

  const json& transitions = field(root, "transitions");
  if (!transitions.is_array())
    invalid("transitions must be an array");
  std::set<std::pair<State, Digit>> sources;
  for (const json& t : transitions) {
    if (!t.is_array() || t.size() != 3)
      invalid("transition must be a [from, digit, to] triple");
    const std::uint32_t from = as_u32(t[0], "transition source");
    const std::uint32_t digit = as_u32(t[1], "transition digit");
    const std::uint32_t to = as_u32(t[2], "transition target");
    const std::string label = "transition [" + std::to_string(from) + ", " +
                              std::to_string(digit) + ", " + std::to_string(to) + "]";
    if (from >= doc.state_count || to >= doc.state_count)
      invalid(label + ": state out of range");
    if (digit >= doc.base)
      invalid(label + ": digit out of range for base " + std::to_string(doc.base));
    if (!sources.emplace(from, digit).second)
      invalid(label + ": duplicate (from, digit) pair");
    doc.transitions.push_back({from, digit, to});
  }

  const json& zero = field(root, "contains_zero");
  if (!zero.is_boolean())
    invalid("contains_zero must be a boolean");
  doc.contains_zero = zero.get<bool>();
  return doc;
}

RecognizableSet to_set(const AutomatonDocument& doc, CanonicalPolicy policy) {
  Dfa dfa(doc.base, doc.state_count, doc.initial);
  for (State s : doc.finals)
    dfa.set_final(s);
  for (const auto& [from, digit, to] : doc.transitions)
    dfa.set_transition(from, digit, to);
  return RecognizableSet(std::move(dfa), doc.contains_zero, policy);
}

AutomatonDocument to_document(const RecognizableSet& set) {
  const Dfa& dfa = set.dfa();
  AutomatonDocument doc;
  doc.base = dfa.alphabet_size();
  doc.state_count = dfa.state_count();
  doc.initial = dfa.initial();
  doc.finals = dfa.finals();
  for (State s = 0; s < dfa.state_count(); ++s)
    for (Digit d = 0; d < dfa.alphabet_size(); ++d)
      if (State t = dfa.next(s, d); t != kNoState)
        doc.transitions.push_back({s, d, t});
  doc.contains_zero = set.contains_zero();
  return doc;
}

std::string serialize(const AutomatonDocument& doc) {
  std::ostringstream out;
  out << "{\n"
      << "  \"format_version\": " << doc.format_version << ",\n"
      << "  \"base\": " << doc.base << ",\n"
      << "  \"state_count\": " << doc.state_count << ",\n"
      << "  \"initial\": " << doc.initial << ",\n"
      << "  \"finals\": [";
  for (std::size_t i = 0; i < doc.finals.size(); ++i)
    out << (i ? ", " : "") << doc.finals[i];
  out << "],\n  \"transitions\": [";
  for (std::size_t i = 0; i < doc.transitions.size(); ++i) {
    const auto& [from, digit, to] = doc.transitions[i];
    out << (i ? ",\n    " : "\n    ") << '[' << from << ", " << digit << ", " << to << ']';
  }
  out << (doc.transitions.empty() ? "],\n" : "\n  ],\n")
      << "  \"contains_zero\": " << (doc.contains_zero ? "true" : "false") << "\n"
      << "}\n";
  return out.str();
}

RecognizableSet parse_automaton(std::string_view text, CanonicalPolicy policy) {
  return to_set(parse_document(text, policy), policy);
}

RecognizableSet read_automaton(const std::string& path, CanonicalPolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str(), policy);
}

void write_automaton(const std::string& path, const RecognizableSet& set) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << serialize(to_document(set));
  if (!out)
    throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

} // namespace cobham
