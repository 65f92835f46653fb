#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tautcalc/rational.hpp"

namespace tautcalc {

/// One compared number inside a check: a label (usually the test monomial)
/// and both exact sides.
struct Pairing {
  std::string label;
  Rational expected;
  Rational got;
  bool matches() const { return expected == got; }
};

/// Outcome of one identity check. pass holds iff every pairing matches and
/// no structural failure was recorded.
struct CheckReport {
  std::string check;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Pairing> pairings;
  std::string note;
  bool failed_structurally = false;

  void add(std::string label, const Rational& expected, const Rational& got) {
    pairings.push_back({std::move(label), expected, got});
  }
  /// Appends another report's pairings, prefixing their labels.
  void absorb(const CheckReport& other, const std::string& prefix) {
    for (const auto& p : other.pairings) pairings.push_back({prefix + p.label, p.expected, p.got});
    failed_structurally = failed_structurally || other.failed_structurally;
  }
  bool pass() const {
    if (failed_structurally) return false;
    for (const auto& p : pairings)
      if (!p.matches()) return false;
    return true;
  }
  const Pairing* first_mismatch() const {
    for (const auto& p : pairings)
      if (!p.matches()) return &p;
    return nullptr;
  }

  /// {check, parameters, expected, got, pass}; expected/got list every
  /// pairing in order. A failing report also carries the first mismatch.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["parameters"] = parameters;
    auto expected = nlohmann::ordered_json::array();
    auto got = nlohmann::ordered_json::array();
    for (const auto& p : pairings) {
      expected.push_back(p.expected.str());
      got.push_back(p.got.str());
    }
    j["expected"] = expected;
    j["got"] = got;
    j["pass"] = pass();
    if (!note.empty()) j["note"] = note;
    if (const Pairing* bad = first_mismatch())
      j["first_mismatch"] = {{"pairing", bad->label}, {"expected", bad->expected.str()}, {"got", bad->got.str()}};
    return j;
  }
};

}  // namespace tautcalc
