#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "hochred/hilbert.hpp"

namespace hochred {

struct Truncation {
  int depth = 0;
  int recheck_depth = 0;
  bool stable = true;
};

/// Outcome of comparing two independently computed tables.
struct VerificationReport {
  std::string statement;
  std::string inputs;
  HilbertTable lhs;
  HilbertTable rhs;
  bool pass = false;
  std::optional<Discrepancy> discrepancy;
  std::optional<Truncation> truncation;
  int alignment = 0;  // index shift applied to the reduced side
  std::string note;
};

inline VerificationReport make_report(std::string statement, std::string inputs, HilbertTable lhs,
                                      HilbertTable rhs) {
  VerificationReport r;
  r.statement = std::move(statement);
  r.inputs = std::move(inputs);
  r.discrepancy = first_discrepancy(lhs, rhs);
  r.pass = !r.discrepancy;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

/// Runs `f` at depth t and t + 2 and records whether the tables moved.
inline VerificationReport with_stability(int depth, const std::function<VerificationReport(int)>& f) {
  auto r = f(depth);
  auto again = f(depth + 2);
  const bool stable = !first_discrepancy(r.lhs, again.lhs) && !first_discrepancy(r.rhs, again.rhs) &&
                      r.lhs.rows.size() == again.lhs.rows.size() && r.rhs.rows.size() == again.rhs.rows.size();
  r.truncation = Truncation{depth, depth + 2, stable};
  if (!stable) {
    r.pass = false;
    r.note += r.note.empty() ? "" : "; ";
    r.note += "tables changed between truncation depths";
  }
  return r;
}

}  // namespace hochred
