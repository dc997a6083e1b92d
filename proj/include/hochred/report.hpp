#pragma once

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hochred/verification.hpp"

namespace hochred {

inline constexpr const char* kReportVersion = "1";

/// One task's outcome: a table (lhs only) or a comparison, or an error.
struct TaskResult {
  std::string task;       // the task line as written
  std::string statement;  // what was computed or compared
  std::string verdict;    // pass, fail, ok, error, or a diagnostic outcome
  HilbertTable lhs;
  std::optional<HilbertTable> rhs;
  std::optional<Discrepancy> discrepancy;
  std::optional<Truncation> truncation;
  std::optional<int> alignment;
  std::string note;
  std::string error_kind;
  std::string error_message;

  bool failed() const { return verdict == "fail" || verdict == "error"; }
};

inline TaskResult from_report(std::string task, const VerificationReport& r) {
  TaskResult t;
  t.task = std::move(task);
  t.statement = r.statement;
  t.verdict = r.pass ? "pass" : "fail";
  t.lhs = r.lhs;
  t.rhs = r.rhs;
  t.discrepancy = r.discrepancy;
  t.truncation = r.truncation;
  t.alignment = r.alignment;
  t.note = r.note;
  return t;
}

/// FNV-1a, 64 bit.
inline std::string session_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace detail {

inline nlohmann::ordered_json table_entries(const HilbertTable& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : t.rows)
    for (int j = t.window.lo; j <= t.window.hi; ++j) {
      long d = r.dims[j - t.window.lo];
      if (d == 0) continue;
      out.push_back({{"label", r.label}, {"n", r.n}, {"degree", j}, {"dim", d}});
    }
  return out;
}

}  // namespace detail

inline std::string emit_json(const std::vector<TaskResult>& results, const std::string& hash) {
  using J = nlohmann::ordered_json;
  J root;
  root["version"] = kReportVersion;
  root["session_hash"] = hash;
  root["results"] = J::array();
  for (const auto& r : results) {
    J e;
    e["task"] = r.task;
    e["statement"] = r.statement;
    e["verdict"] = r.verdict;
    e["lhs"] = detail::table_entries(r.lhs);
    e["rhs"] = r.rhs ? detail::table_entries(*r.rhs) : J::array();
    e["window"] = {r.lhs.window.lo, r.lhs.window.hi};
    if (r.truncation)
      e["truncation"] = {{"depth", r.truncation->depth},
                         {"recheck_depth", r.truncation->recheck_depth},
                         {"stable", r.truncation->stable}};
    else
      e["truncation"] = nullptr;
    if (r.discrepancy)
      e["first_discrepancy"] = {{"n", r.discrepancy->n},
                                {"degree", r.discrepancy->degree},
                                {"lhs_dim", r.discrepancy->lhs_dim},
                                {"rhs_dim", r.discrepancy->rhs_dim}};
    if (r.alignment) e["alignment"] = *r.alignment;
    if (!r.note.empty()) e["note"] = r.note;
    if (r.verdict == "error") e["error"] = {{"kind", r.error_kind}, {"message", r.error_message}};
    root["results"].push_back(std::move(e));
  }
  return root.dump(2) + "\n";
}

/// One row per (task, side, label, n, degree), zeros included.
inline std::string emit_csv(const std::vector<TaskResult>& results) {
  std::ostringstream os;
  os << "task,side,label,n,degree,dim\n";
  auto side = [&](std::size_t idx, const char* name, const HilbertTable& t) {
    for (const auto& r : t.rows)
      for (int j = t.window.lo; j <= t.window.hi; ++j)
        os << idx << ',' << name << ',' << r.label << ',' << r.n << ',' << j << ',' << r.dims[j - t.window.lo]
           << '\n';
  };
  for (std::size_t i = 0; i < results.size(); ++i) {
    side(i, "lhs", results[i].lhs);
    if (results[i].rhs) side(i, "rhs", *results[i].rhs);
  }
  return os.str();
}

/// Tables recovered from emit_csv output, keyed by (task index, side).
inline std::map<std::pair<std::size_t, std::string>, HilbertTable> parse_csv(const std::string& text) {
  std::map<std::pair<std::size_t, std::string>, HilbertTable> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  struct Cell {
    std::string label;
    int n;
    int degree;
    long dim;
  };
  std::map<std::pair<std::size_t, std::string>, std::vector<Cell>> cells;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != "task,side,label,n,degree,dim") throw ParseError(1, 1, "unexpected csv header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        f.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    f.push_back(cur);
    if (f.size() != 6) throw ParseError(lineno, 1, "expected 6 fields");
    try {
      cells[{std::stoul(f[0]), f[1]}].push_back({f[2], std::stoi(f[3]), std::stoi(f[4]), std::stol(f[5])});
    } catch (const std::logic_error&) {
      throw ParseError(lineno, 1, "malformed number");
    }
  }
  for (auto& [key, list] : cells) {
    int lo = list.front().degree, hi = lo;
    for (const auto& c : list) {
      lo = std::min(lo, c.degree);
      hi = std::max(hi, c.degree);
    }
    HilbertTable t{{lo, hi}, {}};
    for (const auto& c : list) {
      if (c.degree == lo) t.add(c.label, c.n, std::vector<long>(t.window.width(), 0));
      t.rows.back().dims[c.degree - lo] = c.dim;
    }
    out.emplace(key, std::move(t));
  }
  return out;
}

/// Aligned text: one line per row with its nonzero degrees.
inline std::string emit_table(const std::vector<TaskResult>& results) {
  std::ostringstream os;
  auto table = [&](const char* side, const HilbertTable& t) {
    os << "  " << side << "\n";
    for (const auto& r : t.rows) {
      os << "    " << std::left << std::setw(7) << r.label << std::right << std::setw(3) << r.n << "  total "
         << std::setw(4) << r.total() << "  ";
      bool any = false;
      for (int j = t.window.lo; j <= t.window.hi; ++j) {
        long d = r.dims[j - t.window.lo];
        if (d == 0) continue;
        os << (any ? " " : "") << j << ":" << d;
        any = true;
      }
      os << (any ? "" : "0") << "\n";
    }
  };
  for (const auto& r : results) {
    os << "[" << r.verdict << "] " << r.task << "\n";
    if (r.verdict == "error") {
      os << "  " << r.error_kind << ": " << r.error_message << "\n";
      continue;
    }
    table("lhs", r.lhs);
    if (r.rhs) table("rhs", *r.rhs);
    if (r.discrepancy)
      os << "  first discrepancy at n=" << r.discrepancy->n << " degree " << r.discrepancy->degree << ": "
         << r.discrepancy->lhs_dim << " vs " << r.discrepancy->rhs_dim << "\n";
    if (r.truncation)
      os << "  depth " << r.truncation->depth << " rechecked at " << r.truncation->recheck_depth
         << (r.truncation->stable ? ", stable" : ", UNSTABLE") << "\n";
    if (!r.note.empty()) os << "  " << r.note << "\n";
  }
  return os.str();
}

}  // namespace hochred
