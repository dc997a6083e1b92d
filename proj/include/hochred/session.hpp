#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "hochred/dualizing.hpp"
#include "hochred/hochschild.hpp"
#include "hochred/parser.hpp"
#include "hochred/reduction.hpp"
#include "hochred/report.hpp"

namespace hochred {

/// A piece of source text with its 1-based position.
struct Located {
  std::string text;
  int line = 0;
  int column = 0;
};

struct FieldSpec {
  bool rational = true;
  std::uint32_t p = 0;
  std::string to_string() const { return rational ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

struct RingSpec {
  bool present = false;
  int line = 0;
  std::vector<std::string> variables;
  std::vector<int> weights;
  MonomialOrder order = MonomialOrder::WeightedGrevlex;
  std::vector<Located> ideal;
};

/// `name` or `name(t)`: the named module twisted by t.
struct ModuleRef {
  std::string name;
  int twist = 0;
  int line = 0;
  int column = 0;
};

struct ModuleSpec {
  enum class Kind { Ring, Residue, Free, Cokernel, Sum };
  std::string name;
  Kind kind = Kind::Ring;
  std::vector<int> degrees;
  std::vector<std::vector<Located>> matrix;  // rows = generators, columns = relations
  std::vector<ModuleRef> summands;
  int line = 0;
};

struct TaskSpec {
  std::string kind;       // hh, hh-homology, dualizing, verify, smooth-check
  std::string statement;  // for verify
  std::vector<ModuleRef> modules;
  std::optional<int> n_max;
  std::optional<Window> window;
  std::optional<int> depth;
  std::string text;
  int line = 0;
};

struct SessionSpec {
  FieldSpec field;
  RingSpec ring;
  RingSpec alt;
  std::vector<std::pair<Located, Located>> matching;  // variable of the alternative -> polynomial
  std::vector<ModuleSpec> modules;
  std::vector<TaskSpec> tasks;
  std::string source;
};

/// Statement names accepted by `verify`, with their numeric aliases.
inline std::optional<std::string> canonical_statement(std::string_view s, std::size_t module_count) {
  static const std::vector<std::pair<std::string_view, std::string_view>> aliases = {
      {"4.1", "reduction"},       {"4.1.2", "reduction-coefficient"}, {"4.6", "homology-reduction"},
      {"4.7", "dualizing-tor"},   {"4.5", "classical"},               {"4.2", "shifted-reduction"},
      {"1.1", "factorization"},   {"1.11", "finite-dual"},
  };
  if (s == "1.2") return module_count == 0 ? "homothety" : "biduality";
  for (const auto& [alias, name] : aliases)
    if (s == alias || s == name) return std::string(name);
  for (std::string_view name : {"biduality", "homothety"})
    if (s == name) return std::string(name);
  return std::nullopt;
}

/// Number of module arguments a task kind takes.
inline int module_arity(const std::string& kind, const std::string& statement) {
  if (kind == "hh" || kind == "hh-homology") return 2;
  if (kind == "dualizing" || kind == "smooth-check") return 0;
  if (statement == "biduality") return 1;
  if (statement == "dualizing-tor" || statement == "factorization" || statement == "homothety" ||
      statement == "finite-dual")
    return 0;
  return 2;
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Splits on `sep`, keeping the column of each trimmed piece.
inline std::vector<Located> split_located(std::string_view s, char sep, int line, int column0) {
  std::vector<Located> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != sep) continue;
    auto piece = s.substr(start, i - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    out.push_back({trim(piece), line, column0 + static_cast<int>(start + lead)});
    start = i + 1;
  }
  return out;
}

inline int parse_int(const Located& l) {
  int sign = 1;
  std::size_t i = 0;
  const auto& s = l.text;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    sign = s[i] == '-' ? -1 : 1;
    ++i;
  }
  if (i == s.size()) throw ParseError(l.line, l.column, "expected an integer, got '" + s + "'");
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(l.line, l.column + static_cast<int>(i), "expected an integer, got '" + s + "'");
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000'000) throw ParseError(l.line, l.column, "integer out of range");
  }
  return static_cast<int>(sign * v);
}

inline std::vector<int> parse_ints(std::string_view s, int line, int column0) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const auto& piece : split_located(s, ',', line, column0)) out.push_back(parse_int(piece));
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline ModuleRef parse_ref(const Located& l) {
  ModuleRef r{l.text, 0, l.line, l.column};
  auto open = l.text.find('(');
  if (open != std::string::npos) {
    if (l.text.back() != ')') throw ParseError(l.line, l.column, "expected ')' after twist");
    r.name = trim(std::string_view(l.text).substr(0, open));
    r.twist = parse_int({trim(std::string_view(l.text).substr(open + 1, l.text.size() - open - 2)), l.line,
                         l.column + static_cast<int>(open) + 1});
  }
  if (!is_identifier(r.name)) throw ParseError(l.line, l.column, "expected a module name, got '" + l.text + "'");
  return r;
}

inline Window parse_window(const Located& l) {
  auto colon = l.text.find(':', 1);
  if (colon == std::string::npos) throw ParseError(l.line, l.column, "window must be LO:HI");
  Window w{parse_int({l.text.substr(0, colon), l.line, l.column}),
           parse_int({l.text.substr(colon + 1), l.line, l.column + static_cast<int>(colon) + 1})};
  if (w.lo > w.hi) throw ParseError(l.line, l.column, "window is empty");
  return w;
}

/// Whitespace-separated tokens of a line with their columns.
inline std::vector<Located> tokens(std::string_view s, int line, int column0) {
  std::vector<Located> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    int depth = 0;
    while (j < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[j])))) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    }
    out.push_back({std::string(s.substr(i, j - i)), line, column0 + static_cast<int>(i)});
    i = j;
  }
  return out;
}

inline MonomialOrder parse_order(const Located& l) {
  if (l.text == "wgrevlex" || l.text == "weighted-grevlex") return MonomialOrder::WeightedGrevlex;
  if (l.text == "grevlex") return MonomialOrder::Grevlex;
  if (l.text == "lex") return MonomialOrder::Lex;
  throw ParseError(l.line, l.column, "unknown monomial order '" + l.text + "'");
}

inline FieldSpec parse_field(const Located& l) {
  FieldSpec f;
  if (l.text == "QQ" || l.text == "Q") return f;
  if (l.text.rfind("GF(", 0) == 0 && l.text.back() == ')') {
    int p = parse_int({l.text.substr(3, l.text.size() - 4), l.line, l.column + 3});
    if (p < 2) throw ParseError(l.line, l.column, "field characteristic must be a prime");
    f.rational = false;
    f.p = static_cast<std::uint32_t>(p);
    try {
      PrimeField check(f.p);
      (void)check;
    } catch (const InvalidArgument& e) {
      throw ParseError(l.line, l.column, e.what());
    }
    return f;
  }
  throw ParseError(l.line, l.column, "field must be QQ or GF(p)");
}

/// Everything a task needs, built from the spec over one field.
template <Field F>
struct Built {
  typename Ring<F>::Ptr s;
  typename Ring<F>::Ptr alt;
  Matching<F> matching;
  std::map<std::string, ModulePresentation<F>> modules;

  ModulePresentation<F> module(const ModuleRef& r) const {
    auto it = modules.find(r.name);
    if (it == modules.end())
      throw UndefinedName(std::to_string(r.line) + ":" + std::to_string(r.column) + ": undefined module '" + r.name + "'");
    return r.twist == 0 ? it->second : it->second.twist(r.twist);
  }
};

template <Field F>
typename Ring<F>::Ptr build_ring(const RingSpec& spec, const F& field) {
  using K = typename F::value_type;
  typename Ring<F>::Ptr q;
  try {
    q = Ring<F>::create(field, spec.variables, spec.weights, spec.order);
  } catch (const InvalidArgument& e) {
    throw ParseError(spec.line, 1, e.what());
  }
  std::vector<Polynomial<K>> gens;
  for (const auto& g : spec.ideal) {
    const auto bad = NonHomogeneousInput(std::to_string(g.line) + ":" + std::to_string(g.column) + ": '" +
                                         g.text + "' is not homogeneous for the given weights");
    Polynomial<K> p;
    try {
      p = parse_polynomial(*q, g.text, g.line, g.column);
      if (!p.is_zero() && !homogeneous_degree(p, std::vector<int>{0}).has_value()) throw bad;
    } catch (const NonHomogeneousInput&) {
      throw bad;
    }
    gens.push_back(std::move(p));
  }
  return q->with_ideal(std::move(gens));
}

template <Field F>
Built<F> build(const SessionSpec& spec, const F& field) {
  using K = typename F::value_type;
  Built<F> b;
  if (!spec.ring.present) throw ParseError(1, 1, "session has no ring");
  b.s = build_ring(spec.ring, field);
  if (spec.alt.present) b.alt = build_ring(spec.alt, field);
  for (const auto& [var, poly] : spec.matching) {
    if (!b.alt) throw ParseError(var.line, var.column, "matching given without an alternative ring");
    b.matching.images.push_back({var.text, parse_polynomial(*b.s, poly.text, poly.line, poly.column)});
  }
  b.modules.emplace("S", ring_module<F>(b.s));
  b.modules.emplace("k", residue_field<F>(b.s));
  for (const auto& m : spec.modules) {
    if (b.modules.count(m.name)) throw ParseError(m.line, 1, "module '" + m.name + "' is already defined");
    auto where = [&](const std::string& msg) { return std::to_string(m.line) + ":1: " + msg; };
    try {
      switch (m.kind) {
        case ModuleSpec::Kind::Ring: b.modules.emplace(m.name, ring_module<F>(b.s)); break;
        case ModuleSpec::Kind::Residue: b.modules.emplace(m.name, residue_field<F>(b.s)); break;
        case ModuleSpec::Kind::Free: b.modules.emplace(m.name, free_module<F>(b.s, m.degrees)); break;
        case ModuleSpec::Kind::Cokernel: {
          const int rows = static_cast<int>(m.matrix.size());
          std::vector<int> degs = m.degrees.empty() ? std::vector<int>(rows, 0) : m.degrees;
          if (static_cast<int>(degs.size()) != rows)
            throw ParseError(m.line, 1, "one degree per matrix row required");
          const std::size_t cols = rows == 0 ? 0 : m.matrix[0].size();
          std::vector<Vector<K>> rel(cols);
          for (int r = 0; r < rows; ++r) {
            if (m.matrix[r].size() != cols) throw ParseError(m.line, 1, "matrix rows have different lengths");
            for (std::size_t c = 0; c < cols; ++c) {
              const auto& e = m.matrix[r][c];
              auto p = parse_polynomial(*b.s, e.text, e.line, e.column);
              rel[c] = add(b.s->order(), rel[c], in_component(p, r));
            }
          }
          b.modules.emplace(m.name, ModulePresentation<F>(b.s, degs, std::move(rel)));
          break;
        }
        case ModuleSpec::Kind::Sum: {
          std::optional<ModulePresentation<F>> acc;
          for (const auto& ref : m.summands) {
            auto part = b.module(ref);
            acc = acc ? direct_sum(*acc, part) : part;
          }
          b.modules.emplace(m.name, *acc);
          break;
        }
      }
    } catch (const NonHomogeneousInput& e) {
      throw NonHomogeneousInput(where(e.what()));
    } catch (const TwistMismatch& e) {
      throw NonHomogeneousInput(where(e.what()));
    }
  }
  for (const auto& t : spec.tasks)
    for (const auto& r : t.modules) (void)b.module(r);
  return b;
}

struct LineParser {
  SessionSpec spec;

  void line(std::string_view raw, int lineno) {
    auto hash = raw.find('#');
    std::string_view text = raw.substr(0, hash);
    auto toks = tokens(text, lineno, 1);
    if (toks.empty()) return;
    const auto& key = toks[0];
    const int rest_col = key.column + static_cast<int>(key.text.size());
    std::string_view rest = text.substr(rest_col - 1);
    if (key.text == "field") {
      if (toks.size() != 2) throw ParseError(lineno, rest_col, "expected one field descriptor");
      spec.field = parse_field(toks[1]);
    } else if (key.text == "ring" || key.text == "alt-ring") {
      auto& r = key.text == "ring" ? spec.ring : spec.alt;
      if (r.present) throw ParseError(lineno, key.column, key.text + " given twice");
      r.present = true;
      r.line = lineno;
      if (!trim(rest).empty())
        for (const auto& v : split_located(rest, ',', lineno, rest_col)) {
          if (!is_identifier(v.text)) throw ParseError(v.line, v.column, "bad variable name '" + v.text + "'");
          r.variables.push_back(v.text);
        }
    } else if (key.text == "weights" || key.text == "alt-weights") {
      auto& r = key.text == "weights" ? spec.ring : spec.alt;
      r.weights = parse_ints(rest, lineno, rest_col);
      for (int w : r.weights)
        if (w <= 0) throw ParseError(lineno, rest_col, "weights must be positive");
    } else if (key.text == "order" || key.text == "alt-order") {
      auto& r = key.text == "order" ? spec.ring : spec.alt;
      if (toks.size() != 2) throw ParseError(lineno, rest_col, "expected one order name");
      r.order = parse_order(toks[1]);
    } else if (key.text == "ideal" || key.text == "alt-ideal") {
      auto& r = key.text == "ideal" ? spec.ring : spec.alt;
      if (!trim(rest).empty())
        for (auto& g : split_located(rest, ',', lineno, rest_col)) {
          if (g.text.empty()) throw ParseError(g.line, g.column, "empty ideal generator");
          r.ideal.push_back(std::move(g));
        }
    } else if (key.text == "matching") {
      for (const auto& piece : split_located(rest, ';', lineno, rest_col)) {
        auto arrow = piece.text.find("->");
        if (arrow == std::string::npos) throw ParseError(piece.line, piece.column, "expected 'variable -> polynomial'");
        Located var{trim(piece.text.substr(0, arrow)), piece.line, piece.column};
        std::string rhs = piece.text.substr(arrow + 2);
        std::size_t lead = 0;
        while (lead < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[lead]))) ++lead;
        Located poly{trim(rhs), piece.line, piece.column + static_cast<int>(arrow + 2 + lead)};
        if (!is_identifier(var.text)) throw ParseError(var.line, var.column, "bad variable name '" + var.text + "'");
        if (poly.text.empty()) throw ParseError(poly.line, poly.column, "empty polynomial");
        spec.matching.push_back({var, poly});
      }
    } else if (key.text == "module") {
      module_line(text, toks, lineno);
    } else if (key.text == "task") {
      task_line(text, toks, lineno);
    } else {
      throw ParseError(lineno, key.column, "unknown keyword '" + key.text + "'");
    }
  }

  void module_line(std::string_view text, const std::vector<Located>& toks, int lineno) {
    auto eq = text.find('=');
    if (toks.size() < 4 || eq == std::string::npos) throw ParseError(lineno, 1, "expected 'module NAME = ...'");
    ModuleSpec m;
    m.line = lineno;
    m.name = toks[1].text;
    if (!is_identifier(m.name)) throw ParseError(lineno, toks[1].column, "bad module name '" + m.name + "'");
    if (toks[2].text != "=") throw ParseError(lineno, toks[2].column, "expected '='");
    const auto& kind = toks[3];
    const int after = kind.column + static_cast<int>(kind.text.size());
    std::string_view rest = text.substr(after - 1);
    if (kind.text == "ring") {
      m.kind = ModuleSpec::Kind::Ring;
    } else if (kind.text == "residue") {
      m.kind = ModuleSpec::Kind::Residue;
    } else if (kind.text == "free") {
      m.kind = ModuleSpec::Kind::Free;
      m.degrees = parse_ints(rest, lineno, after);
    } else if (kind.text == "sum") {
      m.kind = ModuleSpec::Kind::Sum;
      for (const auto& piece : split_located(rest, ',', lineno, after)) m.summands.push_back(parse_ref(piece));
    } else if (kind.text == "cokernel") {
      m.kind = ModuleSpec::Kind::Cokernel;
      auto open = rest.find('['), close = rest.find(']');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError(lineno, after, "expected a matrix in brackets");
      auto body = rest.substr(open + 1, close - open - 1);
      const int body_col = after + static_cast<int>(open) + 1;
      for (const auto& row : split_located(body, ';', lineno, body_col)) {
        std::vector<Located> entries;
        for (auto& e : split_located(row.text, ',', lineno, row.column)) {
          if (e.text.empty()) throw ParseError(e.line, e.column, "empty matrix entry");
          entries.push_back(std::move(e));
        }
        m.matrix.push_back(std::move(entries));
      }
      std::string_view tail = rest.substr(close + 1);
      const int tail_col = after + static_cast<int>(close) + 1;
      std::size_t k = 0;
      while (k < tail.size() && std::isspace(static_cast<unsigned char>(tail[k]))) ++k;
      if (k < tail.size()) {
        if (tail.substr(k, 7) != "degrees") throw ParseError(lineno, tail_col + static_cast<int>(k), "expected 'degrees'");
        m.degrees = parse_ints(tail.substr(k + 7), lineno, tail_col + static_cast<int>(k) + 7);
      }
    } else {
      throw ParseError(lineno, kind.column, "unknown module kind '" + kind.text + "'");
    }
    spec.modules.push_back(std::move(m));
  }

  void task_line(std::string_view text, const std::vector<Located>& toks, int lineno) {
    if (toks.size() < 2) throw ParseError(lineno, 1, "expected a task kind");
    TaskSpec t;
    t.line = lineno;
    t.text = trim(text.substr(toks[1].column - 1));
    t.kind = toks[1].text;
    std::size_t i = 2;
    std::optional<Located> statement;
    if (t.kind == "verify") {
      if (toks.size() < 3) throw ParseError(lineno, 1, "verify needs a statement");
      statement = toks[2];
      i = 3;
    } else if (t.kind != "hh" && t.kind != "hh-homology" && t.kind != "dualizing" && t.kind != "smooth-check") {
      throw ParseError(lineno, toks[1].column, "unknown task '" + t.kind + "'");
    }
    for (; i < toks.size(); ++i) {
      const auto& tok = toks[i];
      auto eq = tok.text.find('=');
      if (eq == std::string::npos) {
        t.modules.push_back(parse_ref(tok));
        continue;
      }
      std::string k = tok.text.substr(0, eq);
      Located v{tok.text.substr(eq + 1), lineno, tok.column + static_cast<int>(eq) + 1};
      if (k == "nmax") {
        t.n_max = parse_int(v);
        if (*t.n_max < 0) throw ParseError(v.line, v.column, "nmax must be non-negative");
      } else if (k == "depth") {
        t.depth = parse_int(v);
        if (*t.depth < 0) throw ParseError(v.line, v.column, "depth must be non-negative");
      } else if (k == "window") {
        t.window = parse_window(v);
      } else {
        throw ParseError(lineno, tok.column, "unknown task option '" + k + "'");
      }
    }
    if (statement) {
      auto name = canonical_statement(statement->text, t.modules.size());
      if (!name) throw ParseError(lineno, statement->column, "unknown statement '" + statement->text + "'");
      t.statement = *name;
    }
    const int arity = module_arity(t.kind, t.statement);
    if (static_cast<int>(t.modules.size()) != arity)
      throw ParseError(lineno, toks[1].column,
                       "task takes " + std::to_string(arity) + " module argument" + (arity == 1 ? "" : "s"));
    spec.tasks.push_back(std::move(t));
  }
};

}  // namespace detail

struct Diagnostic {
  std::string kind;
  std::string message;
};

namespace detail {

/// Parses every line, collecting failures; returns the spec and the
/// first error (rethrowable) when there was one.
inline std::pair<SessionSpec, std::exception_ptr> parse_collect(std::string_view text, std::vector<Diagnostic>* diags) {
  LineParser p;
  p.spec.source = std::string(text);
  std::exception_ptr first;
  auto record = [&](std::exception_ptr e) {
    if (!first) first = e;
    if (!diags) return;
    try {
      std::rethrow_exception(e);
    } catch (const Error& err) {
      diags->push_back({std::string(err.kind()), err.what()});
    }
  };
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    auto raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    try {
      p.line(raw, lineno);
    } catch (const Error&) {
      record(std::current_exception());
    }
    if (start == text.size() || end == text.size()) break;
    start = end + 1;
  }
  if (!first) {
    try {
      if (p.spec.field.rational) build(p.spec, RationalField{});
      else build(p.spec, PrimeField(p.spec.field.p));
    } catch (const Error&) {
      record(std::current_exception());
    }
  }
  return {std::move(p.spec), first};
}

}  // namespace detail

/// Parses and validates a session; throws the first error found.
inline SessionSpec parse_session(std::string_view text) {
  auto [spec, err] = detail::parse_collect(text, nullptr);
  if (err) std::rethrow_exception(err);
  return spec;
}

/// All diagnostics of a session, empty when it is valid.
inline std::vector<Diagnostic> diagnose_session(std::string_view text) {
  std::vector<Diagnostic> out;
  detail::parse_collect(text, &out);
  return out;
}

/// The session with its own tasks blanked out (line numbers kept) and one
/// task line appended, parsed again.
inline SessionSpec with_single_task(const SessionSpec& spec, const std::string& task_line) {
  std::istringstream in(spec.source);
  std::string line, text;
  while (std::getline(in, line)) {
    auto toks = detail::tokens(line.substr(0, line.find('#')), 1, 1);
    text += (!toks.empty() && toks[0].text == "task") ? "" : line;
    text += '\n';
  }
  text += "task " + task_line + "\n";
  return parse_session(text);
}

struct RunOptions {
  std::optional<int> n_max;
  std::optional<Window> window;
  std::optional<int> depth;
  int jobs = 1;
};

inline constexpr int kDefaultNmax = 4;

namespace detail {

inline TaskResult table_result(const std::string& task, const std::string& statement, HilbertTable t, std::string note = {}) {
  TaskResult r;
  r.task = task;
  r.statement = statement;
  r.verdict = "ok";
  r.lhs = std::move(t);
  r.note = std::move(note);
  return r;
}

template <Field F>
TaskResult run_task(const SessionSpec& spec, const TaskSpec& t, const RunOptions& opt, const F& field) {
  const int n_max = t.n_max ? *t.n_max : opt.n_max ? *opt.n_max : kDefaultNmax;
  const Window w = t.window ? *t.window : opt.window ? *opt.window : default_window(n_max);
  const int depth = t.depth ? *t.depth : opt.depth ? *opt.depth : -1;
  const std::string statement = t.kind == "verify" ? t.statement : t.kind;
  try {
    auto b = build(spec, field);
    auto mod = [&](std::size_t i) { return b.module(t.modules.at(i)); };
    if (t.kind == "hh") return table_result(t.text, statement, hochschild_cohomology<F>(b.s, mod(0), mod(1), n_max, w, depth));
    if (t.kind == "hh-homology")
      return table_result(t.text, statement, hochschild_homology<F>(b.s, mod(0), mod(1), n_max, w, depth));
    if (t.kind == "dualizing") {
      auto d = build_dualizing<F>(b.s);
      std::string note = d.concentrated_at ? "concentrated at " + std::to_string(*d.concentrated_at)
                                           : std::string("homology in several degrees");
      return table_result(t.text, statement, d.table(w), note);
    }
    if (t.kind == "smooth-check") {
      auto diag = smooth_diagnostics<F>(b.s, n_max, w, depth);
      TaskResult r = table_result(t.text, "smooth", diag.table);
      std::ostringstream note;
      note << "dimension " << diag.d;
      if (diag.generator_degree) note << ", rank-one free at " << diag.d << " generated in degree " << *diag.generator_degree;
      if (n_max > diag.d) {
        auto cert = nonsmooth_certificate<F>(b.s, n_max);
        if (cert.not_smooth) {
          note << "; not smooth: Betti number " << cert.betti[cert.n] << " at " << cert.n;
          r.verdict = "not-smooth";
        } else {
          note << "; no obstruction up to " << cert.n;
        }
      }
      if (r.verdict == "ok") r.verdict = diag.consistent ? "consistent-with-smooth" : "inconsistent";
      r.note = note.str();
      return r;
    }
    const auto& st = t.statement;
    VerificationReport rep;
    if (st == "reduction") rep = verify_reduction<F>(b.s, mod(0), mod(1), n_max, w, depth);
    else if (st == "reduction-coefficient") rep = reduce_ext<F>(b.s, mod(0), mod(1), n_max, w, depth);
    else if (st == "homology-reduction") rep = verify_homology_reduction<F>(b.s, mod(0), mod(1), n_max, w, depth);
    else if (st == "dualizing-tor") rep = dualizing_via_tor<F>(b.s, n_max, w, depth);
    else if (st == "classical") rep = classical_check<F>(b.s, mod(0), mod(1), n_max, w, depth);
    else if (st == "shifted-reduction") rep = corollary_shift_check<F>(b.s, mod(0), mod(1), n_max, w, depth);
    else if (st == "factorization") {
      if (!b.alt) throw InvalidArgument("factorization needs an alternative ring");
      rep = factorization_independence<F>(b.s, b.alt, b.matching, w);
    } else if (st == "biduality") rep = biduality_check(mod(0), build_dualizing<F>(b.s), n_max, w, depth);
    else if (st == "homothety") rep = homothety_check(build_dualizing<F>(b.s), n_max, w, depth);
    else if (st == "finite-dual") rep = finite_dual_check<F>(b.s, w);
    else throw InvalidArgument("unknown statement '" + st + "'");
    return from_report(t.text, rep);
  } catch (const Error& e) {
    TaskResult r;
    r.task = t.text;
    r.statement = statement;
    r.verdict = "error";
    r.lhs = HilbertTable{w, {}};
    r.error_kind = std::string(e.kind());
    r.error_message = e.what();
    return r;
  }
}

}  // namespace detail

/// Runs the tasks, up to `jobs` at a time; results are in task order.
inline std::vector<TaskResult> run_session(const SessionSpec& spec, const RunOptions& opt = {}) {
  std::vector<TaskResult> results(spec.tasks.size());
  auto one = [&](std::size_t i) {
    if (spec.field.rational) results[i] = detail::run_task(spec, spec.tasks[i], opt, RationalField{});
    else results[i] = detail::run_task(spec, spec.tasks[i], opt, PrimeField(spec.field.p));
  };
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(spec.tasks.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < spec.tasks.size(); ++i) one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < spec.tasks.size(); i = next++) one(i);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace hochred
