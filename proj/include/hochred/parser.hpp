#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hochred/errors.hpp"
#include "hochred/ring.hpp"

namespace hochred {

/// Recursive-descent reader for the polynomial text grammar:
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT ['/' INT] | VAR ['^' INT]
///   VAR    := [a-zA-Z][a-zA-Z0-9_]*
///
/// Positions in errors are 1-based; `column0` is the column of text[0].
template <Field F>
class PolynomialReader {
 public:
  using K = typename F::value_type;

  PolynomialReader(const Ring<F>& ring, std::string_view text, int line = 1, int column0 = 1)
      : ring_(ring), text_(text), line_(line), column0_(column0) {}

  Polynomial<K> read() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial<K> acc;
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial<K> t = term();
      if (negative) t = negated(std::move(t));
      acc = ring_.add(acc, t);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return acc;
  }

 private:
  Polynomial<K> term() {
    K coeff = ring_.one_scalar();
    Monomial mono = ring_.space().one();
    factor(coeff, mono);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      factor(coeff, mono);
      skip_ws();
    }
    return ring_.monomial(coeff, mono);
  }

  void factor(K& coeff, Monomial& mono) {
    skip_ws();
    if (at_end()) fail("expected a coefficient or variable");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        std::size_t at = pos_;
        den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail_at(at, "zero denominator");
      }
      try {
        K v = ring_.field().from_fraction(num, den);
        coeff = coeff * v;
      } catch (const InvalidArgument& e) {
        fail(e.what());
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_.space().index_of(name);
      if (idx < 0) fail_at(start, "unknown variable '" + name + "'");
      int power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        std::string e = digits();
        if (e.size() > 5) fail("exponent too large");
        power = std::stoi(e);
      }
      mono = ring_.space().mul(mono, ring_.space().variable(idx, power));
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, column0_ + static_cast<int>(at), msg);
  }

  const Ring<F>& ring_;
  std::string_view text_;
  int line_;
  int column0_;
  std::size_t pos_ = 0;
};

template <Field F>
Polynomial<typename F::value_type> parse_polynomial(const Ring<F>& ring, std::string_view text, int line = 1,
                                                    int column0 = 1) {
  return PolynomialReader<F>(ring, text, line, column0).read();
}

}  // namespace hochred
