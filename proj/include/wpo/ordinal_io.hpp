// ASCII text form of ordinals.
//
//   ordinal := term ("+" term)* | "0"
//   term    := "w" ("^" exponent)? ("*" natural)? | natural
//   exponent:= natural | "w" | "(" ordinal ")"
//
// Canonical output lists terms with strictly decreasing exponents, omits
// exponent 1 and coefficient 1, and parenthesises every exponent that is not
// a natural or w itself.
#pragma once

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wpo/errors.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

inline std::string format_ordinal(const Ordinal& a);

namespace detail {

inline std::string format_exponent(const Ordinal& e) {
  if (e.is_finite()) return format_ordinal(e);
  if (e == Ordinal::omega()) return "w";
  return "(" + format_ordinal(e) + ")";
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal r = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Natural parse_natural() {
    if (!at_digit()) fail("expected a natural number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    std::size_t term_start = 0;
    do {
      skip_space();
      term_start = pos_;
      Ordinal::Term t = parse_term();
      if (t.coefficient == 0) {
        // A bare "0" is only valid as the whole ordinal.
        if (!terms.empty()) fail("zero term inside a sum");
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '+') fail("zero term inside a sum");
        return Ordinal();
      }
      if (!terms.empty() && !(t.exponent < terms.back().exponent)) {
        pos_ = term_start;
        fail("exponents not strictly decreasing");
      }
      terms.push_back(std::move(t));
    } while (accept('+'));
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    if (at_digit()) return Ordinal::Term{Ordinal(), parse_natural()};
    if (!accept('w')) fail("expected 'w' or a natural number");
    Ordinal exponent(1);
    if (accept('^')) {
      if (accept('(')) {
        exponent = parse_sum();
        if (!accept(')')) fail("expected ')'");
      } else if (accept('w')) {
        exponent = Ordinal::omega();
      } else {
        exponent = Ordinal::finite(parse_natural());
      }
    }
    Natural coeff = 1;
    if (accept('*')) {
      coeff = parse_natural();
      if (coeff == 0) fail("coefficient must be positive");
    }
    return Ordinal::Term{std::move(exponent), std::move(coeff)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) out += '^' + detail::format_exponent(t.exponent);
    if (t.coefficient != 1) out += '*' + t.coefficient.str();
  }
  return out;
}

/// Throws parse_error (with the offending position) on malformed or
/// non-canonical input.
inline Ordinal parse_ordinal(std::string_view text) { return detail::OrdinalParser(text).parse_all(); }

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << format_ordinal(a); }

}  // namespace wpo
