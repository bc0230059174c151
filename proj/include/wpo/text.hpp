// Text forms of lower sets and monomial ideals.
//
//   FiniteLowerSet   {(1,2);(0,3)}       generators; {} is the empty set
//   GeneralLowerSet  [2,w]u[w,2]         boxes joined by 'u'; "empty" is the empty set
//   MonomialIdeal    (2,0);(0,3)         minimal generators; "0" is the zero ideal
//
// Printers emit canonical forms and the parsers invert them exactly. Parsers
// take the expected dimension, which is needed for the empty forms.
#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpo/errors.hpp"
#include "wpo/lowerset.hpp"
#include "wpo/monomial.hpp"

namespace wpo {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }
  Coord natural() {
    skip();
    std::size_t start = pos_;
    Coord v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Coord d = static_cast<Coord>(s_[pos_] - '0');
      if (v > (std::numeric_limits<Coord>::max() - 1 - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return v;
  }
  Extent extent() {
    if (accept('w')) return kOmega;
    return Extent(natural());
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// "(a,b,...)" -> point; "()" is the zero-dimensional point.
inline Point parse_tuple(Cursor& c) {
  c.expect('(');
  Point p;
  if (c.accept(')')) return p;
  do p.push_back(c.natural());
  while (c.accept(','));
  c.expect(')');
  return p;
}

inline std::string tuple_text(const std::vector<Coord>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline void check_tuple_dim(const Cursor& c, std::size_t have, std::optional<std::size_t>& dim) {
  if (dim && *dim != have)
    throw parse_error("tuple of dimension " + std::to_string(have) + " where " + std::to_string(*dim) +
                          " was expected",
                      c.position());
  dim = have;
}

}  // namespace detail

inline std::string to_text(Extent e) { return e.is_omega() ? "w" : std::to_string(e.value()); }

inline std::string to_text(const FiniteLowerSet& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.generators().size(); ++i)
    s += (i ? ";" : "") + detail::tuple_text(f.generators()[i]);
  return s + "}";
}

inline std::string to_text(const Rectangle& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.extents.size(); ++i) s += (i ? "," : "") + to_text(r.extents[i]);
  return s + "]";
}

inline std::string to_text(const GeneralLowerSet& g) {
  if (g.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < g.rects().size(); ++i) s += (i ? "u" : "") + to_text(g.rects()[i]);
  return s;
}

inline std::string to_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    s += (i ? ";" : "") + detail::tuple_text(ideal.generators()[i].exponents);
  return s;
}

/// Conventional notation with variables X, Y, Z; only for dimensions up to 3.
inline std::string to_pretty(const MonomialIdeal& ideal) {
  if (ideal.dim() > 3) throw std::invalid_argument("pretty form needs dimension <= 3");
  if (ideal.is_zero()) return "0";
  static constexpr char kVars[] = {'X', 'Y', 'Z'};
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    std::string mono;
    for (std::size_t t = 0; t < g.dim(); ++t) {
      if (g.exponents[t] == 0) continue;
      mono += kVars[t];
      if (g.exponents[t] > 1) mono += "^" + std::to_string(g.exponents[t]);
    }
    s += mono.empty() ? "1" : mono;
  }
  return s;
}

inline FiniteLowerSet parse_finite_lowerset(std::string_view text, std::optional<std::size_t> dim = {}) {
  detail::Cursor c(text);
  c.expect('{');
  std::vector<Point> pts;
  if (!c.accept('}')) {
    do {
      Point p = detail::parse_tuple(c);
      detail::check_tuple_dim(c, p.size(), dim);
      pts.push_back(std::move(p));
    } while (c.accept(';'));
    c.expect('}');
  }
  c.finish();
  if (!dim) throw parse_error("empty lower set needs an explicit dimension", 0);
  return closure(std::move(pts), *dim);
}

inline GeneralLowerSet parse_general_lowerset(std::string_view text, std::optional<std::size_t> dim = {}) {
  detail::Cursor c(text);
  std::vector<Rectangle> rs;
  if (!c.accept(std::string_view("empty"))) {
    do {
      c.expect('[');
      Rectangle r;
      if (!c.accept(']')) {
        do r.extents.push_back(c.extent());
        while (c.accept(','));
        c.expect(']');
      }
      detail::check_tuple_dim(c, r.dim(), dim);
      rs.push_back(std::move(r));
    } while (c.accept('u'));
  }
  c.finish();
  if (!dim) throw parse_error("empty lower set needs an explicit dimension", 0);
  return GeneralLowerSet(*dim, std::move(rs));
}

inline MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim = {}) {
  detail::Cursor c(text);
  std::vector<Monomial> gens;
  if (!c.accept('0')) {
    do {
      Point p = detail::parse_tuple(c);
      detail::check_tuple_dim(c, p.size(), dim);
      gens.push_back(Monomial{std::move(p)});
    } while (c.accept(';'));
  }
  c.finish();
  if (!dim) throw parse_error("zero ideal needs an explicit dimension", 0);
  return minimalize(std::move(gens), *dim);
}

}  // namespace wpo
