// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is an immutable, strictly decreasing sum of terms w^e * c where
// every exponent e is itself an Ordinal and every coefficient c >= 1 is an
// arbitrary-precision natural. The empty sum is 0.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wpo {

using Natural = boost::multiprecision::cpp_int;

/// Raised when a fundamental sequence is requested for 0 or a successor.
class not_a_limit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor): finite ordinals read naturally
  static Ordinal finite(const Natural& n);
  static Ordinal omega() { return omega_pow(Ordinal(1)); }
  static Ordinal omega_pow(const Ordinal& exponent);
  static Ordinal monomial(const Ordinal& exponent, const Natural& coefficient);

  /// Builds from terms; throws std::invalid_argument unless exponents are
  /// strictly decreasing and coefficients positive.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  /// Coefficient of the w^0 term (0 when the ordinal is a limit or 0).
  Natural finite_part() const;
  /// For successors only: the ordinal one below.
  Ordinal predecessor() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Natural coefficient;
};

// ---------------------------------------------------------------------------
// Construction and queries

inline Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), Natural(n)});
}

inline Ordinal Ordinal::finite(const Natural& n) {
  if (n < 0) throw std::invalid_argument("negative natural");
  Ordinal r;
  if (n != 0) r.terms_.push_back(Term{Ordinal(), n});
  return r;
}

inline Ordinal Ordinal::omega_pow(const Ordinal& exponent) {
  Ordinal r;
  r.terms_.push_back(Term{exponent, Natural(1)});
  return r;
}

inline Ordinal Ordinal::monomial(const Ordinal& exponent, const Natural& coefficient) {
  if (coefficient < 0) throw std::invalid_argument("negative coefficient");
  Ordinal r;
  if (coefficient != 0) r.terms_.push_back(Term{exponent, coefficient});
  return r;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient <= 0) throw std::invalid_argument("CNF coefficients must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline Natural Ordinal::finite_part() const {
  return is_successor() ? terms_.back().coefficient : Natural(0);
}

inline Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw not_a_limit("predecessor of a non-successor");
  Ordinal r = *this;
  if (r.terms_.back().coefficient == 1)
    r.terms_.pop_back();
  else
    r.terms_.back().coefficient -= 1;
  return r;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (x[i].coefficient != y[i].coefficient)
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

/// Three-way comparison as a named operation.
inline std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

inline Ordinal omega_pow(const Ordinal& a) { return Ordinal::omega_pow(a); }

// ---------------------------------------------------------------------------
// Arithmetic

/// Ordinary (non-commutative) ordinal sum: terms of `a` below the leading
/// exponent of `b` are absorbed.
inline Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    auto c = t.exponent <=> lead.exponent;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back(Ordinal::Term{lead.exponent, t.coefficient + lead.coefficient});
        out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
        return Ordinal::from_terms(std::move(out));
      }
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

/// Hessenberg sum: coefficientwise merge of the two CNFs.
inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Ordinal::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    auto c = x[i].exponent <=> y[j].exponent;
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      out.push_back(Ordinal::Term{x[i].exponent, x[i].coefficient + y[j].coefficient});
      ++i, ++j;
    }
  }
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  return Ordinal::from_terms(std::move(out));
}

/// Hessenberg product: distribute over term pairs, natural-sum the exponents,
/// multiply the coefficients, then natural-sum everything.
inline Ordinal natural_product(const Ordinal& a, const Ordinal& b) {
  Ordinal acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      acc = natural_sum(acc, Ordinal::monomial(natural_sum(s.exponent, t.exponent),
                                               s.coefficient * t.coefficient));
  return acc;
}

/// Largest exponent n accepted by pow2 for the finite factor 2^n.
inline constexpr unsigned kMaxPow2FiniteExponent = 1u << 16;

/// Base-2 exponentiation. Writing a = w*beta + n with n finite, 2^a = w^beta * 2^n.
inline Ordinal pow2(const Ordinal& a) {
  std::vector<Ordinal::Term> beta;
  Natural n = 0;
  for (const auto& t : a.terms()) {
    if (t.exponent.is_zero()) {
      n = t.coefficient;
      continue;
    }
    // w^e = w * w^g where 1 + g = e: g = e - 1 for finite e, g = e otherwise.
    Ordinal g = t.exponent.is_finite() ? t.exponent.predecessor() : t.exponent;
    beta.push_back(Ordinal::Term{std::move(g), t.coefficient});
  }
  if (n > kMaxPow2FiniteExponent) throw std::overflow_error("pow2: finite part too large");
  Natural coeff = Natural(1) << static_cast<unsigned>(n);
  return Ordinal::monomial(Ordinal::from_terms(std::move(beta)), coeff);
}

// ---------------------------------------------------------------------------
// Fundamental sequences and the Hardy hierarchy

/// lambda[x] for a limit lambda. A leading coefficient c > 1 on the last term
/// is split as w^e*(c-1) + w^e before the rules apply; w^(b+1)[0] drops the
/// zero term.
inline Ordinal fundamental(const Ordinal& lambda, std::uint64_t x) {
  if (!lambda.is_limit()) throw not_a_limit("fundamental sequence requested for a non-limit ordinal");
  std::vector<Ordinal::Term> out(lambda.terms().begin(), lambda.terms().end() - 1);
  const auto& last = lambda.terms().back();
  if (last.coefficient > 1) out.push_back(Ordinal::Term{last.exponent, last.coefficient - 1});

  const Ordinal& e = last.exponent;
  if (e.is_successor()) {
    if (x != 0) out.push_back(Ordinal::Term{e.predecessor(), Natural(x)});
  } else {
    out.push_back(Ordinal::Term{fundamental(e, x), Natural(1)});
  }
  return Ordinal::from_terms(std::move(out));
}

/// One rewrite of the Hardy recursion: successors step to their predecessor,
/// limits to lambda[x]. The argument always advances by one.
inline std::pair<Ordinal, std::uint64_t> hardy_step(const Ordinal& alpha, std::uint64_t x) {
  if (alpha.is_successor()) return {alpha.predecessor(), x + 1};
  return {fundamental(alpha, x), x + 1};
}

struct HardyResidual {
  Ordinal alpha;
  std::uint64_t argument = 0;
  std::uint64_t steps = 0;
};

/// Either the value H_alpha(x) or the state reached when the budget ran out.
struct HardyOutcome {
  std::variant<std::uint64_t, HardyResidual> result;

  bool finished() const { return std::holds_alternative<std::uint64_t>(result); }
  std::uint64_t value() const { return std::get<std::uint64_t>(result); }
  const HardyResidual& residual() const { return std::get<HardyResidual>(result); }
};

/// Iterates H_0(x) = x, H_{a+1}(x) = H_a(x+1), H_l(x) = H_{l[x]}(x+1).
/// Each rewrite costs one budget unit; a residual is resumable by calling
/// hardy again on its (alpha, argument).
inline HardyOutcome hardy(Ordinal alpha, std::uint64_t x, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("hardy: budget must be positive");
  std::uint64_t steps = 0;
  while (!alpha.is_zero()) {
    if (steps == budget) return {HardyResidual{std::move(alpha), x, steps}};
    std::tie(alpha, x) = hardy_step(alpha, x);
    ++steps;
  }
  return {x};
}

enum class DescentStop { reached_zero, hit_successor, step_limit };

struct DescentTrace {
  Ordinal start;
  std::uint64_t base = 0;
  std::vector<Ordinal> steps;
  DescentStop stop = DescentStop::reached_zero;

  bool truncated() const { return stop != DescentStop::reached_zero; }
};

/// alpha_0 = start, alpha_{i+1} = alpha_i[base + i]. At most `limit` ordinals
/// are emitted; the trace ends early at 0 or at a successor, which has no
/// fundamental sequence.
inline DescentTrace descend(const Ordinal& start, std::uint64_t base, std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("descend: limit must be positive");
  DescentTrace t{start, base, {start}, DescentStop::reached_zero};
  while (true) {
    const Ordinal& cur = t.steps.back();
    if (cur.is_zero()) return t;
    if (t.steps.size() == limit) {
      t.stop = DescentStop::step_limit;
      return t;
    }
    if (cur.is_successor()) {
      t.stop = DescentStop::hit_successor;
      return t;
    }
    t.steps.push_back(fundamental(cur, base + t.steps.size() - 1));
  }
}

// ---------------------------------------------------------------------------
// Maximal order types

/// o(D(N^m x k)) = w^(w^(m-1) * k).
inline Ordinal type_of_D(std::uint64_t m, std::uint64_t k = 1) {
  if (m == 0 || k == 0) throw std::invalid_argument("type_of_D: m and k must be positive");
  return omega_pow(Ordinal::monomial(Ordinal(m - 1), Natural(k)));
}

inline Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Natural r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// o(I(N^m)) = w^(sum_{k=1..m} w^(m-k) * C(m, k-1)) + 1.
inline Ordinal type_of_I(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("type_of_I: m must be positive");
  std::vector<Ordinal::Term> exponent;
  for (std::uint64_t k = 1; k <= m; ++k)
    exponent.push_back(Ordinal::Term{Ordinal(m - k), binomial(m, k - 1)});
  return add(omega_pow(Ordinal::from_terms(std::move(exponent))), Ordinal(1));
}

}  // namespace wpo
