// Long bad sequences of lower sets in N^2 and N^3 driven by ordinal descent.
//
// An ordinal alpha below w^(w+2) (resp. w^(w^2+w*3+3)) is read as a shape, the
// shape as a lower set D(alpha), and D is order-reversing in the sense that
// alpha' < alpha implies D(alpha) is not a subset of D(alpha'). Descending from
// the top ordinal along fundamental sequences therefore produces a sequence
// D_1, D_2, ... in which no earlier set is contained in a later one.
//
// All boxes use the tight convention: a slab for coefficient p has side p,
// and a staircase corner sits directly on top of the extents it has to clear.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "wpo/lowerset.hpp"
#include "wpo/monomial.hpp"
#include "wpo/ordinal.hpp"
#include "wpo/ordinal_io.hpp"

namespace wpo {

namespace detail {

inline Coord to_coord(const Natural& n) {
  if (n < 0 || n > Natural(std::numeric_limits<Coord>::max() / 4))
    throw std::out_of_range("coefficient does not fit a coordinate");
  return n.convert_to<Coord>();
}

/// Coefficients (c2, c1, c0) of an exponent e = w^2*c2 + w*c1 + c0 < w^3.
inline std::optional<std::array<Coord, 3>> below_omega_cubed(const Ordinal& e) {
  std::array<Coord, 3> c{0, 0, 0};
  for (const auto& t : e.terms()) {
    if (!t.exponent.is_finite()) return std::nullopt;
    Natural k = t.exponent.is_zero() ? Natural(0) : t.exponent.terms()[0].coefficient;
    if (k > 2) return std::nullopt;
    c[2 - k.convert_to<std::size_t>()] = to_coord(t.coefficient);
  }
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dimension 2

/// alpha = w^(w+1)*p + w^w*q + w^a_1*b_1 + ... + w^a_r*b_r, a_i strictly decreasing.
struct Alpha2Shape {
  struct Term {
    Coord exponent;
    Coord coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };
  Coord p = 0;
  Coord q = 0;
  std::vector<Term> terms;

  friend bool operator==(const Alpha2Shape&, const Alpha2Shape&) = default;
};

inline Ordinal top_ordinal(unsigned m) {
  if (m == 2) return omega_pow(parse_ordinal("w+2"));
  if (m == 3) return omega_pow(parse_ordinal("w^2+w*3+3"));
  throw std::invalid_argument("bad sequences are built for m = 2 or 3");
}

inline Alpha2Shape shape2_of(const Ordinal& alpha) {
  Alpha2Shape s;
  const Ordinal w = Ordinal::omega();
  const Ordinal w1 = add(w, 1);
  for (const auto& t : alpha.terms()) {
    const Coord c = detail::to_coord(t.coefficient);
    if (t.exponent == w1)
      s.p = c;
    else if (t.exponent == w)
      s.q = c;
    else if (t.exponent.is_finite())
      s.terms.push_back({detail::to_coord(t.exponent.finite_part()), c});
    else
      throw std::out_of_range("ordinal is not below w^(w+2)");
  }
  return s;
}

inline Ordinal to_ordinal(const Alpha2Shape& s) {
  std::vector<Ordinal::Term> terms;
  const Ordinal w = Ordinal::omega();
  if (s.p) terms.push_back({add(w, 1), Natural(s.p)});
  if (s.q) terms.push_back({w, Natural(s.q)});
  for (const auto& t : s.terms) terms.push_back({Ordinal(t.exponent), Natural(t.coeff)});
  return Ordinal::from_terms(std::move(terms));
}

/// N = p + q + sum of coefficients + largest finite exponent.
inline Coord measure_N(const Alpha2Shape& s) {
  Coord n = s.p + s.q;
  Coord top = 0;
  for (const auto& t : s.terms) {
    n += t.coeff;
    top = std::max(top, t.exponent);
  }
  return n + top;
}

/// p x N  u  N x q  u  the staircase with corners (p + a_i, q + b_1 + ... + b_i - 1).
inline GeneralLowerSet d_alpha(const Alpha2Shape& s) {
  std::vector<Rectangle> rs;
  rs.push_back({{Extent(s.p), kOmega}});
  rs.push_back({{kOmega, Extent(s.q)}});
  Coord cum = s.q;
  for (const auto& t : s.terms) {
    cum += t.coeff;
    rs.push_back({{Extent(s.p + t.exponent + 1), Extent(cum)}});
  }
  return GeneralLowerSet(2, std::move(rs));
}

// ---------------------------------------------------------------------------
// Dimension 3

/// alpha = w^(w^2+w*3+2)*a_1 + w^(w^2+w*3+1)*a_2 + w^(w^2+w*3)*a_3
///       + sum w^(w^2+w*2+b)*c   (xy face)
///       + sum w^(w^2+w+d)*e     (xz face)
///       + sum w^(w^2+f)*g       (yz face)
///       + sum w^(w*h+i)*j       (corners)
/// Offsets strictly decrease within each face; corner (h, i) strictly
/// decreases lexicographically.
struct Alpha3Shape {
  struct FaceTerm {
    Coord offset;
    Coord coeff;
    friend bool operator==(const FaceTerm&, const FaceTerm&) = default;
  };
  struct CornerTerm {
    Coord h;
    Coord i;
    Coord j;
    friend bool operator==(const CornerTerm&, const CornerTerm&) = default;
  };
  std::array<Coord, 3> a{0, 0, 0};
  std::vector<FaceTerm> xy, xz, yz;
  std::vector<CornerTerm> corners;

  friend bool operator==(const Alpha3Shape&, const Alpha3Shape&) = default;
};

inline Alpha3Shape shape3_of(const Ordinal& alpha) {
  Alpha3Shape s;
  for (const auto& t : alpha.terms()) {
    const Coord c = detail::to_coord(t.coefficient);
    auto e = detail::below_omega_cubed(t.exponent);
    if (!e || (*e)[0] > 1) throw std::out_of_range("ordinal is not below w^(w^2+w*3+3)");
    auto [c2, c1, c0] = *e;
    if (c2 == 0) {
      s.corners.push_back({c1, c0, c});
      continue;
    }
    switch (c1) {
      case 3:
        if (c0 > 2) throw std::out_of_range("ordinal is not below w^(w^2+w*3+3)");
        s.a[2 - c0] = c;
        break;
      case 2: s.xy.push_back({c0, c}); break;
      case 1: s.xz.push_back({c0, c}); break;
      case 0: s.yz.push_back({c0, c}); break;
      default: throw std::out_of_range("ordinal is not below w^(w^2+w*3+3)");
    }
  }
  return s;
}

inline Ordinal to_ordinal(const Alpha3Shape& s) {
  auto exponent = [](Coord c2, Coord c1, Coord c0) {
    std::vector<Ordinal::Term> e;
    if (c2) e.push_back({Ordinal(2), Natural(c2)});
    if (c1) e.push_back({Ordinal(1), Natural(c1)});
    if (c0) e.push_back({Ordinal(), Natural(c0)});
    return Ordinal::from_terms(std::move(e));
  };
  std::vector<Ordinal::Term> terms;
  for (Coord k = 0; k < 3; ++k)
    if (s.a[k]) terms.push_back({exponent(1, 3, 2 - k), Natural(s.a[k])});
  for (const auto& t : s.xy) terms.push_back({exponent(1, 2, t.offset), Natural(t.coeff)});
  for (const auto& t : s.xz) terms.push_back({exponent(1, 1, t.offset), Natural(t.coeff)});
  for (const auto& t : s.yz) terms.push_back({exponent(1, 0, t.offset), Natural(t.coeff)});
  for (const auto& t : s.corners) terms.push_back({exponent(0, t.h, t.i), Natural(t.j)});
  return Ordinal::from_terms(std::move(terms));
}

/// Largest face offset or corner (h, i) entry, plus the sum of all coefficients.
inline Coord measure_N(const Alpha3Shape& s) {
  Coord top = 0, sum = s.a[0] + s.a[1] + s.a[2];
  for (const auto* face : {&s.xy, &s.xz, &s.yz})
    for (const auto& t : *face) {
      top = std::max(top, t.offset);
      sum += t.coeff;
    }
  for (const auto& t : s.corners) {
    top = std::max({top, t.h, t.i});
    sum += t.j;
  }
  return top + sum;
}

/// Three slabs, three face staircases (each unbounded along its free axis and
/// offset by the slab sides of its two face axes), and a corner staircase
/// offset past every face box.
inline GeneralLowerSet d_alpha(const Alpha3Shape& s) {
  const auto [a1, a2, a3] = s.a;
  std::vector<Rectangle> rs;
  rs.push_back({{Extent(a1), kOmega, kOmega}});
  rs.push_back({{kOmega, Extent(a2), kOmega}});
  rs.push_back({{kOmega, kOmega, Extent(a3)}});

  // Sides the corner staircase has to clear on each axis.
  Coord m1 = a1, m2 = a2, m3 = a3;
  Coord cum = a2;
  for (const auto& t : s.xy) {
    cum += t.coeff;
    rs.push_back({{Extent(a1 + t.offset + 1), Extent(cum), kOmega}});
    m1 = std::max(m1, a1 + t.offset + 1);
    m2 = std::max(m2, cum);
  }
  cum = a3;
  for (const auto& t : s.xz) {
    cum += t.coeff;
    rs.push_back({{Extent(a1 + t.offset + 1), kOmega, Extent(cum)}});
    m1 = std::max(m1, a1 + t.offset + 1);
    m3 = std::max(m3, cum);
  }
  cum = a3;
  for (const auto& t : s.yz) {
    cum += t.coeff;
    rs.push_back({{kOmega, Extent(a2 + t.offset + 1), Extent(cum)}});
    m2 = std::max(m2, a2 + t.offset + 1);
    m3 = std::max(m3, cum);
  }
  cum = m3;
  for (const auto& t : s.corners) {
    cum += t.j;
    rs.push_back({{Extent(m1 + t.h + 1), Extent(m2 + t.i + 1), Extent(cum)}});
  }
  return GeneralLowerSet(3, std::move(rs));
}

// ---------------------------------------------------------------------------
// Measures shared by both dimensions

/// Largest finite side over the boxes of d (w counts as 0).
inline Coord measure_M(const GeneralLowerSet& d) {
  Coord m = 0;
  for (const auto& r : d.rects())
    for (Extent e : r.extents)
      if (!e.is_omega()) m = std::max(m, e.value());
  return m;
}

/// N of alpha read as a shape of dimension m.
inline Coord measure_N(unsigned m, const Ordinal& alpha) {
  return m == 2 ? measure_N(shape2_of(alpha)) : measure_N(shape3_of(alpha));
}

inline GeneralLowerSet d_alpha(unsigned m, const Ordinal& alpha) {
  return m == 2 ? d_alpha(shape2_of(alpha)) : d_alpha(shape3_of(alpha));
}

// ---------------------------------------------------------------------------
// Generation

struct BadSequenceRecord {
  std::uint64_t index = 0;
  Ordinal alpha;
  GeneralLowerSet d;
  Coord measure_n = 0;
  Coord measure_m = 0;
  MonomialIdeal ideal;
  Coord degree = 0;
  Coord bound = 0;  // (K + index)^2
};

inline Coord index_bound(Coord base, std::uint64_t index) { return (base + index) * (base + index); }

inline BadSequenceRecord make_record(unsigned m, Coord base, std::uint64_t index, Ordinal alpha) {
  BadSequenceRecord r;
  r.index = index;
  r.d = d_alpha(m, alpha);
  r.measure_n = measure_N(m, alpha);
  r.measure_m = measure_M(r.d);
  r.ideal = ideal_from_lowerset(r.d);
  r.degree = degree(r.ideal);
  r.bound = index_bound(base, index);
  r.alpha = std::move(alpha);
  return r;
}

struct BadSequenceRun {
  unsigned m = 2;
  Coord base = 0;
  std::uint64_t limit = 0;
  std::uint64_t seed = 0;
  std::vector<BadSequenceRecord> records;

  Ordinal start() const { return top_ordinal(m); }
  /// alpha_0, alpha_1, ..., alpha_n: the start followed by the recorded ordinals.
  std::vector<Ordinal> ordinals() const {
    std::vector<Ordinal> out{start()};
    for (const auto& r : records) out.push_back(r.alpha);
    return out;
  }
  std::vector<GeneralLowerSet> sets() const {
    std::vector<GeneralLowerSet> out;
    for (const auto& r : records) out.push_back(r.d);
    return out;
  }
  /// The length guaranteed for the full sequence, H_{alpha_0}(K) - K.
  std::string length_bound() const {
    return "H_{" + format_ordinal(start()) + "}(" + std::to_string(base) + ")-" + std::to_string(base);
  }
};

/// Records i = 1..limit for alpha_i, where alpha_0 is the top ordinal and
/// alpha_i is one Hardy rewrite of alpha_{i-1} at argument K + i - 1
/// (lambda -> lambda[K+i-1] for limits, predecessor for successors). Stops
/// early after recording alpha_i = 0.
inline BadSequenceRun generate(unsigned m, Coord base, std::uint64_t limit) {
  if (m != 2 && m != 3) throw std::invalid_argument("bad sequences are built for m = 2 or 3");
  if (base < 1) throw std::invalid_argument("base K must be at least 1");
  BadSequenceRun run{m, base, limit, 0, {}};
  Ordinal alpha = top_ordinal(m);
  std::uint64_t x = base;
  for (std::uint64_t i = 1; i <= limit && !alpha.is_zero(); ++i) {
    std::tie(alpha, x) = hardy_step(alpha, x);
    run.records.push_back(make_record(m, base, i, alpha));
  }
  return run;
}

// ---------------------------------------------------------------------------
// Pairwise verification

/// Worker threads for pairwise checks: WPO_THREADS when set, else the core count.
inline unsigned verification_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WPO_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) n = static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return n;
}

struct BadnessReport {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  /// Smallest (i, j), 0-based, with i < j and seq[i] a subset of seq[j].
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;

  bool ok() const { return violations == 0; }
};

/// Checks that no earlier set is contained in a later one.
inline BadnessReport verify_bad(const std::vector<GeneralLowerSet>& seq, unsigned threads = verification_threads()) {
  const std::size_t n = seq.size();
  for (const auto& d : seq) detail::require_dim(d.dim(), seq.front().dim(), "verify_bad");
  BadnessReport rep;
  rep.pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto work = [&] {
    std::uint64_t local = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t i; (i = next.fetch_add(1)) < n;)
      for (std::size_t j = i + 1; j < n; ++j)
        if (includes(seq[j], seq[i])) {
          ++local;
          if (!first || std::pair{i, j} < *first) first = std::pair{i, j};
        }
    std::lock_guard lock(mu);
    rep.violations += local;
    if (first && (!rep.first_violation || *first < *rep.first_violation)) rep.first_violation = first;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return rep;
}

}  // namespace wpo
