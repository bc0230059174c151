// Property suites that cross-check the library against brute force.
//
// Each suite returns an OracleReport counting the individual checks it made
// and the ones that failed, with a short description of the first few
// failures. Randomized suites draw from a seeded mt19937_64, so a report is
// reproducible from its options.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/badseq.hpp"
#include "wpo/decomposition.hpp"
#include "wpo/enumerate.hpp"
#include "wpo/linearize.hpp"
#include "wpo/lowerset.hpp"
#include "wpo/monomial.hpp"
#include "wpo/ordinal.hpp"
#include "wpo/ordinal_io.hpp"
#include "wpo/text.hpp"

namespace wpo {

struct OracleReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::uint64_t pairs = 0;  // ordered pairs of sets compared, where the suite has them
  std::vector<std::string> failures;  // first few only
  double seconds = 0;

  bool ok() const { return violations == 0; }

  void check(bool good, const std::function<std::string()>& what) {
    ++checks;
    if (good) return;
    if (violations++ < 8) failures.push_back(what());
  }
  void merge(const OracleReport& other) {
    checks += other.checks;
    violations += other.violations;
    pairs += other.pairs;
    for (const auto& f : other.failures)
      if (failures.size() < 8) failures.push_back(f);
  }
};

struct OracleOptions {
  std::vector<Coord> box{4, 4};
  std::size_t m = 2;
  std::uint64_t pairs = 1000;
  std::uint64_t seed = 1;
};

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Random generators

namespace detail {

inline Coord uniform(Rng& rng, Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// An ordinal below w^(w^3): up to four terms whose exponents are
/// w^2*c2 + w*c1 + c0 with small coefficients.
inline Ordinal random_ordinal(Rng& rng) {
  Ordinal out;
  const auto terms = detail::uniform(rng, 0, 4);
  for (Coord t = 0; t < terms; ++t) {
    std::vector<Ordinal::Term> e;
    for (Coord k = 3; k-- > 0;)
      if (Coord c = detail::uniform(rng, 0, 3)) e.push_back({Ordinal(k), Natural(c)});
    out = natural_sum(out, Ordinal::monomial(Ordinal::from_terms(std::move(e)), Natural(detail::uniform(rng, 1, 5))));
  }
  return out;
}

/// A random ordinal with nested exponents of height up to `height`.
inline Ordinal random_tower(Rng& rng, unsigned height) {
  if (height == 0) return Ordinal(detail::uniform(rng, 0, 6));
  Ordinal out;
  const auto terms = detail::uniform(rng, 1, 3);
  for (Coord t = 0; t < terms; ++t)
    out = natural_sum(out, Ordinal::monomial(random_tower(rng, height - 1), Natural(detail::uniform(rng, 1, 4))));
  return out;
}

/// A limit ordinal: a random prefix followed by w^e*c with e >= 1.
inline Ordinal random_limit(Rng& rng) {
  const unsigned height = static_cast<unsigned>(detail::uniform(rng, 1, 3));
  Ordinal e = add(random_tower(rng, height - 1), 1);
  return add(random_tower(rng, height), Ordinal::monomial(e, Natural(detail::uniform(rng, 1, 4))));
}

inline Alpha2Shape random_shape2(Rng& rng) {
  Alpha2Shape s;
  s.p = detail::uniform(rng, 0, 2);
  s.q = detail::uniform(rng, 0, 3);
  Coord e = detail::uniform(rng, 1, 6);
  while (e > 0 && detail::uniform(rng, 0, 2)) {
    e = detail::uniform(rng, 0, e - 1);
    s.terms.push_back({e, detail::uniform(rng, 1, 4)});
  }
  return s;
}

inline Alpha3Shape random_shape3(Rng& rng) {
  Alpha3Shape s;
  for (auto& a : s.a) a = detail::uniform(rng, 0, 2);
  for (auto* face : {&s.xy, &s.xz, &s.yz}) {
    Coord e = detail::uniform(rng, 1, 4);
    while (e > 0 && detail::uniform(rng, 0, 1)) {
      e = detail::uniform(rng, 0, e - 1);
      face->push_back({e, detail::uniform(rng, 1, 3)});
    }
  }
  Coord h = detail::uniform(rng, 0, 3), i = detail::uniform(rng, 1, 4);
  for (Coord n = detail::uniform(rng, 0, 3); n > 0; --n) {
    if (i == 0) {
      if (h == 0) break;
      --h;
      i = detail::uniform(rng, 1, 5);
    }
    i = detail::uniform(rng, 0, i - 1);
    s.corners.push_back({h, i, detail::uniform(rng, 1, 3)});
  }
  return s;
}

/// Union of 1..max_rects boxes with sides in {0..max_side, w}.
inline GeneralLowerSet random_lowerset(Rng& rng, std::size_t m, std::size_t max_rects = 3, Coord max_side = 4) {
  std::vector<Rectangle> rs;
  for (auto n = detail::uniform(rng, 1, max_rects); n > 0; --n) {
    Rectangle r;
    for (std::size_t i = 0; i < m; ++i) {
      Coord v = detail::uniform(rng, 0, max_side + 1);
      r.extents.push_back(v > max_side ? kOmega : Extent(v));
    }
    rs.push_back(std::move(r));
  }
  return GeneralLowerSet(m, std::move(rs));
}

inline MonomialIdeal random_ideal(Rng& rng, std::size_t m, Coord max_exp = 6) {
  std::vector<Monomial> gens;
  for (auto n = detail::uniform(rng, 0, 4); n > 0; --n) {
    Monomial g{std::vector<Coord>(m)};
    for (auto& e : g.exponents) e = detail::uniform(rng, 0, max_exp);
    gens.push_back(std::move(g));
  }
  return minimalize(std::move(gens), m);
}

// ---------------------------------------------------------------------------
// Grid helpers

namespace detail {

/// 1 + the largest finite side among the boxes of the given sets.
inline Coord grid_side(std::initializer_list<const GeneralLowerSet*> sets) {
  Coord b = 0;
  for (const auto* s : sets)
    for (const auto& r : s->rects())
      for (Extent e : r.extents)
        if (!e.is_omega()) b = std::max(b, e.value());
  return b + 1;
}

/// Visits {0..side}^m.
inline void for_each_grid_point(std::size_t m, Coord side, const std::function<void(const Point&)>& visit) {
  Point p(m, 0);
  while (true) {
    visit(p);
    std::size_t i = m;
    while (i > 0 && ++p[i - 1] > side) p[--i] = 0;
    if (i == 0) return;
  }
}

/// T subset of S, decided point by point on a grid that every side fits in.
inline bool grid_includes(const GeneralLowerSet& s, const GeneralLowerSet& t) {
  bool ok = true;
  for_each_grid_point(s.dim(), grid_side({&s, &t}), [&](const Point& p) {
    if (ok && contains(t, p) && !contains(s, p)) ok = false;
  });
  return ok;
}

inline bool grid_same(const GeneralLowerSet& s, const GeneralLowerSet& t) {
  return grid_includes(s, t) && grid_includes(t, s);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

/// ord is monotone over all pairs of lower sets in the box, stays below the
/// type of D(N^m), and the (0,1) versus {(0,1),(1,0)} tie in N^2 holds.
inline OracleReport oracle_monotone(const OracleOptions& opt) {
  detail::Stopwatch sw;
  OracleReport rep;
  rep.suite = "monotone";
  const auto mono = check_monotone(opt.box);
  rep.checks += mono.pairs;
  rep.pairs = mono.pairs;
  rep.violations += mono.violations;
  if (mono.counterexample)
    rep.failures.push_back("ord(" + to_text(mono.counterexample->first) + ") > ord(" +
                           to_text(mono.counterexample->second) + ")");

  const Ordinal ceiling = type_of_D(opt.box.size());
  for (const auto& f : enumerate_fls(opt.box))
    rep.check(ord(f) < ceiling, [&] { return "ord(" + to_text(f) + ") is not below " + format_ordinal(ceiling); });

  const auto one = closure({{0, 1}}, 2);
  const auto two = closure({{0, 1}, {1, 0}}, 2);
  rep.check(ord(one) == Ordinal(2) && ord(two) == Ordinal(2),
            [&] { return "ord tie in N^2: " + format_ordinal(ord(one)) + " vs " + format_ordinal(ord(two)); });
  rep.seconds = sw.seconds();
  return rep;
}

/// Box-based inclusion against grid membership on random pairs, canonical
/// form idempotence, and the finite round trip on enumerated sets.
inline OracleReport oracle_inclusion(const OracleOptions& opt) {
  detail::Stopwatch sw;
  OracleReport rep;
  rep.suite = "inclusion";
  Rng rng(opt.seed);
  for (std::uint64_t k = 0; k < opt.pairs; ++k) {
    auto s = random_lowerset(rng, opt.m);
    auto t = detail::uniform(rng, 0, 3) == 0 ? intersect(s, random_lowerset(rng, opt.m)) : random_lowerset(rng, opt.m);
    rep.check(includes(s, t) == detail::grid_includes(s, t),
              [&] { return "includes(" + to_text(s) + ", " + to_text(t) + ") disagrees with the grid"; });
    rep.check(canonicalize(s) == s, [&] { return "canonicalize not idempotent on " + to_text(s); });
    rep.check(detail::grid_same(unite(s, t), s) == includes(s, t),
              [&] { return "union law fails for " + to_text(s) + ", " + to_text(t); });
  }
  std::vector<Coord> box = opt.m == 2 ? std::vector<Coord>{4, 4} : std::vector<Coord>(opt.m, 3);
  for (const auto& f : enumerate_fls(box)) {
    auto g = from_finite(f);
    auto back = to_finite(g);
    rep.check(back && *back == f, [&] { return "to_finite(from_finite(" + to_text(f) + ")) differs"; });
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// phi_compose inverts phi_preimage, is monotone in its parts and never
/// produces the whole space.
inline OracleReport oracle_phi(const OracleOptions& opt) {
  detail::Stopwatch sw;
  OracleReport rep;
  rep.suite = "phi";
  Rng rng(opt.seed);
  const std::size_t m = opt.m;

  auto round_trip = [&](const GeneralLowerSet& t) {
    if (!is_proper(t)) return;
    auto back = phi_compose(phi_preimage(t), m);
    rep.check(same_set(back, t), [&] { return "phi round trip changes " + to_text(t); });
  };
  if (m == 2) {
    for (const auto& t : enumerate_gls(2, {1, 2, 3, kOmega}, 2)) round_trip(t);
  } else {
    for (std::uint64_t k = 0; k < 200; ++k) round_trip(random_lowerset(rng, m, 3, 3));
  }

  const auto keys = nonempty_subsets(m);
  auto random_part = [&](std::size_t d) {
    std::vector<Point> pts;
    for (auto n = detail::uniform(rng, 0, 2); n > 0; --n) {
      Point p(d);
      for (auto& x : p) x = detail::uniform(rng, 0, 3);
      pts.push_back(std::move(p));
    }
    return closure(std::move(pts), d);
  };
  const std::uint64_t samples = std::max<std::uint64_t>(opt.pairs, 1);
  for (std::uint64_t k = 0; k < samples; ++k) {
    PhiParts small, large;
    for (CoordSet c : keys) {
      auto f = random_part(c.size());
      small.emplace(c, f);
      large.emplace(c, unite(f, random_part(c.size())));
    }
    auto a = phi_compose(small, m), b = phi_compose(large, m);
    rep.check(includes(b, a), [&] { return "phi_compose not monotone: " + to_text(a) + " vs " + to_text(b); });
    rep.check(is_proper(a) && is_proper(b), [&] { return "phi_compose produced the full space"; });
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// Complement law, antitonicity, lcm intersection and degree envelope.
inline OracleReport oracle_ideal(const OracleOptions& opt) {
  detail::Stopwatch sw;
  OracleReport rep;
  rep.suite = "ideal";
  Rng rng(opt.seed);

  std::vector<GeneralLowerSet> pool = enumerate_gls(2, {1, 2, kOmega}, 2);
  for (const auto& s : enumerate_gls(3, {1, 2, kOmega}, 1)) pool.push_back(s);
  for (const auto& r : generate(2, 2, 60).records) pool.push_back(r.d);
  for (const auto& r : generate(3, 2, 40).records) pool.push_back(r.d);
  std::vector<MonomialIdeal> ideals;
  for (const auto& d : pool) ideals.push_back(ideal_from_lowerset(d));

  // Membership law on sampled grid points, biased toward each set's grid.
  for (int k = 0; k < 10000; ++k) {
    const auto idx = detail::uniform(rng, 0, pool.size() - 1);
    const auto& d = pool[idx];
    const Coord side = detail::grid_side({&d});
    Point x(d.dim());
    for (auto& v : x) v = detail::uniform(rng, 0, side);
    rep.check(contains(d, x) != contains(ideals[idx], Monomial{x}),
              [&] { return "membership law fails for " + to_text(d) + " at " + detail::tuple_text(x); });
  }
  for (std::size_t k = 0; k < pool.size(); ++k) {
    rep.check(same_set(lowerset_from_ideal(ideals[k]), pool[k]),
              [&] { return "ideal round trip changes " + to_text(pool[k]); });
    if (!ideals[k].is_zero())
      rep.check(degree(ideals[k]) <= pool[k].dim() * (measure_M(pool[k]) + 1),
                [&] { return "degree envelope fails for " + to_text(pool[k]); });
  }

  // Antitonicity on every ordered pair of the m = 2 enumeration.
  const auto flat = enumerate_gls(2, {1, 2, kOmega}, 2);
  std::vector<MonomialIdeal> flat_ideals;
  for (const auto& d : flat) flat_ideals.push_back(ideal_from_lowerset(d));
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = 0; j < flat.size(); ++j)
      rep.check(includes(flat[j], flat[i]) == includes(flat_ideals[i], flat_ideals[j]),
                [&] { return "antitonicity fails for " + to_text(flat[i]) + ", " + to_text(flat[j]); });

  // Intersection against membership for all monomials of degree <= 12.
  for (std::uint64_t k = 0; k < opt.pairs; ++k) {
    const std::size_t m = k % 2 ? 3 : 2;
    auto i = random_ideal(rng, m), j = random_ideal(rng, m);
    auto both = intersect(i, j);
    bool good = true;
    detail::for_each_grid_point(m, 12, [&](const Point& x) {
      Monomial u{x};
      if (good && u.degree() <= 12 && contains(both, u) != (contains(i, u) && contains(j, u))) good = false;
    });
    rep.check(good, [&] { return "intersection of " + to_text(i) + " and " + to_text(j) + " is wrong"; });
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// The trivial and full specifications validate, every proper set is
/// compatible with the trivial one, and each full specification singles out
/// exactly the set it came from.
inline OracleReport oracle_spec(const OracleOptions& opt) {
  detail::Stopwatch sw;
  OracleReport rep;
  rep.suite = "spec";
  const std::size_t m = opt.m;
  std::vector<GeneralLowerSet> proper;
  const std::vector<Extent> menu = m == 2 ? std::vector<Extent>{1, 2, 3, kOmega} : std::vector<Extent>{1, 2, kOmega};
  for (const auto& s : enumerate_gls(m, menu, 2))
    if (is_proper(s)) proper.push_back(s);

  const auto trivial = trivial_spec(m);
  rep.check(validate_spec(trivial).ok(), [] { return "trivial specification rejected"; });
  for (const auto& s : proper) {
    rep.check(is_compatible(s, trivial), [&] { return to_text(s) + " incompatible with the trivial spec"; });
    const auto full = full_spec(s);
    const auto v = validate_spec(full);
    rep.check(v.ok(), [&] { return "full spec of " + to_text(s) + " rejected: " + v.violations.front(); });
    std::size_t matches = 0;
    for (const auto& t : proper) matches += is_compatible(t, full);
    rep.check(matches == 1, [&] {
      return "full spec of " + to_text(s) + " has " + std::to_string(matches) + " compatible sets";
    });
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline const std::vector<std::string>& oracle_suites() {
  static const std::vector<std::string> names{"monotone", "phi", "inclusion", "ideal", "spec"};
  return names;
}

inline OracleReport run_oracle(const std::string& suite, const OracleOptions& opt) {
  if (suite == "monotone") return oracle_monotone(opt);
  if (suite == "phi") return oracle_phi(opt);
  if (suite == "inclusion") return oracle_inclusion(opt);
  if (suite == "ideal") return oracle_ideal(opt);
  if (suite == "spec") return oracle_spec(opt);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace wpo
