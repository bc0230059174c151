// Monomial ideals as upper sets of exponent vectors.
//
// No field coefficients are represented: an ideal is its minimal generating
// set of exponent vectors. The complement of a lower set of N^m is an upper
// set, and that correspondence is order-reversing.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpo/lowerset.hpp"

namespace wpo {

struct Monomial {
  std::vector<Coord> exponents;

  std::size_t dim() const { return exponents.size(); }
  Coord degree() const { return std::accumulate(exponents.begin(), exponents.end(), Coord{0}); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Componentwise <=.
inline bool divides(const Monomial& a, const Monomial& b) { return detail::leq(a.exponents, b.exponents); }

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial c{std::vector<Coord>(a.dim())};
  for (std::size_t i = 0; i < a.dim(); ++i) c.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return c;
}

class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(std::size_t dim = 1) : dim_(dim) {}

  /// Keeps only generators not divisible by another generator.
  static MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t dim) {
    for (const auto& g : gens) detail::require_dim(g.dim(), dim, "minimalize");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal out(dim);
    for (auto& g : gens) {
      // Sorted by degree, so only earlier generators can divide g.
      bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                   [&](const Monomial& h) { return divides(h, g); });
      if (!redundant) out.gens_.push_back(std::move(g));
    }
    std::sort(out.gens_.begin(), out.gens_.end());
    return out;
  }

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(std::size_t dim) {
    return minimalize({Monomial{std::vector<Coord>(dim, 0)}}, dim);
  }

  std::size_t dim() const { return dim_; }
  /// Minimal generators in lexicographic order.
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t dim_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t dim) {
  return MonomialIdeal::minimalize(std::move(gens), dim);
}

inline bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  detail::require_dim(u.dim(), ideal.dim(), "contains");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

/// True iff j is contained in i.
inline bool includes(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_dim(j.dim(), i.dim(), "includes");
  return std::all_of(j.generators().begin(), j.generators().end(),
                     [&](const Monomial& g) { return contains(i, g); });
}

/// Generators of the intersection are the lcms of generator pairs.
inline MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_dim(j.dim(), i.dim(), "intersect");
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size() * j.generators().size());
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) gens.push_back(lcm(a, b));
  return minimalize(std::move(gens), i.dim());
}

/// Intersection of all ideals in `ideals`; the unit ideal when there are none.
inline MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals, std::size_t dim) {
  MonomialIdeal acc = MonomialIdeal::unit(dim);
  for (const auto& i : ideals) acc = intersect(acc, i);
  return acc;
}

/// Maximum total degree of a minimal generator. Undefined for the zero ideal.
inline Coord degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("degree of the zero ideal is undefined");
  Coord d = 0;
  for (const auto& g : ideal.generators()) d = std::max(d, g.degree());
  return d;
}

/// The ideal of monomials whose exponent vectors lie outside `d`.
///
/// The complement of a box b_1 x ... x b_m is generated by the pure powers
/// X_t^{b_t} over its finite sides; the complement of a union of boxes is the
/// intersection of those ideals.
inline MonomialIdeal ideal_from_lowerset(const GeneralLowerSet& d) {
  const std::size_t m = d.dim();
  MonomialIdeal acc = MonomialIdeal::unit(m);
  for (const auto& r : d.rects()) {
    std::vector<Monomial> gens;
    for (std::size_t t = 0; t < m; ++t) {
      if (r.extents[t].is_omega()) continue;
      Monomial g{std::vector<Coord>(m, 0)};
      g.exponents[t] = r.extents[t].value();
      gens.push_back(std::move(g));
    }
    acc = intersect(acc, minimalize(std::move(gens), m));
    if (acc.is_zero()) break;
  }
  return acc;
}

/// The lower set of exponent vectors outside `ideal`: for each generator g,
/// the union of the slabs {x : x_t < g_t}, intersected over all generators.
inline GeneralLowerSet lowerset_from_ideal(const MonomialIdeal& ideal) {
  const std::size_t m = ideal.dim();
  GeneralLowerSet acc = GeneralLowerSet::full(m);
  for (const auto& g : ideal.generators()) {
    std::vector<Rectangle> slabs;
    for (std::size_t t = 0; t < m; ++t) {
      if (g.exponents[t] == 0) continue;
      Rectangle r{std::vector<Extent>(m, kOmega)};
      r.extents[t] = Extent(g.exponents[t]);
      slabs.push_back(std::move(r));
    }
    acc = intersect(acc, GeneralLowerSet(m, std::move(slabs)));
    if (acc.empty()) break;
  }
  return acc;
}

}  // namespace wpo
