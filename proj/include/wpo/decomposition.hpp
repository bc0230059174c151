// Coordinate projections of lower sets and the decomposition of proper lower
// sets of N^m into bounded lower sets of the coordinate subspaces N^C.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/lowerset.hpp"
#include "wpo/monomial.hpp"

namespace wpo {

/// A subset of the coordinates {0, ..., m-1}, m <= 32.
class CoordSet {
 public:
  constexpr CoordSet() = default;
  static constexpr CoordSet from_mask(std::uint32_t mask) {
    CoordSet c;
    c.mask_ = mask;
    return c;
  }
  static CoordSet of(std::initializer_list<std::size_t> coords) {
    CoordSet c;
    for (auto i : coords) c = c.with(i);
    return c;
  }
  static CoordSet all(std::size_t m) {
    check_index(m == 0 ? 0 : m - 1);
    return from_mask(m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool has(std::size_t i) const { return i < 32 && ((mask_ >> i) & 1u) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool subset_of(CoordSet other) const { return (mask_ & ~other.mask_) == 0; }
  CoordSet with(std::size_t i) const {
    check_index(i);
    return from_mask(mask_ | (std::uint32_t{1} << i));
  }
  CoordSet without(std::size_t i) const {
    check_index(i);
    return from_mask(mask_ & ~(std::uint32_t{1} << i));
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
      if (has(i)) out.push_back(i);
    return out;
  }
  /// Position of this set inside `outer` when outer's members are renumbered 0, 1, ...
  CoordSet relative_to(CoordSet outer) const {
    if (!subset_of(outer)) throw std::invalid_argument("relative_to: not a subset");
    CoordSet r;
    std::size_t k = 0;
    for (auto i : outer.members()) {
      if (has(i)) r = r.with(k);
      ++k;
    }
    return r;
  }

  friend constexpr auto operator<=>(CoordSet, CoordSet) = default;

 private:
  static void check_index(std::size_t i) {
    if (i >= 32) throw std::out_of_range("coordinate index must be below 32");
  }
  std::uint32_t mask_ = 0;
};

namespace detail {

inline void require_within(CoordSet c, std::size_t m, const char* what) {
  if (!c.subset_of(CoordSet::all(m)))
    throw std::out_of_range(std::string(what) + ": coordinate set exceeds dimension");
}

}  // namespace detail

/// Image of s under deletion of the coordinates outside c.
inline GeneralLowerSet project(const GeneralLowerSet& s, CoordSet c) {
  if (c.empty()) throw std::invalid_argument("project: empty coordinate set");
  detail::require_within(c, s.dim(), "project");
  const auto keep = c.members();
  std::vector<Rectangle> rs;
  for (const auto& r : s.rects()) {
    Rectangle p;
    for (auto i : keep) p.extents.push_back(r.extents[i]);
    rs.push_back(std::move(p));
  }
  return GeneralLowerSet(keep.size(), std::move(rs));
}

/// Cylinder over s_c: every box gets side w on the coordinates outside c.
inline GeneralLowerSet preimage(const GeneralLowerSet& s_c, CoordSet c, std::size_t m) {
  detail::require_within(c, m, "preimage");
  detail::require_dim(s_c.dim(), c.size(), "preimage");
  const auto keep = c.members();
  std::vector<Rectangle> rs;
  for (const auto& r : s_c.rects()) {
    Rectangle q{std::vector<Extent>(m, kOmega)};
    for (std::size_t k = 0; k < keep.size(); ++k) q.extents[keep[k]] = r.extents[k];
    rs.push_back(std::move(q));
  }
  return GeneralLowerSet(m, std::move(rs));
}

/// Points p of N^c whose whole fiber lies in s. Computed as the complement
/// of the projected complement, so it is exact for unbounded s. An empty c
/// yields the one-point space when s is everything and the empty set otherwise.
inline GeneralLowerSet intersection_image(const GeneralLowerSet& s, CoordSet c) {
  detail::require_within(c, s.dim(), "intersection_image");
  const auto keep = c.members();
  const MonomialIdeal outside = ideal_from_lowerset(s);
  std::vector<Monomial> projected;
  for (const auto& g : outside.generators()) {
    Monomial p;
    for (auto i : keep) p.exponents.push_back(g.exponents[i]);
    projected.push_back(std::move(p));
  }
  return lowerset_from_ideal(minimalize(std::move(projected), keep.size()));
}

/// Nonempty subsets of {0..m-1} in mask order.
inline std::vector<CoordSet> nonempty_subsets(std::size_t m) {
  std::vector<CoordSet> out;
  const std::uint32_t top = CoordSet::all(m).mask();
  for (std::uint32_t mask = 1; mask != 0 && mask <= top; ++mask) out.push_back(CoordSet::from_mask(mask));
  return out;
}

using PhiParts = std::map<CoordSet, FiniteLowerSet>;

/// Union over nonempty c of the cylinders over parts[c]. The result is always
/// a proper lower set of N^m.
inline GeneralLowerSet phi_compose(const PhiParts& parts, std::size_t m) {
  GeneralLowerSet acc(m);
  for (CoordSet c : nonempty_subsets(m)) {
    auto it = parts.find(c);
    if (it == parts.end()) throw std::invalid_argument("phi_compose: missing part for a coordinate set");
    detail::require_dim(it->second.dim(), c.size(), "phi_compose");
    acc = unite(acc, preimage(from_finite(it->second), c, m));
  }
  if (parts.size() != nonempty_subsets(m).size())
    throw std::invalid_argument("phi_compose: part keyed by an invalid coordinate set");
  return acc;
}

/// As above for parts held as general lower sets; unbounded parts are rejected.
inline GeneralLowerSet phi_compose(const std::map<CoordSet, GeneralLowerSet>& parts, std::size_t m) {
  PhiParts bounded;
  for (const auto& [c, s] : parts) {
    auto f = to_finite(s);
    if (!f) throw std::invalid_argument("phi_compose: unbounded part");
    bounded.emplace(c, std::move(*f));
  }
  return phi_compose(bounded, m);
}

/// A part tuple that phi_compose maps back onto t: each box goes, as its
/// projection onto its finite sides C0, into part C0.
inline PhiParts phi_preimage(const GeneralLowerSet& t) {
  const std::size_t m = t.dim();
  PhiParts parts;
  for (CoordSet c : nonempty_subsets(m)) parts.emplace(c, FiniteLowerSet(c.size()));
  for (const auto& r : t.rects()) {
    CoordSet c0;
    Point corner;
    for (std::size_t i = 0; i < m; ++i) {
      if (r.extents[i].is_omega()) continue;
      c0 = c0.with(i);
      corner.push_back(r.extents[i].value() - 1);
    }
    if (c0.empty()) throw std::invalid_argument("phi_preimage: the full space has no preimage");
    auto& part = parts.at(c0);
    part = unite(part, closure({corner}, c0.size()));
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Partial specifications

/// Proper lower sets X_C assigned to a graded down-closed family of
/// coordinate sets C (the domain), coherent under intersection images.
struct PartialSpecification {
  std::size_t dim = 1;
  std::map<CoordSet, GeneralLowerSet> assignment;
};

struct SpecReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline std::string describe(CoordSet c) {
  std::string s = "{";
  for (auto i : c.members()) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  return s + "}";
}

inline SpecReport validate_spec(const PartialSpecification& p) {
  SpecReport rep;
  auto& v = rep.violations;
  const auto& a = p.assignment;
  if (a.empty()) v.push_back("domain is empty");
  std::size_t largest = 0;
  for (const auto& [c, x] : a) {
    if (!c.subset_of(CoordSet::all(p.dim))) {
      v.push_back("domain member " + describe(c) + " exceeds dimension");
      continue;
    }
    largest = std::max(largest, c.size());
    for (auto i : c.members())
      if (!a.contains(c.without(i))) v.push_back("domain not closed under subsets at " + describe(c));
    if (x.dim() != c.size())
      v.push_back("X" + describe(c) + " has the wrong dimension");
    else if (!is_proper(x))
      v.push_back("X" + describe(c) + " is not proper");
  }
  for (std::uint32_t mask = 0; mask <= CoordSet::all(p.dim).mask(); ++mask) {
    CoordSet c = CoordSet::from_mask(mask);
    if (c.size() < largest && !a.contains(c)) v.push_back("domain not graded: missing " + describe(c));
    if (mask == CoordSet::all(p.dim).mask()) break;
  }
  if (!v.empty()) return rep;
  for (const auto& [c, xc] : a)
    for (const auto& [d, xd] : a) {
      if (d == c || !d.subset_of(c)) continue;
      if (!same_set(xd, intersection_image(xc, d.relative_to(c))))
        v.push_back("X" + describe(d) + " is not the intersection image of X" + describe(c));
    }
  return rep;
}

/// s is proper and its intersection image on every domain member c equals X_c.
inline bool is_compatible(const GeneralLowerSet& s, const PartialSpecification& p) {
  detail::require_dim(s.dim(), p.dim, "is_compatible");
  if (!is_proper(s)) return false;
  for (const auto& [c, x] : p.assignment)
    if (!same_set(intersection_image(s, c), x)) return false;
  return true;
}

/// The specification on the domain {empty set}; every proper lower set is compatible with it.
inline PartialSpecification trivial_spec(std::size_t m) {
  return PartialSpecification{m, {{CoordSet{}, GeneralLowerSet(0)}}};
}

/// The specification on the full power set read off from s.
inline PartialSpecification full_spec(const GeneralLowerSet& s) {
  PartialSpecification p{s.dim(), {}};
  for (std::uint32_t mask = 0;; ++mask) {
    CoordSet c = CoordSet::from_mask(mask);
    p.assignment.emplace(c, intersection_image(s, c));
    if (mask == CoordSet::all(s.dim()).mask()) break;
  }
  return p;
}

}  // namespace wpo
