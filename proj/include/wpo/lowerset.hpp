// Lower sets of N^m.
//
// FiniteLowerSet holds a bounded lower set as the antichain of its maximal
// points. GeneralLowerSet holds an arbitrary lower set as an irredundant union
// of down-closed boxes whose sides are naturals or w.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpo {

using Coord = std::uint64_t;
using Point = std::vector<Coord>;

class dimension_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_dim(std::size_t have, std::size_t want, const char* what) {
  if (have != want)
    throw dimension_mismatch(std::string(what) + ": dimension " + std::to_string(have) +
                             " where " + std::to_string(want) + " was expected");
}

inline bool leq(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Maximal elements of a point set, sorted and duplicate-free.
inline std::vector<Point> maximal_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      dominated = j != i && leq(pts[i], pts[j]);
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bounded lower sets

class FiniteLowerSet {
 public:
  explicit FiniteLowerSet(std::size_t dim = 1) : dim_(dim) {}

  /// Downward closure of `points`; keeps only the maximal ones.
  static FiniteLowerSet closure(std::vector<Point> points, std::size_t dim) {
    for (const auto& p : points) detail::require_dim(p.size(), dim, "closure");
    FiniteLowerSet f(dim);
    f.gens_ = detail::maximal_points(std::move(points));
    return f;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  friend bool operator==(const FiniteLowerSet&, const FiniteLowerSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Point> gens_;  // sorted antichain
};

inline FiniteLowerSet closure(std::vector<Point> points, std::size_t dim) {
  return FiniteLowerSet::closure(std::move(points), dim);
}

inline bool contains(const FiniteLowerSet& f, const Point& p) {
  detail::require_dim(p.size(), f.dim(), "contains");
  return std::any_of(f.generators().begin(), f.generators().end(),
                     [&](const Point& g) { return detail::leq(p, g); });
}

/// True iff g is a subset of f.
inline bool includes(const FiniteLowerSet& f, const FiniteLowerSet& g) {
  detail::require_dim(g.dim(), f.dim(), "includes");
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Point& p) { return contains(f, p); });
}

inline FiniteLowerSet unite(const FiniteLowerSet& f, const FiniteLowerSet& g) {
  detail::require_dim(g.dim(), f.dim(), "unite");
  std::vector<Point> pts = f.generators();
  pts.insert(pts.end(), g.generators().begin(), g.generators().end());
  return closure(std::move(pts), f.dim());
}

/// Generators of the intersection are the componentwise minima of generator pairs.
inline FiniteLowerSet intersect(const FiniteLowerSet& f, const FiniteLowerSet& g) {
  detail::require_dim(g.dim(), f.dim(), "intersect");
  std::vector<Point> pts;
  for (const auto& a : f.generators())
    for (const auto& b : g.generators()) {
      Point c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::min(a[i], b[i]);
      pts.push_back(std::move(c));
    }
  return closure(std::move(pts), f.dim());
}

// ---------------------------------------------------------------------------
// Boxes with natural or infinite sides

/// Side length of a box: a natural b (coordinates < b) or w (unbounded).
class Extent {
 public:
  constexpr Extent() = default;
  constexpr Extent(Coord b) : v_(b) {  // NOLINT(google-explicit-constructor)
    if (b == kOmegaTag) throw std::out_of_range("extent too large");
  }
  static constexpr Extent omega() {
    Extent e;
    e.v_ = kOmegaTag;
    return e;
  }

  constexpr bool is_omega() const { return v_ == kOmegaTag; }
  constexpr Coord value() const {
    if (is_omega()) throw std::logic_error("w has no finite value");
    return v_;
  }
  constexpr bool admits(Coord x) const { return is_omega() || x < v_; }

  friend constexpr auto operator<=>(Extent, Extent) = default;

 private:
  static constexpr Coord kOmegaTag = std::numeric_limits<Coord>::max();
  Coord v_ = 0;
};

inline constexpr Extent kOmega = Extent::omega();

struct Rectangle {
  std::vector<Extent> extents;

  std::size_t dim() const { return extents.size(); }
  bool empty() const {
    return std::any_of(extents.begin(), extents.end(), [](Extent e) { return e == Extent(0); });
  }
  bool contains(const Point& p) const {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!extents[i].admits(p[i])) return false;
    return true;
  }
  bool bounded() const {
    return std::none_of(extents.begin(), extents.end(), [](Extent e) { return e.is_omega(); });
  }
  bool full() const {
    return std::all_of(extents.begin(), extents.end(), [](Extent e) { return e.is_omega(); });
  }

  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Extent-wise domination; for nonempty boxes this is set inclusion.
inline bool dominated_by(const Rectangle& r, const Rectangle& s) {
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (r.extents[i] > s.extents[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arbitrary lower sets

class GeneralLowerSet;
GeneralLowerSet canonicalize(const GeneralLowerSet& s);

class GeneralLowerSet {
 public:
  explicit GeneralLowerSet(std::size_t dim = 1) : dim_(dim) {}
  GeneralLowerSet(std::size_t dim, std::vector<Rectangle> rects);

  static GeneralLowerSet full(std::size_t dim) {
    return GeneralLowerSet(dim, {Rectangle{std::vector<Extent>(dim, kOmega)}});
  }
  static GeneralLowerSet box(std::vector<Extent> extents) {
    std::size_t d = extents.size();
    return GeneralLowerSet(d, {Rectangle{std::move(extents)}});
  }

  std::size_t dim() const { return dim_; }
  /// Irredundant boxes, sorted by extent sequence (w above every natural).
  const std::vector<Rectangle>& rects() const { return rects_; }
  bool empty() const { return rects_.empty(); }

  /// Representation equality. Use `same_set` for the semantic comparison.
  friend bool operator==(const GeneralLowerSet&, const GeneralLowerSet&) = default;

 private:
  friend GeneralLowerSet canonicalize(const GeneralLowerSet& s);
  struct raw_tag {};
  GeneralLowerSet(raw_tag, std::size_t dim, std::vector<Rectangle> rects)
      : dim_(dim), rects_(std::move(rects)) {}

  std::size_t dim_;
  std::vector<Rectangle> rects_;
};

inline bool contains(const GeneralLowerSet& s, const Point& p) {
  detail::require_dim(p.size(), s.dim(), "contains");
  return std::any_of(s.rects().begin(), s.rects().end(),
                     [&](const Rectangle& r) { return r.contains(p); });
}

namespace detail {

/// 1 + the largest finite extent occurring in any of the given boxes.
inline Coord omega_substitute(const std::vector<Rectangle>& a, const std::vector<Rectangle>& b) {
  Coord m = 0;
  for (const auto* rs : {&a, &b})
    for (const auto& r : *rs)
      for (Extent e : r.extents)
        if (!e.is_omega()) m = std::max(m, e.value());
  return m + 1;
}

/// Box r lies inside the union `boxes`: its saturated corner (finite sides
/// minus one, w sides replaced by `big`) must sit in one of them.
inline bool box_inside(const Rectangle& r, const std::vector<Rectangle>& boxes, Coord big) {
  if (r.empty()) return true;
  Point corner(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i)
    corner[i] = r.extents[i].is_omega() ? big : r.extents[i].value() - 1;
  return std::any_of(boxes.begin(), boxes.end(), [&](const Rectangle& q) {
    if (!q.contains(corner)) return false;
    for (std::size_t i = 0; i < r.dim(); ++i)
      if (r.extents[i].is_omega() && !q.extents[i].is_omega()) return false;
    return true;
  });
}

}  // namespace detail

/// True iff t is a subset of s.
inline bool includes(const GeneralLowerSet& s, const GeneralLowerSet& t) {
  detail::require_dim(t.dim(), s.dim(), "includes");
  const Coord big = detail::omega_substitute(s.rects(), t.rects());
  return std::all_of(t.rects().begin(), t.rects().end(),
                     [&](const Rectangle& r) { return detail::box_inside(r, s.rects(), big); });
}

inline bool same_set(const GeneralLowerSet& s, const GeneralLowerSet& t) {
  return includes(s, t) && includes(t, s);
}

/// Drops empty boxes and boxes covered by the others, then sorts.
inline GeneralLowerSet canonicalize(const GeneralLowerSet& s) {
  std::vector<Rectangle> rs;
  for (const auto& r : s.rects()) {
    detail::require_dim(r.dim(), s.dim(), "canonicalize");
    if (!r.empty()) rs.push_back(r);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::vector<Rectangle> keep;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < rs.size() && !covered; ++j)
      covered = j != i && dominated_by(rs[i], rs[j]);
    if (!covered) keep.push_back(rs[i]);
  }
  return GeneralLowerSet(GeneralLowerSet::raw_tag{}, s.dim(), std::move(keep));
}

inline GeneralLowerSet::GeneralLowerSet(std::size_t dim, std::vector<Rectangle> rects) : dim_(dim) {
  *this = canonicalize(GeneralLowerSet(raw_tag{}, dim, std::move(rects)));
}

inline GeneralLowerSet unite(const GeneralLowerSet& s, const GeneralLowerSet& t) {
  detail::require_dim(t.dim(), s.dim(), "unite");
  std::vector<Rectangle> rs = s.rects();
  rs.insert(rs.end(), t.rects().begin(), t.rects().end());
  return GeneralLowerSet(s.dim(), std::move(rs));
}

inline GeneralLowerSet intersect(const GeneralLowerSet& s, const GeneralLowerSet& t) {
  detail::require_dim(t.dim(), s.dim(), "intersect");
  std::vector<Rectangle> rs;
  rs.reserve(s.rects().size() * t.rects().size());
  for (const auto& a : s.rects())
    for (const auto& b : t.rects()) {
      Rectangle c{std::vector<Extent>(s.dim())};
      for (std::size_t i = 0; i < s.dim(); ++i) c.extents[i] = std::min(a.extents[i], b.extents[i]);
      rs.push_back(std::move(c));
    }
  return GeneralLowerSet(s.dim(), std::move(rs));
}

/// False iff s is all of N^m.
inline bool is_proper(const GeneralLowerSet& s) {
  return std::none_of(s.rects().begin(), s.rects().end(), [](const Rectangle& r) { return r.full(); });
}

inline GeneralLowerSet from_finite(const FiniteLowerSet& f) {
  std::vector<Rectangle> rs;
  for (const auto& g : f.generators()) {
    Rectangle r{std::vector<Extent>(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) r.extents[i] = Extent(g[i] + 1);
    rs.push_back(std::move(r));
  }
  return GeneralLowerSet(f.dim(), std::move(rs));
}

/// The bounded form of s, or nullopt when s is unbounded.
inline std::optional<FiniteLowerSet> to_finite(const GeneralLowerSet& s) {
  std::vector<Point> corners;
  for (const auto& r : s.rects()) {
    if (!r.bounded()) return std::nullopt;
    Point c(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) c[i] = r.extents[i].value() - 1;
    corners.push_back(std::move(c));
  }
  return closure(std::move(corners), s.dim());
}

}  // namespace wpo
