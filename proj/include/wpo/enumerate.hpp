// Exhaustive enumeration of lower sets, for use as test oracles.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "wpo/lowerset.hpp"

namespace wpo {

class enumeration_limit : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxEnumerated = std::size_t{1} << 20;

namespace detail {

/// Points of the box in lexicographic order, so that every point comes after
/// all points below it.
inline std::vector<Point> box_points(const std::vector<Coord>& box) {
  std::vector<Point> pts;
  for (Coord b : box)
    if (b == 0) return pts;
  Point p(box.size(), 0);
  while (true) {
    pts.push_back(p);
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      if (++p[i] < box[i]) break;
      p[i] = 0;
      if (i == 0) return pts;
    }
    if (box.empty()) return pts;
  }
}

}  // namespace detail

/// Streams every lower set of {x : x_i < box_i} to `visit`. A point may join
/// only if each of its lower neighbours has joined, which generates every
/// order ideal exactly once. Throws enumeration_limit after `max_count` sets.
inline std::size_t for_each_lower_set(const std::vector<Coord>& box,
                                      const std::function<void(const FiniteLowerSet&)>& visit,
                                      std::size_t max_count = kMaxEnumerated) {
  const std::size_t m = box.size();
  const auto pts = detail::box_points(box);
  const std::size_t n = pts.size();

  // Mixed-radix index of each point, for neighbour lookups.
  std::vector<std::size_t> stride(m, 1);
  for (std::size_t i = m; i-- > 1;) stride[i - 1] = stride[i] * box[i];

  std::vector<char> in(n, 0);
  std::size_t count = 0;

  auto emit = [&] {
    if (++count > max_count) throw enumeration_limit("lower-set enumeration exceeds the configured bound");
    std::vector<Point> maximal;
    for (std::size_t k = 0; k < n; ++k) {
      if (!in[k]) continue;
      bool is_max = true;
      for (std::size_t i = 0; i < m && is_max; ++i)
        if (pts[k][i] + 1 < box[i] && in[k + stride[i]]) is_max = false;
      if (is_max) maximal.push_back(pts[k]);
    }
    visit(closure(std::move(maximal), m));
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      emit();
      return;
    }
    in[k] = 0;
    rec(k + 1);
    bool allowed = true;
    for (std::size_t i = 0; i < m && allowed; ++i)
      if (pts[k][i] > 0 && !in[k - stride[i]]) allowed = false;
    if (allowed) {
      in[k] = 1;
      rec(k + 1);
      in[k] = 0;
    }
  };
  rec(0);
  return count;
}

inline std::vector<FiniteLowerSet> enumerate_fls(const std::vector<Coord>& box,
                                                 std::size_t max_count = kMaxEnumerated) {
  std::vector<FiniteLowerSet> out;
  for_each_lower_set(box, [&](const FiniteLowerSet& f) { out.push_back(f); }, max_count);
  return out;
}

/// Every distinct lower set that is a union of at most `max_rects` boxes whose
/// sides are drawn from `menu`, in canonical form. The empty set is included.
inline std::vector<GeneralLowerSet> enumerate_gls(std::size_t m, const std::vector<Extent>& menu,
                                                  std::size_t max_rects,
                                                  std::size_t max_count = kMaxEnumerated) {
  std::vector<Rectangle> boxes;
  {
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      Rectangle r;
      for (auto i : idx) r.extents.push_back(menu[i]);
      boxes.push_back(std::move(r));
      std::size_t i = m;
      while (i > 0 && ++idx[i - 1] == menu.size()) idx[--i] = 0;
      if (i == 0 || menu.empty()) break;
    }
  }
  std::set<std::vector<Rectangle>> seen;
  std::vector<GeneralLowerSet> out;
  std::vector<Rectangle> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    GeneralLowerSet s(m, chosen);
    if (seen.insert(s.rects()).second) {
      if (out.size() == max_count) throw enumeration_limit("rectangle enumeration exceeds the configured bound");
      out.push_back(std::move(s));
    }
    if (chosen.size() == max_rects) return;
    for (std::size_t k = from; k < boxes.size(); ++k) {
      chosen.push_back(boxes[k]);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace wpo
