// Ordinal-valued linearization of bounded lower sets of N^m.
//
// A vector a in N^k reads as the ordinal w^(k-1)*a_1 + ... + a_k. A bounded
// lower set F with maximal points (a_i, b_i), a_i in N^(m-1), b_i in N, maps to
// 1 + (natural sum of w^ord(a_i) * b_i), and the empty set maps to 0.
#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wpo/enumerate.hpp"
#include "wpo/lowerset.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

inline Ordinal ord_vec(const std::vector<Coord>& a) {
  std::vector<Ordinal::Term> terms;
  const std::size_t k = a.size();
  for (std::size_t j = 0; j < k; ++j)
    if (a[j] != 0) terms.push_back(Ordinal::Term{Ordinal(k - 1 - j), Natural(a[j])});
  return Ordinal::from_terms(std::move(terms));
}

struct OrdTerm {
  Point generator;
  Ordinal term;  // w^ord(prefix) * last
};

struct OrdAssignment {
  FiniteLowerSet input;
  Ordinal value;
  std::vector<OrdTerm> terms;
};

inline OrdAssignment ord_lowerset(const FiniteLowerSet& f) {
  if (f.dim() == 0) throw std::invalid_argument("ord_lowerset: dimension must be positive");
  OrdAssignment out{f, Ordinal(), {}};
  if (f.empty()) return out;
  Ordinal sum;
  for (const auto& g : f.generators()) {
    Point prefix(g.begin(), g.end() - 1);
    Ordinal t = Ordinal::monomial(ord_vec(prefix), Natural(g.back()));
    sum = natural_sum(sum, t);
    out.terms.push_back(OrdTerm{g, std::move(t)});
  }
  out.value = add(Ordinal(1), sum);
  return out;
}

inline Ordinal ord(const FiniteLowerSet& f) { return ord_lowerset(f).value; }

struct MonotoneReport {
  std::size_t sets = 0;
  std::size_t pairs = 0;
  std::size_t comparable = 0;  // ordered pairs with F a subset of G
  std::size_t violations = 0;
  std::optional<std::pair<FiniteLowerSet, FiniteLowerSet>> counterexample;
  double seconds = 0;

  bool ok() const { return violations == 0; }
};

/// Checks F subset of G => ord(F) <= ord(G) over every ordered pair of lower
/// sets inside `box`.
inline MonotoneReport check_monotone(const std::vector<Coord>& box) {
  const auto t0 = std::chrono::steady_clock::now();
  MonotoneReport rep;
  const auto sets = enumerate_fls(box);
  std::vector<Ordinal> values;
  values.reserve(sets.size());
  for (const auto& f : sets) values.push_back(ord(f));
  rep.sets = sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      ++rep.pairs;
      if (!includes(sets[j], sets[i])) continue;
      ++rep.comparable;
      if (values[i] > values[j]) {
        if (rep.violations++ == 0) rep.counterexample.emplace(sets[i], sets[j]);
      }
    }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wpo
