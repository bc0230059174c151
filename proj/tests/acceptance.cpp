// Acceptance run: one PASS/FAIL line per criterion, with the time it took and
// the time it was allowed. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wpo/wpo.hpp"

namespace {

using wpo::Ordinal;

Ordinal O(const char* s) { return wpo::parse_ordinal(s); }
std::string S(const Ordinal& a) { return wpo::format_ordinal(a); }

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && violations++ == 0) first = what;
  }
  void absorb(const wpo::OracleReport& r) {
    checks += r.checks;
    if (!r.ok() && violations == 0) first = r.failures.empty() ? r.suite : r.failures.front();
    violations += r.violations;
  }
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

void formulas(Tally& t) {
  const char* d[] = {"w", "w^w", "w^(w^2)", "w^(w^3)"};
  for (std::uint64_t m = 1; m <= 4; ++m) t.check(S(wpo::type_of_D(m)) == d[m - 1], "type_of_D(" + std::to_string(m) + ")");
  t.check(S(wpo::type_of_D(3, 2)) == "w^(w^2*2)", "type_of_D(3,2)");
  const char* i[] = {"w+1", "w^(w+2)+1", "w^(w^2+w*3+3)+1"};
  for (std::uint64_t m = 1; m <= 3; ++m) t.check(S(wpo::type_of_I(m)) == i[m - 1], "type_of_I(" + std::to_string(m) + ")");
  // The exponents of type_of_I are the starting indices of the generated runs.
  for (unsigned m : {2u, 3u})
    t.check(wpo::type_of_I(m).terms().front().exponent == wpo::top_ordinal(m).terms().front().exponent, "type_of_I exponent, m=" + std::to_string(m));
}

void algebra(Tally& t) {
  for (std::uint64_t m = 1; m <= 5; ++m) {
    const auto lhs = wpo::pow2(wpo::omega_pow(Ordinal(m)));
    t.check(lhs == wpo::omega_pow(wpo::omega_pow(Ordinal(m - 1))), "pow2(w^" + std::to_string(m) + ")");
  }
  wpo::Rng rng(2024);
  for (int k = 0; k < 10000; ++k) {
    Ordinal a = wpo::random_ordinal(rng), b = wpo::random_ordinal(rng), c = wpo::random_ordinal(rng);
    const std::string at = " at (" + S(a) + ", " + S(b) + ", " + S(c) + ")";
    t.check(wpo::natural_sum(a, b) == wpo::natural_sum(b, a), "sum commutativity" + at);
    t.check(wpo::natural_product(a, b) == wpo::natural_product(b, a), "product commutativity" + at);
    t.check(wpo::natural_sum(a, wpo::natural_sum(b, c)) == wpo::natural_sum(wpo::natural_sum(a, b), c),
            "sum associativity" + at);
    t.check(wpo::natural_product(a, wpo::natural_product(b, c)) == wpo::natural_product(wpo::natural_product(a, b), c),
            "product associativity" + at);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    t.check(wpo::natural_sum(a, c) < wpo::natural_sum(b, c), "sum monotonicity" + at);
    if (!c.is_zero()) t.check(wpo::natural_product(a, c) < wpo::natural_product(b, c), "product monotonicity" + at);
  }
}

void hardy(Tally& t) {
  auto value = [](const char* a, std::uint64_t x) {
    auto r = wpo::hardy(O(a), x, 1'000'000);
    return r.finished() ? r.value() : 0;
  };
  t.check(value("w", 3) == 7, "H_w(3)");
  t.check(value("w^2", 2) == 15, "H_{w^2}(2)");
  t.check(value("w^w", 1) == 5, "H_{w^w}(1)");
  wpo::Rng rng(77);
  for (int k = 0; k < 10000; ++k) {
    const auto lambda = wpo::random_limit(rng);
    const auto x = wpo::detail::uniform(rng, 0, 20);
    t.check(wpo::fundamental(lambda, x) < lambda, "fundamental not below " + S(lambda));
  }
  const auto trace = wpo::descend(O("w^(w+2)"), 2, 3);
  const std::vector<Ordinal> expected{O("w^(w+2)"), O("w^(w+1)*2"), O("w^(w+1)+w^w*3")};
  t.check(trace.steps == expected, "descend prefix");
}

void monotone(Tally& t) {
  const auto plane = wpo::check_monotone({4, 4});
  t.check(plane.sets == 70 && plane.pairs == 4900, "4x4 box sizes");
  const auto cube = wpo::check_monotone({3, 3, 3});
  t.check(cube.sets == 980, "3x3x3 box size");
  t.check(plane.ok() && cube.ok(), "ord monotone on boxes");
  t.checks += plane.pairs + cube.pairs;
  const auto one = wpo::closure({{0, 1}}, 2), two = wpo::closure({{0, 1}, {1, 0}}, 2);
  t.check(wpo::includes(two, one) && !wpo::includes(one, two) && wpo::ord(one) == wpo::ord(two), "tie witness");
}

void rectangles(Tally& t) {
  for (std::size_t m : {2, 3}) {
    wpo::OracleOptions opt;
    opt.m = m;
    opt.pairs = 1000;
    opt.seed = 11 + m;
    t.absorb(wpo::oracle_inclusion(opt));
  }
}

void phi(Tally& t) {
  for (std::size_t m : {2, 3}) {
    wpo::OracleOptions opt;
    opt.m = m;
    opt.pairs = 1000;
    t.absorb(wpo::oracle_phi(opt));
  }
}

void bad_sequences(Tally& t) {
  for (auto [m, n, pairs] : {std::tuple{2u, 500u, 124750u}, std::tuple{3u, 200u, 19900u}}) {
    const auto run = wpo::generate(m, 2, n);
    const std::string tag = "m=" + std::to_string(m);
    t.check(run.records.size() == n, tag + " record count");
    for (const auto& r : run.records) {
      t.check(r.bound == (2 + r.index) * (2 + r.index), tag + " bound value");
      t.check(r.measure_n <= r.bound, tag + " N bound at " + std::to_string(r.index));
      t.check(r.measure_m <= r.measure_n, tag + " M <= N at " + std::to_string(r.index));
      t.check(r.degree <= r.bound, tag + " degree bound at " + std::to_string(r.index));
    }
    const auto bad = wpo::verify_bad(run.sets());
    t.check(bad.pairs == pairs, tag + " pair count");
    t.checks += bad.pairs;
    t.check(bad.ok(), tag + " non-inclusion");
  }
}

void monomial(Tally& t) {
  wpo::OracleOptions opt;
  opt.pairs = 100;
  t.absorb(wpo::oracle_ideal(opt));
}

void specifications(Tally& t) {
  wpo::OracleOptions opt;
  opt.m = 2;
  t.absorb(wpo::oracle_spec(opt));
  wpo::PartialSpecification empty_domain{2, {{wpo::CoordSet{}, wpo::GeneralLowerSet(0)}}};
  t.check(wpo::validate_spec(empty_domain).ok(), "domain {empty} specification");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"formula fidelity", 0.001, formulas},
      {"ordinal algebra", 5, algebra},
      {"hardy and fundamental sequences", 5, hardy},
      {"ord monotonicity", 30, monotone},
      {"rectangle machinery", 30, rectangles},
      {"phi decomposition", 60, phi},
      {"bad sequences", 120, bad_sequences},
      {"monomial bridge", 60, monomial},
      {"partial specifications", 30, specifications},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.violations == 0 && secs < c.limit_seconds;
    failed += !ok;
    std::printf("%s  %-32s checks=%llu violations=%llu time=%.4fs limit=%gs", ok ? "PASS" : "FAIL", c.name,
                static_cast<unsigned long long>(t.checks), static_cast<unsigned long long>(t.violations), secs,
                c.limit_seconds);
    if (!error.empty()) std::printf("  error: %s", error.c_str());
    else if (t.violations) std::printf("  first: %s", t.first.c_str());
    else if (secs >= c.limit_seconds) std::printf("  over time");
    std::printf("\n");
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
