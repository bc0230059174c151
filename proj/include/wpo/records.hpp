// Line-oriented record files for bad-sequence runs.
//
//   # wpo badseq v1
//   # m=2 K=2 limit=500 seed=0
//   # start=w^(w+2)
//   # length_bound=H_{w^(w+2)}(2)-2
//   1<TAB>w^(w+1)*2<TAB>[2,w]<TAB>2<TAB>2<TAB>(2,0)<TAB>2<TAB>9
//
// Fields: index, alpha, D, N, M, ideal generators, degree, bound. The verifier
// trusts nothing but the header parameters and recomputes every field.
#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpo/badseq.hpp"
#include "wpo/errors.hpp"
#include "wpo/ordinal_io.hpp"
#include "wpo/text.hpp"

namespace wpo {

class record_format_error : public std::runtime_error {
 public:
  record_format_error(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr const char* kRecordMagic = "# wpo badseq v1";

inline void write_record(std::ostream& os, const BadSequenceRecord& r) {
  os << r.index << '\t' << format_ordinal(r.alpha) << '\t' << to_text(r.d) << '\t' << r.measure_n << '\t'
     << r.measure_m << '\t' << to_text(r.ideal) << '\t' << r.degree << '\t' << r.bound << '\n';
}

inline void write_header(std::ostream& os, const BadSequenceRun& run) {
  os << kRecordMagic << '\n'
     << "# m=" << run.m << " K=" << run.base << " limit=" << run.limit << " seed=" << run.seed << '\n'
     << "# start=" << format_ordinal(run.start()) << '\n'
     << "# length_bound=" << run.length_bound() << '\n';
}

inline void write_run(std::ostream& os, const BadSequenceRun& run) {
  write_header(os, run);
  for (const auto& r : run.records) write_record(os, r);
}

/// A run as read back from text, with the source line of each record.
struct ParsedRun {
  BadSequenceRun run;
  std::vector<std::size_t> lines;
};

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t from = 0;
  while (true) {
    auto at = line.find('\t', from);
    out.push_back(line.substr(from, at - from));
    if (at == std::string::npos) return out;
    from = at + 1;
  }
}

inline std::uint64_t field_number(const std::string& s, std::size_t line, const char* name) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw record_format_error(line, std::string("field '") + name + "' is not a natural number");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw record_format_error(line, std::string("field '") + name + "' is out of range");
  }
}

/// "m=2 K=2 limit=500 seed=0" -> key/value map.
inline std::map<std::string, std::string> header_fields(const std::string& body) {
  std::map<std::string, std::string> kv;
  std::istringstream in(body);
  for (std::string tok; in >> tok;) {
    auto eq = tok.find('=');
    if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

}  // namespace detail

inline ParsedRun read_run(std::istream& in) {
  ParsedRun out;
  std::string line;
  std::size_t no = 0;
  bool have_params = false;

  if (!std::getline(in, line)) throw record_format_error(1, "empty file");
  ++no;
  if (line != kRecordMagic) throw record_format_error(no, "missing '# wpo badseq v1' header");

  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto kv = detail::header_fields(line.substr(1));
      if (kv.count("m")) {
        auto& run = out.run;
        run.m = static_cast<unsigned>(detail::field_number(kv["m"], no, "m"));
        if (run.m != 2 && run.m != 3) throw record_format_error(no, "m must be 2 or 3");
        if (!kv.count("K")) throw record_format_error(no, "header lacks K");
        run.base = detail::field_number(kv["K"], no, "K");
        if (kv.count("limit")) run.limit = detail::field_number(kv["limit"], no, "limit");
        if (kv.count("seed")) run.seed = detail::field_number(kv["seed"], no, "seed");
        have_params = true;
      }
      continue;
    }
    if (!have_params) throw record_format_error(no, "record before the 'm=.. K=..' header line");
    auto f = detail::split_tabs(line);
    if (f.size() != 8)
      throw record_format_error(no, "expected 8 tab-separated fields, found " + std::to_string(f.size()));
    const std::size_t m = out.run.m;
    BadSequenceRecord r;
    try {
      r.index = detail::field_number(f[0], no, "index");
      r.alpha = parse_ordinal(f[1]);
      r.d = parse_general_lowerset(f[2], m);
      r.measure_n = detail::field_number(f[3], no, "N");
      r.measure_m = detail::field_number(f[4], no, "M");
      r.ideal = parse_ideal(f[5], m);
      r.degree = detail::field_number(f[6], no, "degree");
      r.bound = detail::field_number(f[7], no, "bound");
    } catch (const parse_error& e) {
      throw record_format_error(no, std::string(e.what()) + " at column " + std::to_string(e.position()));
    }
    out.run.records.push_back(std::move(r));
    out.lines.push_back(no);
  }
  if (!have_params) throw record_format_error(no, "missing 'm=.. K=..' header line");
  return out;
}

struct RunReport {
  std::size_t records = 0;
  std::uint64_t pairs = 0;
  /// One human-readable line per failed check.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Recomputes every field from the ordinal and header, then checks the bounds,
/// strict descent and pairwise non-inclusion.
inline RunReport verify_run(const ParsedRun& parsed, std::size_t max_listed = 20) {
  const auto& run = parsed.run;
  RunReport rep;
  rep.records = run.records.size();
  std::size_t total = 0;
  auto flag = [&](std::string msg) {
    if (total++ < max_listed) rep.violations.push_back(std::move(msg));
  };
  auto at = [&](std::size_t k) { return "record " + std::to_string(k + 1) + " (line " + std::to_string(parsed.lines[k]) + ")"; };

  const Ordinal top = run.start();
  for (std::size_t k = 0; k < run.records.size(); ++k) {
    const auto& r = run.records[k];
    if (r.index != k + 1) flag(at(k) + ": index " + std::to_string(r.index) + ", expected " + std::to_string(k + 1));
    const Ordinal& prev = k == 0 ? top : run.records[k - 1].alpha;
    if (!(r.alpha < prev)) flag(at(k) + ": ordinal does not decrease");

    BadSequenceRecord expect;
    try {
      expect = make_record(run.m, run.base, k + 1, r.alpha);
    } catch (const std::out_of_range&) {
      flag(at(k) + ": ordinal outside the shape space");
      continue;
    }
    if (!same_set(expect.d, r.d)) flag(at(k) + ": D differs from D(alpha) = " + to_text(expect.d));
    if (expect.measure_n != r.measure_n) flag(at(k) + ": N should be " + std::to_string(expect.measure_n));
    if (expect.measure_m != r.measure_m) flag(at(k) + ": M should be " + std::to_string(expect.measure_m));
    if (!(expect.ideal.generators() == r.ideal.generators()))
      flag(at(k) + ": ideal should be " + to_text(expect.ideal));
    if (expect.degree != r.degree) flag(at(k) + ": degree should be " + std::to_string(expect.degree));
    if (expect.bound != r.bound) flag(at(k) + ": bound should be " + std::to_string(expect.bound));
    if (expect.measure_n > expect.bound) flag(at(k) + ": N exceeds (K+i)^2");
    if (expect.measure_m > expect.measure_n) flag(at(k) + ": M exceeds N");
    if (expect.degree > expect.bound) flag(at(k) + ": degree exceeds (K+i)^2");
  }

  if (total > rep.violations.size())
    rep.violations.push_back("... " + std::to_string(total - rep.violations.size()) + " more");

  // The pairwise verdict is listed even when the per-record list is truncated.
  auto bad = verify_bad(run.sets());
  rep.pairs = bad.pairs;
  if (!bad.ok()) {
    auto [i, j] = *bad.first_violation;
    rep.violations.push_back("non-inclusion fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             "): D_" + std::to_string(i + 1) + " is contained in D_" + std::to_string(j + 1) + " (" +
                             std::to_string(bad.violations) + " such pairs)");
  }
  return rep;
}

}  // namespace wpo
