// wpo: command-line front end for the library.
//
// Exit status: 0 when every check passes, 1 on a property violation, 2 on a
// usage, parse or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpo/wpo.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "D(N^3)", "D(N^3 x 2)", "I(N^2)" -> formatted type.
std::string space_type(const std::string& text) {
  static const std::regex pattern(R"(\s*([DI])\s*\(\s*N\s*\^\s*(\d+)\s*(?:x\s*(\d+)\s*)?\)\s*)");
  std::smatch mt;
  if (!std::regex_match(text, mt, pattern))
    throw usage_error("cannot read space '" + text + "'; expected D(N^m), D(N^m x k) or I(N^m)");
  const auto m = std::stoull(mt[2]);
  if (mt[1] == "I") {
    if (mt[3].matched) throw usage_error("I(N^m x k) is not supported");
    return wpo::format_ordinal(wpo::type_of_I(m));
  }
  const auto k = mt[3].matched ? std::stoull(mt[3]) : 1ull;
  return wpo::format_ordinal(wpo::type_of_D(m, k));
}

std::vector<wpo::Coord> parse_box(const std::string& text) {
  std::vector<wpo::Coord> box;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, 'x');) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw usage_error("box must look like 4x4 or 3x3x3");
    box.push_back(std::stoull(part));
  }
  if (box.empty()) throw usage_error("box must look like 4x4 or 3x3x3");
  return box;
}

const char* stop_name(wpo::DescentStop s) {
  switch (s) {
    case wpo::DescentStop::reached_zero: return "reached 0";
    case wpo::DescentStop::hit_successor: return "successor reached";
    case wpo::DescentStop::step_limit: return "step limit";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinals, lower sets of N^m, and long bad sequences"};
  app.require_subcommand(1);

  std::string space;
  auto* type_cmd = app.add_subcommand("type", "maximal order type of D(N^m), D(N^m x k) or I(N^m)");
  type_cmd->add_option("space", space, "space descriptor")->required();

  std::string set_text;
  auto* ord_cmd = app.add_subcommand("ord", "ordinal assigned to a bounded lower set, e.g. {(1,2);(0,3)}");
  ord_cmd->add_option("set", set_text, "lower set as {(..);(..)}")->required();

  std::string alpha_text;
  std::uint64_t x = 0, budget = 1'000'000;
  auto* hardy_cmd = app.add_subcommand("hardy", "evaluate H_alpha(x) within a step budget");
  hardy_cmd->add_option("alpha", alpha_text, "ordinal, e.g. w^(w+2)")->required();
  hardy_cmd->add_option("x", x, "argument")->required();
  hardy_cmd->add_option("--budget", budget, "maximum rewrite steps")->check(CLI::PositiveNumber);

  std::uint64_t base = 2, limit = 10;
  auto* descend_cmd = app.add_subcommand("descend", "fundamental-sequence descent alpha, alpha[K], alpha[K][K+1], ...");
  descend_cmd->add_option("alpha", alpha_text, "start ordinal")->required();
  descend_cmd->add_option("K", base, "base argument")->required();
  descend_cmd->add_option("limit", limit, "maximum number of ordinals")->check(CLI::PositiveNumber);

  unsigned m = 2;
  std::string out_path;
  auto* badseq_cmd = app.add_subcommand("badseq", "generate a prefix of the bad sequence of lower sets");
  badseq_cmd->add_option("-m", m, "dimension (2 or 3)")->check(CLI::IsMember({2u, 3u}));
  badseq_cmd->add_option("-K", base, "base argument")->check(CLI::PositiveNumber);
  badseq_cmd->add_option("-n", limit, "number of records")->check(CLI::PositiveNumber);
  badseq_cmd->add_option("-o", out_path, "output record file (default: stdout)");

  std::string in_path;
  auto* verify_cmd = app.add_subcommand("verify", "recheck every field and pair of a record file");
  verify_cmd->add_option("file", in_path, "record file")->required();

  std::string suite, box_text;
  wpo::OracleOptions opt;
  std::size_t oracle_m = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "run a property suite (monotone, phi, inclusion, ideal, spec)");
  oracle_cmd->add_option("suite", suite, "suite name")->required();
  oracle_cmd->add_option("--box", box_text, "box for the monotone suite, e.g. 4x4");
  oracle_cmd->add_option("--m", oracle_m, "dimension")->check(CLI::Range(1, 3));
  oracle_cmd->add_option("--pairs", opt.pairs, "random samples");
  oracle_cmd->add_option("--seed", opt.seed, "random seed");

  bool from_ideal = false;
  std::size_t ideal_dim = 0;
  auto* ideal_cmd = app.add_subcommand("ideal", "monomial ideal of the complement of a lower set, or the reverse");
  ideal_cmd->add_option("input", set_text, "lower set like [2,w]u[w,2], or an ideal with --from-ideal")->required();
  ideal_cmd->add_flag("--from-ideal", from_ideal, "read an ideal like (2,0);(0,3) and print its complement");
  ideal_cmd->add_option("--dim", ideal_dim, "dimension, needed for the empty set and the zero ideal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*type_cmd) {
      std::cout << space_type(space) << '\n';
      return kOk;
    }

    if (*ord_cmd) {
      const auto a = wpo::ord_lowerset(wpo::parse_finite_lowerset(set_text));
      std::cout << wpo::format_ordinal(a.value) << '\n';
      for (const auto& t : a.terms)
        std::cout << "  " << wpo::detail::tuple_text(t.generator) << " -> " << wpo::format_ordinal(t.term) << '\n';
      return kOk;
    }

    if (*hardy_cmd) {
      const auto r = wpo::hardy(wpo::parse_ordinal(alpha_text), x, budget);
      if (r.finished()) {
        std::cout << r.value() << '\n';
      } else {
        const auto& res = r.residual();
        std::cout << "budget exhausted after " << res.steps << " steps; remaining H_{"
                  << wpo::format_ordinal(res.alpha) << "}(" << res.argument << ")\n";
      }
      return kOk;
    }

    if (*descend_cmd) {
      const auto t = wpo::descend(wpo::parse_ordinal(alpha_text), base, limit);
      for (std::size_t i = 0; i < t.steps.size(); ++i)
        std::cout << i << '\t' << wpo::format_ordinal(t.steps[i]) << '\n';
      std::cout << "# " << stop_name(t.stop) << '\n';
      return kOk;
    }

    if (*badseq_cmd) {
      const auto run = wpo::generate(m, base, limit);
      if (out_path.empty()) {
        wpo::write_run(std::cout, run);
      } else {
        std::ofstream out(out_path);
        if (!out) throw usage_error("cannot open '" + out_path + "' for writing");
        wpo::write_run(out, run);
        if (!out.flush()) throw usage_error("write to '" + out_path + "' failed");
        std::cerr << "wrote " << run.records.size() << " records to " << out_path << '\n';
      }
      std::cerr << "length bound: " << run.length_bound() << '\n';
      for (const auto& r : run.records)
        if (r.measure_n > r.bound || r.measure_m > r.measure_n || r.degree > r.bound) {
          std::cerr << "record " << r.index << " breaks a measure bound\n";
          return kViolation;
        }
      return kOk;
    }

    if (*verify_cmd) {
      std::ifstream in(in_path);
      if (!in) throw usage_error("cannot open '" + in_path + "'");
      const auto parsed = wpo::read_run(in);
      const auto rep = wpo::verify_run(parsed);
      std::cout << "records=" << rep.records << " pairs=" << rep.pairs << " violations="
                << (rep.ok() ? 0 : rep.violations.size()) << '\n';
      for (const auto& v : rep.violations) std::cout << "  " << v << '\n';
      return rep.ok() ? kOk : kViolation;
    }

    if (*oracle_cmd) {
      if (!box_text.empty()) opt.box = parse_box(box_text);
      if (oracle_m) {
        opt.m = oracle_m;
        if (box_text.empty()) opt.box.assign(oracle_m, oracle_m == 2 ? 4 : 3);
      } else {
        opt.m = opt.box.size();
      }
      const auto rep = wpo::run_oracle(suite, opt);
      std::cout << rep.suite << ": " << rep.checks << " checks, ";
      if (rep.pairs) std::cout << rep.pairs << " pairs, ";
      std::cout << rep.violations << " violations, "
                << rep.seconds << " s (seed " << opt.seed << ")\n";
      for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
      return rep.ok() ? kOk : kViolation;
    }

    if (*ideal_cmd) {
      std::optional<std::size_t> dim;
      if (ideal_dim) dim = ideal_dim;
      if (from_ideal) {
        std::cout << wpo::to_text(wpo::lowerset_from_ideal(wpo::parse_ideal(set_text, dim))) << '\n';
        return kOk;
      }
      const auto ideal = wpo::ideal_from_lowerset(wpo::parse_general_lowerset(set_text, dim));
      std::cout << wpo::to_text(ideal) << '\n';
      if (ideal.dim() <= 3) std::cout << "(" << wpo::to_pretty(ideal) << ")\n";
      if (!ideal.is_zero()) std::cout << "degree " << wpo::degree(ideal) << '\n';
      return kOk;
    }
  } catch (const wpo::parse_error& e) {
    std::cerr << "parse error: " << e.what() << " at position " << e.position() << '\n';
    return kUsage;
  } catch (const wpo::record_format_error& e) {
    std::cerr << "malformed record file: " << e.what() << '\n';
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
