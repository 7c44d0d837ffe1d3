// Command-line front end: universality, emptiness and inclusion checks on
// Buchi automata, plus a random-model generator and benchmark sweeps.
//
// Exit codes: 0 the property holds, 1 it does not, 2 usage/parse errors or
// oracle disagreement, 3 timeout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "omega/omega.hpp"

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;
constexpr int exit_timeout = 3;

struct common_flags {
  bool oracle = false;
  bool no_early_stop = false;
  double timeout_s = -1;
};

omega::solve_options options_of(const common_flags& c) {
  omega::solve_options opt;
  opt.early_stop = !c.no_early_stop;
  if (c.timeout_s >= 0) opt.dl = omega::deadline::after(c.timeout_s);
  return opt;
}

std::variant<omega::nbw, omega::abw> load(const std::string& path) {
  auto a = omega::parse_automaton_file(path);
  std::vector<std::string> errs = std::holds_alternative<omega::nbw>(a)
                                      ? validate(std::get<omega::nbw>(a))
                                      : validate(std::get<omega::abw>(a));
  if (!errs.empty()) throw std::runtime_error(path + ": " + errs.front());
  return a;
}

omega::nbw load_nbw(const std::string& path, const char* cmd) {
  auto a = load(path);
  if (!std::holds_alternative<omega::nbw>(a))
    throw std::runtime_error(std::string(cmd) + " expects an nbw file: " +
                             path);
  return std::get<omega::nbw>(std::move(a));
}

int report(bool holds, const char* yes, const char* no) {
  std::cout << (holds ? yes : no) << "\n";
  return holds ? exit_holds : exit_fails;
}

int disagree(const char* what, bool fast, bool slow) {
  std::cerr << "oracle disagreement on " << what << ": antichain says "
            << (fast ? "yes" : "no") << ", oracle says "
            << (slow ? "yes" : "no") << "\n";
  return exit_usage;
}

// "a,b,c" or "lo:hi:step" (inclusive, step > 0).
template <class T, class Parse>
std::vector<T> parse_list(const std::string& text, Parse parse) {
  std::vector<T> out;
  if (text.find(':') != std::string::npos) {
    double lo, hi, step;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 ||
        step <= 0 || hi < lo)
      throw std::runtime_error("bad range '" + text + "'");
    for (double v = lo; v <= hi + step * 1e-9; v += step)
      out.push_back(parse(std::to_string(v)));
    return out;
  }
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(parse(cur));
  if (out.empty()) throw std::runtime_error("empty list '" + text + "'");
  return out;
}

int cmd_universal(const std::string& path, const common_flags& flags) {
  omega::nbw a = load_nbw(path, "universal");
  bool fast = omega::is_universal(a, options_of(flags));
  if (flags.oracle) {
    bool slow = omega::oracle::universal(a, omega::oracle::cap_from_env());
    if (slow != fast) return disagree("universality", fast, slow);
  }
  return report(fast, "UNIVERSAL", "NOT_UNIVERSAL");
}

int cmd_empty(const std::string& path, const common_flags& flags) {
  auto loaded = load(path);
  omega::abw a = std::holds_alternative<omega::abw>(loaded)
                     ? std::get<omega::abw>(std::move(loaded))
                     : omega::as_abw(std::get<omega::nbw>(loaded));
  bool fast = omega::abw_empty(a, options_of(flags));
  if (flags.oracle) {
    bool slow =
        omega::oracle::alternating_empty(a, omega::oracle::cap_from_env());
    if (slow != fast) return disagree("emptiness", fast, slow);
  }
  return report(fast, "EMPTY", "NONEMPTY");
}

int cmd_include(const std::string& left, const std::string& right,
                const common_flags& flags) {
  omega::nbw a = load_nbw(left, "include");
  omega::nbw b = load_nbw(right, "include");
  bool fast = omega::is_included(a, b, options_of(flags));
  if (flags.oracle) {
    bool slow = omega::oracle::included(a, b, omega::oracle::cap_from_env());
    if (slow != fast) return disagree("inclusion", fast, slow);
  }
  return report(fast, "INCLUDED", "NOT_INCLUDED");
}

struct generate_args {
  std::uint32_t size = 1;
  double r = 1.0, f = 0.5;
  std::uint64_t seed = 0;
  std::uint32_t count = 1;
  std::string out_prefix;
};

int cmd_generate(const generate_args& g) {
  for (std::uint32_t i = 0; i < g.count; ++i) {
    omega::random_nbw_params p{g.size, g.r, g.f, g.seed + i};
    omega::nbw a = omega::random_nbw(p);
    char meta[128];
    std::snprintf(meta, sizeof meta, "random nbw: n=%u r=%g f=%g seed=%llu",
                  p.n, p.r, p.f, static_cast<unsigned long long>(p.seed));
    if (g.out_prefix.empty()) {
      omega::serialize(std::cout, a, {meta});
    } else {
      std::string path = g.out_prefix + std::to_string(p.seed) + ".aut";
      std::ofstream os(path);
      if (!os) throw std::runtime_error("cannot write " + path);
      omega::serialize(os, a, {meta});
    }
  }
  return exit_holds;
}

struct bench_args {
  std::string sizes, rs, fs;
  std::uint32_t samples = 1;
  double timeout_s = 0;
  std::string out;
  unsigned jobs = 1;
  std::string check = "universal";
  bool no_early_stop = false;
};

int cmd_bench(const bench_args& b) {
  omega::bench_config cfg;
  cfg.sizes = parse_list<std::uint32_t>(b.sizes, [](const std::string& s) {
    return static_cast<std::uint32_t>(std::stoul(s));
  });
  cfg.rs = parse_list<double>(b.rs,
                              [](const std::string& s) { return std::stod(s); });
  cfg.fs = parse_list<double>(b.fs,
                              [](const std::string& s) { return std::stod(s); });
  cfg.samples = b.samples;
  cfg.timeout_s = b.timeout_s;
  cfg.jobs = b.jobs;
  cfg.early_stop = !b.no_early_stop;
  if (b.check == "universal") {
    cfg.check = omega::bench_check::universal;
  } else if (b.check == "empty") {
    cfg.check = omega::bench_check::empty;
  } else {
    throw std::runtime_error("unknown check '" + b.check + "'");
  }
  for (auto n : cfg.sizes)
    for (auto r : cfg.rs)
      for (auto f : cfg.fs)
        if (auto errs = omega::validate(omega::random_nbw_params{n, r, f, 0});
            !errs.empty())
          throw std::runtime_error(
              "bad grid point n=" + std::to_string(n) + " r=" +
              std::to_string(r) + " f=" + std::to_string(f) + ": " +
              errs.front());

  bool fresh = !std::filesystem::exists(b.out) ||
               std::filesystem::file_size(b.out) == 0;
  std::ofstream csv(b.out, std::ios::app);
  if (!csv) throw std::runtime_error("cannot write " + b.out);
  if (fresh) csv << omega::csv_header() << "\n" << std::flush;

  omega::run_bench(
      cfg,
      [&](const omega::bench_row& row) {
        csv << omega::csv_line(row) << "\n" << std::flush;
      },
      [&](const omega::bench_point& pt) {
        std::printf("n=%u r=%g f=%g: median_ms=%lld holds=%.2f timeouts=%u\n",
                    pt.n, pt.r, pt.f, static_cast<long long>(pt.median_ms),
                    pt.holds_fraction, pt.timeouts);
        std::fflush(stdout);
      });
  return exit_holds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antichain decision procedures for Buchi automata"};
  app.require_subcommand(1);

  common_flags flags;
  app.add_flag("--oracle", flags.oracle,
               "cross-check against the explicit oracle (exit 2 on mismatch)");
  app.add_flag("--no-early-stop", flags.no_early_stop,
               "run fixpoints to full convergence");

  std::string file_a, file_b;
  auto* cu = app.add_subcommand("universal", "is L(A) all infinite words?");
  cu->add_option("file", file_a, "automaton file")->required();
  cu->add_option("--timeout", flags.timeout_s, "seconds before giving up");

  auto* ce = app.add_subcommand("empty", "is L(A) empty?");
  ce->add_option("file", file_a, "automaton file")->required();
  ce->add_option("--timeout", flags.timeout_s, "seconds before giving up");

  auto* ci = app.add_subcommand("include", "is L(A) included in L(B)?");
  ci->add_option("A", file_a, "left automaton")->required();
  ci->add_option("B", file_b, "right automaton")->required();
  ci->add_option("--timeout", flags.timeout_s, "seconds before giving up");

  generate_args gen;
  auto* cg = app.add_subcommand("generate", "emit random automata");
  cg->add_option("--size", gen.size, "states")->required();
  cg->add_option("--r", gen.r, "transition density")->required();
  cg->add_option("--f", gen.f, "accepting density")->required();
  cg->add_option("--seed", gen.seed, "first seed")->required();
  cg->add_option("--count", gen.count, "how many (seeds seed, seed+1, ...)");
  cg->add_option("--out", gen.out_prefix,
                 "file prefix; default writes to stdout");

  bench_args ben;
  auto* cb = app.add_subcommand("bench", "random-model sweep to CSV");
  cb->add_option("--sizes", ben.sizes, "sizes, e.g. 30,40 or 10:100:10")
      ->required();
  cb->add_option("--r", ben.rs, "densities, e.g. 1.8 or 0.2:3.0:0.2")
      ->required();
  cb->add_option("--f", ben.fs, "densities, e.g. 0.1:0.9:0.2")->required();
  cb->add_option("--samples", ben.samples, "instances per point")->required();
  cb->add_option("--timeout", ben.timeout_s, "seconds per instance")
      ->required();
  cb->add_option("--out", ben.out, "CSV path (appended)")->required();
  cb->add_option("--jobs", ben.jobs, "worker threads");
  cb->add_option("--check", ben.check, "universal (default) or empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (cu->parsed()) return cmd_universal(file_a, flags);
    if (ce->parsed()) return cmd_empty(file_a, flags);
    if (ci->parsed()) return cmd_include(file_a, file_b, flags);
    if (cg->parsed()) return cmd_generate(gen);
    if (cb->parsed()) {
      ben.no_early_stop = flags.no_early_stop;
      return cmd_bench(ben);
    }
  } catch (const omega::timeout_error&) {
    std::cerr << "TIMEOUT\n";
    return exit_timeout;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
