#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "omega/breakpoint.hpp"
#include "omega/random.hpp"
#include "omega/universal.hpp"

namespace omega {

struct bench_row {
  std::uint32_t n;
  double r, f;
  std::uint64_t seed;
  std::string result;
  std::int64_t time_ms;
};

struct bench_point {
  std::uint32_t n;
  double r, f;
  std::int64_t median_ms;
  double holds_fraction;
  std::uint32_t timeouts;
};

enum class bench_check { universal, empty };

struct bench_config {
  std::vector<std::uint32_t> sizes;
  std::vector<double> rs, fs;
  std::uint32_t samples = 1;
  double timeout_s = -1;  // < 0: none; 0 times out immediately
  bench_check check = bench_check::universal;
  unsigned jobs = 1;
  bool early_stop = true;
};

inline std::string csv_header() { return "n,r,f,seed,result,time_ms"; }

inline std::string csv_line(const bench_row& row) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%u,%g,%g,%llu,%s,%lld", row.n, row.r, row.f,
                static_cast<unsigned long long>(row.seed), row.result.c_str(),
                static_cast<long long>(row.time_ms));
  return buf;
}

// Runs one grid point: `samples` instances with seeds 0..samples-1, each
// timed around the decision call only. Timeouts become rows, never aborts.
// Jobs > 1 runs instances of the point concurrently; rows arrive in
// completion order.
inline bench_point run_bench_point(
    const bench_config& cfg, std::uint32_t n, double r, double f,
    const std::function<void(const bench_row&)>& row_sink) {
  std::vector<std::int64_t> times(cfg.samples);
  std::vector<char> holds(cfg.samples, 0), timed_out(cfg.samples, 0);
  std::mutex sink_mu;
  std::atomic<std::uint32_t> next{0};

  auto worker = [&] {
    for (;;) {
      std::uint32_t i = next.fetch_add(1);
      if (i >= cfg.samples) return;
      nbw a = random_nbw({n, r, f, i});
      solve_options opt;
      opt.early_stop = cfg.early_stop;
      if (cfg.timeout_s >= 0) opt.dl = deadline::after(cfg.timeout_s);
      bench_row row{n, r, f, i, "", 0};
      auto t0 = std::chrono::steady_clock::now();
      try {
        bool yes = cfg.check == bench_check::universal
                       ? is_universal(a, opt)
                       : abw_empty(as_abw(a), opt);
        row.result = cfg.check == bench_check::universal
                         ? (yes ? "universal" : "nonuniversal")
                         : (yes ? "empty" : "nonempty");
        holds[i] = yes;
      } catch (const timeout_error&) {
        row.result = "timeout";
        timed_out[i] = 1;
      }
      row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      times[i] = row.time_ms;
      if (row_sink) {
        std::lock_guard<std::mutex> lk(sink_mu);
        row_sink(row);
      }
    }
  };

  if (cfg.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bench_point pt{n, r, f, 0, 0.0, 0};
  std::uint32_t hold_count = 0;
  for (std::uint32_t i = 0; i < cfg.samples; ++i) {
    hold_count += holds[i];
    pt.timeouts += timed_out[i];
  }
  std::vector<std::int64_t> sorted(times);
  std::sort(sorted.begin(), sorted.end());
  pt.median_ms = cfg.samples ? sorted[(cfg.samples - 1) / 2] : 0;
  pt.holds_fraction =
      cfg.samples ? static_cast<double>(hold_count) / cfg.samples : 0.0;
  return pt;
}

// Full sweep in grid order: sizes outermost, then r, then f.
inline std::vector<bench_point> run_bench(
    const bench_config& cfg,
    const std::function<void(const bench_row&)>& row_sink,
    const std::function<void(const bench_point&)>& point_sink = {}) {
  std::vector<bench_point> out;
  for (auto n : cfg.sizes)
    for (auto r : cfg.rs)
      for (auto f : cfg.fs) {
        out.push_back(run_bench_point(cfg, n, r, f, row_sink));
        if (point_sink) point_sink(out.back());
      }
  return out;
}

}  // namespace omega
