#pragma once

// Check reports and the deterministic suite runner behind `verify`.
// Reports are JSON lines, one object per check, emitted in registration
// order regardless of worker completion order. Timings are suppressed by
// default so that identical config + seed reproduces byte-identical output.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace dslab {

enum class CheckStatus { Pass, Fail, Warn };

struct CheckReport {
  std::string suite;
  std::string name;
  std::string anchor = "plumbing";  // formula tag this check pins, or "plumbing"
  double residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
  long long runtime_ms = 0;

  static CheckReport make(std::string suite, std::string name, std::string anchor,
                          double residual, double tolerance) {
    CheckReport r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.residual = residual;
    r.tolerance = tolerance;
    r.status = (residual <= tolerance) ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
  }

  static CheckReport warn(std::string suite, std::string name, std::string anchor,
                          double residual) {
    CheckReport r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.residual = residual;
    r.tolerance = 0.0;
    r.status = CheckStatus::Warn;
    return r;
  }

  std::string to_json(bool with_timing = false) const {
    char buf[512];
    const char* st = status == CheckStatus::Pass   ? "pass"
                     : status == CheckStatus::Fail ? "fail"
                                                   : "warn";
    std::string out = "{\"suite\":\"" + suite + "\",\"name\":\"" + name +
                      "\",\"anchor\":\"" + anchor + "\"";
    std::snprintf(buf, sizeof(buf), ",\"residual\":%.17g,\"tolerance\":%.17g", residual,
                  tolerance);
    out += buf;
    out += std::string(",\"status\":\"") + st + "\"";
    if (with_timing) {
      std::snprintf(buf, sizeof(buf), ",\"runtime_ms\":%lld", runtime_ms);
      out += buf;
    }
    out += "}";
    return out;
  }
};

class SuiteRunner {
 public:
  using CheckFn = std::function<std::vector<CheckReport>()>;

  void add(std::string suite, CheckFn fn) {
    jobs_.push_back({std::move(suite), std::move(fn)});
  }

  static int thread_cap() {
    if (const char* env = std::getenv("DESITTER_LAB_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
  }

  // Run all jobs (possibly in parallel) and return reports in job order.
  std::vector<CheckReport> run() const {
    std::vector<std::vector<CheckReport>> slots(jobs_.size());
    std::atomic<size_t> next{0};
    int workers = std::min<int>(thread_cap(), static_cast<int>(jobs_.size()));
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= jobs_.size()) return;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckReport> reports;
        try {
          reports = jobs_[i].fn();
        } catch (const std::exception& e) {
          CheckReport r;
          r.suite = jobs_[i].suite;
          r.name = std::string("exception: ") + e.what();
          r.residual = 1.0;
          r.tolerance = 0.0;
          r.status = CheckStatus::Fail;
          reports.push_back(r);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        for (auto& r : reports) r.runtime_ms = ms;
        slots[i] = std::move(reports);
      }
    };
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    std::vector<CheckReport> out;
    for (auto& s : slots)
      for (auto& r : s) out.push_back(std::move(r));
    return out;
  }

 private:
  struct Job {
    std::string suite;
    CheckFn fn;
  };
  std::vector<Job> jobs_;
};

}  // namespace dslab
