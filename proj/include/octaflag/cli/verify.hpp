#pragma once

#include "octaflag/cli/json_codec.hpp"
#include "octaflag/random.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octaflag {

struct VerifyOptions {
  std::size_t n = 1000;
  std::uint64_t seed = 42;
  /// Replaces every floating-point tolerance when set; exact checks ignore it.
  std::optional<double> tol;
};

/// One failing case: what went in, what was expected, what came out.
struct Failure {
  std::string check;
  Json inputs;
  Json expected;
  Json got;
  std::optional<double> tolerance;
};

struct CheckRecord {
  std::string name;
  bool numeric = false;
  std::size_t cases = 0;
  std::size_t failed_cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return failed_cases == 0; }
};

struct SuiteReport {
  std::string name;
  std::vector<CheckRecord> checks;
  std::vector<Failure> failures;
  /// Computed values worth reporting (homology groups, covering counts, ...).
  Json results = Json::object();

  bool passed() const { return failures.empty(); }
};

/// Handle given to each check body.
class Check {
 public:
  Check(std::string name, std::optional<double> tolerance, const VerifyOptions& options,
        std::uint64_t stream);

  std::size_t n() const { return options_.n; }
  std::uint64_t seed() const { return options_.seed; }
  /// Effective tolerance of a numeric check.
  double tol() const { return record_.tolerance; }
  CounterRng& rng() { return rng_; }

  /// Exact case; `details` returns {"inputs", "expected", "got"} and is only
  /// called for the first failing case.
  void expect(bool ok, const std::function<Json()>& details = {});
  /// Numeric case with error `err` (NaN fails); details are kept for the worst case.
  void observe(double err, const std::function<Json()>& details = {});

  const CheckRecord& record() const { return record_; }
  const std::optional<Failure>& failure() const { return failure_; }
  /// Record an exception escaping the body.
  void fail_with(const std::string& what);

 private:
  CheckRecord record_;
  const VerifyOptions& options_;
  CounterRng rng_;
  std::optional<Failure> failure_;
  double worst_ = -1.0;
};

class SuiteRunner {
 public:
  SuiteRunner(std::string name, const VerifyOptions& options);

  /// Exact check.
  void exact(const std::string& check, const std::function<void(Check&)>& body);
  /// Numeric check with a default tolerance (replaced by options.tol).
  void numeric(const std::string& check, double default_tol, const std::function<void(Check&)>& body);

  Json& results() { return report_.results; }
  SuiteReport finish() { return std::move(report_); }

 private:
  void run(const std::string& check, std::optional<double> tol, const std::function<void(Check&)>& body);

  const VerifyOptions& options_;
  SuiteReport report_;
};

SuiteReport quat_suite(const VerifyOptions& options);
SuiteReport rot_suite(const VerifyOptions& options);
SuiteReport flag_suite(const VerifyOptions& options);
SuiteReport cells_suite(const VerifyOptions& options);
SuiteReport homology_suite(const VerifyOptions& options);

/// {"quat", "rot", "flag", "cells", "homology"}
std::span<const std::string_view> suite_names();
/// Throws DomainError for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteReport> suites;

  bool passed() const;
};

VerifyReport run_verify(std::span<const std::string> suites, const VerifyOptions& options);
Json to_json(const VerifyReport& report);

}  // namespace octaflag
