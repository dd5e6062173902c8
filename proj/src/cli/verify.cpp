#include "octaflag/cli/verify.hpp"

#include "octaflag/error.hpp"

#include <array>
#include <cmath>

namespace octaflag {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Failure make_failure(const std::string& check, const Json& details, std::optional<double> tol) {
  Failure f{check, Json(), Json(), Json(), tol};
  if (details.is_object()) {
    if (details.contains("inputs")) f.inputs = details["inputs"];
    if (details.contains("expected")) f.expected = details["expected"];
    if (details.contains("got")) f.got = details["got"];
  }
  return f;
}

}  // namespace

Check::Check(std::string name, std::optional<double> tolerance, const VerifyOptions& options,
             std::uint64_t stream)
    : options_(options), rng_(options.seed, stream) {
  record_.name = std::move(name);
  record_.numeric = tolerance.has_value();
  if (tolerance) record_.tolerance = options.tol.value_or(*tolerance);
}

void Check::expect(bool ok, const std::function<Json()>& details) {
  ++record_.cases;
  if (ok) return;
  ++record_.failed_cases;
  if (!failure_) failure_ = make_failure(record_.name, details ? details() : Json(), std::nullopt);
}

void Check::observe(double err, const std::function<Json()>& details) {
  ++record_.cases;
  const bool bad = !(err <= record_.tolerance);
  if (bad) ++record_.failed_cases;
  const double key = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
  if (key > worst_) {
    worst_ = key;
    record_.max_error = std::isnan(err) ? std::numeric_limits<double>::quiet_NaN() : err;
    if (bad) failure_ = make_failure(record_.name, details ? details() : Json(), record_.tolerance);
  }
}

void Check::fail_with(const std::string& what) {
  ++record_.cases;
  ++record_.failed_cases;
  Failure f{record_.name, Json(), Json(), Json("exception: " + what), std::nullopt};
  if (record_.numeric) f.tolerance = record_.tolerance;
  failure_ = std::move(f);
}

SuiteRunner::SuiteRunner(std::string name, const VerifyOptions& options) : options_(options) {
  report_.name = std::move(name);
}

void SuiteRunner::exact(const std::string& check, const std::function<void(Check&)>& body) {
  run(check, std::nullopt, body);
}

void SuiteRunner::numeric(const std::string& check, double default_tol,
                          const std::function<void(Check&)>& body) {
  run(check, default_tol, body);
}

void SuiteRunner::run(const std::string& check, std::optional<double> tol,
                      const std::function<void(Check&)>& body) {
  Check c(check, tol, options_, fnv1a(report_.name + "/" + check));
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail_with(e.what());
  }
  report_.checks.push_back(c.record());
  if (!c.record().passed() && c.failure()) report_.failures.push_back(*c.failure());
}

std::span<const std::string_view> suite_names() {
  static constexpr std::array<std::string_view, 5> names = {"quat", "rot", "flag", "cells", "homology"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "quat") return quat_suite(options);
  if (name == "rot") return rot_suite(options);
  if (name == "flag") return flag_suite(options);
  if (name == "cells") return cells_suite(options);
  if (name == "homology") return homology_suite(options);
  throw DomainError("unknown suite: " + std::string(name));
}

bool VerifyReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

VerifyReport run_verify(std::span<const std::string> suites, const VerifyOptions& options) {
  for (const auto& s : suites) {
    bool known = false;
    for (auto n : suite_names()) known |= s == n;
    if (!known) throw DomainError("unknown suite: " + s);
  }
  VerifyReport report{options, {}};
  for (const auto& s : suites) report.suites.push_back(run_suite(s, options));
  return report;
}

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const VerifyReport& report) {
  Json suites = Json::array();
  std::size_t checks = 0, failures = 0;
  for (const auto& s : report.suites) {
    Json cs = Json::array();
    for (const auto& c : s.checks) {
      Json j{{"name", c.name}, {"kind", c.numeric ? "numeric" : "exact"}, {"cases", c.cases},
             {"failed_cases", c.failed_cases}, {"passed", c.passed()}};
      if (c.numeric) {
        j["max_error"] = number_or_null(c.max_error);
        j["tolerance"] = c.tolerance;
      }
      cs.push_back(std::move(j));
    }
    Json fs = Json::array();
    for (const auto& f : s.failures) {
      Json j{{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}};
      j["tolerance"] = f.tolerance ? Json(*f.tolerance) : Json(nullptr);
      fs.push_back(std::move(j));
    }
    checks += s.checks.size();
    failures += s.failures.size();
    suites.push_back(Json{{"name", s.name},
                          {"passed", s.passed()},
                          {"checks", cs},
                          {"failures", fs},
                          {"results", s.results}});
  }
  Json params{{"n", report.options.n}, {"seed", report.options.seed}};
  params["tol"] = report.options.tol ? Json(*report.options.tol) : Json(nullptr);
  return Json{{"schema", 1},
              {"command", "verify"},
              {"params", params},
              {"passed", report.passed()},
              {"summary", {{"checks", checks}, {"failed_checks", failures}}},
              {"suites", suites}};
}

}  // namespace octaflag
