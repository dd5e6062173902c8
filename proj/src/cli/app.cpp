#include "octaflag/cli/app.hpp"

#include "octaflag/cells/cell.hpp"
#include "octaflag/cells/export.hpp"
#include "octaflag/cells/partition.hpp"
#include "octaflag/cli/json_codec.hpp"
#include "octaflag/cli/verify.hpp"
#include "octaflag/error.hpp"
#include "octaflag/flag/distance.hpp"
#include "octaflag/homology/chain_complex.hpp"
#include "octaflag/random.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace octaflag::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_suites(const std::string& list) {
  if (list == "all") return {suite_names().begin(), suite_names().end()};
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) throw UsageError("empty suite name in --suites");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("--suites is empty");
  return out;
}

// Writes to --out when given, else to the standard stream.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Timer {
 public:
  explicit Timer(std::ostream& err, std::string what) : err_(err), what_(std::move(what)) {}
  ~Timer() {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    err_ << what_ << ": " << std::fixed << std::setprecision(3) << dt.count() << " s\n";
  }

 private:
  std::ostream& err_;
  std::string what_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct VerifyArgs {
  std::string suites = "all";
  std::size_t n = 1000;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.tol && !(*a.tol > 0.0)) throw UsageError("--tol must be positive");
  const auto suites = split_suites(a.suites);
  VerifyOptions options{a.n, a.seed, a.tol};
  VerifyReport report;
  {
    Timer timer(err, "verify");
    report = run_verify(suites, options);
  }
  emit(a.out, out, dump(to_json(report)));
  for (const auto& s : report.suites) {
    for (const auto& f : s.failures) err << "FAIL " << s.name << "/" << f.check << "\n";
  }
  return report.passed() ? kExitOk : kExitFailed;
}

struct DistArgs {
  std::vector<double> q;
  std::string format = "text";
};

int cmd_dist(const DistArgs& a, std::ostream& out) {
  if (a.q.size() != 4) throw UsageError("dist needs four numbers a b c d");
  const Quat q{a.q[0], a.q[1], a.q[2], a.q[3]};
  const double norm = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "quaternion is not a unit quaternion (N = " << norm << ")";
    throw DomainError(msg.str());
  }
  const Quat unit = (1.0 / std::sqrt(norm)) * q;
  const double d = flag_distance(basepoint(), phi(unit));
  if (a.format == "json") {
    out << dump(Json{{"schema", 1}, {"command", "dist"}, {"q", to_json(unit)}, {"distance", d}});
  } else if (a.format == "text") {
    out << std::setprecision(17) << d << "\n";
  } else {
    throw UsageError("dist supports --format text|json");
  }
  return kExitOk;
}

int cmd_homology(const std::string& space, std::ostream& out) {
  const Complexes k = build_complexes();
  std::vector<AbelianGroup> h;
  if (space == "s3") {
    h = homology(k.octahedral);
  } else if (space == "flag") {
    h = homology(k.weyl);
  } else if (space == "quotient") {
    h = homology(tensor_trivial(k.weyl));
  } else {
    throw UsageError("unknown space: " + space + " (expected s3, flag or quotient)");
  }
  Json j{{"schema", 1}, {"space", space}};
  j["H"] = homology_json(h)["H"];
  out << dump(j);
  return kExitOk;
}

struct SampleArgs {
  std::string cell = "e3";
  std::size_t translate = 0;
  std::string level = "flag";
  std::size_t n = 100;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out;
};

int cmd_cells_sample(const SampleArgs& a, std::ostream& out) {
  CellLevel level;
  if (a.level == "sphere") {
    level = CellLevel::sphere;
  } else if (a.level == "flag") {
    level = CellLevel::flag;
  } else {
    throw UsageError("--level must be sphere or flag");
  }
  const CellId id = CellId::parse(a.cell, a.translate);
  validate(id, level);
  CounterRng rng(a.seed);
  std::vector<CellSample> samples;
  samples.reserve(a.n);
  for (std::size_t n = 0; n < a.n; ++n) samples.push_back(sample_cell(id, level, rng));
  std::ostringstream text;
  if (a.format == "csv") {
    write_samples_csv(text, samples, level);
  } else if (a.format == "ply") {
    write_samples_ply(text, samples, level);
  } else {
    throw UsageError("cells sample supports --format csv|ply");
  }
  emit(a.out, out, text.str());
  return kExitOk;
}

struct CheckArgs {
  std::size_t n = 10000;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::string out;
};

int cmd_cells_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  CoveringOptions options;
  if (a.tol) {
    if (!(*a.tol > 0.0)) throw UsageError("--tol must be positive");
    options.coverage_tol = *a.tol;
  }
  CoveringReport r;
  {
    Timer timer(err, "cells check");
    r = covering_and_partition_check(a.n, a.seed, options);
  }
  Json mult = Json::object();
  for (const auto& [k, v] : r.multiplicity) mult[std::to_string(k)] = v;
  const bool passed = r.coverage_failures == 0 && r.partition_failures == 0;
  Json j{{"schema", 1},
         {"command", "cells check"},
         {"params", {{"n", a.n}, {"seed", a.seed}, {"coverage_tol", options.coverage_tol},
                     {"boundary_band", options.boundary_band}}},
         {"passed", passed},
         {"coverage_failures", r.coverage_failures},
         {"boundary_band_points", r.boundary_band_points},
         {"partition_checked", r.partition_checked},
         {"partition_failures", r.partition_failures},
         {"multiplicity", mult},
         {"worst_coverage_margin", r.worst_coverage_margin}};
  emit(a.out, out, dump(j));
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cells, distances and homology of the real flag manifold and its quotients", "octaflag"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run invariant suites and print a JSON report");
  v->add_option("--suites", verify.suites, "Comma-separated suites (quat,rot,flag,cells,homology) or all");
  v->add_option("--n", verify.n, "Random cases per sampled check");
  v->add_option("--seed", verify.seed, "Seed of the random generator");
  v->add_option("--tol", verify.tol, "Override every floating-point tolerance");
  v->add_option("--out", verify.out, "Write the report to a file");

  DistArgs dist;
  auto* d = app.add_subcommand("dist", "Distance from the basepoint to phi(a + bi + cj + dk)");
  d->add_option("q", dist.q, "Quaternion coordinates a b c d")->expected(4)->required()->allow_extra_args(false);
  d->add_option("--format", dist.format, "text or json");

  std::string space;
  auto* h = app.add_subcommand("homology", "Integral homology as JSON");
  h->add_option("space", space, "s3, flag or quotient")->required();

  auto* cells = app.add_subcommand("cells", "Sample cells or check the fundamental domain");
  cells->require_subcommand(1);
  SampleArgs sample;
  auto* cs = cells->add_subcommand("sample", "Random points of one cell as CSV or PLY");
  cs->add_option("--cell", sample.cell, "e0, e1_1..e1_3, e2_1..e2_3 or e3");
  cs->add_option("--translate", sample.translate, "Index of the translating element (O for sphere, S3 for flag)");
  cs->add_option("--level", sample.level, "sphere or flag");
  cs->add_option("--n", sample.n, "Number of samples");
  cs->add_option("--seed", sample.seed, "Seed of the random generator");
  cs->add_option("--format", sample.format, "csv or ply");
  cs->add_option("--out", sample.out, "Write to a file");
  CheckArgs check;
  auto* cc = cells->add_subcommand("check", "Covering and partition check on random points of S^3");
  cc->add_option("--n", check.n, "Number of random points");
  cc->add_option("--seed", check.seed, "Seed of the random generator");
  cc->add_option("--tol", check.tol, "Closed membership tolerance for the covering test");
  cc->add_option("--out", check.out, "Write the report to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*v) return cmd_verify(verify, out, err);
    if (*d) return cmd_dist(dist, out);
    if (*h) return cmd_homology(space, out);
    if (*cs) return cmd_cells_sample(sample, out);
    if (*cc) return cmd_cells_check(check, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace octaflag::cli
