#include "octaflag/cells/partition.hpp"

#include "octaflag/cells/cell.hpp"
#include "octaflag/cells/fundamental_domain.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/random.hpp"
#include "octaflag/rot/so3.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace octaflag {

namespace {

struct BatchResult {
  std::size_t coverage_failures = 0;
  std::size_t band = 0;
  std::size_t checked = 0;
  std::size_t partition_failures = 0;
  std::map<std::size_t, std::size_t> multiplicity;
  double worst_margin = std::numeric_limits<double>::infinity();
};

struct Tables {
  std::vector<Quat> group;
  std::vector<JoinSpec> tetrahedra;
  std::vector<std::pair<CellId, const std::vector<JoinSpec>*>> cells;
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (const auto& g : binary_octahedral_group().elements()) out.group.push_back(to_numeric(g));
    out.tetrahedra = fundamental_domain_octahedral(Openness::closed);
    for (const auto& id : representative_cells()) out.cells.emplace_back(id, &cell_pieces(id));
    return out;
  }();
  return t;
}

void check_point(const Quat& x, const CoveringOptions& opt, BatchResult& r) {
  const Tables& t = tables();
  const MembershipTolerance tol{opt.coverage_tol, 1e-10, 1e-9};
  // Best barycentric minimum over translated tetrahedra, and whether any
  // translated tetrahedron has the point inside its boundary band.
  double best = -std::numeric_limits<double>::infinity();
  bool near_boundary = false;
  std::size_t hits = 0;
  for (const Quat& g : t.group) {
    const Quat y = x * g;
    for (const auto& tet : t.tetrahedra) {
      const JoinCoordinates c = tet.coordinates(y);
      if (!c.in_span) continue;
      const double m = c.min_lambda();
      best = std::max(best, m);
      if (std::abs(m) < opt.boundary_band) near_boundary = true;
    }
    for (const auto& [id, pieces] : t.cells) {
      if (id.dim == 0) {
        if (max_abs_diff(y, Quat::identity()) <= tol.span) ++hits;
        continue;
      }
      for (const auto& piece : *pieces) {
        if (join_membership(y, piece, Openness::open, tol)) ++hits;
      }
    }
  }
  r.worst_margin = std::min(r.worst_margin, best);
  if (best < -opt.coverage_tol) ++r.coverage_failures;
  if (near_boundary) {
    ++r.band;
    return;
  }
  ++r.checked;
  ++r.multiplicity[hits];
  if (hits != 1) ++r.partition_failures;
}

template <typename Work>
void run_batches(std::size_t batches, unsigned workers, Work&& work) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, batches));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < batches; b = next++) work(b);
    });
  }
}

}  // namespace

CoveringReport covering_and_partition_check(std::size_t n, std::uint64_t seed,
                                            const CoveringOptions& options) {
  tables();
  const std::size_t batches = std::max<std::size_t>(1, options.batches);
  std::vector<BatchResult> results(batches);
  const CounterRng root(seed);
  run_batches(batches, options.workers, [&](std::size_t b) {
    CounterRng rng = root.substream(b);
    const std::size_t begin = n * b / batches, end = n * (b + 1) / batches;
    for (std::size_t p = begin; p < end; ++p) check_point(random_unit_quaternion(rng), options, results[b]);
  });

  CoveringReport report;
  report.n = n;
  report.worst_coverage_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    report.coverage_failures += r.coverage_failures;
    report.boundary_band_points += r.band;
    report.partition_checked += r.checked;
    report.partition_failures += r.partition_failures;
    for (const auto& [k, v] : r.multiplicity) report.multiplicity[k] += v;
    report.worst_coverage_margin = std::min(report.worst_coverage_margin, r.worst_margin);
  }
  return report;
}

WeylDomainReport weyl_fundamental_domain_check(std::size_t n, std::uint64_t seed, double tol) {
  WeylDomainReport report;
  report.n = n;
  CounterRng rng(seed);
  const MembershipTolerance mt{tol, 1e-10, 1e-9};
  for (std::size_t p = 0; p < n; ++p) {
    const FlagPoint f(covering_map(random_unit_quaternion(rng)));
    std::size_t hits = 0;
    for (const auto& w : WeylElement::all()) {
      if (in_flag_cell(f * w, CellId{3, 1, 0}, Openness::closed, mt)) ++hits;
    }
    ++report.translate_hits[hits];
    if (hits == 0) ++report.failures;
  }
  return report;
}

std::map<int, std::size_t> sphere_cell_counts() {
  std::map<int, std::size_t> counts;
  const std::size_t order = binary_octahedral_group().size();
  for (const auto& id : representative_cells()) counts[id.dim] += order;
  return counts;
}

long long euler_characteristic(const std::map<int, std::size_t>& counts) {
  long long chi = 0;
  for (const auto& [dim, c] : counts) chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(c);
  return chi;
}

}  // namespace octaflag
