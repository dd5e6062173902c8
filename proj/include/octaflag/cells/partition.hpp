#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

namespace octaflag {

struct CoveringOptions {
  double coverage_tol = 1e-9;   // closed membership slack for the covering test
  double boundary_band = 1e-6;  // points this close to a cell boundary skip the partition test
  std::size_t batches = 16;     // fixed batch split; each batch draws from its own substream
  unsigned workers = 0;         // 0: hardware concurrency
};

struct CoveringReport {
  std::size_t n = 0;
  std::size_t coverage_failures = 0;
  std::size_t boundary_band_points = 0;
  std::size_t partition_checked = 0;
  std::size_t partition_failures = 0;
  /// How many points met k translated open cells, over the checked points.
  std::map<std::size_t, std::size_t> multiplicity;
  /// Over all points, the worst (smallest) best-translate barycentric minimum.
  double worst_coverage_margin = 0.0;
};

/// n uniform points of S^3 (normalized Gaussian 4-vectors). (a) Each point has
/// a right O-translate in the closed inverted fundamental domain. (b) Points
/// farther than the band from every cell boundary lie in exactly one
/// (translate, open cell) pair. Distance to a boundary is measured by the
/// smallest barycentric coordinate over the translated tetrahedra.
CoveringReport covering_and_partition_check(std::size_t n, std::uint64_t seed,
                                            const CoveringOptions& options = {});

struct WeylDomainReport {
  std::size_t n = 0;
  std::size_t failures = 0;
  /// Number of Weyl translates landing in the closed 3-cell, per point.
  std::map<std::size_t, std::size_t> translate_hits;
};

/// Random flag points (from random rotations) each have a Weyl translate in
/// the closure of the flag 3-cell.
WeylDomainReport weyl_fundamental_domain_check(std::size_t n, std::uint64_t seed,
                                               double tol = 1e-9);

/// Open cells of the S^3 decomposition by dimension: 48 (1, 3, 3, 1).
std::map<int, std::size_t> sphere_cell_counts();
/// Alternating sum of sphere_cell_counts().
long long euler_characteristic(const std::map<int, std::size_t>& counts);

}  // namespace octaflag
