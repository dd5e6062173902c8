#pragma once

#include "octaflag/cells/cell.hpp"

#include <ostream>
#include <span>

namespace octaflag {

/// Header `cell,dim,translate,param_s,param_t,w,x,y,z` at the sphere level and
/// `cell,dim,translate,param_s,param_t,r11,...,r33` (canonical representative,
/// row-major) at the flag level. Numbers use 17 significant digits.
void write_samples_csv(std::ostream& os, std::span<const CellSample> samples, CellLevel level);

/// ASCII PLY point cloud, one vertex per sample: x y z w from the S^3 point,
/// followed by r11..r33 at the flag level.
void write_samples_ply(std::ostream& os, std::span<const CellSample> samples, CellLevel level);

}  // namespace octaflag
