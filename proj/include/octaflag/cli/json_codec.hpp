#pragma once

#include "octaflag/flag/flag_point.hpp"
#include "octaflag/homology/chain_complex.hpp"
#include "octaflag/quat/quaternion.hpp"
#include "octaflag/rot/rotation.hpp"
#include "octaflag/rot/skew.hpp"

#include <json.hpp>

#include <vector>

namespace octaflag {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become numbers, larger ones strings.
Json integer_json(const Integer& n);
/// [a_num, a_den, b_num, b_den] for a + b sqrt2.
Json to_json(const QSqrt2& s);
/// {"w": [...], "x": [...], "y": [...], "z": [...]}
Json to_json(const ExactQuat& q);
/// [w, x, y, z]
Json to_json(const Quat& q);
/// 9 numbers, row-major.
Json to_json(const Matrix3& m);
Json to_json(const Rotation& r);
/// Canonical representative.
Json to_json(const FlagPoint& f);
/// vee vector
Json to_json(const SkewMatrix& s);
/// {"rank": r, "torsion": [...]}
Json to_json(const AbelianGroup& g);
/// {"H": [...]}
Json homology_json(const std::vector<AbelianGroup>& h);

}  // namespace octaflag
