#include "octaflag/cli/json_codec.hpp"

#include <limits>

namespace octaflag {

Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
    return n.convert_to<long long>();
  }
  return n.str();
}

Json to_json(const QSqrt2& s) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return Json::array({integer_json(Integer(numerator(s.rational_part()))),
                      integer_json(Integer(denominator(s.rational_part()))),
                      integer_json(Integer(numerator(s.sqrt2_part()))),
                      integer_json(Integer(denominator(s.sqrt2_part())))});
}

Json to_json(const ExactQuat& q) {
  return Json{{"w", to_json(q.w)}, {"x", to_json(q.x)}, {"y", to_json(q.y)}, {"z", to_json(q.z)}};
}

Json to_json(const Quat& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json to_json(const Matrix3& m) {
  Json out = Json::array();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out.push_back(m(r, c));
  }
  return out;
}

Json to_json(const Rotation& r) { return to_json(r.matrix()); }

Json to_json(const FlagPoint& f) { return to_json(canonical(f)); }

Json to_json(const SkewMatrix& s) {
  const Vector3& v = s.vee();
  return Json::array({v.x(), v.y(), v.z()});
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
  return Json{{"rank", g.rank}, {"torsion", torsion}};
}

Json homology_json(const std::vector<AbelianGroup>& h) {
  Json groups = Json::array();
  for (const auto& g : h) groups.push_back(to_json(g));
  return Json{{"H", groups}};
}

}  // namespace octaflag
