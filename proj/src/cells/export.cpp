#include "octaflag/cells/export.hpp"

#include <iomanip>

namespace octaflag {

namespace {

void write_rotation(std::ostream& os, const Matrix3& m, char sep) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) os << sep << m(r, c);
  }
}

}  // namespace

void write_samples_csv(std::ostream& os, std::span<const CellSample> samples, CellLevel level) {
  const auto old = os.precision(17);
  os << "cell,dim,translate,param_s,param_t,";
  if (level == CellLevel::sphere) {
    os << "w,x,y,z\n";
  } else {
    os << "r11,r12,r13,r21,r22,r23,r31,r32,r33\n";
  }
  for (const auto& s : samples) {
    os << s.cell.label() << ',' << s.cell.dim << ',' << s.cell.translate << ',' << s.s << ','
       << s.t;
    if (level == CellLevel::sphere) {
      os << ',' << s.sphere.w << ',' << s.sphere.x << ',' << s.sphere.y << ',' << s.sphere.z;
    } else {
      write_rotation(os, canonical(s.flag).matrix(), ',');
    }
    os << '\n';
  }
  os.precision(old);
}

void write_samples_ply(std::ostream& os, std::span<const CellSample> samples, CellLevel level) {
  const auto old = os.precision(17);
  os << "ply\nformat ascii 1.0\nelement vertex " << samples.size() << '\n';
  for (const char* p : {"x", "y", "z", "w"}) os << "property double " << p << '\n';
  if (level == CellLevel::flag) {
    for (int r = 1; r <= 3; ++r) {
      for (int c = 1; c <= 3; ++c) os << "property double r" << r << c << '\n';
    }
  }
  os << "end_header\n";
  for (const auto& s : samples) {
    os << s.sphere.x << ' ' << s.sphere.y << ' ' << s.sphere.z << ' ' << s.sphere.w;
    if (level == CellLevel::flag) write_rotation(os, canonical(s.flag).matrix(), ' ');
    os << '\n';
  }
  os.precision(old);
}

}  // namespace octaflag
