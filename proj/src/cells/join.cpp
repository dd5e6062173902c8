#include "octaflag/cells/join.hpp"

#include "octaflag/error.hpp"
#include "octaflag/quat/sphere.hpp"

#include <algorithm>
#include <limits>

namespace octaflag {

double JoinCoordinates::min_lambda() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < count; ++n) m = std::min(m, lambda[n]);
  return m;
}

JoinSpec::JoinSpec(std::vector<Quat> vertices, Openness openness)
    : vertices_(std::move(vertices)), openness_(openness) {
  const auto k = static_cast<Eigen::Index>(vertices_.size());
  if (k < 2 || k > 4) throw DomainError("JoinSpec: a join needs 2 to 4 vertices");
  basis_.resize(4, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const Quat& v = vertices_[c];
    require_unit(v);
    basis_.col(c) << v.w, v.x, v.y, v.z;
  }
  for (Eigen::Index c = 0; c + 1 < k; ++c) {
    if ((basis_.col(c) + basis_.col(c + 1)).norm() < 1e-12) {
      throw DomainError("JoinSpec: consecutive vertices are antipodal");
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, Eigen::Dynamic>> svd(basis_);
  const auto& sv = svd.singularValues();
  if (sv(k - 1) < 1e-9 * sv(0)) throw DomainError("JoinSpec: degenerate vertex set");
  pseudo_inverse_ = (basis_.transpose() * basis_).inverse() * basis_.transpose();
}

JoinCoordinates JoinSpec::coordinates(const Quat& x, double span_tol) const {
  JoinCoordinates out;
  out.count = vertices_.size();
  const Eigen::Vector4d xv(x.w, x.x, x.y, x.z);
  // With c = lambda / mu the system reads V c = x.
  const Eigen::VectorXd c = pseudo_inverse_ * xv;
  out.residual = (basis_ * c - xv).norm();
  const double sum = c.sum();
  out.in_span = out.residual <= span_tol && sum > 0.0;
  if (sum != 0.0) {
    out.mu = 1.0 / sum;
    for (std::size_t n = 0; n < out.count; ++n) out.lambda[n] = c(static_cast<Eigen::Index>(n)) / sum;
  }
  return out;
}

bool join_membership(const Quat& x, const JoinSpec& join, Openness openness,
                     const MembershipTolerance& tol) {
  const JoinCoordinates jc = join.coordinates(x, tol.span);
  if (!jc.in_span) return false;
  const double m = jc.min_lambda();
  return openness == Openness::closed ? m >= -tol.closed : m >= tol.open;
}

bool join_membership(const Quat& x, const JoinSpec& join, const MembershipTolerance& tol) {
  return join_membership(x, join, join.openness(), tol);
}

}  // namespace octaflag
