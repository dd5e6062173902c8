#pragma once

#include "octaflag/quat/quaternion.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <vector>

namespace octaflag {

enum class Openness { open, closed };

/// Solution of sum(lambda_n v_n) = mu x, sum(lambda_n) = 1 for a join.
struct JoinCoordinates {
  bool in_span = false;
  double residual = 0.0;
  double mu = 0.0;
  std::size_t count = 0;
  std::array<double, 4> lambda{};

  double min_lambda() const;
};

/// Thresholds for the membership solve.
struct MembershipTolerance {
  double closed = 1e-10;  // closed: lambda_n >= -closed
  double open = 1e-10;    // open: lambda_n >= open
  double span = 1e-9;     // x must lie in span(v) up to this residual
};

/// Curved join x_1 * x_2 * ... * x_k (k = 2..4) of unit quaternions: the
/// radial projection onto S^3 of the convex hull of the vertices, or of its
/// relative interior when open.
class JoinSpec {
 public:
  /// Throws DomainError for a vertex count outside 2..4, a non-unit vertex,
  /// consecutive antipodal vertices or a degenerate (dependent) vertex set.
  JoinSpec(std::vector<Quat> vertices, Openness openness);

  const std::vector<Quat>& vertices() const { return vertices_; }
  Openness openness() const { return openness_; }
  /// k - 1 for k vertices.
  std::size_t dimension() const { return vertices_.size() - 1; }

  JoinSpec with_openness(Openness o) const { return JoinSpec(vertices_, o); }

  JoinCoordinates coordinates(const Quat& x, double span_tol = 1e-9) const;

 private:
  std::vector<Quat> vertices_;
  Openness openness_;
  Eigen::Matrix<double, Eigen::Dynamic, 4> pseudo_inverse_;
  Eigen::Matrix<double, 4, Eigen::Dynamic> basis_;
};

/// x lies on the ray through the (open or closed) hull of the join's vertices.
bool join_membership(const Quat& x, const JoinSpec& join, const MembershipTolerance& tol = {});
/// Same test with the openness given explicitly instead of the join's own.
bool join_membership(const Quat& x, const JoinSpec& join, Openness openness,
                     const MembershipTolerance& tol = {});

}  // namespace octaflag
