#pragma once

#include "octaflag/flag/flag_point.hpp"

#include <complex>
#include <span>

namespace octaflag {

/// Quotient distance on F(R) = SO3(R)/T(R) for the metric induced by g8:
/// the minimum over the four torus elements t of so3_distance(R1, R2 t).
double flag_distance(const FlagPoint& a, const FlagPoint& b);

/// Same distance from the basepoint to phi(q), computed on S^3/Q8 instead:
/// min over g in Q8 of d_S3(1, g q), i.e. the minimum of the eight values
/// arccos(+-a), arccos(+-b), arccos(+-c), arccos(+-d) for q = a + bi + cj + dk.
double flag_distance_from_basepoint(const Quat& q);

/// d(phi(p), phi(q)) by left translation to the basepoint: the
/// coordinate formula applied to p^{-1} q.
double flag_distance_quaternionic(const Quat& p, const Quat& q);

/// arccos(|<p, q>| / (|p| |q|)): the Fubini-Study distance on CP^n for the
/// Hermitian product. Throws DomainError on a zero vector or size mismatch.
double fubini_study_distance(std::span<const std::complex<double>> p,
                             std::span<const std::complex<double>> q);

/// Real analogue on RP^n = S^n/{+-1}: arccos(|<p, q>| / (|p| |q|)).
double fubini_study_distance(std::span<const double> p, std::span<const double> q);

}  // namespace octaflag
