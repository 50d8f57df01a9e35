#pragma once

#include <Eigen/Dense>

namespace enrfem {

/// 1D analogue used to pin down the scaling-invariance property: two unit
/// rods (unit axial stiffness, unit length), the first carrying an
/// enriched DOF at xi in (0,1) with scaling s, the second attached there
/// through its end node u4. DOF order: u1, u2, u3, u4, alpha.

/// Unconstrained 5x5 stiffness; entry (4,4) = s^2 (1/xi + 1/(1-xi)).
Eigen::Matrix<double, 5, 5> rod1d_stiffness(double xi, double s);

/// Elimination transform, last row [-(1-xi)/s, -xi/s, 0, 1/s].
Eigen::Matrix<double, 5, 4> rod1d_transform(double xi, double s);

/// T^T K T.
Eigen::Matrix4d rod1d_reduced(double xi, double s);

/// Closed form of the reduced matrix; independent of s.
Eigen::Matrix4d rod1d_reduced_closed_form(double xi);

}  // namespace enrfem
