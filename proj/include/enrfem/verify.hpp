#pragma once

#include <functional>

#include "enrfem/assembly.hpp"

namespace enrfem {

/// Exact displacement and stress fields of a named benchmark.
struct ExactField {
  std::function<Vec2(const Vec2&)> u;
  std::function<Eigen::Vector3d(const Vec2&)> sigma;  ///< Voigt (11,22,12)
};

/// Infinite plate with a circular hole of radius a under remote uniaxial
/// tension sigma_inf along x1, plane strain. Points inside the hole are
/// rejected.
ExactField kirsch_field(double sigma_inf, double a, double E, double nu);

struct HertzResult {
  double p = 0.0;      ///< contact pressure at x1
  double b = 0.0;      ///< contact half-width
  double Estar = 0.0;  ///< effective modulus
};

/// Cylinder-on-halfplane pressure profile:
/// 1/E* = (1-nu1^2)/E1 + (1-nu2^2)/E2, b = 2 sqrt(2 r^2 tbar/(pi E*)),
/// p(x1) = 4 r tbar/(pi b^2) sqrt(b^2 - x1^2). Requires |x1| <= b.
/// Equivalent to the classical half-width a^2 = 4 P R/(pi E*), P = 2 r tbar.
HertzResult hertz_pressure(double x1, double r, double tbar, double E1,
                           double nu1, double E2, double nu2);

/// Relative L2 displacement error, 3-point quadrature per integration
/// triangle (one order above the assembly rule).
double l2_error(const Eigen::VectorXd& U, const ExactField& exact,
                const Mesh& mesh, const IntegrationHierarchy& hierarchy,
                const std::vector<EnrichedNode>& enriched,
                const DofMap& dofmap);

/// Relative energy-norm error using the same quadrature; exact strains
/// are recovered from exact stresses per body through D^{-1}.
double energy_error(const Eigen::VectorXd& U, const ExactField& exact,
                    const Mesh& mesh, const IntegrationHierarchy& hierarchy,
                    const std::vector<EnrichedNode>& enriched,
                    const DofMap& dofmap, const MaterialMap& mats);

/// Least-squares slope of log(y) against log(x).
double fit_rate(const std::vector<std::pair<double, double>>& series);

struct PatchReport {
  double max_rel_dev = 0.0;
  bool pass = false;
};

/// Compares per-element stresses against a constant expected state.
/// Deviations are measured relative to the largest expected component.
PatchReport patch_check(const std::vector<Eigen::Vector3d>& stresses,
                        const Eigen::Vector3d& expected, double rtol);

}  // namespace enrfem
