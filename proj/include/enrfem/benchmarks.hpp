#pragma once

#include <string>
#include <vector>

#include "enrfem/assembly.hpp"
#include "enrfem/solver.hpp"
#include "enrfem/verify.hpp"

namespace enrfem {

/// Interface coupling / contact treatment of a benchmark run.
enum class Method {
  MpcSingle,      ///< conventional single-pass node-to-edge tying
  MpcTwoPassStd,  ///< conventional two-pass tying (both sides constrained)
  MpcEnriched,    ///< enriched coupling, constraint elimination
  LmEnriched,     ///< enriched coupling, vector Lagrange multipliers
  AlmEnriched     ///< enriched frictionless contact, augmented Lagrangian
};

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Flat-punch-on-substrate constant-stress transmission test.
struct PatchOptions {
  Method method = Method::AlmEnriched;
  ScalingMode scaling = ScalingMode::Optimal;
  double eps = 0.0;  ///< contact penalty; <= 0 selects E_min / h
  double tol = 1e-5;
};

struct PatchOutcome {
  Mesh mesh;
  Eigen::VectorXd U;  ///< full DOF vector of the converged state
  std::vector<Eigen::Vector3d> stresses;
  PatchReport report;  ///< vs the uniform state (0, -1, 0)
  /// Recovered interface pressure at each collocation point (x1, p).
  std::vector<std::pair<double, double>> tractions;
  double pressure_spread = 0.0;  ///< max |p_i - p_mean| / |p_mean|
  int iterations = 0;            ///< contact iterations (0 for tying runs)
};

PatchOutcome run_patch_benchmark(const PatchOptions& opt);

/// Plate-with-hole refinement study against the exact hole-in-plate field.
struct ConvergenceRow {
  double h = 0.0;  ///< mean element size
  int n_d = 0;     ///< displacement DOFs (standard + enriched)
  double l2 = 0.0;
  double energy = 0.0;
};

struct ConvergenceOutcome {
  std::vector<ConvergenceRow> rows;
  double l2_rate = 0.0;      ///< decay order vs n_d (positive)
  double energy_rate = 0.0;  ///< decay order vs n_d (positive)
};

ConvergenceOutcome run_convergence_benchmark(
    const std::vector<std::string>& mesh_paths, Method method,
    ScalingMode scaling = ScalingMode::Optimal);

/// Condition numbers of the coupled two-element punch/substrate system as
/// the punch slides along the substrate. ns = unscaled, os = optimal
/// scaling, pc = unscaled + Jacobi preconditioner.
struct MovingConditionRow {
  double x1 = 0.0;
  double mpc_ns = 0.0, mpc_os = 0.0, mpc_pc = 0.0;
  double alm_ns = 0.0, alm_os = 0.0, alm_pc = 0.0;
};

std::vector<MovingConditionRow> moving_punch_conditioning(
    int n_positions = 61);

/// Condition number growth under uniform refinement at a fixed punch
/// position (with and without Jacobi preconditioning).
struct RefineConditionRow {
  double h = 0.0;
  int n_d = 0;
  double mpc = 0.0, mpc_pc = 0.0;
  double alm = 0.0, alm_pc = 0.0;
};

std::vector<RefineConditionRow> refinement_conditioning(int levels = 3);

/// Cylinder-on-substrate contact under incremental loading.
struct HertzStepRow {
  int increment = 0;
  int iterations = 0;
};

struct HertzPoint {
  double x1 = 0.0;
  double p_num = 0.0;
  double p_exact = 0.0;
  double rel_err = 0.0;  ///< relative to the peak analytic pressure
};

struct HertzOutcome {
  Mesh mesh;
  Eigen::VectorXd U;
  DofMap dofmap;
  std::vector<Eigen::Vector3d> stresses;
  std::vector<HertzStepRow> steps;
  std::vector<HertzPoint> pressure;  ///< active collocation points
  double b = 0.0;                    ///< analytic contact half-width
  double p0 = 0.0;                   ///< analytic peak pressure
  double total_force = 0.0;          ///< sum of contact forces
  double max_interior_rel_err = 0.0; ///< over |x1| <= 0.8 b
  int max_iterations = 0;            ///< worst increment
};

HertzOutcome run_hertz_benchmark(const std::string& mesh_path,
                                 double eps = 0.0, double tol = 1e-5,
                                 int n_increments = 20);

}  // namespace enrfem
