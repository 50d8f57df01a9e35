#pragma once

#include "enrfem/constraints.hpp"

namespace enrfem {

struct SolverConfig {
  double tol = 1e-5;       ///< relative convergence tolerance
  int max_iter = 50;       ///< Newton iterations per load step
  int n_increments = 1;    ///< equal load steps
  double eps = 0.0;        ///< penalty; <= 0 means caller-derived default
  ScalingMode scaling = ScalingMode::Optimal;
  bool jacobi = false;
};

struct StepHistory {
  int iterations = 0;
  std::vector<double> dU_norm;
  std::vector<double> dl_norm;
  bool converged = false;
};

enum class CouplingMethod { Mpc, Lm };

/// Direct sparse solve of K x = F (symmetric indefinite allowed).
/// Verifies ||Kx - F|| <= 1e-10 ||F|| and reports singular systems with
/// the offending DOF when it can be identified.
Eigen::VectorXd solve_linear(const SparseMat& K, const Eigen::VectorXd& F);

/// Row/column elimination with symmetric condensation: prescribed values
/// are moved to F, the row and column are cleared and the diagonal set
/// to 1 so residual-form Newton keeps prescribed DOFs fixed.
void apply_dirichlet(SparseMat& K, Eigen::VectorXd& F,
                     const std::vector<std::pair<int, double>>& bcs);

/// One generalized Newton contact step on the Dirichlet-applied system.
/// Each iteration rebuilds the active set from the sign of
/// lhat = lambda + eps * g and solves for (dU, dlambda) simultaneously.
/// U (full size, multipliers included) is updated in place.
/// Throws on non-convergence; the message carries the iteration history.
StepHistory solve_contact_step(const SparseMat& K, const Eigen::VectorXd& F,
                               const std::vector<ConstraintPair>& pairs,
                               Eigen::VectorXd& U, const SolverConfig& config);

/// Mesh coupling in one linear solve. Mpc reduces via the transform and
/// reconstructs U = T Ubar; Lm appends vector multipliers (interface
/// forces are returned in the multiplier block of U).
Eigen::VectorXd solve_coupled(const SparseMat& K, const Eigen::VectorXd& F,
                              const std::vector<ConstraintPair>& pairs,
                              CouplingMethod method,
                              const std::vector<std::pair<int, double>>& bcs,
                              const DofMap& dofmap);

/// kappa = max|eig| / min|eig| after discarding the n_rigid eigenvalues
/// of smallest magnitude. Dense symmetric eigensolve; returns +inf when
/// the smallest retained eigenvalue is zero.
double condition_number(const SparseMat& K, int n_rigid);

/// K_pc = D K D with D = diag(1/sqrt(K_ii)); zero diagonals (multiplier
/// rows) keep scale 1. Negative diagonal entries are rejected.
SparseMat jacobi_precondition(const SparseMat& K);

/// Discrete KKT residuals over converged contact pairs.
struct KktReport {
  double min_gap = 0.0;              ///< most negative g_n (penetration)
  double max_lhat = 0.0;             ///< largest multiplier (pressure <= 0)
  double max_complementarity = 0.0;  ///< max |lambda * g_n|
};

KktReport kkt_check(const std::vector<ConstraintPair>& pairs,
                    const Eigen::VectorXd& U);

}  // namespace enrfem
