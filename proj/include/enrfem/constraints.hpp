#pragma once

#include "enrfem/assembly.hpp"
#include "enrfem/enrichment.hpp"

namespace enrfem {

enum class PairStatus { Tie, Active, Inactive };

/// One interface constraint: the master node displacement against the
/// opposite-side interpolation at the collocation point. Slot layout:
/// [master u, edge node j u, edge node k u, alpha]; node ties use the
/// first two slots only. Coefficients follow N = [1, -Nj, -Nk, -s].
struct ConstraintPair {
  int master = -1;               ///< standard node id
  int enr = -1;                  ///< enriched node id, -1 for a node tie
  std::array<int, 4> dof_base{{-1, -1, -1, -1}};  ///< x-dof of each slot
  Eigen::Vector4d N = Eigen::Vector4d::Zero();
  Vec2 normal{0, 1};             ///< points toward the master body
  double g0 = 0.0;
  double eps = 1.0;              ///< penalty (contact only)
  int lambda_dof = -1;           ///< first multiplier DOF, -1 if none
  PairStatus status = PairStatus::Tie;
};

/// One pair per enriched node plus one per coincident node tie, sorted by
/// master node id. N values come from the host-edge shape functions at
/// the pair's zeta.
std::vector<ConstraintPair> build_constraint_pairs(
    const Mesh& mesh, const PairingResult& pairing, const DofMap& dofmap,
    double eps = 1.0);

/// Unenriched node-to-edge ties from the same pairing (the alpha slot is
/// dropped): master u = edge interpolation. Duplicate ties between the
/// same node pair (two-pass coincidences) are removed.
std::vector<ConstraintPair> standard_tie_pairs(const Mesh& mesh,
                                               const PairingResult& pairing,
                                               const DofMap& dofmap);

/// Assigns `per_pair` multiplier DOFs to each pair and records the total
/// in dofmap.n_lambda. per_pair = 1 for contact, 2 for vector ties.
void assign_multipliers(std::vector<ConstraintPair>& pairs, DofMap& dofmap,
                        int per_pair);

/// g_n = (N (x) I) U_hat . n + g0 over the pair's slots.
double gap(const ConstraintPair& pair, const Eigen::VectorXd& U);

/// C = N^T (x) n over the occupied slots (length 2 * #slots).
Eigen::VectorXd contact_C(const ConstraintPair& pair);

/// Local coupling arrays of one constraint mapped to global DOFs.
struct PairContribution {
  Eigen::MatrixXd k;
  Eigen::VectorXd f;
  std::vector<int> dofs;
};

/// Active augmented-Lagrangian contact block: k = [[eps C C^T, C],[C^T, 0]],
/// f = -[lhat C; g_n] with lhat = lambda + eps g_n. Requires lhat <= 0.
PairContribution contact_contribution(const ConstraintPair& pair,
                                      const Eigen::VectorXd& U);

/// Inactive block: multiplier diagonal -1/eps, force entry lambda/eps, so
/// the Newton update gives dlambda = -lambda. Requires lhat > 0.
PairContribution inactive_contribution(const ConstraintPair& pair,
                                       const Eigen::VectorXd& U);

/// Vector-tie rows for Lagrange-multiplier mesh coupling: d multipliers
/// per pair, saddle-point blocks with zero multiplier diagonal.
PairContribution lm_tie_contribution(const ConstraintPair& pair,
                                     const Eigen::VectorXd& U);

/// Reduction U = T Ubar eliminating dependent DOFs: enriched alphas via
/// alpha = (u_master - Nj u_j - Nk u_k)/s and tie targets via the master.
struct MpcTransform {
  SparseMat T;                    ///< n_full x n_reduced
  std::vector<int> reduced_of;    ///< full dof -> reduced column, -1 if gone
};

MpcTransform build_mpc_transform(const std::vector<ConstraintPair>& pairs,
                                 const DofMap& dofmap);

/// Kbar = T^T K T, Fbar = T^T F.
SystemArrays apply_mpc(const SparseMat& K, const Eigen::VectorXd& F,
                       const SparseMat& T);

}  // namespace enrfem
