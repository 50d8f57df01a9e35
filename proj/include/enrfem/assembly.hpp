#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <vector>

#include "enrfem/enrichment.hpp"
#include "enrfem/mesh.hpp"

namespace enrfem {

using SparseMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Plane-strain constitutive matrix (Voigt: 11, 22, 12).
Eigen::Matrix3d plane_strain_D(double E, double nu);

struct Material {
  double E = 1.0;
  double nu = 0.0;
  Eigen::Matrix3d D = Eigen::Matrix3d::Identity();

  Material() = default;
  Material(double E_, double nu_) : E(E_), nu(nu_), D(plane_strain_D(E_, nu_)) {}
};

/// Global DOF numbering: u-block (2 per standard node), then alpha-block
/// (2 per enriched node), then multiplier block.
struct DofMap {
  int n_nodes = 0;
  int n_enriched = 0;
  int n_lambda = 0;

  int u(int node, int c) const { return 2 * node + c; }
  int a(int enr, int c) const { return 2 * (n_nodes + 0) + 2 * enr + c; }
  int l(int k) const { return 2 * (n_nodes + n_enriched) + k; }
  int size() const { return 2 * (n_nodes + n_enriched) + n_lambda; }
  int n_displacement() const { return 2 * (n_nodes + n_enriched); }
};

/// Local arrays of one parent element. DOF order: u of the 3 parent nodes
/// (x,y interleaved), then alpha of the enrichments listed in the parent's
/// split, in split order.
struct ElementArrays {
  Eigen::MatrixXd k;
  Eigen::VectorXd f;
  std::vector<int> dofs;  ///< global DOF indices, same order as k rows
};

/// Stiffness and body-force arrays, one-point quadrature per (integration)
/// triangle. Enriched gradients are constant per sub-triangle.
ElementArrays element_arrays(int elem, const Mesh& mesh,
                             const IntegrationHierarchy& hierarchy,
                             const std::vector<EnrichedNode>& enriched,
                             const Material& mat, const DofMap& dofmap,
                             const Vec2& body_force = Vec2::Zero());

/// Constant-strain B matrix of a parent triangle (3x6).
Eigen::Matrix<double, 3, 6> cst_B(const Vec2& x0, const Vec2& x1,
                                  const Vec2& x2);

/// Values of the parent linear shape functions of element `elem` at p.
Eigen::Vector3d parent_shape_values(const Mesh& mesh, int elem, const Vec2& p);

/// Strain-displacement matrix on one integration triangle, columns in the
/// element DOF order (parent u then alphas in split order).
Eigen::MatrixXd integration_B(const Mesh& mesh, int elem,
                              const IntegrationTri& tri,
                              const ParentSplit& split,
                              const std::vector<EnrichedNode>& enriched);

/// Global DOF indices of an element in local array order.
std::vector<int> element_dof_indices(const Mesh& mesh, int elem,
                                     const IntegrationHierarchy& hierarchy,
                                     const DofMap& dofmap);

/// Consistent nodal loads for tractions on boundary segments. The traction
/// is a function of position (piecewise constant fields supported exactly:
/// integration splits at enriched nodes and at traction discontinuities
/// given by `break_x1`). Adds into F.
void integrate_traction(const std::vector<Segment>& segments,
                        const std::function<Vec2(const Vec2&)>& traction,
                        const Mesh& mesh, const IntegrationHierarchy& hierarchy,
                        const std::vector<EnrichedNode>& enriched,
                        const DofMap& dofmap, Eigen::VectorXd& F,
                        const std::vector<double>& break_x1 = {});

struct SystemArrays {
  SparseMat K;
  Eigen::VectorXd F;
};

/// Per-body material lookup.
using MaterialMap = std::vector<Material>;  // indexed by body id

/// Assembles K and the body-force part of F over all elements in
/// ascending element-id order.
SystemArrays assemble_global(const Mesh& mesh,
                             const IntegrationHierarchy& hierarchy,
                             const std::vector<EnrichedNode>& enriched,
                             const DofMap& dofmap, const MaterialMap& mats,
                             const Vec2& body_force = Vec2::Zero());

/// Element stresses (Voigt), averaged per parent element over integration
/// triangles (area weighted). U is the full DOF vector.
std::vector<Eigen::Vector3d> element_stresses(
    const Mesh& mesh, const IntegrationHierarchy& hierarchy,
    const std::vector<EnrichedNode>& enriched, const DofMap& dofmap,
    const MaterialMap& mats, const Eigen::VectorXd& U);

}  // namespace enrfem
