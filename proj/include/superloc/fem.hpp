#pragma once

#include <Eigen/SparseCholesky>
#include <functional>
#include <memory>
#include <vector>

#include "superloc/common.hpp"
#include "superloc/mesh.hpp"
#include "superloc/parallel.hpp"

namespace superloc {

/// Scalar diffusion coefficient, piecewise constant on the fine mesh.
struct CoefficientField {
  Vec values;  // one positive value per fine element
  double alpha = 0.0, beta = 0.0;

  CoefficientField() = default;
  CoefficientField(const FineMesh& fm, Vec vals);

  static CoefficientField constant(const FineMesh& fm, double value);
};

/// Reference Q1 element matrices on the unit cube, computed once per
/// dimension by tensor Gauss quadrature (exact for the bilinear integrands).
struct ReferenceElement {
  int d;
  Mat stiffness;  // scaled by A*h^(d-2) per element
  Mat mass;       // scaled by h^d per element
};
const ReferenceElement& reference_element(int d);

/// Global Q1 stiffness matrix on all fine nodes (no Dirichlet elimination;
/// row sums vanish). Row-major so patch extraction can walk rows.
SpMatR assemble_stiffness(const FineMesh& fm, const CoefficientField& A, const Exec& ex = {});

/// Global Q1 mass matrix on all fine nodes.
SpMatR assemble_mass(const FineMesh& fm, const Exec& ex = {});

/// Right-hand side functional (f, phi_y) for all fine nodes, by tensor Gauss
/// quadrature with `gaussPts` points per axis on every fine cell.
Vec assemble_load(const FineMesh& fm, const std::function<double(const double*)>& f, int gaussPts,
                  const Exec& ex = {});

Vec to_full(const FineMesh& fm, const FineVector& v);
FineVector from_full(const FineMesh& fm, const Vec& full);

/// Restricted solution operator on a patch: the stiffness matrix reduced to
/// the patch's interior fine DOFs (homogeneous Dirichlet on the whole patch
/// boundary), factored once and reused for every right-hand side.
class PatchSolver {
 public:
  PatchSolver(const FineMesh& fm, const SpMatR& K_full, const Patch& patch);

  const Patch& patch() const { return patch_; }
  const Box& nodeBox() const { return box_; }
  std::int64_t numInterior() const { return static_cast<std::int64_t>(interiorNodes_.size()); }
  std::int64_t numBoundary() const { return static_cast<std::int64_t>(boundaryNodes_.size()); }
  const std::vector<std::int64_t>& interiorNodes() const { return interiorNodes_; }
  const std::vector<std::int64_t>& boundaryNodes() const { return boundaryNodes_; }

  const SpMat& KII() const { return KII_; }

  /// Galerkin solution in H^1_0(patch) for a load given on the interior DOFs.
  Vec solve(const Vec& rhs) const;

  /// Discrete A-harmonic extension: interior values for prescribed values at
  /// the patch boundary DOFs.
  Vec extend_harmonic(const Vec& boundaryValues) const;

  /// All harmonic extensions of boundary-node hats, as a dense matrix over
  /// the box lattice (identity rows at boundary DOFs; zero on the domain
  /// boundary). Columns are computed independently, so inner parallelism
  /// does not change the result.
  Mat extension_matrix(const Exec& ex = {}) const;

  /// H^1(patch) inner-product matrix (unit-coefficient stiffness + mass) on
  /// the box lattice, integrating over the patch only.
  SpMat h1_matrix() const;

  // box-lattice index helpers (role < 0: Dirichlet, otherwise interior idx)
  std::int64_t boxCount() const { return box_.count(); }
  std::int32_t interiorIndexAt(std::int64_t boxIdx) const { return interiorIdx_[boxIdx]; }
  std::int32_t boundaryIndexAt(std::int64_t boxIdx) const { return boundaryIdx_[boxIdx]; }

  /// Scatter interior patch values into a global FineVector (zero elsewhere).
  FineVector to_global(const FineMesh& fm, const Vec& interiorValues) const;
  /// Restrict a global FineVector to the patch interior DOFs.
  Vec restrict_interior(const FineMesh& fm, const FineVector& v) const;
  /// Trace of a global FineVector on the patch boundary DOFs.
  Vec boundary_trace(const FineMesh& fm, const FineVector& v) const;
  /// Restrict a full-node vector (e.g. a load) to the patch interior DOFs.
  Vec restrict_full(const FineMesh& fm, const Vec& full) const;

 private:
  const FineMesh* fm_;
  Patch patch_;
  Box box_;
  std::vector<std::int64_t> interiorNodes_, boundaryNodes_;
  std::vector<std::int32_t> interiorIdx_, boundaryIdx_;  // per box-lattice index, -1 if absent
  SpMat KII_, KIB_;
  Eigen::SimplicialLLT<SpMat> llt_;
};

/// Patch covering the whole mesh (used for the global reference solve).
Patch whole_domain_patch(const CoarseMesh& mesh);

/// First-order FEM reference solution of the global Dirichlet problem.
FineVector reference_solution(const FineMesh& fm, const SpMatR& K_full, const Vec& load_full);

double energy_norm(const FineMesh& fm, const SpMatR& K_full, const FineVector& v);
double rel_energy_error(const FineMesh& fm, const SpMatR& K_full, const FineVector& u_ref,
                        const FineVector& u_tilde);

/// Q1 value of a nodal function inside a fine cell at local coordinates
/// s in [0,1]^d, given an accessor for global fine-node values.
template <typename NodeValue>
double q1_value(const FineMesh& fm, std::int64_t cell, const double* s, NodeValue&& value) {
  Coord cc = fm.elems.coord(cell);
  const int d = fm.d();
  double v = 0.0;
  for (int corner = 0; corner < (1 << d); ++corner) {
    double shape = 1.0;
    Coord nc = cc;
    for (int k = 0; k < d; ++k) {
      const int bit = (corner >> k) & 1;
      shape *= bit ? s[k] : (1.0 - s[k]);
      nc[k] += bit;
    }
    v += shape * value(fm.nodes.id(nc));
  }
  return v;
}

}  // namespace superloc
