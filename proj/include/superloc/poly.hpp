#pragma once

#include <functional>
#include <vector>

#include "superloc/fem.hpp"
#include "superloc/mesh.hpp"

namespace superloc {

/// Coefficients of a piecewise-polynomial function in the element-wise
/// orthonormal Legendre basis, supported on a declared set of coarse
/// elements (block of J coefficients per listed element).
struct PolyCoeffs {
  std::vector<std::int32_t> elements;  // ascending global coarse element ids
  Vec c;
};

/// Element-wise shifted tensor-product Legendre basis of coordinate degree
/// <= p, L2(T)-orthonormalized, together with the L2 projection Pi_H. The
/// orthonormality makes the projection a pure quadrature sum.
class PolySpace {
 public:
  PolySpace(const CoarseMesh& cm, const FineMesh& fm, int p);

  int p() const { return p_; }
  int J() const { return J_; }
  const CoarseMesh& coarse() const { return *cm_; }
  const FineMesh& fine() const { return *fm_; }

  /// Value of basis function j of element T at global coordinates x.
  double theta(std::int64_t T, int j, const double* x) const;

  /// Value of the represented function at global coordinates x (zero outside
  /// the declared support).
  double eval(const PolyCoeffs& q, const double* x) const;

  /// L2 projection of a fine-grid function given per-cell by an accessor
  /// value(cell, s, x) at local/global quadrature coordinates.
  PolyCoeffs project(const std::vector<std::int32_t>& elements,
                     const std::function<double(std::int64_t, const double*, const double*)>& value,
                     int gaussPts, const Exec& ex = {}) const;

  /// L2 projection of a FineVector (interpreted as the Q1 function it
  /// represents) on all coarse elements.
  PolyCoeffs project_fine(const FineVector& v, const Exec& ex = {}) const;

  /// L2 projection of a function on the box lattice of a patch (boundary
  /// values included), over the patch's elements.
  PolyCoeffs project_patch(const PatchSolver& op, const Vec& boxValues, const Exec& ex = {}) const;

  /// L2 projection of an analytic function on all coarse elements
  /// (3-point tensor Gauss per fine cell).
  PolyCoeffs project_analytic(const std::function<double(const double*)>& f,
                              const Exec& ex = {}) const;

  /// Load functional (q, phi_y) at every fine node (exact tensor Gauss).
  Vec load_full(const PolyCoeffs& q) const;

  /// Load functional restricted to the interior DOFs of a patch.
  Vec load_patch(const PolyCoeffs& q, const PatchSolver& op) const;

  /// Quadrature points per axis that integrate basis products with Q1 exactly.
  int exactGaussPts() const { return (p_ + 3) / 2; }

 private:
  const CoarseMesh* cm_;
  const FineMesh* fm_;
  int p_, J_;

  Vec load_nodes(const std::vector<std::int64_t>& nodes, const PolyCoeffs& q) const;
};

/// Least-squares slope of log ||(1-Pi_H)f|| versus log H over a family of
/// coarse meshes (positive slope: first-order decay as H shrinks).
double approximation_error_rate(int d, int p, const std::vector<int>& nHs, int rFine,
                                const std::function<double(const double*)>& f);

}  // namespace superloc
