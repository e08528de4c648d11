#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace superloc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;                    // column-major
using SpMatR = Eigen::SparseMatrix<double, Eigen::RowMajor>;  // row-major
using Triplet = Eigen::Triplet<double>;

/// A fine-grid function given by its values at the non-Dirichlet fine nodes
/// (zero implied on the outer boundary of the domain).
using FineVector = Eigen::VectorXd;

/// Thrown when a linear solve or eigenvalue computation fails beyond recovery.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superloc
