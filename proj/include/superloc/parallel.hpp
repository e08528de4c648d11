#pragma once

#include <cstdint>

#include "superloc/common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superloc {

/// Execution policy for the data-parallel kernels. All kernels write each
/// work item into its own preallocated slot and reduce in a fixed index
/// order, so Serial and Parallel produce bitwise-identical results; tests
/// rely on this and the benchmark compares their wall times.
struct Exec {
  int threads = 0;  // 0: library default (all available), 1: serial

  bool serial() const { return threads == 1; }

  static Exec serial_ref() { return Exec{1}; }
};

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Parallel loop over [0, n) with independent iterations.
template <typename F>
void parallel_for(std::int64_t n, const Exec& ex, F&& body) {
  if (ex.serial()) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  if (ex.threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(ex.threads)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
#else
  for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

/// A^T * B with the output columns distributed over threads. Each entry is
/// one full-length dot product evaluated in a fixed order, so the result is
/// bitwise independent of the thread count.
inline Mat parallel_atb(const Mat& A, const Mat& B, const Exec& ex) {
  Mat C(A.cols(), B.cols());
  parallel_for(B.cols(), ex, [&](std::int64_t j) { C.col(j).noalias() = A.transpose() * B.col(j); });
  return C;
}

}  // namespace superloc
