#include "superloc/fem.hpp"

#include <cmath>
#include <stdexcept>

namespace superloc {

CoefficientField::CoefficientField(const FineMesh& fm, Vec vals) : values(std::move(vals)) {
  if (values.size() != fm.elems.size())
    throw std::invalid_argument("CoefficientField: one value per fine element required");
  alpha = values.minCoeff();
  beta = values.maxCoeff();
  if (!(alpha > 0.0)) throw std::invalid_argument("CoefficientField: values must be positive");
}

CoefficientField CoefficientField::constant(const FineMesh& fm, double value) {
  return CoefficientField(fm, Vec::Constant(fm.elems.size(), value));
}

namespace {

ReferenceElement compute_reference(int d) {
  ReferenceElement ref;
  ref.d = d;
  const int nc = 1 << d;
  ref.stiffness = Mat::Zero(nc, nc);
  ref.mass = Mat::Zero(nc, nc);
  GaussRule g = gauss_rule(2);
  // tensor quadrature over the unit cube
  int npts = 1;
  for (int k = 0; k < d; ++k) npts *= g.npts;
  for (int q = 0; q < npts; ++q) {
    double s[kMaxDim], w = 1.0;
    int rem = q;
    for (int k = 0; k < d; ++k) {
      int i = rem % g.npts;
      rem /= g.npts;
      s[k] = g.x[i];
      w *= g.w[i];
    }
    Eigen::VectorXd N(nc);
    Mat dN(nc, d);
    for (int c = 0; c < nc; ++c) {
      N[c] = 1.0;
      for (int k = 0; k < d; ++k) dN(c, k) = 1.0;
      for (int k = 0; k < d; ++k) {
        const int bit = (c >> k) & 1;
        const double f = bit ? s[k] : (1.0 - s[k]);
        const double df = bit ? 1.0 : -1.0;
        N[c] *= f;
        for (int m = 0; m < d; ++m) dN(c, m) *= (m == k) ? df : f;
      }
    }
    ref.mass += w * N * N.transpose();
    ref.stiffness += w * dN * dN.transpose();
  }
  return ref;
}

}  // namespace

const ReferenceElement& reference_element(int d) {
  static const ReferenceElement r2 = compute_reference(2);
  static const ReferenceElement r3 = compute_reference(3);
  if (d == 2) return r2;
  if (d == 3) return r3;
  throw std::invalid_argument("reference_element: d must be 2 or 3");
}

namespace {

// Row-centric deterministic assembly: each node row accumulates its stencil
// entries over the adjacent cells in a fixed lexicographic order. Rows are
// independent, so the parallel and serial paths are bitwise identical.
template <typename CellWeight>
SpMatR assemble_nodal(const FineMesh& fm, CellWeight&& cellWeight, const Mat& refMat,
                      const Exec& ex) {
  const int d = fm.d();
  const std::int64_t nn = fm.numNodes();
  const ReferenceElement& ref = reference_element(d);
  (void)ref;

  std::vector<int> outer(nn + 1, 0);
  std::vector<std::array<int, 2 * kMaxDim>> ranges(nn);
  parallel_for(nn, ex, [&](std::int64_t y) {
    Coord c = fm.nodes.coord(y);
    int cnt = 1;
    for (int k = 0; k < d; ++k) {
      int lo = std::max(0, c[k] - 1), hi = std::min(fm.nF, c[k] + 1);
      ranges[y][2 * k] = lo;
      ranges[y][2 * k + 1] = hi;
      cnt *= hi - lo + 1;
    }
    outer[y + 1] = cnt;
  });
  for (std::int64_t y = 0; y < nn; ++y) outer[y + 1] += outer[y];
  const std::int64_t nnz = outer[nn];
  std::vector<int> inner(nnz);
  std::vector<double> vals(nnz);

  parallel_for(nn, ex, [&](std::int64_t y) {
    Coord yc = fm.nodes.coord(y);
    int pos = outer[y];
    Coord nb{};
    // neighbor loop in lexicographic order -> strictly increasing column ids
    const auto& rg = ranges[y];
    int count[kMaxDim];
    for (int k = 0; k < d; ++k) count[k] = rg[2 * k + 1] - rg[2 * k] + 1;
    std::int64_t total = 1;
    for (int k = 0; k < d; ++k) total *= count[k];
    for (std::int64_t t = 0; t < total; ++t) {
      std::int64_t rem = t;
      for (int k = 0; k < d; ++k) {
        nb[k] = rg[2 * k] + static_cast<int>(rem % count[k]);
        rem /= count[k];
      }
      double v = 0.0;
      // cells adjacent to both y and nb, lexicographic
      Coord clo{}, chi{};
      bool any = true;
      for (int k = 0; k < d; ++k) {
        clo[k] = std::max({0, yc[k] - 1, nb[k] - 1});
        chi[k] = std::min({fm.nF - 1, yc[k], nb[k]});
        if (clo[k] > chi[k]) any = false;
      }
      if (any) {
        Coord cc{};
        std::int64_t ncells = 1;
        for (int k = 0; k < d; ++k) ncells *= chi[k] - clo[k] + 1;
        for (std::int64_t ci = 0; ci < ncells; ++ci) {
          std::int64_t crem = ci;
          for (int k = 0; k < d; ++k) {
            cc[k] = clo[k] + static_cast<int>(crem % (chi[k] - clo[k] + 1));
            crem /= chi[k] - clo[k] + 1;
          }
          int ly = 0, ln = 0;
          for (int k = 0; k < d; ++k) {
            ly |= (yc[k] - cc[k]) << k;
            ln |= (nb[k] - cc[k]) << k;
          }
          v += cellWeight(fm.elems.id(cc)) * refMat(ly, ln);
        }
      }
      inner[pos] = static_cast<int>(fm.nodes.id(nb));
      vals[pos] = v;
      ++pos;
    }
  });

  return SpMatR(Eigen::Map<const SpMatR>(nn, nn, nnz, outer.data(), inner.data(), vals.data()));
}

}  // namespace

SpMatR assemble_stiffness(const FineMesh& fm, const CoefficientField& A, const Exec& ex) {
  if (A.values.size() != fm.elems.size())
    throw std::invalid_argument("assemble_stiffness: coefficient does not match mesh");
  if (!(A.values.minCoeff() > 0.0))
    throw std::invalid_argument("assemble_stiffness: nonpositive coefficient");
  const int d = fm.d();
  const double scale = std::pow(fm.h(), d - 2);
  const Mat refK = reference_element(d).stiffness;
  return assemble_nodal(
      fm, [&](std::int64_t cell) { return scale * A.values[cell]; }, refK, ex);
}

SpMatR assemble_mass(const FineMesh& fm, const Exec& ex) {
  const int d = fm.d();
  const double scale = std::pow(fm.h(), d);
  const Mat refM = reference_element(d).mass;
  return assemble_nodal(
      fm, [&](std::int64_t) { return scale; }, refM, ex);
}

Vec assemble_load(const FineMesh& fm, const std::function<double(const double*)>& f, int gaussPts,
                  const Exec& ex) {
  const int d = fm.d();
  const std::int64_t nn = fm.numNodes();
  const GaussRule g = gauss_rule(gaussPts);
  const double cellVol = std::pow(fm.h(), d);
  Vec load = Vec::Zero(nn);
  parallel_for(nn, ex, [&](std::int64_t y) {
    Coord yc = fm.nodes.coord(y);
    double acc = 0.0;
    Coord clo{}, chi{};
    for (int k = 0; k < d; ++k) {
      clo[k] = std::max(0, yc[k] - 1);
      chi[k] = std::min(fm.nF - 1, yc[k]);
    }
    Coord cc{};
    std::int64_t ncells = 1;
    for (int k = 0; k < d; ++k) ncells *= chi[k] - clo[k] + 1;
    for (std::int64_t ci = 0; ci < ncells; ++ci) {
      std::int64_t crem = ci;
      for (int k = 0; k < d; ++k) {
        cc[k] = clo[k] + static_cast<int>(crem % (chi[k] - clo[k] + 1));
        crem /= chi[k] - clo[k] + 1;
      }
      int corner = 0;
      for (int k = 0; k < d; ++k) corner |= (yc[k] - cc[k]) << k;
      std::int64_t npts = 1;
      for (int k = 0; k < d; ++k) npts *= g.npts;
      for (std::int64_t q = 0; q < npts; ++q) {
        double s[kMaxDim], x[kMaxDim], w = 1.0, shape = 1.0;
        std::int64_t rem = q;
        for (int k = 0; k < d; ++k) {
          int i = static_cast<int>(rem % g.npts);
          rem /= g.npts;
          s[k] = g.x[i];
          w *= g.w[i];
          x[k] = (cc[k] + s[k]) * fm.h();
          const int bit = (corner >> k) & 1;
          shape *= bit ? s[k] : (1.0 - s[k]);
        }
        acc += cellVol * w * f(x) * shape;
      }
    }
    load[y] = acc;
  });
  return load;
}

Vec to_full(const FineMesh& fm, const FineVector& v) {
  Vec full = Vec::Zero(fm.numNodes());
  for (std::int64_t i = 0; i < fm.numInterior(); ++i) full[fm.nodeOfInterior[i]] = v[i];
  return full;
}

FineVector from_full(const FineMesh& fm, const Vec& full) {
  FineVector v(fm.numInterior());
  for (std::int64_t i = 0; i < fm.numInterior(); ++i) v[i] = full[fm.nodeOfInterior[i]];
  return v;
}

PatchSolver::PatchSolver(const FineMesh& fm, const SpMatR& K_full, const Patch& patch)
    : fm_(&fm), patch_(patch), box_(patch_fine_node_box(fm, patch)) {
  const int d = fm.d();
  const std::int64_t bc = box_.count();
  interiorIdx_.assign(bc, -1);
  boundaryIdx_.assign(bc, -1);
  for (std::int64_t i = 0; i < bc; ++i) {
    Coord c = box_.localCoord(i);
    bool onFace = false, onDomain = false;
    for (int k = 0; k < d; ++k) {
      if (c[k] == box_.lo[k] || c[k] == box_.hi[k]) onFace = true;
      if (c[k] == 0 || c[k] == fm.nF) onDomain = true;
    }
    if (!onFace) {
      interiorIdx_[i] = static_cast<std::int32_t>(interiorNodes_.size());
      interiorNodes_.push_back(fm.nodes.id(c));
    } else if (!onDomain) {
      boundaryIdx_[i] = static_cast<std::int32_t>(boundaryNodes_.size());
      boundaryNodes_.push_back(fm.nodes.id(c));
    }
  }
  if (interiorNodes_.empty())
    throw std::invalid_argument("PatchSolver: patch has no interior fine DOFs");

  const std::int64_t ni = numInterior(), nb = numBoundary();
  std::vector<Triplet> tII, tIB;
  tII.reserve(static_cast<std::size_t>(ni) * 9);
  for (std::int64_t i = 0; i < ni; ++i) {
    const std::int64_t row = interiorNodes_[i];
    for (SpMatR::InnerIterator it(K_full, row); it; ++it) {
      Coord c = fm.nodes.coord(it.col());
      if (!box_.contains(c)) continue;  // cannot happen for interior rows
      const std::int64_t bi = box_.localIndex(c);
      if (interiorIdx_[bi] >= 0)
        tII.emplace_back(static_cast<int>(i), interiorIdx_[bi], it.value());
      else if (boundaryIdx_[bi] >= 0)
        tIB.emplace_back(static_cast<int>(i), boundaryIdx_[bi], it.value());
    }
  }
  KII_.resize(ni, ni);
  KII_.setFromTriplets(tII.begin(), tII.end());
  KIB_.resize(ni, nb);
  KIB_.setFromTriplets(tIB.begin(), tIB.end());
  llt_.compute(KII_);
  if (llt_.info() != Eigen::Success)
    throw NumericalError("PatchSolver: Cholesky factorization failed");
}

Vec PatchSolver::solve(const Vec& rhs) const {
  return llt_.solve(rhs);
}

Vec PatchSolver::extend_harmonic(const Vec& boundaryValues) const {
  return llt_.solve(-(KIB_ * boundaryValues));
}

Mat PatchSolver::extension_matrix(const Exec& ex) const {
  const std::int64_t bc = box_.count(), nb = numBoundary();
  Mat E = Mat::Zero(bc, nb);
  parallel_for(nb, ex, [&](std::int64_t b) {
    Vec ub = Vec::Zero(nb);
    ub[b] = 1.0;
    Vec ui = extend_harmonic(ub);
    for (std::int64_t i = 0; i < bc; ++i) {
      if (interiorIdx_[i] >= 0)
        E(i, b) = ui[interiorIdx_[i]];
      else if (boundaryIdx_[i] == b)
        E(i, b) = 1.0;
    }
  });
  return E;
}

SpMat PatchSolver::h1_matrix() const {
  const FineMesh& fm = *fm_;
  const int d = fm.d();
  const ReferenceElement& ref = reference_element(d);
  const double sK = std::pow(fm.h(), d - 2), sM = std::pow(fm.h(), d);
  const int nc = 1 << d;
  std::vector<Triplet> trip;
  Box cells = box_;
  for (int k = 0; k < d; ++k) cells.hi[k] -= 1;
  trip.reserve(static_cast<std::size_t>(cells.count()) * nc * nc);
  for (std::int64_t ci = 0; ci < cells.count(); ++ci) {
    Coord cc = cells.localCoord(ci);
    int local[1 << kMaxDim];
    for (int c = 0; c < nc; ++c) {
      Coord ncd = cc;
      for (int k = 0; k < d; ++k) ncd[k] += (c >> k) & 1;
      local[c] = static_cast<int>(box_.localIndex(ncd));
    }
    for (int a = 0; a < nc; ++a)
      for (int b = 0; b < nc; ++b)
        trip.emplace_back(local[a], local[b], sK * ref.stiffness(a, b) + sM * ref.mass(a, b));
  }
  SpMat H(box_.count(), box_.count());
  H.setFromTriplets(trip.begin(), trip.end());
  return H;
}

FineVector PatchSolver::to_global(const FineMesh& fm, const Vec& interiorValues) const {
  FineVector v = FineVector::Zero(fm.numInterior());
  for (std::size_t i = 0; i < interiorNodes_.size(); ++i) {
    const std::int32_t g = fm.interiorIndexOfNode[interiorNodes_[i]];
    v[g] = interiorValues[static_cast<std::int64_t>(i)];
  }
  return v;
}

Vec PatchSolver::restrict_interior(const FineMesh& fm, const FineVector& v) const {
  Vec out(numInterior());
  for (std::size_t i = 0; i < interiorNodes_.size(); ++i)
    out[static_cast<std::int64_t>(i)] = v[fm.interiorIndexOfNode[interiorNodes_[i]]];
  return out;
}

Vec PatchSolver::boundary_trace(const FineMesh& fm, const FineVector& v) const {
  Vec out(numBoundary());
  for (std::size_t i = 0; i < boundaryNodes_.size(); ++i) {
    const std::int32_t g = fm.interiorIndexOfNode[boundaryNodes_[i]];
    out[static_cast<std::int64_t>(i)] = g >= 0 ? v[g] : 0.0;
  }
  return out;
}

Vec PatchSolver::restrict_full(const FineMesh& fm, const Vec& full) const {
  Vec out(numInterior());
  for (std::size_t i = 0; i < interiorNodes_.size(); ++i)
    out[static_cast<std::int64_t>(i)] = full[interiorNodes_[i]];
  return out;
}

Patch whole_domain_patch(const CoarseMesh& mesh) {
  Patch p;
  p.seedKind = Patch::Seed::Element;
  p.seed = 0;
  p.order = mesh.nH;  // large enough to cover everything
  p.elemBox.d = mesh.d;
  for (int k = 0; k < mesh.d; ++k) {
    p.elemBox.lo[k] = 0;
    p.elemBox.hi[k] = mesh.nH - 1;
  }
  return p;
}

FineVector reference_solution(const FineMesh& fm, const SpMatR& K_full, const Vec& load_full) {
  PatchSolver global(fm, K_full, whole_domain_patch(fm.coarse));
  Vec rhs = global.restrict_full(fm, load_full);
  return global.to_global(fm, global.solve(rhs));
}

double energy_norm(const FineMesh& fm, const SpMatR& K_full, const FineVector& v) {
  Vec full = to_full(fm, v);
  return std::sqrt(std::max(0.0, full.dot(K_full * full)));
}

double rel_energy_error(const FineMesh& fm, const SpMatR& K_full, const FineVector& u_ref,
                        const FineVector& u_tilde) {
  const double denom = energy_norm(fm, K_full, u_ref);
  if (!(denom > 0.0))
    throw std::invalid_argument("rel_energy_error: reference solution has zero energy");
  FineVector diff = u_ref - u_tilde;
  return energy_norm(fm, K_full, diff) / denom;
}

}  // namespace superloc
