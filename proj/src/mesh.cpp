#include "superloc/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace superloc {

CoarseMesh build_coarse(int d, int nH) {
  if (d != 2 && d != 3) throw std::invalid_argument("build_coarse: d must be 2 or 3");
  if (nH < 2)
    throw std::invalid_argument(
        "build_coarse: nH must be at least 2 (a first-order patch would cover the whole domain)");
  CoarseMesh m;
  m.d = d;
  m.nH = nH;
  m.elems.d = d;
  m.nodes.d = d;
  for (int k = 0; k < d; ++k) {
    m.elems.n[k] = nH;
    m.nodes.n[k] = nH + 1;
  }
  return m;
}

FineMesh refine(const CoarseMesh& mesh, int r) {
  if (r < 2 || (r & (r - 1)) != 0)
    throw std::invalid_argument("refine: r must be a power of 2 and at least 2");
  FineMesh fm;
  fm.coarse = mesh;
  fm.r = r;
  fm.nF = mesh.nH * r;
  fm.elems.d = mesh.d;
  fm.nodes.d = mesh.d;
  for (int k = 0; k < mesh.d; ++k) {
    fm.elems.n[k] = fm.nF;
    fm.nodes.n[k] = fm.nF + 1;
  }
  const std::int64_t nn = fm.nodes.size();
  fm.interiorIndexOfNode.assign(nn, -1);
  fm.nodeOfInterior.clear();
  for (std::int64_t i = 0; i < nn; ++i) {
    Coord c = fm.nodes.coord(i);
    bool onBoundary = false;
    for (int k = 0; k < mesh.d; ++k)
      if (c[k] == 0 || c[k] == fm.nF) onBoundary = true;
    if (!onBoundary) {
      fm.interiorIndexOfNode[i] = static_cast<std::int32_t>(fm.nodeOfInterior.size());
      fm.nodeOfInterior.push_back(i);
    }
  }
  return fm;
}

std::vector<std::int32_t> Patch::elements(const CoarseMesh& mesh) const {
  std::vector<std::int32_t> out;
  out.reserve(static_cast<std::size_t>(elemBox.count()));
  for (std::int64_t i = 0; i < elemBox.count(); ++i)
    out.push_back(static_cast<std::int32_t>(mesh.elems.id(elemBox.localCoord(i))));
  return out;
}

bool Patch::coversWholeMesh(const CoarseMesh& mesh) const {
  return numElements() == mesh.numElements();
}

Patch element_patch(const CoarseMesh& mesh, std::int64_t T, int ell) {
  if (T < 0 || T >= mesh.numElements()) throw std::invalid_argument("element_patch: bad element");
  if (ell < 0) throw std::invalid_argument("element_patch: ell must be nonnegative");
  Patch p;
  p.seedKind = Patch::Seed::Element;
  p.seed = T;
  p.order = ell;
  Coord c = mesh.elems.coord(T);
  p.elemBox.d = mesh.d;
  p.elemBox.lo = c;
  p.elemBox.hi = c;
  p.elemBox = p.elemBox.grown(ell, mesh.elems.n);
  return p;
}

Patch node_patch(const CoarseMesh& mesh, std::int64_t z, int ell) {
  if (z < 0 || z >= mesh.numNodes()) throw std::invalid_argument("node_patch: bad node");
  if (ell < 0) throw std::invalid_argument("node_patch: ell must be nonnegative");
  Patch p;
  p.seedKind = Patch::Seed::Node;
  p.seed = z;
  p.order = ell;
  // omega_z: elements adjacent to z, i.e. the clipped [z-1, z] box.
  Coord c = mesh.nodes.coord(z);
  p.elemBox.d = mesh.d;
  for (int k = 0; k < mesh.d; ++k) {
    p.elemBox.lo[k] = std::max(0, c[k] - 1);
    p.elemBox.hi[k] = std::min(mesh.nH - 1, c[k]);
  }
  p.elemBox = p.elemBox.grown(ell, mesh.elems.n);
  return p;
}

Box patch_fine_node_box(const FineMesh& fm, const Patch& patch) {
  Box b;
  b.d = fm.d();
  for (int k = 0; k < fm.d(); ++k) {
    b.lo[k] = patch.elemBox.lo[k] * fm.r;
    b.hi[k] = (patch.elemBox.hi[k] + 1) * fm.r;
  }
  return b;
}

std::vector<std::int64_t> patch_fine_interior_nodes(const FineMesh& fm, const Patch& patch) {
  Box b = patch_fine_node_box(fm, patch);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < b.count(); ++i) {
    Coord c = b.localCoord(i);
    bool onFace = false;
    for (int k = 0; k < fm.d(); ++k)
      if (c[k] == b.lo[k] || c[k] == b.hi[k]) onFace = true;
    if (!onFace) out.push_back(fm.nodes.id(c));
  }
  return out;
}

std::vector<std::int64_t> patch_fine_boundary_nodes(const FineMesh& fm, const Patch& patch) {
  Box b = patch_fine_node_box(fm, patch);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < b.count(); ++i) {
    Coord c = b.localCoord(i);
    bool onFace = false, onDomain = false;
    for (int k = 0; k < fm.d(); ++k) {
      if (c[k] == b.lo[k] || c[k] == b.hi[k]) onFace = true;
      if (c[k] == 0 || c[k] == fm.nF) onDomain = true;
    }
    if (onFace && !onDomain) out.push_back(fm.nodes.id(c));
  }
  return out;
}

double hat_value(const FineMesh& fm, std::int64_t z, std::int64_t fineNode) {
  Coord zc = fm.coarse.nodes.coord(z);
  Coord fc = fm.nodes.coord(fineNode);
  double v = 1.0;
  for (int k = 0; k < fm.d(); ++k) {
    double t = static_cast<double>(fc[k]) / fm.r - zc[k];
    v *= std::max(0.0, 1.0 - std::abs(t));
  }
  return v;
}

Vec hat_values(const FineMesh& fm, std::int64_t z) {
  Vec v = Vec::Zero(fm.numNodes());
  for (std::int64_t i = 0; i < fm.numNodes(); ++i) v[i] = hat_value(fm, z, i);
  return v;
}

int overlap_constant(const CoarseMesh& mesh) {
  int best = 0;
  for (std::int64_t T = 0; T < mesh.numElements(); ++T) {
    Coord c = mesh.elems.coord(T);
    int count = 0;
    // candidate nodes: the 2^d vertices of T
    for (int corner = 0; corner < (1 << mesh.d); ++corner) {
      Coord zc = c;
      for (int k = 0; k < mesh.d; ++k) zc[k] += (corner >> k) & 1;
      std::int64_t z = mesh.nodes.id(zc);
      // T is contained in supp(hat_z) iff T is adjacent to z
      Patch wz = node_patch(mesh, z, 0);
      if (wz.elemBox.contains(c)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace superloc
