#pragma once

#include <vector>

#include "superloc/common.hpp"
#include "superloc/lattice.hpp"

namespace superloc {

/// Uniform Cartesian coarse mesh of the unit cube (0,1)^d with nH elements
/// per axis, so every element is the closed cube of side H = 1/nH at its
/// lattice position. Nodes include interior and boundary vertices.
struct CoarseMesh {
  int d = 2;
  int nH = 2;
  Lattice elems;  // nH per axis
  Lattice nodes;  // nH+1 per axis

  double H() const { return 1.0 / nH; }
  std::int64_t numElements() const { return elems.size(); }
  std::int64_t numNodes() const { return nodes.size(); }
};

CoarseMesh build_coarse(int d, int nH);

/// Uniform refinement of a CoarseMesh by a factor r per axis (h = H/r).
/// Fine nodes on the outer boundary are Dirichlet; the remaining nodes carry
/// the compacted interior DOF numbering used by FineVector.
struct FineMesh {
  CoarseMesh coarse;
  int r = 2;
  int nF = 4;     // fine elements per axis
  Lattice elems;  // nF per axis
  Lattice nodes;  // nF+1 per axis

  std::vector<std::int32_t> interiorIndexOfNode;  // -1 on the Dirichlet boundary
  std::vector<std::int64_t> nodeOfInterior;

  int d() const { return coarse.d; }
  double h() const { return 1.0 / nF; }
  std::int64_t numNodes() const { return nodes.size(); }
  std::int64_t numInterior() const { return static_cast<std::int64_t>(nodeOfInterior.size()); }

  bool isDirichletNode(std::int64_t node) const { return interiorIndexOfNode[node] < 0; }

  std::int64_t coarseElementOf(std::int64_t fineElem) const {
    Coord c = elems.coord(fineElem);
    Coord cc{};
    for (int k = 0; k < d(); ++k) cc[k] = c[k] / r;
    return coarse.elems.id(cc);
  }

  /// Physical coordinates of a fine node.
  void nodePosition(std::int64_t node, double* x) const {
    Coord c = nodes.coord(node);
    for (int k = 0; k < d(); ++k) x[k] = static_cast<double>(c[k]) / nF;
  }
};

FineMesh refine(const CoarseMesh& mesh, int r);

/// The ell-th order patch around a seed node or element: the recursion
/// N^0(w) = w, N^{l+1}(w) = union of all coarse elements touching N^l(w)
/// (closure under vertex contact), clipped at the domain boundary. On a
/// Cartesian mesh every patch is an axis-aligned box of coarse elements.
struct Patch {
  enum class Seed { Node, Element };
  Seed seedKind = Seed::Element;
  std::int64_t seed = 0;
  int order = 0;
  Box elemBox;  // coarse element index box

  std::vector<std::int32_t> elements(const CoarseMesh& mesh) const;
  std::int64_t numElements() const { return elemBox.count(); }
  bool coversWholeMesh(const CoarseMesh& mesh) const;
};

Patch element_patch(const CoarseMesh& mesh, std::int64_t T, int ell);
Patch node_patch(const CoarseMesh& mesh, std::int64_t z, int ell);

/// Fine-node lattice box covered by a patch (nodes on the patch boundary
/// included).
Box patch_fine_node_box(const FineMesh& fm, const Patch& patch);

/// Fine nodes strictly inside the patch (these are never on the Dirichlet
/// boundary), in lexicographic order.
std::vector<std::int64_t> patch_fine_interior_nodes(const FineMesh& fm, const Patch& patch);

/// Fine nodes on the patch boundary, excluding nodes on the domain boundary,
/// in lexicographic order.
std::vector<std::int64_t> patch_fine_boundary_nodes(const FineMesh& fm, const Patch& patch);

/// Value of the continuous piecewise-(multi)linear hat function of coarse
/// node z, interpolated at a fine node.
double hat_value(const FineMesh& fm, std::int64_t z, std::int64_t fineNode);

/// Values of the hat function at all fine nodes.
Vec hat_values(const FineMesh& fm, std::int64_t z);

/// Maximal number of hat-function supports overlapping one element.
int overlap_constant(const CoarseMesh& mesh);

}  // namespace superloc
