#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>

namespace superloc {

inline constexpr int kMaxDim = 3;

using Coord = std::array<int, kMaxDim>;

/// Uniform integer lattice with n[k] entries per axis and lexicographic
/// (x-fastest) linear indexing. All conversions are pure functions so that
/// entity ids are machine-independent.
struct Lattice {
  int d = 2;
  Coord n{};  // entries per axis

  std::int64_t size() const {
    std::int64_t s = 1;
    for (int k = 0; k < d; ++k) s *= n[k];
    return s;
  }

  std::int64_t id(const Coord& c) const {
    std::int64_t i = 0;
    for (int k = d - 1; k >= 0; --k) {
      assert(c[k] >= 0 && c[k] < n[k]);
      i = i * n[k] + c[k];
    }
    return i;
  }

  Coord coord(std::int64_t i) const {
    Coord c{};
    for (int k = 0; k < d; ++k) {
      c[k] = static_cast<int>(i % n[k]);
      i /= n[k];
    }
    return c;
  }
};

/// Closed integer box [lo, hi] per axis (hi inclusive).
struct Box {
  int d = 2;
  Coord lo{}, hi{};

  bool contains(const Coord& c) const {
    for (int k = 0; k < d; ++k)
      if (c[k] < lo[k] || c[k] > hi[k]) return false;
    return true;
  }

  int span(int axis) const { return hi[axis] - lo[axis] + 1; }

  std::int64_t count() const {
    std::int64_t s = 1;
    for (int k = 0; k < d; ++k) s *= span(k);
    return s;
  }

  /// Lexicographic (x-fastest) index of a contained coordinate.
  std::int64_t localIndex(const Coord& c) const {
    std::int64_t i = 0;
    for (int k = d - 1; k >= 0; --k) {
      assert(c[k] >= lo[k] && c[k] <= hi[k]);
      i = i * span(k) + (c[k] - lo[k]);
    }
    return i;
  }

  Coord localCoord(std::int64_t i) const {
    Coord c{};
    for (int k = 0; k < d; ++k) {
      c[k] = lo[k] + static_cast<int>(i % span(k));
      i /= span(k);
    }
    return c;
  }

  /// Grow by `layers` on every side, clipped to [0, limit[k]-1].
  Box grown(int layers, const Coord& limit) const {
    Box b = *this;
    for (int k = 0; k < d; ++k) {
      b.lo[k] = std::max(0, lo[k] - layers);
      b.hi[k] = std::min(limit[k] - 1, hi[k] + layers);
    }
    return b;
  }

  Box intersect(const Box& o) const {
    Box b = *this;
    for (int k = 0; k < d; ++k) {
      b.lo[k] = std::max(lo[k], o.lo[k]);
      b.hi[k] = std::min(hi[k], o.hi[k]);
    }
    return b;
  }

  bool empty() const {
    for (int k = 0; k < d; ++k)
      if (lo[k] > hi[k]) return true;
    return false;
  }

  bool operator==(const Box& o) const {
    if (d != o.d) return false;
    for (int k = 0; k < d; ++k)
      if (lo[k] != o.lo[k] || hi[k] != o.hi[k]) return false;
    return true;
  }
};

/// Gauss-Legendre rule on [0,1]; npts in 1..5 integrates degree 2*npts-1.
struct GaussRule {
  int npts = 2;
  std::array<double, 5> x{}, w{};
};

GaussRule gauss_rule(int npts);

/// Value of the L2(0,1)-orthonormal shifted Legendre polynomial of degree k.
double shifted_legendre(int k, double s);

/// Counter-based (stateless) uniform generator: the value depends only on
/// (seed, counter), never on call order, so realizations are reproducible
/// under any traversal or thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = splitmix64(splitmix64(seed) ^ (counter + 0x9e3779b97f4a7c15ULL));
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace superloc
