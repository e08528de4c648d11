#include "superloc/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace superloc {

GaussRule gauss_rule(int npts) {
  GaussRule g;
  g.npts = npts;
  // nodes/weights on [-1,1], mapped to [0,1] below
  switch (npts) {
    case 1:
      g.x = {0.0};
      g.w = {2.0};
      break;
    case 2:
      g.x = {-0.5773502691896257, 0.5773502691896257};
      g.w = {1.0, 1.0};
      break;
    case 3:
      g.x = {-0.7745966692414834, 0.0, 0.7745966692414834};
      g.w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      break;
    case 4:
      g.x = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
      g.w = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
      break;
    case 5:
      g.x = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
             0.9061798459386640};
      g.w = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
             0.2369268850561891};
      break;
    default:
      throw std::invalid_argument("gauss_rule: npts must be in 1..5");
  }
  for (int i = 0; i < npts; ++i) {
    g.x[i] = 0.5 * (g.x[i] + 1.0);
    g.w[i] *= 0.5;
  }
  return g;
}

double shifted_legendre(int k, double s) {
  const double t = 2.0 * s - 1.0;
  double pm1 = 1.0, p = t;
  if (k == 0) return 1.0;
  for (int m = 1; m < k; ++m) {
    double pn = ((2 * m + 1) * t * p - m * pm1) / (m + 1);
    pm1 = p;
    p = pn;
  }
  return std::sqrt(2.0 * k + 1.0) * p;
}

}  // namespace superloc
