#include "sw/gauge.hpp"

#include <cmath>

namespace sw::gauge {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

FormField curvature(const LatticeManifold& m, const U1Connection& A) {
  const Grid4& g = m.grid;
  FormField f(2, ValueType::Imag, g.volume);
  for (int p = 0; p < 6; ++p) {
    const int i = kPairI[p], j = kPairJ[p];
    f.c.col(p) = dfwd(g, A.a.col(j), i) - dfwd(g, A.a.col(i), j);
  }
  return f;
}

FormField curvature_central(const LatticeManifold& m, const U1Connection& A) {
  const Grid4& g = m.grid;
  FormField f(2, ValueType::Imag, g.volume);
  for (int p = 0; p < 6; ++p) {
    const int i = kPairI[p], j = kPairJ[p];
    f.c.col(p) = dcen(g, A.a.col(j), i) - dcen(g, A.a.col(i), j);
  }
  return f;
}

FormField self_dual_part(const FormField& f) {
  if (f.degree != 2) throw std::invalid_argument("self_dual_part: degree 2 only");
  FormField r = f;
  for (int p = 0; p < 6; ++p)
    r.c.col(p) = 0.5 * (f.c.col(p) + kStarSign[p] * f.c.col(kStarPair[p]));
  return r;
}

FormField anti_self_dual_part(const FormField& f) {
  if (f.degree != 2) throw std::invalid_argument("anti_self_dual_part: degree 2 only");
  FormField r = f;
  for (int p = 0; p < 6; ++p)
    r.c.col(p) = 0.5 * (f.c.col(p) - kStarSign[p] * f.c.col(kStarPair[p]));
  return r;
}

ArrayXd gauge_phase(const LatticeManifold& m, const GaugeTransform& g) {
  ArrayXd phase = g.theta;
  for (int a = 0; a < 4; ++a)
    if (g.winding[a] != 0)
      phase += (kTwoPi * g.winding[a] / m.grid.len[a]) * m.grid.coordinate(a);
  return phase;
}

void gauge_transform(const LatticeManifold& m, const GaugeTransform& g, U1Connection& A,
                     SpinorField* phi) {
  const Grid4& grid = m.grid;
  if (g.theta.size() != grid.volume) throw std::invalid_argument("gauge_transform: theta size");
  for (int a = 0; a < 4; ++a)
    A.a.col(a) += dfwd(grid, g.theta, a) + kTwoPi * g.winding[a] / grid.len[a];
  if (phi != nullptr) {
    const ArrayXd phase = gauge_phase(m, g);
    const Eigen::ArrayXcd factor =
        (cplx(0.0, 1.0) * phase.cast<cplx>()).exp();
    for (int c = 0; c < phi->v.cols(); ++c) phi->v.col(c) *= factor;
  }
}

std::array<double, 4> jacobian_coordinate(const LatticeManifold& m, const U1Connection& A) {
  std::array<double, 4> coord{};
  for (int a = 0; a < 4; ++a) {
    const double mean = A.a.col(a).mean();
    double c = mean * m.grid.len[a] / kTwoPi;
    c -= std::floor(c);
    if (c >= 1.0) c = 0.0;  // ties at 1.0 wrap to 0.0
    coord[a] = c;
  }
  return coord;
}

HarmonicProjection harmonic_project(const LatticeManifold& m, const U1Connection& A) {
  FormField omega(1, ValueType::Imag, m.grid.volume);
  omega.c = A.a;
  HarmonicProjection hp;
  hp.parts = lattice::hodge_decompose(m, omega);
  hp.harmonic = U1Connection(m.grid.volume);
  hp.harmonic.a = hp.parts.harmonic.c;
  hp.jacobian_coord = jacobian_coordinate(m, A);
  return hp;
}

double topological_charge(const LatticeManifold& m, const U1Connection& A) {
  // (|F+|^2 - |F-|^2) dv is conformally invariant: it reduces to the flat
  // wedge pairing 2(f01 f23 - f02 f13 + f03 f12) h^4 per site.
  const FormField f = curvature_central(m, A);
  const double cell = m.grid.cell();
  const ArrayXd wedge =
      f.c.col(0) * f.c.col(5) - f.c.col(1) * f.c.col(4) + f.c.col(2) * f.c.col(3);
  constexpr double kPi2 = 9.869604401089358;
  return 2.0 * cell * wedge.sum() / (4.0 * kPi2);
}

OrbitFingerprint fingerprint(const LatticeManifold& m, const U1Connection& A) {
  return OrbitFingerprint{curvature(m, A), jacobian_coordinate(m, A)};
}

bool fingerprints_match(const OrbitFingerprint& x, const OrbitFingerprint& y, double tol) {
  if (x.f.c.rows() != y.f.c.rows()) return false;
  if ((x.f.c - y.f.c).abs().maxCoeff() > tol) return false;
  for (int a = 0; a < 4; ++a) {
    double d = std::abs(x.jacobian_coord[a] - y.jacobian_coord[a]);
    d = std::min(d, 1.0 - d);  // circle distance
    if (d > tol) return false;
  }
  return true;
}

U1Connection random_connection(std::mt19937_64& rng, Index volume, double amp) {
  U1Connection A(volume);
  for (int a = 0; a < 4; ++a) A.a.col(a) = random_scalar(rng, volume, amp);
  return A;
}

U1Connection constant_connection(const LatticeManifold& m, const std::array<double, 4>& coord) {
  U1Connection A(m.grid.volume);
  for (int a = 0; a < 4; ++a) A.a.col(a) = kTwoPi * coord[a] / m.grid.len[a];
  return A;
}

}  // namespace sw::gauge
