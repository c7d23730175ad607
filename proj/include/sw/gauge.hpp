#pragma once

#include "sw/fields.hpp"
#include "sw/lattice.hpp"

namespace sw::gauge {

using lattice::LatticeManifold;

// Non-compact U(1) link field: a_i(x) lives on the link (x, x + h e_i) and
// represents the iR-valued 1-form A = i a.  Spinor transport across the link
// uses the unit phase e^{-i h a_i}, so gauge covariance of every downstream
// operator is exact rather than O(h).
struct U1Connection {
  ArrayXXd a;  // volume x 4

  U1Connection() = default;
  explicit U1Connection(Index volume) : a(ArrayXXd::Zero(volume, 4)) {}
};

// g = e^{i theta} with an integer winding per axis; the winding contributes
// the constant harmonic shift 2 pi w_i / L_i to the links and the single
// valued phase e^{2 pi i w.x/L} to matter fields.
struct GaugeTransform {
  ArrayXd theta;
  std::array<int, 4> winding{0, 0, 0, 0};
};

// F = i (forward-difference curl of a); dF = 0 exactly, gauge invariant
// exactly.  The imaginary tag carries the i.
FormField curvature(const LatticeManifold& m, const U1Connection& A);

// central-difference curl; same continuum limit, used by the energy
// quadratures where the antisymmetric stencil makes the topological pairing
// cancel exactly
FormField curvature_central(const LatticeManifold& m, const U1Connection& A);

// F+ = (F + *F)/2 with the flat star (conformally invariant on 2-forms)
FormField self_dual_part(const FormField& f);
FormField anti_self_dual_part(const FormField& f);

// a' = a + forward-difference(theta) + 2 pi w/L, phi' = e^{i(theta + 2pi w.x/L)} phi
void gauge_transform(const LatticeManifold& m, const GaugeTransform& g, U1Connection& A,
                     SpinorField* phi);

// full gauge phase per site, theta + 2 pi sum_i w_i x_i / L_i
ArrayXd gauge_phase(const LatticeManifold& m, const GaugeTransform& g);

struct HarmonicProjection {
  U1Connection harmonic;
  std::array<double, 4> jacobian_coord{};  // in [0,1)
  lattice::HodgeParts parts;
};

// Hodge-harmonic representative of the link 1-form plus the Jacobian-torus
// coordinate (per-axis mean holonomy / 2 pi, mod 1; ties at 1 wrap to 0).
HarmonicProjection harmonic_project(const LatticeManifold& m, const U1Connection& A);

std::array<double, 4> jacobian_coordinate(const LatticeManifold& m, const U1Connection& A);

// N_c = (1/4pi^2) int (|F+|^2 - |F-|^2) dv evaluated with the central-stencil
// curl; identically ~0 on the trivial bundle for every connection.
double topological_charge(const LatticeManifold& m, const U1Connection& A);

// gauge-orbit fingerprint: curvature field plus Jacobian coordinate
struct OrbitFingerprint {
  FormField f;
  std::array<double, 4> jacobian_coord{};
};

OrbitFingerprint fingerprint(const LatticeManifold& m, const U1Connection& A);
bool fingerprints_match(const OrbitFingerprint& x, const OrbitFingerprint& y, double tol);

U1Connection random_connection(std::mt19937_64& rng, Index volume, double amp);

// constant links realizing a Jacobian coordinate
U1Connection constant_connection(const LatticeManifold& m, const std::array<double, 4>& coord);

}  // namespace sw::gauge
