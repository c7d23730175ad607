#pragma once

#include <vector>

#include "sw/clifford.hpp"
#include "sw/gauge.hpp"
#include "sw/lattice.hpp"

namespace sw::spin {

using gauge::U1Connection;
using lattice::CurvatureTables;
using lattice::LatticeManifold;

// Spin connection of g = e^{2u} delta along coordinate directions,
//
//   Gamma^S_i = 1/2 sum_{k != i} (d_k u) gamma_k gamma_i
//             = sum_{k<l} w_{i,kl} Theta(e_k ^ e_l),
//
// built from the orthonormal-frame coefficients w_{i,kl} = <grad_i e_k, e_l>
// of the frame e_a = e^{-u} d_a through the ordered-pair Theta map.  Each
// matrix is anti-Hermitian and vanishes on the flat torus.
struct SpinConnection {
  std::array<std::vector<Eigen::Matrix4cd>, 4> gamma_s;
};

SpinConnection spin_connection(const LatticeManifold& m);

// Gamma^S_i psi for a chiral field, using the constant pair blocks
ArrayXXcd omega_apply(const LatticeManifold& m, Chirality chi, int axis, const ArrayXXcd& psi);

// centered gauge-covariant difference with unit-modulus link transport
// e^{-i h a}: (D_a psi)(x) = [P_a(x) psi(x+a) - conj(P_a(x-a)) psi(x-a)]/(2h)
ArrayXXcd cov_dcen(const Grid4& g, const ArrayXXcd& psi, const ArrayXd& a_link, int axis);

// per-axis spin^c covariant derivative grad^A_i psi = D_i psi + Gamma^S_i psi
// (coordinate directions; exactly gauge covariant)
std::array<SpinorField, 4> covariant_derivative(const LatticeManifold& m, const U1Connection& A,
                                                const SpinorField& psi);

// D+ phi = sum_a gamma_a e^{-u} grad^A_a phi restricted to minus chirality
SpinorField dirac_plus(const LatticeManifold& m, const U1Connection& A, const SpinorField& phi);

// exact adjoint of dirac_plus in the volume-weighted inner products;
// an O(h^2)-consistent discretization of the continuum D-
SpinorField dirac_minus(const LatticeManifold& m, const U1Connection& A, const SpinorField& chi);

// conformal-covariance route e^{-5u/2} D_flat(e^{3u/2} phi); agrees with
// dirac_plus to O(h^2) and pins the spin-connection sign independently
SpinorField dirac_plus_conformal(const LatticeManifold& m, const U1Connection& A,
                                 const SpinorField& phi);

// nonnegative connection Laplacian (grad^A)^* grad^A, exact adjoints
SpinorField connection_laplacian(const LatticeManifold& m, const U1Connection& A,
                                 const SpinorField& psi);

// || D-D+ phi - [Lap_A phi + (k/4) phi + F-coupling phi] ||_w / ||phi||_w.
// The self-dual coupling uses the centered-stencil curvature in the
// orthonormal frame with the sign fixed by the exact flat-lattice identity.
double weitzenbock_residual(const LatticeManifold& m, const U1Connection& A,
                            const SpinorField& phi, const ArrayXd& k_scalar);

// self-dual curvature coupling entering the Weitzenboeck identity
SpinorField curvature_coupling(const LatticeManifold& m, const FormField& f2, const SpinorField& phi);

struct CurvatureDecomposition {
  // spin part per ordered 2-form pair, trace-free in u(2)
  std::array<std::vector<Eigen::Matrix4cd>, 6> r_spin;
  FormField f_a;  // real 2-form, curvature(A)/i
};

CurvatureDecomposition curvature_decomposition(const LatticeManifold& m, const U1Connection& A);

// unantisymmetrized table assembly 1/2 sum_{k,l} R^k_{..l} gamma_k gamma_l in
// the frame; differs from the trace-free spin part by O(h^2)
std::array<std::vector<Eigen::Matrix4cd>, 6> spin_curvature_raw(const LatticeManifold& m,
                                                                const CurvatureTables& t);

struct KatoCheck {
  ArrayXd lhs;    // |grad |V||^2
  ArrayXd rhs;    // |grad^A V|^2
  double margin;  // min(rhs - lhs) over sites with |V| > 1e-8
  double scale;   // max rhs
};

KatoCheck kato_check(const LatticeManifold& m, const U1Connection& A, const SpinorField& V);

struct IntegratingFactor {
  bool has_f = false;
  ArrayXd f;                 // positive, f(origin) = 1, df = f omega
  Eigen::Vector4d periods;   // integrals over the four fundamental cycles
};

// requires d omega = 0 (tolerance 1e-8); nonzero periods are an obstruction
// result, not an error
IntegratingFactor integrating_factor(const LatticeManifold& m, const FormField& omega);

// max-norm parallelism defect ||grad^A V||_inf / ||V||_inf
double verify_parallel(const LatticeManifold& m, const U1Connection& A, const SpinorField& V);

// I_A(X)_a = sum_b f(e_b, e_a) X_b in the orthonormal frame (coefficient of i);
// skew-symmetric per site, zero when f_A = 0
ArrayXXd i_a_operator(const LatticeManifold& m, const U1Connection& A, const ArrayXXd& X);

// H_A(X, psi) = -1/2 sum_a gamma_a . F^c(e_a, X) psi on full spinors
SpinorField h_a_operator(const LatticeManifold& m, const U1Connection& A, const ArrayXXd& X,
                         const SpinorField& psi);

SpinorField to_full(const SpinorField& s);

}  // namespace sw::spin
