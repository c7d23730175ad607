#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace sw::clifford {

using cplx = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector2cd;
using Eigen::Vector4cd;
using Eigen::Vector4d;

// Fixed chiral basis of Cl(4):
//
//   gamma_a gamma_b + gamma_b gamma_a = -2 delta_ab I,   gamma_a^dag = -gamma_a,
//   chirality = gamma_1 gamma_2 gamma_3 gamma_4 = diag(-1,-1,+1,+1),
//   proj_plus = (I - chirality)/2  selects the first two spinor components (S+),
//   proj_minus = (I + chirality)/2 the last two (S-).
//
// Concretely gamma_j = [[0, i s_j],[i s_j, 0]] for the Pauli matrices s_1..s_3
// and gamma_4 = [[0, I],[-I, 0]].  Even products preserve chirality, odd ones
// swap it; self-dual 2-forms act on S+ and annihilate S-.
struct GammaSet {
  std::array<Matrix4cd, 4> gamma;
  Matrix4cd chirality;
  Matrix4cd proj_plus;
  Matrix4cd proj_minus;
  // chirality blocks of gamma_a: block_pm maps S+ -> S- (lower-left),
  // block_mp maps S- -> S+ (upper-right)
  std::array<Matrix2cd, 4> block_pm;
  std::array<Matrix2cd, 4> block_mp;
  // (gamma_i gamma_j) restricted to S+ / S- for ordered pairs i<j
  std::array<Matrix2cd, 6> pair_plus;
  std::array<Matrix2cd, 6> pair_minus;
};

const GammaSet& gammas();

// (e_k ^ e_l)(v) = <v,e_l> e_k - <v,e_k> e_l        (so(4) basis action)
Vector4d wedge_action(int k, int l, const Vector4d& v);

// Antisymmetric bivector sum_{k<l} b_kl e_k ^ e_l, coefficients in pair order.
struct CliffordBivector {
  std::array<double, 6> b{};  // b[pair_index(k,l)] = b_kl, k<l

  double& operator()(int k, int l);
  double operator()(int k, int l) const;  // signed lookup, b_lk = -b_kl
};

// Theta(e_k ^ e_l) = 1/2 gamma_k gamma_l extended linearly; a Lie algebra
// isomorphism so(4) -> spin(4) (commutators map to commutators).
Matrix4cd theta_iso(const CliffordBivector& b);

// (sum_a x_a gamma_a) psi;  x.(x.psi) = -|x|^2 psi.
Vector4cd clifford_action(const Vector4d& x, const Vector4cd& psi);

// Quadratic coupling of a positive spinor to a self-dual 2-form.  Components
// over ordered pairs i<j in the orthonormal frame:
//
//   sigma_ij(v) = 1/4 <gamma_i gamma_j v, v>        (inner product conjugate
//                                                    linear in the 2nd slot)
//
// The values are purely imaginary, the form is self-dual under the flat star,
// and with the pointwise 2-form magnitude |w|^2 = 2 sum_{i<j} |w_ij|^2 it
// satisfies |sigma(v)|^2 = 1/4 |v|^4.
std::array<cplx, 6> sigma_map(const Vector2cd& v);

// |sigma(v)|^2 in the pointwise 2-form magnitude above (= 1/4 |v|^4).
double sigma_norm_sq(const Vector2cd& v);

}  // namespace sw::clifford
