#pragma once

#include <functional>
#include <optional>

#include "sw/fields.hpp"
#include "sw/grid.hpp"

namespace sw::lattice {

// Conformally flat 4-torus g = e^{2u} delta with periodic sites.  Volume
// weight per site is e^{4u} h^4; each raised index contributes e^{-2u}.
struct LatticeManifold {
  Grid4 grid;
  ArrayXd u;
  ArrayXd exp_2u, exp_m2u, exp_m4u, exp_u, exp_mu;
  ArrayXd w;        // volume weight e^{4u} h1 h2 h3 h4
  ArrayXXd du;      // central differences of u, volume x 4
  double total_volume = 0.0;
};

LatticeManifold build_torus(int n, std::array<double, 4> len, const ArrayXd& u);
LatticeManifold build_torus(int n, std::array<double, 4> len,
                            const std::function<double(const std::array<double, 4>&)>& u_gen);

struct CurvatureTables {
  // christoffel(i,j,k) = Gamma^k_{ij}, column k + 4*(j + 4*i)
  ArrayXXd christoffel;  // volume x 64
  // riemann(l,i,j,k) = R^l_{ijk} with R(e_i,e_j) e_k = sum_l R^l_{ijk} e_l,
  // column k + 4*(j + 4*(i + 4*l))
  ArrayXXd riemann;  // volume x 256
  ArrayXXd ricci;    // volume x 16, Ric_{jk} = sum_m R^m_{mjk}
  ArrayXd k;         // scalar curvature g^{jk} Ric_{jk}
  ArrayXXd ricci_op; // volume x 16, e^{-2u} Ric_{jk}
};

CurvatureTables curvature_tables(const LatticeManifold& m);

// scalar curvature only (no Riemann storage); same pipeline as the tables
ArrayXd scalar_curvature(const LatticeManifold& m);

// analytic conformal closed form -6 e^{-2u} (lap u + |grad u|^2) evaluated
// from caller-supplied exact derivatives of u
ArrayXd scalar_curvature_closed_form(const LatticeManifold& m, const ArrayXd& lap_u,
                                     const ArrayXd& grad_u_sq);

// ---- discrete exterior calculus -------------------------------------------

// forward-difference exterior derivative; d(d(.)) = 0 exactly
FormField d(const LatticeManifold& m, const FormField& f);

// weighted inner product matching int <a,b> dv_g
double form_dot(const LatticeManifold& m, const FormField& a, const FormField& b);
double form_norm(const LatticeManifold& m, const FormField& a);

// exact adjoint of d with respect to form_dot
FormField codifferential(const LatticeManifold& m, const FormField& f);

FormField laplace_beltrami(const LatticeManifold& m, const FormField& f);

// ---- conjugate gradient -----------------------------------------------------

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  double relative_residual = 0.0;
};

// CG for symmetric positive semidefinite `apply` in the plain l2 product.
SolveReport cg_solve(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply,
                     const Eigen::VectorXd& rhs, Eigen::VectorXd& x, double rel_tol,
                     int max_iter);

struct HodgeParts {
  FormField exact;     // d f
  FormField coexact;   // d* beta
  FormField harmonic;  // remainder, d k = d* k = 0
  ArrayXd potential;   // the 0-form f
  SolveReport scalar_solve;
  SolveReport two_form_solve;
};

// omega = d f + d* beta + kappa via two CG solves (rel residual 1e-10,
// max 10 N^4 iterations); throws std::runtime_error on non-convergence with
// the residual in the message.
HodgeParts hodge_decompose(const LatticeManifold& m, const FormField& omega);

}  // namespace sw::lattice
