#include "sw/spin_geometry.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

namespace sw::spin {

using clifford::gammas;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

namespace {

// out(., cols) += (coeff * B) applied sitewise to in(., cols)
void block_apply_add(ArrayXXcd& out, int oc, const Matrix2cd& B, const ArrayXd& coeff,
                     const ArrayXXcd& in, int ic) {
  const Eigen::ArrayXcd c = coeff.cast<cplx>();
  out.col(oc + 0) += c * (B(0, 0) * in.col(ic + 0) + B(0, 1) * in.col(ic + 1));
  out.col(oc + 1) += c * (B(1, 0) * in.col(ic + 0) + B(1, 1) * in.col(ic + 1));
}

void block_apply_add(ArrayXXcd& out, int oc, const Matrix2cd& B, const ArrayXXcd& in, int ic) {
  out.col(oc + 0) += B(0, 0) * in.col(ic + 0) + B(0, 1) * in.col(ic + 1);
  out.col(oc + 1) += B(1, 0) * in.col(ic + 0) + B(1, 1) * in.col(ic + 1);
}

// signed chiral block of gamma_k gamma_i (k != i)
Matrix2cd pair_block_signed(Chirality chi, int k, int i) {
  const auto& gs = gammas();
  const int p = pair_index(std::min(k, i), std::max(k, i));
  const Matrix2cd& B = (chi == Chirality::Minus) ? gs.pair_minus[p] : gs.pair_plus[p];
  return k < i ? B : Matrix2cd(-B);
}

ArrayXXcd scale_cols(const ArrayXXcd& in, const ArrayXd& s) {
  ArrayXXcd out(in.rows(), in.cols());
  const Eigen::ArrayXcd c = s.cast<cplx>();
  for (int j = 0; j < in.cols(); ++j) out.col(j) = c * in.col(j);
  return out;
}

}  // namespace

SpinConnection spin_connection(const LatticeManifold& m) {
  const auto& gs = gammas();
  SpinConnection sc;
  for (int i = 0; i < 4; ++i) {
    sc.gamma_s[i].assign(size_t(m.grid.volume), Matrix4cd::Zero());
    for (int k = 0; k < 4; ++k) {
      if (k == i) continue;
      const Matrix4cd gk_gi = gs.gamma[k] * gs.gamma[i];
      for (Index s = 0; s < m.grid.volume; ++s)
        sc.gamma_s[i][size_t(s)] += 0.5 * m.du(s, k) * gk_gi;
    }
  }
  return sc;
}

ArrayXXcd omega_apply(const LatticeManifold& m, Chirality chi, int axis, const ArrayXXcd& psi) {
  ArrayXXcd out = ArrayXXcd::Zero(psi.rows(), psi.cols());
  for (int k = 0; k < 4; ++k) {
    if (k == axis) continue;
    const ArrayXd coeff = 0.5 * m.du.col(k);
    if (chi == Chirality::Full) {
      block_apply_add(out, 0, pair_block_signed(Chirality::Plus, k, axis), coeff, psi, 0);
      block_apply_add(out, 2, pair_block_signed(Chirality::Minus, k, axis), coeff, psi, 2);
    } else {
      block_apply_add(out, 0, pair_block_signed(chi, k, axis), coeff, psi, 0);
    }
  }
  return out;
}

ArrayXXcd cov_dcen(const Grid4& g, const ArrayXXcd& psi, const ArrayXd& a_link, int axis) {
  const Eigen::ArrayXcd P = (cplx(0.0, -g.h[axis]) * a_link.cast<cplx>()).exp();
  const Eigen::ArrayXcd Pm = P(g.dn[axis]).conjugate();
  ArrayXXcd out(psi.rows(), psi.cols());
  const double inv2h = 1.0 / (2.0 * g.h[axis]);
  for (int c = 0; c < psi.cols(); ++c) {
    Eigen::ArrayXcd col = psi.col(c);
    out.col(c) = (P * col(g.up[axis]) - Pm * col(g.dn[axis])) * inv2h;
  }
  return out;
}

std::array<SpinorField, 4> covariant_derivative(const LatticeManifold& m, const U1Connection& A,
                                                const SpinorField& psi) {
  if (psi.chi == Chirality::Full)
    throw std::invalid_argument("covariant_derivative: chirality plus or minus required");
  std::array<SpinorField, 4> out;
  for (int a = 0; a < 4; ++a) {
    out[a] = SpinorField(psi.chi, m.grid.volume);
    out[a].v = cov_dcen(m.grid, psi.v, A.a.col(a), a) + omega_apply(m, psi.chi, a, psi.v);
  }
  return out;
}

SpinorField dirac_plus(const LatticeManifold& m, const U1Connection& A, const SpinorField& phi) {
  if (phi.chi != Chirality::Plus) throw std::invalid_argument("dirac_plus: chirality plus required");
  const auto& gs = gammas();
  SpinorField out(Chirality::Minus, m.grid.volume);
  for (int a = 0; a < 4; ++a) {
    ArrayXXcd grad = cov_dcen(m.grid, phi.v, A.a.col(a), a) + omega_apply(m, Chirality::Plus, a, phi.v);
    block_apply_add(out.v, 0, gs.block_pm[a], m.exp_mu, grad, 0);
  }
  return out;
}

SpinorField dirac_minus(const LatticeManifold& m, const U1Connection& A, const SpinorField& chi) {
  if (chi.chi != Chirality::Minus)
    throw std::invalid_argument("dirac_minus: chirality minus required");
  const auto& gs = gammas();
  const ArrayXd we_mu = m.w * m.exp_mu;
  SpinorField out(Chirality::Plus, m.grid.volume);
  for (int a = 0; a < 4; ++a) {
    ArrayXXcd lifted = ArrayXXcd::Zero(chi.v.rows(), 2);
    block_apply_add(lifted, 0, Matrix2cd(gs.block_pm[a].adjoint()), chi.v, 0);
    out.v -= scale_cols(cov_dcen(m.grid, scale_cols(lifted, we_mu), A.a.col(a), a),
                        ArrayXd(1.0 / m.w));
    out.v -= omega_apply(m, Chirality::Plus, a, scale_cols(lifted, m.exp_mu));
  }
  return out;
}

SpinorField dirac_plus_conformal(const LatticeManifold& m, const U1Connection& A,
                                 const SpinorField& phi) {
  if (phi.chi != Chirality::Plus)
    throw std::invalid_argument("dirac_plus_conformal: chirality plus required");
  const auto& gs = gammas();
  const ArrayXd e32 = (1.5 * m.u).exp();
  const ArrayXd e52 = (-2.5 * m.u).exp();
  const ArrayXXcd lifted = scale_cols(phi.v, e32);
  SpinorField out(Chirality::Minus, m.grid.volume);
  for (int a = 0; a < 4; ++a)
    block_apply_add(out.v, 0, gs.block_pm[a], cov_dcen(m.grid, lifted, A.a.col(a), a), 0);
  out.v = scale_cols(out.v, e52);
  return out;
}

SpinorField connection_laplacian(const LatticeManifold& m, const U1Connection& A,
                                 const SpinorField& psi) {
  if (psi.chi == Chirality::Full)
    throw std::invalid_argument("connection_laplacian: chirality plus or minus required");
  SpinorField out(psi.chi, m.grid.volume);
  for (int a = 0; a < 4; ++a) {
    ArrayXXcd grad = cov_dcen(m.grid, psi.v, A.a.col(a), a) + omega_apply(m, psi.chi, a, psi.v);
    grad = scale_cols(grad, m.exp_m2u);
    out.v -= scale_cols(cov_dcen(m.grid, scale_cols(grad, m.w), A.a.col(a), a),
                        ArrayXd(1.0 / m.w));
    out.v -= omega_apply(m, psi.chi, a, grad);
  }
  return out;
}

SpinorField curvature_coupling(const LatticeManifold& m, const FormField& f2,
                               const SpinorField& phi) {
  if (f2.degree != 2) throw std::invalid_argument("curvature_coupling: 2-form required");
  if (phi.chi == Chirality::Full)
    throw std::invalid_argument("curvature_coupling: chirality plus or minus required");
  const auto& gs = gammas();
  SpinorField out(phi.chi, m.grid.volume);
  for (int p = 0; p < 6; ++p) {
    const Matrix2cd& B =
        (phi.chi == Chirality::Plus) ? gs.pair_plus[p] : gs.pair_minus[p];
    const Eigen::ArrayXcd coeff =
        cplx(0.0, 1.0) * (m.exp_m2u * f2.c.col(p)).cast<cplx>();
    out.v.col(0) += coeff * (B(0, 0) * phi.v.col(0) + B(0, 1) * phi.v.col(1));
    out.v.col(1) += coeff * (B(1, 0) * phi.v.col(0) + B(1, 1) * phi.v.col(1));
  }
  return out;
}

double weitzenbock_residual(const LatticeManifold& m, const U1Connection& A,
                            const SpinorField& phi, const ArrayXd& k_scalar) {
  const SpinorField dd = dirac_minus(m, A, dirac_plus(m, A, phi));
  SpinorField rhs = connection_laplacian(m, A, phi);
  const Eigen::ArrayXcd kq = (0.25 * k_scalar).cast<cplx>();
  for (int c = 0; c < 2; ++c) rhs.v.col(c) += kq * phi.v.col(c);
  // sign of the coupling fixed by the exact flat-lattice commutator of the
  // centered covariant differences
  const FormField fplus = gauge::self_dual_part(gauge::curvature_central(m, A));
  const SpinorField w = curvature_coupling(m, fplus, phi);
  rhs.v -= w.v;
  SpinorField diff = phi;
  diff.v = dd.v - rhs.v;
  const double nphi = std::sqrt(spinor_dot_re(m.w, phi, phi));
  return std::sqrt(spinor_dot_re(m.w, diff, diff)) / nphi;
}

CurvatureDecomposition curvature_decomposition(const LatticeManifold& m, const U1Connection& A) {
  const auto& gs = gammas();
  const lattice::CurvatureTables t = lattice::curvature_tables(m);
  CurvatureDecomposition cd;
  cd.f_a = gauge::curvature(m, A);
  cd.f_a.vt = ValueType::Real;  // curvature(A)/i
  auto R = [&](int l, int i, int j, int k) {
    return t.riemann.col(k + 4 * (j + 4 * (i + 4 * l)));
  };
  for (int p = 0; p < 6; ++p) {
    const int i = kPairI[p], j = kPairJ[p];
    cd.r_spin[p].assign(size_t(m.grid.volume), Matrix4cd::Zero());
    for (int c = 0; c < 4; ++c)
      for (int dd = c + 1; dd < 4; ++dd) {
        const ArrayXd beta = 0.5 * m.exp_m2u * (R(c, i, j, dd) - R(dd, i, j, c));
        const Matrix4cd gcd = gs.gamma[c] * gs.gamma[dd];
        for (Index s = 0; s < m.grid.volume; ++s)
          cd.r_spin[p][size_t(s)] += beta(s) * gcd;
      }
  }
  return cd;
}

std::array<std::vector<Matrix4cd>, 6> spin_curvature_raw(const LatticeManifold& m,
                                                         const CurvatureTables& t) {
  const auto& gs = gammas();
  std::array<std::vector<Matrix4cd>, 6> raw;
  auto R = [&](int l, int i, int j, int k) {
    return t.riemann.col(k + 4 * (j + 4 * (i + 4 * l)));
  };
  for (int p = 0; p < 6; ++p) {
    const int i = kPairI[p], j = kPairJ[p];
    raw[p].assign(size_t(m.grid.volume), Matrix4cd::Zero());
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        const ArrayXd coeff = 0.5 * m.exp_m2u * R(k, i, j, l);
        const Matrix4cd gkl = gs.gamma[k] * gs.gamma[l];
        for (Index s = 0; s < m.grid.volume; ++s) raw[p][size_t(s)] += coeff(s) * gkl;
      }
  }
  return raw;
}

KatoCheck kato_check(const LatticeManifold& m, const U1Connection& A, const SpinorField& V) {
  if (V.chi == Chirality::Full) throw std::invalid_argument("kato_check: chiral field required");
  const ArrayXd absV = spinor_abs2(V).sqrt();
  KatoCheck kc;
  kc.lhs = ArrayXd::Zero(m.grid.volume);
  kc.rhs = ArrayXd::Zero(m.grid.volume);
  for (int a = 0; a < 4; ++a) {
    kc.lhs += m.exp_m2u * dcen(m.grid, absV, a).square();
    const ArrayXXcd grad =
        cov_dcen(m.grid, V.v, A.a.col(a), a) + omega_apply(m, V.chi, a, V.v);
    kc.rhs += m.exp_m2u * (grad.col(0).abs2() + grad.col(1).abs2());
  }
  kc.scale = kc.rhs.maxCoeff();
  kc.margin = std::numeric_limits<double>::infinity();
  for (Index s = 0; s < m.grid.volume; ++s)
    if (absV(s) > 1e-8) kc.margin = std::min(kc.margin, kc.rhs(s) - kc.lhs(s));
  return kc;
}

IntegratingFactor integrating_factor(const LatticeManifold& m, const FormField& omega) {
  if (omega.degree != 1 || omega.vt != ValueType::Real)
    throw std::invalid_argument("integrating_factor: real 1-form required");
  const Grid4& g = m.grid;
  const FormField dw = lattice::d(m, omega);
  const double closed_tol = 1e-8 * std::max(1.0, omega.c.abs().maxCoeff());
  if (dw.c.abs().maxCoeff() > closed_tol)
    throw std::invalid_argument("integrating_factor: d omega != 0");

  IntegratingFactor out;
  for (int a = 0; a < 4; ++a) {
    double p = 0.0;
    std::array<int, 4> x{0, 0, 0, 0};
    for (int s = 0; s < g.n; ++s) {
      x[a] = s;
      p += g.h[a] * omega.c(g.index(x), a);
    }
    out.periods(a) = p;
  }
  if (out.periods.cwiseAbs().maxCoeff() >= 1e-8) return out;  // obstruction

  // potential along the axis-ordered path from the origin; exact closedness
  // of the discrete form makes it path independent
  ArrayXd F = ArrayXd::Zero(g.volume);
  std::array<int, 4> x{0, 0, 0, 0};
  for (int a = 0; a < 4; ++a) {
    // extend along axis a over the block where later axes are zero
    std::array<int, 4> y{0, 0, 0, 0};
    std::function<void(int)> sweep = [&](int depth) {
      if (depth == a) {
        for (int s = 1; s < g.n; ++s) {
          y[a] = s;
          std::array<int, 4> prev = y;
          prev[a] = s - 1;
          F(g.index(y)) = F(g.index(prev)) + g.h[a] * omega.c(g.index(prev), a);
        }
        y[a] = 0;
        return;
      }
      for (int s = 0; s < g.n; ++s) {
        y[depth] = s;
        sweep(depth + 1);
      }
      y[depth] = 0;
    };
    sweep(0);
  }
  (void)x;
  out.has_f = true;
  out.f = F.exp();
  return out;
}

double verify_parallel(const LatticeManifold& m, const U1Connection& A, const SpinorField& V) {
  const double vmax = std::sqrt(spinor_abs2(V).maxCoeff());
  if (!(vmax > 0.0)) throw std::invalid_argument("verify_parallel: V is identically zero");
  ArrayXd defect = ArrayXd::Zero(m.grid.volume);
  for (int a = 0; a < 4; ++a) {
    const ArrayXXcd grad =
        cov_dcen(m.grid, V.v, A.a.col(a), a) + omega_apply(m, V.chi, a, V.v);
    defect += m.exp_m2u * (grad.col(0).abs2() + grad.col(1).abs2());
  }
  return std::sqrt(defect.maxCoeff()) / vmax;
}

ArrayXXd i_a_operator(const LatticeManifold& m, const U1Connection& A, const ArrayXXd& X) {
  if (X.cols() != 4) throw std::invalid_argument("i_a_operator: vector field has 4 components");
  const FormField f = gauge::curvature(m, A);
  ArrayXXd out = ArrayXXd::Zero(X.rows(), 4);
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int beta = 0; beta < 4; ++beta) {
      if (beta == alpha) continue;
      const int p = pair_index(std::min(beta, alpha), std::max(beta, alpha));
      const double sgn = pair_sign(beta, alpha);
      out.col(alpha) += sgn * (m.exp_m2u * f.c.col(p)) * X.col(beta);
    }
  return out;
}

SpinorField to_full(const SpinorField& s) {
  if (s.chi == Chirality::Full) return s;
  SpinorField f(Chirality::Full, s.v.rows());
  if (s.chi == Chirality::Plus) {
    f.v.col(0) = s.v.col(0);
    f.v.col(1) = s.v.col(1);
  } else {
    f.v.col(2) = s.v.col(0);
    f.v.col(3) = s.v.col(1);
  }
  return f;
}

SpinorField h_a_operator(const LatticeManifold& m, const U1Connection& A, const ArrayXXd& X,
                         const SpinorField& psi_in) {
  const auto& gs = gammas();
  const SpinorField psi = to_full(psi_in);
  const bool flat = (m.u.abs().maxCoeff() == 0.0);
  const FormField f = gauge::curvature(m, A);

  // spin part of the curvature only when the metric is curved
  std::optional<CurvatureDecomposition> cd;
  if (!flat) cd = curvature_decomposition(m, A);

  SpinorField out(Chirality::Full, m.grid.volume);
  Eigen::Vector4cd acc, v;
  for (Index s = 0; s < m.grid.volume; ++s) {
    for (int c = 0; c < 4; ++c) v(c) = psi.v(s, c);
    acc.setZero();
    for (int alpha = 0; alpha < 4; ++alpha) {
      Matrix4cd M = Matrix4cd::Zero();
      for (int beta = 0; beta < 4; ++beta) {
        if (beta == alpha) continue;
        const int p = pair_index(std::min(alpha, beta), std::max(alpha, beta));
        const double sgn = pair_sign(alpha, beta);
        cplx u1 = cplx(0.0, 1.0) * sgn * m.exp_m2u(s) * f.c(s, p) * X(s, beta);
        M += u1 * Matrix4cd::Identity();
        if (cd) M += sgn * X(s, beta) * cd->r_spin[p][size_t(s)];
      }
      acc += -0.5 * (gs.gamma[alpha] * (M * v));
    }
    for (int c = 0; c < 4; ++c) out.v(s, c) = acc(c);
  }
  return out;
}

}  // namespace sw::spin
