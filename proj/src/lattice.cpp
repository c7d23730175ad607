#include "sw/lattice.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sw::lattice {

namespace {

void fill_derived(LatticeManifold& m) {
  m.exp_u = m.u.exp();
  m.exp_mu = (-m.u).exp();
  m.exp_2u = (2.0 * m.u).exp();
  m.exp_m2u = (-2.0 * m.u).exp();
  m.exp_m4u = (-4.0 * m.u).exp();
  m.w = (4.0 * m.u).exp() * m.grid.cell();
  m.du.resize(m.grid.volume, 4);
  for (int a = 0; a < 4; ++a) m.du.col(a) = dcen(m.grid, m.u, a);
  m.total_volume = m.w.sum();
}

}  // namespace

LatticeManifold build_torus(int n, std::array<double, 4> len, const ArrayXd& u) {
  if (n < 4) throw std::invalid_argument("build_torus: need n >= 4 for the difference stencils");
  if (n % 2 != 0) throw std::invalid_argument("build_torus: need even n");
  LatticeManifold m;
  m.grid = Grid4(n, len);
  if (u.size() != m.grid.volume) throw std::invalid_argument("build_torus: u has wrong size");
  if (!u.isFinite().all()) throw std::invalid_argument("build_torus: u must be finite");
  m.u = u;
  fill_derived(m);
  return m;
}

LatticeManifold build_torus(int n, std::array<double, 4> len,
                            const std::function<double(const std::array<double, 4>&)>& u_gen) {
  Grid4 g(n, len);
  ArrayXd u(g.volume);
  for (Index i = 0; i < g.volume; ++i) {
    auto x = g.coords(i);
    u(i) = u_gen({x[0] * g.h[0], x[1] * g.h[1], x[2] * g.h[2], x[3] * g.h[3]});
  }
  return build_torus(n, len, u);
}

// Gamma^k_{ij} = d_kj u_i + d_ki u_j - d_ij u_k with central differences of u
static ArrayXXd christoffels(const LatticeManifold& m) {
  ArrayXXd G = ArrayXXd::Zero(m.grid.volume, 64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        ArrayXd v = ArrayXd::Zero(m.grid.volume);
        if (k == j) v += m.du.col(i);
        if (k == i) v += m.du.col(j);
        if (i == j) v -= m.du.col(k);
        G.col(k + 4 * (j + 4 * i)) = v;
      }
  return G;
}

CurvatureTables curvature_tables(const LatticeManifold& m) {
  const Grid4& g = m.grid;
  CurvatureTables t;
  t.christoffel = christoffels(m);
  auto G = [&](int i, int j, int k) { return t.christoffel.col(k + 4 * (j + 4 * i)); };

  t.riemann.resize(g.volume, 256);
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          ArrayXd r = dcen(g, G(j, k, l), i) - dcen(g, G(i, k, l), j);
          for (int s = 0; s < 4; ++s) r += G(i, s, l) * G(j, k, s) - G(j, s, l) * G(i, k, s);
          t.riemann.col(k + 4 * (j + 4 * (i + 4 * l))) = r;
        }

  auto R = [&](int l, int i, int j, int k) {
    return t.riemann.col(k + 4 * (j + 4 * (i + 4 * l)));
  };
  t.ricci.resize(g.volume, 16);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      ArrayXd r = ArrayXd::Zero(g.volume);
      for (int s = 0; s < 4; ++s) r += R(s, s, j, k);
      t.ricci.col(k + 4 * j) = r;
    }
  t.k = ArrayXd::Zero(g.volume);
  for (int j = 0; j < 4; ++j) t.k += t.ricci.col(j + 4 * j);
  t.k *= m.exp_m2u;
  t.ricci_op.resize(g.volume, 16);
  for (int c = 0; c < 16; ++c) t.ricci_op.col(c) = m.exp_m2u * t.ricci.col(c);
  return t;
}

ArrayXd scalar_curvature(const LatticeManifold& m) {
  // Ric_{jj} summed: sum_{m,j} R^m_{mjj}; fuse the contractions so no Riemann
  // table is stored.
  const Grid4& g = m.grid;
  ArrayXXd G = christoffels(m);
  auto Gc = [&](int i, int j, int k) { return G.col(k + 4 * (j + 4 * i)); };
  ArrayXd k = ArrayXd::Zero(g.volume);
  for (int j = 0; j < 4; ++j)
    for (int s = 0; s < 4; ++s) {
      if (s != j) {
        k += dcen(g, Gc(j, j, s), s) - dcen(g, Gc(s, j, s), j);
      }
      for (int l = 0; l < 4; ++l) k += Gc(s, l, s) * Gc(j, j, l) - Gc(j, l, s) * Gc(s, j, l);
    }
  return m.exp_m2u * k;
}

ArrayXd scalar_curvature_closed_form(const LatticeManifold& m, const ArrayXd& lap_u,
                                     const ArrayXd& grad_u_sq) {
  return -6.0 * m.exp_m2u * (lap_u + grad_u_sq);
}

FormField d(const LatticeManifold& m, const FormField& f) {
  const Grid4& g = m.grid;
  if (f.degree == 0) {
    FormField r(1, f.vt, g.volume);
    for (int a = 0; a < 4; ++a) r.c.col(a) = dfwd(g, f.c.col(0), a);
    return r;
  }
  if (f.degree == 1) {
    FormField r(2, f.vt, g.volume);
    for (int p = 0; p < 6; ++p) {
      const int i = kPairI[p], j = kPairJ[p];
      r.c.col(p) = dfwd(g, f.c.col(j), i) - dfwd(g, f.c.col(i), j);
    }
    return r;
  }
  throw std::invalid_argument("d: only degrees 0 and 1 are supported");
}

// metric factor per component: e^{-2u} for each raised index
static ArrayXd metric_factor(const LatticeManifold& m, int degree) {
  switch (degree) {
    case 0: return ArrayXd::Ones(m.grid.volume);
    case 1: return m.exp_m2u;
    default: return m.exp_m4u;
  }
}

double form_dot(const LatticeManifold& m, const FormField& a, const FormField& b) {
  if (a.degree != b.degree || a.vt != b.vt)
    throw std::invalid_argument("form_dot: degree/value-type mismatch");
  const ArrayXd mu = m.w * metric_factor(m, a.degree);
  double s = 0.0;
  for (int c = 0; c < a.c.cols(); ++c) s += (mu * a.c.col(c) * b.c.col(c)).sum();
  return s;
}

double form_norm(const LatticeManifold& m, const FormField& a) {
  return std::sqrt(form_dot(m, a, a));
}

FormField codifferential(const LatticeManifold& m, const FormField& f) {
  const Grid4& g = m.grid;
  if (f.degree == 1) {
    const ArrayXd mu = m.w * metric_factor(m, 1);
    FormField r(0, f.vt, g.volume);
    ArrayXd acc = ArrayXd::Zero(g.volume);
    for (int a = 0; a < 4; ++a) acc -= dbwd(g, ArrayXd(mu * f.c.col(a)), a);
    r.c.col(0) = acc / m.w;
    return r;
  }
  if (f.degree == 2) {
    const ArrayXd mu2 = m.w * metric_factor(m, 2);
    const ArrayXd mu1 = m.w * metric_factor(m, 1);
    FormField r(1, f.vt, g.volume);
    for (int c = 0; c < 4; ++c) {
      ArrayXd acc = ArrayXd::Zero(g.volume);
      for (int a = 0; a < 4; ++a) {
        if (a == c) continue;
        const int p = pair_index(std::min(a, c), std::max(a, c));
        const double sgn = pair_sign(a, c);
        acc -= dbwd(g, ArrayXd(mu2 * (sgn * f.c.col(p))), a);
      }
      r.c.col(c) = acc / mu1;
    }
    return r;
  }
  throw std::invalid_argument("codifferential: only degrees 1 and 2 are supported");
}

FormField laplace_beltrami(const LatticeManifold& m, const FormField& f) {
  if (f.degree != 0) throw std::invalid_argument("laplace_beltrami: degree 0 only");
  return codifferential(m, d(m, f));
}

SolveReport cg_solve(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply,
                     const Eigen::VectorXd& rhs, Eigen::VectorXd& x, double rel_tol,
                     int max_iter) {
  SolveReport rep;
  const double bnorm = rhs.norm();
  if (bnorm == 0.0) {
    x.setZero(rhs.size());
    rep.converged = true;
    return rep;
  }
  if (x.size() != rhs.size()) x = Eigen::VectorXd::Zero(rhs.size());
  Eigen::VectorXd r = rhs - apply(x);
  Eigen::VectorXd p = r;
  double rr = r.squaredNorm();
  for (int it = 0; it < max_iter; ++it) {
    if (std::sqrt(rr) <= rel_tol * bnorm) {
      rep.converged = true;
      rep.iterations = it;
      rep.relative_residual = std::sqrt(rr) / bnorm;
      return rep;
    }
    Eigen::VectorXd ap = apply(p);
    const double pap = p.dot(ap);
    if (!(pap > 0.0)) break;  // hit the kernel or lost positivity
    const double alpha = rr / pap;
    x += alpha * p;
    r -= alpha * ap;
    const double rr_new = r.squaredNorm();
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  rep.converged = std::sqrt(rr) <= rel_tol * bnorm;
  rep.iterations = max_iter;
  rep.relative_residual = std::sqrt(rr) / bnorm;
  return rep;
}

namespace {

Eigen::VectorXd form_to_vec(const FormField& f) {
  Eigen::VectorXd v(f.c.size());
  Eigen::Map<ArrayXXd>(v.data(), f.c.rows(), f.c.cols()) = f.c;
  return v;
}

FormField vec_to_form(const Eigen::VectorXd& v, int degree, ValueType vt, Index volume) {
  FormField f(degree, vt, volume);
  f.c = Eigen::Map<const ArrayXXd>(v.data(), volume, form_components(degree));
  return f;
}

}  // namespace

HodgeParts hodge_decompose(const LatticeManifold& m, const FormField& omega) {
  if (omega.degree != 1) throw std::invalid_argument("hodge_decompose: degree 1 only");
  const Index V = m.grid.volume;
  const int max_iter = int(10 * V);
  const double tol = 1e-10;

  // scalar potential: (d* d) f = d* omega
  FormField dstar_omega = codifferential(m, omega);
  auto scalar_apply = [&](const Eigen::VectorXd& x) {
    FormField f = vec_to_form(x, 0, omega.vt, V);
    return form_to_vec(laplace_beltrami(m, f));
  };
  Eigen::VectorXd fvec = Eigen::VectorXd::Zero(V);
  HodgeParts parts;
  parts.scalar_solve = cg_solve(scalar_apply, form_to_vec(dstar_omega), fvec, tol, max_iter);
  if (!parts.scalar_solve.converged) {
    std::ostringstream os;
    os << "hodge_decompose: scalar Poisson solve stalled, relative residual "
       << parts.scalar_solve.relative_residual;
    throw std::runtime_error(os.str());
  }
  FormField f = vec_to_form(fvec, 0, omega.vt, V);
  // remove the constant-mode drift; d f is unchanged
  f.c.col(0) -= (m.w * f.c.col(0)).sum() / m.w.sum();
  parts.potential = f.c.col(0);
  parts.exact = d(m, f);

  // coexact potential: (d d*) beta = d omega, solved within im(d)
  FormField domega = d(m, omega);
  auto two_form_apply = [&](const Eigen::VectorXd& x) {
    FormField b = vec_to_form(x, 2, omega.vt, V);
    return form_to_vec(d(m, codifferential(m, b)));
  };
  Eigen::VectorXd bvec = Eigen::VectorXd::Zero(6 * V);
  parts.two_form_solve = cg_solve(two_form_apply, form_to_vec(domega), bvec, tol, max_iter);
  if (!parts.two_form_solve.converged) {
    std::ostringstream os;
    os << "hodge_decompose: 2-form solve stalled, relative residual "
       << parts.two_form_solve.relative_residual;
    throw std::runtime_error(os.str());
  }
  FormField beta = vec_to_form(bvec, 2, omega.vt, V);
  parts.coexact = codifferential(m, beta);

  parts.harmonic = omega;
  parts.harmonic.c = omega.c - parts.exact.c - parts.coexact.c;
  return parts;
}

}  // namespace sw::lattice
