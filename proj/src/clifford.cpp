#include "sw/clifford.hpp"

#include <stdexcept>

#include "sw/grid.hpp"

namespace sw::clifford {

namespace {

GammaSet build_gammas() {
  GammaSet gs;
  const cplx I(0.0, 1.0);
  Matrix2cd s1, s2, s3, id2;
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  id2.setIdentity();

  auto offdiag = [](const Matrix2cd& upper, const Matrix2cd& lower) {
    Matrix4cd m = Matrix4cd::Zero();
    m.block<2, 2>(0, 2) = upper;
    m.block<2, 2>(2, 0) = lower;
    return m;
  };
  gs.gamma[0] = offdiag(I * s1, I * s1);
  gs.gamma[1] = offdiag(I * s2, I * s2);
  gs.gamma[2] = offdiag(I * s3, I * s3);
  gs.gamma[3] = offdiag(id2, -id2);

  gs.chirality = gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3];
  gs.proj_plus = 0.5 * (Matrix4cd::Identity() - gs.chirality);
  gs.proj_minus = 0.5 * (Matrix4cd::Identity() + gs.chirality);

  for (int a = 0; a < 4; ++a) {
    gs.block_pm[a] = gs.gamma[a].block<2, 2>(2, 0);
    gs.block_mp[a] = gs.gamma[a].block<2, 2>(0, 2);
  }
  for (int p = 0; p < 6; ++p) {
    const Matrix4cd prod = gs.gamma[kPairI[p]] * gs.gamma[kPairJ[p]];
    gs.pair_plus[p] = prod.block<2, 2>(0, 0);
    gs.pair_minus[p] = prod.block<2, 2>(2, 2);
  }
  return gs;
}

}  // namespace

const GammaSet& gammas() {
  static const GammaSet gs = build_gammas();
  return gs;
}

Vector4d wedge_action(int k, int l, const Vector4d& v) {
  if (k < 0 || k > 3 || l < 0 || l > 3) throw std::invalid_argument("wedge_action: axis out of range");
  if (k == l) throw std::invalid_argument("wedge_action: axes must differ");
  Vector4d r = Vector4d::Zero();
  r(k) += v(l);
  r(l) -= v(k);
  return r;
}

double& CliffordBivector::operator()(int k, int l) {
  if (k >= l) throw std::invalid_argument("CliffordBivector: writable access needs k<l");
  return b[pair_index(k, l)];
}

double CliffordBivector::operator()(int k, int l) const {
  return pair_sign(k, l) * b[pair_index(std::min(k, l), std::max(k, l))];
}

Matrix4cd theta_iso(const CliffordBivector& biv) {
  const GammaSet& gs = gammas();
  Matrix4cd m = Matrix4cd::Zero();
  for (int p = 0; p < 6; ++p)
    m += 0.5 * biv.b[p] * (gs.gamma[kPairI[p]] * gs.gamma[kPairJ[p]]);
  return m;
}

Vector4cd clifford_action(const Vector4d& x, const Vector4cd& psi) {
  const GammaSet& gs = gammas();
  Vector4cd r = Vector4cd::Zero();
  for (int a = 0; a < 4; ++a) r += x(a) * (gs.gamma[a] * psi);
  return r;
}

std::array<cplx, 6> sigma_map(const Vector2cd& v) {
  const GammaSet& gs = gammas();
  std::array<cplx, 6> s;
  for (int p = 0; p < 6; ++p) s[p] = 0.25 * (v.adjoint() * gs.pair_plus[p] * v)(0);
  return s;
}

double sigma_norm_sq(const Vector2cd& v) {
  const auto s = sigma_map(v);
  double n = 0.0;
  for (const cplx& c : s) n += std::norm(c);
  return 2.0 * n;
}

}  // namespace sw::clifford
