#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace sw {

using cplx = std::complex<double>;
using Eigen::ArrayXd;
using Eigen::ArrayXi;
using Eigen::ArrayXXcd;
using Eigen::ArrayXXd;
using Eigen::Index;

// Periodic N^4 grid.  Linear site index runs with x4 fastest:
//   idx = ((x1*N + x2)*N + x3)*N + x4.
// Neighbor tables are precomputed so shifts are cheap gathers.
struct Grid4 {
  int n = 0;
  std::array<double, 4> len{1.0, 1.0, 1.0, 1.0};
  std::array<double, 4> h{};
  Index volume = 0;
  std::array<ArrayXi, 4> up;  // site index of x + e_a
  std::array<ArrayXi, 4> dn;  // site index of x - e_a

  Grid4() = default;

  explicit Grid4(int n_, std::array<double, 4> len_ = {1.0, 1.0, 1.0, 1.0})
      : n(n_), len(len_) {
    if (n < 1) throw std::invalid_argument("Grid4: n must be positive");
    volume = Index(n) * n * n * n;
    for (int a = 0; a < 4; ++a) {
      if (!(len[a] > 0.0)) throw std::invalid_argument("Grid4: period must be positive");
      h[a] = len[a] / n;
    }
    const Index stride[4] = {Index(n) * n * n, Index(n) * n, Index(n), 1};
    for (int a = 0; a < 4; ++a) {
      up[a].resize(volume);
      dn[a].resize(volume);
    }
    for (Index i = 0; i < volume; ++i) {
      std::array<int, 4> x = coords(i);
      for (int a = 0; a < 4; ++a) {
        const int xp = (x[a] + 1) % n;
        const int xm = (x[a] + n - 1) % n;
        up[a](i) = int(i + (xp - x[a]) * stride[a]);
        dn[a](i) = int(i + (xm - x[a]) * stride[a]);
      }
    }
  }

  std::array<int, 4> coords(Index idx) const {
    std::array<int, 4> x;
    x[3] = int(idx % n);
    idx /= n;
    x[2] = int(idx % n);
    idx /= n;
    x[1] = int(idx % n);
    x[0] = int(idx / n);
    return x;
  }

  Index index(const std::array<int, 4>& x) const {
    auto m = [this](int v) { return ((v % n) + n) % n; };
    return ((Index(m(x[0])) * n + m(x[1])) * n + m(x[2])) * n + m(x[3]);
  }

  // coordinate value of every site along axis a, in [0, len_a)
  ArrayXd coordinate(int a) const {
    ArrayXd c(volume);
    for (Index i = 0; i < volume; ++i) c(i) = coords(i)[a] * h[a];
    return c;
  }

  double cell() const { return h[0] * h[1] * h[2] * h[3]; }
};

// gather f at x + dir*e_a (dir = +1/-1)
inline ArrayXd shift(const Grid4& g, const ArrayXd& f, int a, int dir) {
  return dir > 0 ? ArrayXd(f(g.up[a])) : ArrayXd(f(g.dn[a]));
}

inline Eigen::ArrayXcd shift(const Grid4& g, const Eigen::ArrayXcd& f, int a, int dir) {
  return dir > 0 ? Eigen::ArrayXcd(f(g.up[a])) : Eigen::ArrayXcd(f(g.dn[a]));
}

// forward difference [f(x+e_a) - f(x)] / h_a
inline ArrayXd dfwd(const Grid4& g, const ArrayXd& f, int a) {
  return (shift(g, f, a, +1) - f) / g.h[a];
}

// backward difference [f(x) - f(x-e_a)] / h_a
inline ArrayXd dbwd(const Grid4& g, const ArrayXd& f, int a) {
  return (f - shift(g, f, a, -1)) / g.h[a];
}

// central difference [f(x+e_a) - f(x-e_a)] / (2 h_a)
inline ArrayXd dcen(const Grid4& g, const ArrayXd& f, int a) {
  return (shift(g, f, a, +1) - shift(g, f, a, -1)) / (2.0 * g.h[a]);
}

// ordered index pairs (i<j) for 2-form components
inline constexpr int kPairI[6] = {0, 0, 0, 1, 1, 2};
inline constexpr int kPairJ[6] = {1, 2, 3, 2, 3, 3};

inline int pair_index(int i, int j) {
  static constexpr int tab[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
    throw std::invalid_argument("pair_index: need distinct axes in 0..3");
  return tab[i][j];
}

// sign of the ordered pair: +1 if i<j, -1 if i>j
inline double pair_sign(int i, int j) { return i < j ? 1.0 : -1.0; }

// Hodge star on 2-forms of the flat oriented T^4 (conformally invariant):
// pairs (01)<->(23) with +, (02)<->(13) with -, (03)<->(12) with +.
inline constexpr int kStarPair[6] = {5, 4, 3, 2, 1, 0};
inline constexpr double kStarSign[6] = {1.0, -1.0, 1.0, 1.0, -1.0, 1.0};

}  // namespace sw
