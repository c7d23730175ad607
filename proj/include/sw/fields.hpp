#pragma once

#include <random>
#include <stdexcept>

#include "sw/grid.hpp"

namespace sw {

enum class ValueType { Real, Imag };
enum class Chirality { Plus, Minus, Full };

inline int form_components(int degree) {
  switch (degree) {
    case 0: return 1;
    case 1: return 4;
    case 2: return 6;
    default: throw std::invalid_argument("form degree must be 0, 1 or 2");
  }
}

// p-form sampled per site.  Imaginary-valued forms (the u(1) = iR quantities)
// store the real coefficient of i; their weighted inner product carries the
// sign flip of the star on iR-valued forms, which on stored coefficients is
// the same positive formula as for real forms.
struct FormField {
  int degree = 0;
  ValueType vt = ValueType::Real;
  ArrayXXd c;  // volume x components

  FormField() = default;
  FormField(int degree_, ValueType vt_, Index volume)
      : degree(degree_), vt(vt_), c(ArrayXXd::Zero(volume, form_components(degree_))) {}
};

inline int spinor_components(Chirality chi) { return chi == Chirality::Full ? 4 : 2; }

struct SpinorField {
  Chirality chi = Chirality::Plus;
  ArrayXXcd v;  // volume x (2 or 4)

  SpinorField() = default;
  SpinorField(Chirality chi_, Index volume)
      : chi(chi_), v(ArrayXXcd::Zero(volume, spinor_components(chi_))) {}

  Index volume() const { return v.rows(); }
};

inline double spinor_dot_re(const ArrayXd& w, const SpinorField& a, const SpinorField& b) {
  if (a.chi != b.chi || a.v.rows() != b.v.rows())
    throw std::invalid_argument("spinor_dot_re: shape mismatch");
  double s = 0.0;
  for (int c = 0; c < a.v.cols(); ++c)
    s += (w * (a.v.col(c).conjugate() * b.v.col(c)).real()).sum();
  return s;
}

inline ArrayXd spinor_abs2(const SpinorField& a) {
  ArrayXd r = ArrayXd::Zero(a.v.rows());
  for (int c = 0; c < a.v.cols(); ++c) r += a.v.col(c).abs2();
  return r;
}

// deterministic helpers for seeded draws
inline ArrayXd random_scalar(std::mt19937_64& rng, Index volume, double amp = 1.0) {
  std::normal_distribution<double> g(0.0, 1.0);
  ArrayXd f(volume);
  for (Index i = 0; i < volume; ++i) f(i) = amp * g(rng);
  return f;
}

inline FormField random_form(std::mt19937_64& rng, int degree, ValueType vt, Index volume,
                             double amp = 1.0) {
  FormField f(degree, vt, volume);
  for (int c = 0; c < f.c.cols(); ++c) f.c.col(c) = random_scalar(rng, volume, amp);
  return f;
}

inline SpinorField random_spinor(std::mt19937_64& rng, Chirality chi, Index volume,
                                 double amp = 1.0) {
  SpinorField s(chi, volume);
  for (int c = 0; c < s.v.cols(); ++c) {
    ArrayXd re = random_scalar(rng, volume, amp);
    ArrayXd im = random_scalar(rng, volume, amp);
    s.v.col(c) = re + cplx(0.0, 1.0) * im;
  }
  return s;
}

}  // namespace sw
