#pragma once

// SU(2) spin algebra and spin coherent states |Z, j>.
//
// Fock vectors are indexed in ascending m: index k <-> m = -j + k.

#include <complex>
#include <string_view>

#include "scs/linalg.hpp"

namespace scs {

using Complex = std::complex<double>;
using FockVector = ComplexVectorXd;

/// Spin quantum number j, stored exactly as 2j.
class SpinJ {
 public:
  constexpr SpinJ() = default;
  constexpr explicit SpinJ(int two_j) : two_j_(two_j) {
    if (two_j < 0) throw InvalidSpin("2j must be non-negative");
  }

  /// Accepts a non-negative multiple of one half, e.g. 0.5, 1, 1.5.
  static SpinJ from_value(double j);

  constexpr int two_j() const { return two_j_; }
  constexpr double value() const { return 0.5 * two_j_; }
  constexpr int dim() const { return two_j_ + 1; }

  friend constexpr bool operator==(SpinJ, SpinJ) = default;

 private:
  int two_j_ = 0;
};

struct SpinCoherentParam {
  SpinJ j;
  Complex z;
};

inline SpinCoherentParam negate(const SpinCoherentParam& p) {
  return {p.j, -p.z};
}

struct LadderMatrices {
  ComplexMatrixXd plus;
  ComplexMatrixXd minus;
  ComplexMatrixXd z;
};

/// Amplitudes (1+|Z|²)^{-j} C(2j, j+m)^{1/2} Z^{j+m}. Binomials are taken in
/// the log domain so 2j up to a few hundred does not overflow.
FockVector coherent_amplitudes(const SpinCoherentParam& p);

/// <Z1, j | Z2, j> in closed form.
Complex overlap(const SpinCoherentParam& p1, const SpinCoherentParam& p2);

/// <Z, j | -Z, j> = ((1-|Z|²)/(1+|Z|²))^{2j}. Depends on |Z| only.
double overlap_minus(const SpinCoherentParam& p);

/// 1 - <Z|-Z>², evaluated without cancellation when |Z| is near 0 or large.
double one_minus_overlap_minus_sq(const SpinCoherentParam& p);

LadderMatrices ladder_matrices(SpinJ j);

/// exp[(θ/2)(e^{iφ} J+ - e^{-iφ} J-)] |j, -j>, which equals the coherent
/// state with Z = tan(θ/2) e^{iφ}. Throws ThetaNearPi within 1e-8 of π.
FockVector rotation_coherent(SpinJ j, double theta, double phi);

/// Kronecker product of two Fock vectors (first factor is the slow index).
FockVector tensor_state(const FockVector& v1, const FockVector& v2);

}  // namespace scs
