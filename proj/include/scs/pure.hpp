#pragma once

// Entangled spin coherent states
//   |psi> = N ( |Z1> ⊗ |-Z2> + e^{i phi} |-Z1> ⊗ |Z2> )
// and their two-qubit description in the orthonormal basis built from
// {|Z_k>, |-Z_k>} on each side.

#include <Eigen/Dense>

#include "scs/su2.hpp"

namespace scs {

/// Denominators 1 + cos(phi) P1 P2 at or below this are a null state.
constexpr double kDegeneracyThreshold = 1e-12;
constexpr double kDefaultBellTolerance = 1e-9;

struct EntangledScsParams {
  SpinJ j1;
  SpinJ j2;
  Complex z1;
  Complex z2;
  double phi = 0.0;
};

/// Amplitudes on |00>, |01>, |10>, |11>.
struct TwoQubitPure {
  Complex a;
  Complex b;
  Complex c;
  Complex d;

  Eigen::Vector4cd vector() const { return {a, b, c, d}; }
  static TwoQubitPure from_vector(const Eigen::Vector4cd& v) {
    return {v(0), v(1), v(2), v(3)};
  }
  double norm() const { return vector().norm(); }
};

struct EmbeddingData {
  double p1;  ///< <Z1|-Z1>
  double p2;  ///< <Z2|-Z2>
  double n1;  ///< sqrt(1 - P1²)
  double n2;  ///< sqrt(1 - P2²)
  double n;   ///< overall normalization
};

/// Overlaps and normalization factors. Throws DegenerateState when the
/// superposition vanishes (Z1 = Z2 = 0 with phi = pi).
EmbeddingData embedding(const EntangledScsParams& params);

/// a = N(P2 + e^{iφ}P1), b = N N2, c = N e^{iφ} N1, d = 0.
TwoQubitPure to_two_qubit(const EntangledScsParams& params);

/// 2|ad - bc|, clamped to [0, 1].
double concurrence_two_qubit(const TwoQubitPure& s);

/// 2 N² N1 N2, clamped to [0, 1].
double concurrence_pure(const EntangledScsParams& params);

/// True iff both |Z1| and |Z2| are within tol of 1, where the branches are
/// orthogonal and the state is a Bell state.
bool is_bell(const EntangledScsParams& params,
             double tol = kDefaultBellTolerance);

}  // namespace scs
