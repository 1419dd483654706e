#include "scs/pure.hpp"

#include <algorithm>
#include <cmath>

namespace scs {

EmbeddingData embedding(const EntangledScsParams& params) {
  const SpinCoherentParam side1{params.j1, params.z1};
  const SpinCoherentParam side2{params.j2, params.z2};
  EmbeddingData out{};
  out.p1 = overlap_minus(side1);
  out.p2 = overlap_minus(side2);
  const double denom = 1.0 + std::cos(params.phi) * out.p1 * out.p2;
  if (!(denom > kDegeneracyThreshold)) {
    throw DegenerateState("1 + cos(phi) P1 P2 = " + std::to_string(denom));
  }
  out.n = 1.0 / std::sqrt(2.0 * denom);
  out.n1 = std::sqrt(one_minus_overlap_minus_sq(side1));
  out.n2 = std::sqrt(one_minus_overlap_minus_sq(side2));
  return out;
}

TwoQubitPure to_two_qubit(const EntangledScsParams& params) {
  const EmbeddingData e = embedding(params);
  const Complex phase = std::polar(1.0, params.phi);
  return {e.n * (e.p2 + phase * e.p1), Complex(e.n * e.n2),
          e.n * phase * e.n1, Complex(0.0)};
}

double concurrence_two_qubit(const TwoQubitPure& s) {
  const double c = 2.0 * std::abs(s.a * s.d - s.b * s.c);
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_pure(const EntangledScsParams& params) {
  const EmbeddingData e = embedding(params);
  // 2N² = 1 / (1 + cos φ P1 P2); dividing avoids squaring a rounded N.
  const double denom = 1.0 + std::cos(params.phi) * e.p1 * e.p2;
  return std::clamp(e.n1 * e.n2 / denom, 0.0, 1.0);
}

bool is_bell(const EntangledScsParams& params, double tol) {
  return std::abs(std::abs(params.z1) - 1.0) <= tol &&
         std::abs(std::abs(params.z2) - 1.0) <= tol;
}

}  // namespace scs
