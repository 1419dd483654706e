#pragma once

// Seeded generators for property suites. Built directly on the 64-bit
// Mersenne Twister output so sequences are identical across standard
// library implementations.

#include <cstdint>
#include <numbers>
#include <random>

#include "scs/mixed.hpp"

namespace scs {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on {lo, ..., hi}.
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
  /// |z| uniform in [0, max_abs], phase uniform.
  Complex complex_radial(double max_abs) {
    const double r = uniform(0.0, max_abs);
    return std::polar(r, angle());
  }

 private:
  std::mt19937_64 engine_;
};

/// Random parameters with 2j in [1, max_two_j], |Z| <= max_abs and
/// φ in [0, 2π). Null superpositions are redrawn.
inline EntangledScsParams random_params(Rng& rng, int max_two_j,
                                        double max_abs) {
  for (;;) {
    EntangledScsParams p{SpinJ(rng.integer(1, max_two_j)),
                         SpinJ(rng.integer(1, max_two_j)),
                         rng.complex_radial(max_abs),
                         rng.complex_radial(max_abs), rng.angle()};
    const double denom = 1.0 + std::cos(p.phi) * overlap_minus({p.j1, p.z1}) *
                                   overlap_minus({p.j2, p.z2});
    if (denom > 1e-6) return p;
  }
}

inline RankTwoMixture random_mixture(Rng& rng, int max_two_j,
                                     double max_abs) {
  RankTwoMixture m;
  m.comp1 = random_params(rng, max_two_j, max_abs);
  m.comp2 = random_params(rng, max_two_j, max_abs);
  m.comp2.j1 = m.comp1.j1;
  m.comp2.j2 = m.comp1.j2;
  while (1.0 + std::cos(m.comp2.phi) * overlap_minus({m.comp2.j1, m.comp2.z1}) *
                   overlap_minus({m.comp2.j2, m.comp2.z2}) <=
         1e-6) {
    m.comp2.phi = rng.angle();
  }
  m.p1 = rng.uniform();
  m.p2 = 1.0 - m.p1;
  return m;
}

}  // namespace scs
