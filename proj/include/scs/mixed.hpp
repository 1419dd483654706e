#pragma once

// Rank-two mixtures of entangled spin coherent states, written in the
// shared two-qubit basis, together with the Wootters concurrence and the
// rank-two squared-concurrence formula
//
//   C² = μ1²C1² + μ2²C2² + ½μ1μ2|c+ - c-|² - ½μ1μ2|(c+ - c-)² - 4 c1 c2|
//
// where c_i are complex concurrences of the decomposition vectors and c±
// those of (|v1> ± |v2>)/√2.

#include <Eigen/Dense>

#include <string_view>

#include "scs/pure.hpp"

namespace scs {

/// Two mixture components with weights. Each component is embedded with its
/// own coherent-state basis and the results are mixed coordinate-wise.
struct RankTwoMixture {
  EntangledScsParams comp1;
  EntangledScsParams comp2;
  double p1 = 0.5;
  double p2 = 0.5;

  /// Throws InvalidMixture on bad weights or mismatched spins.
  void validate() const;
};

/// Two-qubit density matrix. Construction checks Hermiticity and unit trace
/// to 1e-13 and eigenvalues >= -1e-12.
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Eigen::Matrix4cd& entries);

  const Eigen::Matrix4cd& matrix() const { return entries_; }
  Complex operator()(int r, int c) const { return entries_(r, c); }

 private:
  Eigen::Matrix4cd entries_;
};

struct SpectralPair {
  double mu1;
  double mu2;
  TwoQubitPure vec1;
  TwoQubitPure vec2;
};

struct ConcurrenceBounds {
  double lower;  ///< (p1 C1 - p2 C2)²
  double upper;  ///< (p1 C1 + p2 C2)²
};

enum class CaseLabel {
  UpperBound,
  Intermediate,
  LowerBoundNegProduct,
  LowerBoundEqualC,
  Unclassified,
};

std::string_view to_string(CaseLabel label);

struct CaseResult {
  CaseLabel label = CaseLabel::Unclassified;
  double value = 0.0;  ///< closed-form C²; NaN when unclassified
  bool classified() const { return label != CaseLabel::Unclassified; }
};

struct MixtureQuantities {
  double C1;
  double C2;
  Complex c1;
  Complex c2;
  Complex cplus;
  Complex cminus;
};

/// σy ⊗ σy
Eigen::Matrix4cd spin_flip();

DensityMatrix4 density_matrix(const RankTwoMixture& m);

/// max(λ1 - λ2 - λ3 - λ4, 0) where λ_i are the square roots of the spectrum
/// of ρ (σy⊗σy) ρ* (σy⊗σy), in descending order. Works for any two-qubit ρ.
double wootters_concurrence(const DensityMatrix4& rho);

/// The four λ_i, descending.
Eigen::Vector4d wootters_lambdas(const DensityMatrix4& rho);

/// 2(ad - bc), no normalization applied.
Complex complex_concurrence(const TwoQubitPure& s);
Complex complex_concurrence(const Eigen::Vector4cd& v);

/// Two leading eigenpairs of a rank <= 2 density matrix. Throws
/// RankExceeded when the third eigenvalue exceeds 1e-10. When μ1 and μ2
/// coincide the eigenbasis of the degenerate plane is fixed by projecting
/// the standard basis vectors into it in index order.
SpectralPair spectral_rank2(const DensityMatrix4& rho);

/// Squared concurrence from an eigen-decomposition. Clamped at 0.
double simplified_concurrence_sq(const SpectralPair& sp);

/// Same formula evaluated on the mixture's own decomposition (weights p_i,
/// components ψ_i, c± from the unnormalized (ψ1 ± ψ2)/√2).
double simplified_concurrence_sq_direct(const RankTwoMixture& m);

/// C_i = 2 (N^i)² N1^i N2^i, c_i = -2 (N^i)² e^{iφ_i} N1^i N2^i and
/// c± = -(N¹N2¹ ± N²N2²)(N¹N1¹e^{iφ1} ± N²N1²e^{iφ2}).
MixtureQuantities mixture_quantities(const RankTwoMixture& m);

ConcurrenceBounds bounds(const RankTwoMixture& m);

/// Case analysis of the squared concurrence. Checked in order:
///   c1c2 <= 0 and (c+ - c-)² >= 0     -> LowerBoundNegProduct
///   c+ == c-                          -> LowerBoundEqualC
///   (c+ - c-)² >= 4c1c2 >= 0          -> UpperBound
///   0 <= (c+ - c-)² <= 4c1c2          -> Intermediate
/// The ordered comparisons are only made when (c+ - c-)² and c1c2 are real
/// to within 1e-9·(1 + |value|); otherwise the result is Unclassified.
CaseResult classify_case(const RankTwoMixture& m);

}  // namespace scs
