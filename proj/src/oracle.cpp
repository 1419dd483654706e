#include "scs/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace scs::oracle {

namespace {

constexpr double kSchmidtRankTolerance = 1e-10;

}  // namespace

FockVector fock_state(const EntangledScsParams& params) {
  const FockVector plus1 = coherent_amplitudes({params.j1, params.z1});
  const FockVector minus1 = coherent_amplitudes({params.j1, -params.z1});
  const FockVector plus2 = coherent_amplitudes({params.j2, params.z2});
  const FockVector minus2 = coherent_amplitudes({params.j2, -params.z2});

  const double p1 = plus1.dot(minus1).real();
  const double p2 = plus2.dot(minus2).real();
  const double denom = 1.0 + std::cos(params.phi) * p1 * p2;
  if (!(denom > kDegeneracyThreshold)) {
    throw DegenerateState("null superposition, 1 + cos(phi) P1 P2 = " +
                          std::to_string(denom));
  }
  const double norm = 1.0 / std::sqrt(2.0 * denom);
  const FockVector sum = tensor_state(plus1, minus2) +
                         std::polar(1.0, params.phi) *
                             tensor_state(minus1, plus2);
  return norm * sum;
}

ComplexMatrixXd coefficient_matrix(const FockVector& state, int dim1,
                                   int dim2) {
  if (dim1 <= 0 || dim2 <= 0 ||
      state.size() != static_cast<Eigen::Index>(dim1) * dim2) {
    throw DimensionMismatch("state of size " + std::to_string(state.size()) +
                            " is not " + std::to_string(dim1) + "x" +
                            std::to_string(dim2));
  }
  ComplexMatrixXd m(dim1, dim2);
  for (int i = 0; i < dim1; ++i)
    for (int k = 0; k < dim2; ++k) m(i, k) = state(i * dim2 + k);
  return m;
}

ComplexMatrixXd reduced_density(const FockVector& state, int dim1, int dim2) {
  const ComplexMatrixXd m = coefficient_matrix(state, dim1, dim2);
  return m * m.adjoint();
}

double purity(const ComplexMatrixXd& rho) {
  // Tr ρ² = Σ |ρ_ik|² for Hermitian ρ.
  return rho.squaredNorm();
}

RealVector<double> schmidt_coefficients(const FockVector& state, int dim1,
                                        int dim2) {
  return linalg::singular_values(coefficient_matrix(state, dim1, dim2));
}

double oracle_concurrence(const EntangledScsParams& params) {
  FockVector state = fock_state(params);
  state.normalize();
  const int d1 = params.j1.dim();
  const int d2 = params.j2.dim();
  const auto schmidt = schmidt_coefficients(state, d1, d2);
  if (schmidt.size() > 2 && schmidt(2) > kSchmidtRankTolerance) {
    throw std::logic_error("Schmidt rank exceeds 2; purity formula invalid");
  }
  const ComplexMatrixXd rho = reduced_density(state, d1, d2);
  // 1 - Tr ρ² = (Tr ρ)² - Tr ρ² = 2 Σ_{i<k} (ρ_ii ρ_kk - |ρ_ik|²)
  double linear_entropy = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index k = i + 1; k < rho.rows(); ++k)
      linear_entropy += rho(i, i).real() * rho(k, k).real() - std::norm(rho(i, k));
  linear_entropy *= 2.0;
  return std::clamp(std::sqrt(std::max(2.0 * linear_entropy, 0.0)), 0.0, 1.0);
}

double entanglement_entropy_bits(const EntangledScsParams& params) {
  FockVector state = fock_state(params);
  state.normalize();
  const auto eig = linalg::hermitian_eigen(
      reduced_density(state, params.j1.dim(), params.j2.dim()));
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double p = eig.eigenvalues(k);
    if (p > 1e-15) entropy -= p * std::log2(p);
  }
  return entropy;
}

ComplexMatrixXd exact_mixture_density(const RankTwoMixture& m) {
  m.validate();
  const FockVector psi1 = fock_state(m.comp1);
  const FockVector psi2 = fock_state(m.comp2);
  return m.p1 * psi1 * psi1.adjoint() + m.p2 * psi2 * psi2.adjoint();
}

}  // namespace scs::oracle
