#pragma once

// Brute-force reference path. States are assembled in the full
// (2j1+1)(2j2+1)-dimensional product space from coherent amplitudes only;
// nothing here goes through the two-qubit embedding.

#include "scs/mixed.hpp"
#include "scs/su2.hpp"

namespace scs::oracle {

/// N(|Z1>⊗|-Z2> + e^{iφ}|-Z1>⊗|Z2>) with N from the overlaps computed as
/// Fock dot products. Throws DegenerateState for a null superposition.
FockVector fock_state(const EntangledScsParams& params);

/// Coefficient matrix M(i1, i2) = ψ[i1·dim2 + i2].
ComplexMatrixXd coefficient_matrix(const FockVector& state, int dim1, int dim2);

/// Tr_2 |ψ><ψ|; throws DimensionMismatch when dim1·dim2 != size.
ComplexMatrixXd reduced_density(const FockVector& state, int dim1, int dim2);

/// Tr ρ².
double purity(const ComplexMatrixXd& rho);

/// Schmidt coefficients (singular values of the coefficient matrix).
RealVector<double> schmidt_coefficients(const FockVector& state, int dim1,
                                        int dim2);

/// sqrt(2(1 - Tr ρ_A²)), valid for Schmidt rank <= 2 (checked: a third
/// Schmidt coefficient above 1e-10 raises std::logic_error).
double oracle_concurrence(const EntangledScsParams& params);

/// Von Neumann entropy of ρ_A in bits.
double entanglement_entropy_bits(const EntangledScsParams& params);

/// p1|Ψ1><Ψ1| + p2|Ψ2><Ψ2| in the full product space.
ComplexMatrixXd exact_mixture_density(const RankTwoMixture& m);

}  // namespace scs::oracle
