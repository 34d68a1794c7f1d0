#pragma once

// Eigenvalues and primitive idempotents of the dual polar graph, and the
// filtration and Laplacian identities on R^X. All arithmetic is exact.

#include <vector>

#include <json.hpp>

#include "dualpolar/matrix.hpp"
#include "dualpolar/qseries.hpp"
#include "dualpolar/scheme.hpp"

namespace dualpolar::spectral {

/// A_1, the operator L(f)(x) = sum over neighbours y of f(y).
IntMatrix laplacian(const scheme::DualPolarGraph& g);

/// mu_j from the closed form, cross-checked against the recursion from mu_d.
/// Errors: ThetaMismatch if the two disagree.
Rational mu(int j, int d, forms::Family family, long r);
std::vector<Rational> mu_values(const forms::FormedSpace& space);

struct SpectralDecomposition {
    int d = 0;
    int n = 0;
    std::vector<Rational> mu;
    /// E_j = lagrange[j] / scale[j] with lagrange[j] = prod_{i != j} (A_1 - mu_i I)
    /// and scale[j] = prod_{i != j} (mu_j - mu_i).
    std::vector<IntMatrix> lagrange;
    std::vector<std::int64_t> scale;
    std::vector<RationalMatrix> E;
    /// Ranks of the E_j, by exact elimination.
    std::vector<int> mult;

    const RationalMatrix& idempotent(int j) const { return E.at(j); }
};

/// Lagrange idempotents of L at the given eigenvalues, with the algebra
/// E_j^2 = E_j, E_i E_j = 0, sum E_j = I, L E_j = mu_j E_j checked exactly.
/// Errors: EigenvalueCollision, NotAnEigenvalue, DecompositionMismatch.
SpectralDecomposition idempotents(const IntMatrix& L, const std::vector<Rational>& mu);

/// E_j f. Errors: IndexOutOfRange, DimensionMismatch.
RationalVector project(const SpectralDecomposition& dec, const RationalVector& f, int j);

/// A_i E_j = p_i(j) E_j for all i, j, and theta_j = mu_j.
/// Errors: ThetaMismatch, NotAnEigenvalue.
nlohmann::json eigen_table_check(const scheme::DualPolarGraph& g, const SpectralDecomposition& dec,
                                 const qseries::EigenvalueTable& table);

/// w* = [d-j;1] iota(w) for every w below the coatoms, dim Lambda_j equal to
/// the partial multiplicity sums, and Lambda_j killed by E_i for i > j, which
/// pins V_j = Lambda_j cap Lambda_{j-1}-perp to the column space of E_j.
/// Errors: FiltrationMismatch.
nlohmann::json filtration_check(const lattice::PolarLattice& lat, const SpectralDecomposition& dec);

/// L iota(x) = -[d;1] iota(x) + sum_{z < x} iota(z) for coatoms x, and the
/// double cover sum around every w of rank below d.
/// Errors: IdentityViolation.
nlohmann::json laplacian_identities_check(const lattice::PolarLattice& lat, const IntMatrix& L);

} // namespace dualpolar::spectral
