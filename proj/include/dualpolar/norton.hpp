#pragma once

// The Norton product f * g = pi_1(fg) on V_1 and its values on pairs of
// tau-check vectors.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "dualpolar/frames.hpp"

namespace dualpolar::norton {

/// E_1 (f . g) for f, g in V_1. Errors: NotInV1.
RationalVector star(const spectral::SpectralDecomposition& dec, const RationalVector& f, const RationalVector& g);

/// Atoms rho split by the rank of rho v tau v sigma.
struct PsiPartition {
    int tau = 0;
    int sigma = 0;
    std::vector<int> psi2;
    std::vector<int> psi3;
    std::vector<int> psi_top;
};

/// Errors: BadOperands unless tau != sigma are atoms with tau v sigma of rank 2;
/// NortonMismatch if some join has another rank or psi2 has the wrong size.
PsiPartition psi_partition(const lattice::PolarLattice& lat, int tau, int sigma);

/// q^{d-1} (1 + q^{e-1}) (1 + q^{d-3+e})
Rational rhs_denominator(const lattice::PolarLattice& lat);

/// The closed form of tau-check * sigma-check for tau v sigma of rank 2.
/// Errors: DiameterTooSmall when d = 2, BadOperands.
RationalVector norton_rhs(const lattice::PolarLattice& lat, int tau, int sigma);

struct NortonOptions {
    int exhaustive_limit = 70; // atoms
    int sampled_pairs = 500;
    int probes = 20;
    std::uint64_t seed = 20240601;
};

/// Every case of the product formula on the chosen atom pairs, the projection
/// of iota(tau v sigma), the triple inner products, and commutativity and
/// bilinearity probes. Errors: NortonMismatch.
nlohmann::json verify_norton(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec,
                             const NortonOptions& opt = {});

} // namespace dualpolar::norton
