#pragma once

// U^j matrices, frame constants lambda_j, tight frames {u-check} for the
// eigenspaces V_j, and the frame expansion of pi_1.

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "dualpolar/iota.hpp"
#include "dualpolar/spectral.hpp"

namespace dualpolar::frames {

/// U^j = sum_{u in Omega_j} iota(u) iota(u)^T from the definition, checked
/// entrywise against sum_l [l;j] A_{d-l}. Errors: DecompositionMismatch.
IntMatrix u_matrix(const scheme::DualPolarGraph& g, int j);

struct FrameConstant {
    int j = 0;
    Rational from_table;             // sum_l [l;j] p_{d-l}(j)
    Rational observed;               // eigenvalue of U^j on the u-check vectors
    std::optional<Rational> closed;  // j = 1 only
};

/// lambda_j by every available route, all required to agree.
/// Errors: FrameConstantMismatch.
FrameConstant frame_constant(int j, const scheme::DualPolarGraph& g, const spectral::SpectralDecomposition& dec,
                             const qseries::EigenvalueTable& table);

/// Column u is scale_j * u-check = lagrange_j iota(u), for u in Omega_j.
IntMatrix frame_vectors(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec, int j);

/// sum_w w-check w-check^T = lambda E_j, reconstruction of every u-check from
/// the frame and the frame potential identity on the same vectors.
/// Errors: TightFrameViolation.
nlohmann::json verify_tight_frame(int j, const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec,
                                  const Rational& lambda);

/// tau-check = iota(tau) - (a_1/|X|) 1, asserted equal to E_1 iota(tau).
/// Errors: DecompositionMismatch.
RationalVector tau_check(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec, int tau);

/// sum_tau <iota(tau), h> / lambda_1 * tau-check.
RationalVector pi1_via_frame(const lattice::PolarLattice& lat, const Rational& lambda1, const RationalVector& h);

/// pi1_via_frame against E_1 on the standard basis and on `samples` random
/// rational vectors drawn from a fixed seed. Errors: DecompositionMismatch.
nlohmann::json pi1_check(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec,
                         const Rational& lambda1, int samples, std::uint64_t seed);

/// iota(0) = 1, iota(top) = 0, iota(z) iota(y) = iota(z v y),
/// <iota(z), iota(y)> = a_{rk(z v y)}, and the three atom cases; over all pairs
/// when |L| <= limit, otherwise over `samples` seeded pairs.
/// Errors: IdentityViolation.
nlohmann::json iota_laws_check(const lattice::PolarLattice& lat, int limit, int samples, std::uint64_t seed);

} // namespace dualpolar::frames

namespace dualpolar::reference {

/// U^j as M_j^T M_j, serially.
IntMatrix u_matrix(const lattice::PolarLattice& lat, int j);

} // namespace dualpolar::reference
