#pragma once

// The embedding iota: L -> R^X, iota(z)(x) = [z <= x].

#include "dualpolar/lattice.hpp"
#include "dualpolar/matrix.hpp"

namespace dualpolar::frames {

/// Indicator of the coatoms above z. Errors: BadParameters if z is not in L.
RationalVector iota(const lattice::PolarLattice& lat, const Subspace& z);
RationalVector iota(const lattice::PolarLattice& lat, lattice::NodeRef z);
std::vector<std::int64_t> iota_int(const lattice::PolarLattice& lat, lattice::NodeRef z);

/// Rows iota(u) for u in Omega_j, in level order; 0 <= j <= d + 1.
IntMatrix iota_matrix(const lattice::PolarLattice& lat, int j);

} // namespace dualpolar::frames
