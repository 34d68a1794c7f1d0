#include "dualpolar/iota.hpp"

namespace dualpolar::frames {

std::vector<std::int64_t> iota_int(const lattice::PolarLattice& lat, lattice::NodeRef z)
{
    const auto& bits = lat.above(z);
    std::vector<std::int64_t> v(lat.vertex_count(), 0);
    for (int x = 0; x < lat.vertex_count(); ++x)
        v[x] = lattice::test_bit(bits, x) ? 1 : 0;
    return v;
}

RationalVector iota(const lattice::PolarLattice& lat, lattice::NodeRef z)
{
    auto v = iota_int(lat, z);
    return RationalVector(v.begin(), v.end());
}

RationalVector iota(const lattice::PolarLattice& lat, const Subspace& z)
{
    const auto ref = lat.locate(z);
    if (!ref)
        throw Error(Errc::BadParameters, "subspace is not an element of the lattice");
    return iota(lat, *ref);
}

IntMatrix iota_matrix(const lattice::PolarLattice& lat, int j)
{
    if (j < 0 || j > lat.d() + 1)
        throw Error(Errc::IndexOutOfRange, "level " + std::to_string(j) + " outside the lattice");
    const int rows = lat.size(j);
    const int X = lat.vertex_count();
    IntMatrix m(rows, X);
    for (int u = 0; u < rows; ++u) {
        const auto& bits = lat.above({j, u});
        for (int x = 0; x < X; ++x)
            m(u, x) = lattice::test_bit(bits, x) ? 1 : 0;
    }
    return m;
}

} // namespace dualpolar::frames
