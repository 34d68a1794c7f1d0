#pragma once

// Instances built once per test binary.

#include <map>
#include <memory>
#include <tuple>

#include "dualpolar/frames.hpp"
#include "dualpolar/lattice.hpp"
#include "dualpolar/qseries.hpp"
#include "dualpolar/scheme.hpp"
#include "dualpolar/spectral.hpp"

namespace fixtures {

struct Built {
    std::shared_ptr<const dualpolar::lattice::PolarLattice> lat;
    std::unique_ptr<dualpolar::scheme::DualPolarGraph> graph;
    std::unique_ptr<dualpolar::IntMatrix> L;
    std::unique_ptr<dualpolar::spectral::SpectralDecomposition> dec;
    std::unique_ptr<dualpolar::qseries::EigenvalueTable> table;
};

inline Built& get(dualpolar::forms::Family f, int d, int r)
{
    static std::map<std::tuple<int, int, int>, Built> cache;
    auto& b = cache[{static_cast<int>(f), d, r}];
    if (!b.lat) {
        using namespace dualpolar;
        b.lat = std::make_shared<const lattice::PolarLattice>(lattice::enumerate(forms::make_space(f, d, r)));
        b.graph = std::make_unique<scheme::DualPolarGraph>(scheme::build_graph(b.lat));
        b.L = std::make_unique<IntMatrix>(spectral::laplacian(*b.graph));
        b.dec = std::make_unique<spectral::SpectralDecomposition>(
            spectral::idempotents(*b.L, spectral::mu_values(b.lat->space())));
        b.table = std::make_unique<qseries::EigenvalueTable>(
            qseries::eigen_table(d, qseries::QBase::of(b.lat->space())));
    }
    return b;
}

inline Built& c22() { return get(dualpolar::forms::Family::C, 2, 2); }
inline Built& c32() { return get(dualpolar::forms::Family::C, 3, 2); }
inline Built& d32() { return get(dualpolar::forms::Family::D, 3, 2); }

template <class Fn>
dualpolar::Errc error_of(Fn fn)
{
    try {
        fn();
    } catch (const dualpolar::Error& e) {
        return e.code();
    }
    return dualpolar::Errc::BadInput; // sentinel: nothing thrown
}

} // namespace fixtures
