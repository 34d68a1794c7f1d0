// Times each OpenMP kernel against its serial reference on one instance and
// checks that both give the same result.
//   bench_kernels [family d r] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "dualpolar/frames.hpp"
#include "dualpolar/kernels.hpp"
#include "dualpolar/scheme.hpp"
#include "dualpolar/spectral.hpp"

using namespace dualpolar;

namespace {

template <class Fn>
double best_of(int repeats, Fn fn)
{
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

bool all_same = true;

template <class P, class S>
void row(const char* name, int repeats, P parallel, S serial)
{
    decltype(parallel()) a, b;
    const double tp = best_of(repeats, [&] { a = parallel(); });
    const double ts = best_of(repeats, [&] { b = serial(); });
    const bool same = a == b;
    all_same = all_same && same;
    std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, ts / tp, same ? "same" : "DIFFERENT");
}

} // namespace

int main(int argc, char** argv)
{
    std::string tag = "2A-odd";
    int d = 2, r = 2, repeats = 3;
    if (argc >= 4) {
        tag = argv[1];
        d = std::atoi(argv[2]);
        r = std::atoi(argv[3]);
    }
    if (argc >= 5)
        repeats = std::max(1, std::atoi(argv[4]));
    const auto family = forms::parse_family(tag);
    if (!family) {
        std::fprintf(stderr, "unknown family %s\n", tag.c_str());
        return 2;
    }

    auto lat = std::make_shared<const lattice::PolarLattice>(lattice::enumerate(forms::make_space(*family, d, r)));
    auto g = scheme::build_graph(lat);
    const IntMatrix A = spectral::laplacian(g);
    const auto dec = spectral::idempotents(A, spectral::mu_values(lat->space()));
    const IntMatrix M = frames::iota_matrix(*lat, 1);

    std::printf("%s: %d vertices, %d atoms, %d threads\n", lat->space().name().c_str(), lat->vertex_count(),
                lat->size(1), omp_get_max_threads());
    std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");
    row("distance_table", repeats, [&] { return scheme::distance_table(*lat); },
        [&] { return reference::distance_table(*lat); });
    row("multiply A1*A1", repeats, [&] { return kernels::multiply(A, A); }, [&] { return reference::multiply(A, A); });
    row("multiply A1*P_1", repeats, [&] { return kernels::multiply(A, dec.lagrange[1]); },
        [&] { return reference::multiply(A, dec.lagrange[1]); });
    row("multiply_abt M1*M1^T", repeats, [&] { return kernels::multiply_abt(M, M); },
        [&] { return reference::multiply_abt(M, M); });
    row("u_matrix j=1", repeats, [&] { return frames::u_matrix(g, 1); },
        [&] { return reference::u_matrix(*lat, 1); });
    row("exact_rank P_1", repeats, [&] { return kernels::exact_rank(dec.lagrange[1]); },
        [&] { return reference::exact_rank(dec.lagrange[1]); });
    return all_same ? 0 : 1;
}
