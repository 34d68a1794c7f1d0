#include "dualpolar/frames.hpp"

#include <random>

#include "dualpolar/kernels.hpp"

namespace dualpolar::frames {

namespace {

std::int64_t to_int64(const Rational& x, Errc code, const std::string& what)
{
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw Error(code, what + " is not a machine integer: " + to_string(x));
    return x.get_num().get_si();
}

Rational a1_over_X(const lattice::PolarLattice& lat)
{
    return make_rational(lattice::popcount(lat.above({1, 0})), lat.vertex_count());
}

} // namespace

IntMatrix u_matrix(const scheme::DualPolarGraph& g, int j)
{
    const auto& lat = g.lattice();
    const int d = lat.d();
    if (j < 0 || j > d)
        throw Error(Errc::IndexOutOfRange, "j = " + std::to_string(j));
    const int X = lat.vertex_count();
    IntMatrix U(X, X);
#pragma omp parallel
    {
        IntMatrix local(X, X);
#pragma omp for schedule(static) nowait
        for (int u = 0; u < lat.size(j); ++u) {
            const auto S = lattice::bit_indices(lat.above({j, u}));
            for (int a : S)
                for (int b : S)
                    ++local(a, b);
        }
#pragma omp critical
        U = U + local;
    }
    const auto base = qseries::QBase::of(lat.space());
    std::vector<std::int64_t> coeff(d + 1);
    for (int h = 0; h <= d; ++h)
        coeff[h] = qseries::gauss_binom(d - h, j, base).get_si();
    for (int x = 0; x < X; ++x)
        for (int y = 0; y < X; ++y)
            if (U(x, y) != coeff[g.distance(x, y)])
                throw Error(Errc::DecompositionMismatch, "U^" + std::to_string(j) + " differs from the A_i expansion at (" +
                                                             std::to_string(x) + "," + std::to_string(y) + ")");
    return U;
}

IntMatrix frame_vectors(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec, int j)
{
    return kernels::multiply_abt(dec.lagrange.at(j), iota_matrix(lat, j));
}

FrameConstant frame_constant(int j, const scheme::DualPolarGraph& g, const spectral::SpectralDecomposition& dec,
                             const qseries::EigenvalueTable& table)
{
    const auto& lat = g.lattice();
    const auto base = qseries::QBase::of(lat.space());
    FrameConstant fc;
    fc.j = j;
    fc.from_table = qseries::lambda_from_table(j, table, base);
    if (j == 1)
        fc.closed = qseries::lambda1_closed(lat.d(), base);

    const IntMatrix U = u_matrix(g, j);
    const IntMatrix F = frame_vectors(lat, dec, j);
    const IntMatrix UF = kernels::multiply(U, F);
    bool found = false;
    for (int x = 0; x < F.rows() && !found; ++x)
        for (int u = 0; u < F.cols() && !found; ++u)
            if (F(x, u) != 0) {
                fc.observed = make_rational(UF(x, u), F(x, u));
                found = true;
            }
    if (!found)
        throw Error(Errc::FrameConstantMismatch, "all frame vectors vanish at j = " + std::to_string(j));
    for (int x = 0; x < F.rows(); ++x)
        for (int u = 0; u < F.cols(); ++u)
            if (Rational(UF(x, u)) != fc.observed * F(x, u))
                throw Error(Errc::FrameConstantMismatch, "frame vector " + std::to_string(u) +
                                                             " is not an eigenvector of U^" + std::to_string(j));
    if (fc.observed != fc.from_table || (fc.closed && *fc.closed != fc.observed))
        throw Error(Errc::FrameConstantMismatch,
                    "lambda_" + std::to_string(j) + ": table " + to_string(fc.from_table) + ", observed " +
                        to_string(fc.observed) + (fc.closed ? ", closed " + to_string(*fc.closed) : std::string()));
    return fc;
}

nlohmann::json verify_tight_frame(int j, const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec,
                                  const Rational& lambda)
{
    const std::int64_t lam = to_int64(lambda, Errc::TightFrameViolation, "lambda");
    const std::int64_t D = dec.scale.at(j);
    const IntMatrix F = frame_vectors(lat, dec, j);
    const int X = F.rows();
    const int m = F.cols();

    // sum_w (D w)(D w)^T = lambda D P_j
    const IntMatrix FFt = kernels::multiply_abt(F, F);
    const IntMatrix target = scaled(dec.lagrange[j], checked_mul(lam, D));
    if (!(FFt == target))
        throw Error(Errc::TightFrameViolation, "sum of frame outer products is not lambda E_" + std::to_string(j));

    const IntMatrix Ft = F.transposed();
    const IntMatrix G = kernels::multiply_abt(Ft, Ft); // Gram of the columns
    const BigInt lam_D2 = BigInt(static_cast<long>(lam)) * D * D;

    int witness = -1;
#pragma omp parallel for schedule(dynamic, 4)
    for (int u = 0; u < m; ++u) {
        // reconstruction: sum_w <w, u> w = lambda D^2 u (all vectors scaled by D)
        bool ok = true;
        for (int x = 0; x < X && ok; ++x) {
            BigInt acc = 0;
            for (int w = 0; w < m; ++w)
                if (F(x, w) != 0 && G(w, u) != 0)
                    acc += BigInt(static_cast<long>(F(x, w))) * G(w, u);
            ok = acc == lam_D2 * F(x, u);
        }
        // frame potential: sum_w <w, u>^2 = lambda D^2 |u|^2
        BigInt pot = 0;
        for (int w = 0; w < m; ++w)
            pot += BigInt(static_cast<long>(G(w, u))) * G(w, u);
        ok = ok && pot == lam_D2 * G(u, u);
        if (!ok) {
#pragma omp critical
            if (witness < 0 || u < witness)
                witness = u;
        }
    }
    if (witness >= 0)
        throw Error(Errc::TightFrameViolation, "frame identity fails at element " + std::to_string(witness) +
                                                   " of level " + std::to_string(j));
    return {{"j", j}, {"lambda", to_string(lambda)}, {"frame_size", m}, {"dim", dec.mult[j]}};
}

RationalVector tau_check(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec, int tau)
{
    RationalVector v = iota(lat, lattice::NodeRef{1, tau});
    const Rational c = a1_over_X(lat);
    for (auto& x : v)
        x -= c;
    if (!(v == dualpolar::apply(dec.E.at(1), iota(lat, lattice::NodeRef{1, tau}))))
        throw Error(Errc::DecompositionMismatch, "tau-check differs from E_1 iota(tau) at atom " + std::to_string(tau));
    return v;
}

RationalVector pi1_via_frame(const lattice::PolarLattice& lat, const Rational& lambda1, const RationalVector& h)
{
    const int X = lat.vertex_count();
    if (static_cast<int>(h.size()) != X)
        throw Error(Errc::DimensionMismatch, "h must have one entry per vertex");
    RationalVector out(X, Rational(0));
    Rational coeff_sum = 0;
    for (int t = 0; t < lat.size(1); ++t) {
        const auto S = lattice::bit_indices(lat.above({1, t}));
        Rational c = 0;
        for (int x : S)
            c += h[x];
        if (c == 0)
            continue;
        coeff_sum += c;
        for (int x : S)
            out[x] += c;
    }
    const Rational shift = a1_over_X(lat) * coeff_sum;
    for (auto& x : out)
        x = (x - shift) / lambda1;
    return out;
}

nlohmann::json pi1_check(const lattice::PolarLattice& lat, const spectral::SpectralDecomposition& dec,
                         const Rational& lambda1, int samples, std::uint64_t seed)
{
    const int X = lat.vertex_count();
    const auto& E1 = dec.E.at(1);
    for (int x = 0; x < X; ++x) {
        RationalVector e(X, Rational(0));
        e[x] = 1;
        if (!(pi1_via_frame(lat, lambda1, e) == column(E1, x)))
            throw Error(Errc::DecompositionMismatch, "frame expansion differs from E_1 on basis vector " +
                                                         std::to_string(x));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int s = 0; s < samples; ++s) {
        RationalVector h(X);
        for (auto& v : h)
            v = make_rational(num(rng), den(rng));
        if (!(pi1_via_frame(lat, lambda1, h) == dualpolar::apply(E1, h)))
            throw Error(Errc::DecompositionMismatch, "frame expansion differs from E_1 on random vector " +
                                                         std::to_string(s));
    }
    return {{"basis_vectors", X}, {"random_vectors", samples}, {"seed", seed}};
}

nlohmann::json iota_laws_check(const lattice::PolarLattice& lat, int limit, int samples, std::uint64_t seed)
{
    const int d = lat.d();
    const int X = lat.vertex_count();
    const auto a = lattice::a_counts(lat);

    if (lattice::popcount(lat.above(lat.bottom())) != X)
        throw Error(Errc::IdentityViolation, "iota(0) is not the all-ones vector");
    if (lattice::popcount(lat.above(lat.top())) != 0)
        throw Error(Errc::IdentityViolation, "iota(top) is not zero");

    std::vector<lattice::NodeRef> nodes;
    for (int l = 0; l <= d + 1; ++l)
        for (int i = 0; i < lat.size(l); ++i)
            nodes.push_back({l, i});
    std::vector<std::pair<int, int>> pairs;
    const int N = static_cast<int>(nodes.size());
    const bool exhaustive = N <= limit;
    if (exhaustive) {
        for (int i = 0; i < N; ++i)
            for (int k = i; k < N; ++k)
                pairs.emplace_back(i, k);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int s = 0; s < samples; ++s)
            pairs.emplace_back(pick(rng), pick(rng));
    }

    std::string violation;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, k] = pairs[p];
        const auto& bz = lat.above(nodes[i]);
        const auto& by = lat.above(nodes[k]);
        const Subspace jn = lattice::join(lat, lat.element(nodes[i]), lat.element(nodes[k]));
        const auto ref = lat.locate(jn);
        bool ok = ref.has_value();
        if (ok) {
            const auto& bj = lat.above(*ref);
            int inner = 0;
            for (std::size_t w = 0; w < bz.size() && ok; ++w) {
                const auto both = bz[w] & by[w];
                ok = both == bj[w];
                inner += std::popcount(both);
            }
            ok = ok && a[lattice::rank(lat, jn)] == inner;
        }
        if (!ok) {
#pragma omp critical
            if (violation.empty())
                violation = "(" + std::to_string(nodes[i].level) + ":" + std::to_string(nodes[i].index) + ", " +
                            std::to_string(nodes[k].level) + ":" + std::to_string(nodes[k].index) + ")";
        }
    }
    if (!violation.empty())
        throw Error(Errc::IdentityViolation, "iota product or inner product law fails at " + violation);
    return {{"pairs", pairs.size()}, {"exhaustive", exhaustive}};
}

} // namespace dualpolar::frames

namespace dualpolar::reference {

IntMatrix u_matrix(const lattice::PolarLattice& lat, int j)
{
    const IntMatrix M = frames::iota_matrix(lat, j);
    return reference::multiply(M.transposed(), M);
}

} // namespace dualpolar::reference
