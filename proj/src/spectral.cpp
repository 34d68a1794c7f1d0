#include "dualpolar/spectral.hpp"

#include "dualpolar/iota.hpp"
#include "dualpolar/kernels.hpp"

namespace dualpolar::spectral {

namespace {

std::int64_t to_int64(const Rational& x, const char* what)
{
    const BigInt v = qseries::require_integer(x, what);
    if (!v.fits_slong_p())
        throw Error(Errc::Overflow, std::string(what) + " does not fit in int64");
    return v.get_si();
}

IntMatrix shifted(const IntMatrix& L, std::int64_t s)
{
    IntMatrix m = L;
    for (int i = 0; i < m.rows(); ++i)
        m(i, i) = checked_add(m(i, i), -s);
    return m;
}

} // namespace

IntMatrix laplacian(const scheme::DualPolarGraph& g) { return scheme::adjacency_matrix(g, 1); }

Rational mu(int j, int d, forms::Family family, long r)
{
    const auto base = qseries::QBase::of(family, r);
    Rational closed = qseries::mu_closed(j, d, base);
    if (closed != qseries::mu_recursive(j, d, base))
        throw Error(Errc::ThetaMismatch, "mu_" + std::to_string(j) + " closed form and recursion disagree");
    return closed;
}

std::vector<Rational> mu_values(const forms::FormedSpace& space)
{
    std::vector<Rational> out;
    for (int j = 0; j <= space.d(); ++j)
        out.push_back(mu(j, space.d(), space.family(), space.r()));
    return out;
}

SpectralDecomposition idempotents(const IntMatrix& L, const std::vector<Rational>& mu)
{
    const int D = static_cast<int>(mu.size());
    const int n = L.rows();
    if (L.cols() != n)
        throw Error(Errc::DimensionMismatch, "L must be square");
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j)
            if (mu[i] == mu[j])
                throw Error(Errc::EigenvalueCollision, "mu_" + std::to_string(i) + " = mu_" + std::to_string(j));
    std::vector<std::int64_t> m(D);
    for (int i = 0; i < D; ++i)
        m[i] = to_int64(mu[i], "eigenvalue");

    SpectralDecomposition dec;
    dec.d = D - 1;
    dec.n = n;
    dec.mu = mu;
    for (int j = 0; j < D; ++j) {
        IntMatrix P = IntMatrix::identity(n);
        std::int64_t s = 1;
        for (int i = 0; i < D; ++i) {
            if (i == j)
                continue;
            P = kernels::multiply(P, shifted(L, m[i]));
            s = checked_mul(s, m[j] - m[i]);
        }
        if (!(kernels::multiply(L, P) == scaled(P, m[j])))
            throw Error(Errc::NotAnEigenvalue, "A_1 E_" + std::to_string(j) + " != mu_" + std::to_string(j) + " E_" +
                                                   std::to_string(j));
        dec.E.emplace_back(P, s);
        dec.lagrange.push_back(std::move(P));
        dec.scale.push_back(s);
    }

    RationalMatrix total(IntMatrix(n, n));
    for (const auto& E : dec.E)
        total = total + E;
    if (!(total == RationalMatrix::identity(n)))
        throw Error(Errc::DecompositionMismatch, "idempotents do not sum to I");
    for (int i = 0; i < D; ++i) {
        if (!dec.lagrange[i].is_symmetric())
            throw Error(Errc::DecompositionMismatch, "E_" + std::to_string(i) + " is not symmetric");
        if (!(kernels::multiply(dec.lagrange[i], dec.lagrange[i]) == scaled(dec.lagrange[i], dec.scale[i])))
            throw Error(Errc::DecompositionMismatch, "E_" + std::to_string(i) + " is not idempotent");
        for (int j = i + 1; j < D; ++j)
            if (!kernels::multiply(dec.lagrange[i], dec.lagrange[j]).is_zero())
                throw Error(Errc::DecompositionMismatch,
                            "E_" + std::to_string(i) + " E_" + std::to_string(j) + " != 0");
    }

    int sum = 0;
    for (int j = 0; j < D; ++j) {
        const int r = kernels::exact_rank(dec.lagrange[j]);
        // rank = trace for an idempotent
        if (Rational(r) != dec.E[j].trace() || r < 1)
            throw Error(Errc::DecompositionMismatch, "rank of E_" + std::to_string(j) + " is " + std::to_string(r) +
                                                         ", trace " + to_string(dec.E[j].trace()));
        dec.mult.push_back(r);
        sum += r;
    }
    if (sum != n)
        throw Error(Errc::DecompositionMismatch, "multiplicities sum to " + std::to_string(sum));
    return dec;
}

RationalVector project(const SpectralDecomposition& dec, const RationalVector& f, int j)
{
    if (j < 0 || j > dec.d)
        throw Error(Errc::IndexOutOfRange, "no eigenspace " + std::to_string(j));
    return dualpolar::apply(dec.E[j], f);
}

nlohmann::json eigen_table_check(const scheme::DualPolarGraph& g, const SpectralDecomposition& dec,
                                 const qseries::EigenvalueTable& table)
{
    const int D = dec.d + 1;
    if (table.d != dec.d)
        throw Error(Errc::DimensionMismatch, "table and decomposition have different diameters");
    for (int j = 0; j < D; ++j)
        if (table.theta[j] != dec.mu[j])
            throw Error(Errc::ThetaMismatch, "theta_" + std::to_string(j) + " = " + to_string(table.theta[j]) +
                                                 ", mu_" + std::to_string(j) + " = " + to_string(dec.mu[j]));
    int checked = 0;
    for (int i = 0; i < D; ++i) {
        const IntMatrix A = scheme::adjacency_matrix(g, i);
        for (int j = 0; j < D; ++j) {
            const std::int64_t p = to_int64(table.eigenvalue(i, j), "p_i(j)");
            if (!(kernels::multiply(A, dec.lagrange[j]) == scaled(dec.lagrange[j], p)))
                throw Error(Errc::NotAnEigenvalue, "A_" + std::to_string(i) + " E_" + std::to_string(j) + " != " +
                                                       std::to_string(p) + " E_" + std::to_string(j));
            ++checked;
        }
    }
    return {{"products_checked", checked}};
}

nlohmann::json filtration_check(const lattice::PolarLattice& lat, const SpectralDecomposition& dec)
{
    const int d = lat.d();
    const int X = lat.vertex_count();
    const auto base = qseries::QBase::of(lat.space());

    int cover_sums = 0;
    for (int j = 0; j < d; ++j) {
        const long coeff = qseries::gauss_binom(d - j, 1, base).get_si();
        for (int w = 0; w < lat.size(j); ++w) {
            std::vector<long> star(X, 0);
            for (int v : lat.up({j, w}))
                for (int x : lattice::bit_indices(lat.above({j + 1, v})))
                    ++star[x];
            const auto& mine = lat.above({j, w});
            for (int x = 0; x < X; ++x)
                if (star[x] != (lattice::test_bit(mine, x) ? coeff : 0L))
                    throw Error(Errc::FiltrationMismatch, "w* != [d-j;1] iota(w) at level " + std::to_string(j) +
                                                              ", element " + std::to_string(w) + ", vertex " +
                                                              std::to_string(x));
            ++cover_sums;
        }
    }

    nlohmann::json dims = nlohmann::json::array();
    int partial = 0;
    int prev_rank = 0;
    for (int j = 0; j <= d; ++j) {
        const IntMatrix M = frames::iota_matrix(lat, j);
        const int r = kernels::exact_rank(M);
        partial += dec.mult[j];
        if (r != partial)
            throw Error(Errc::FiltrationMismatch, "dim Lambda_" + std::to_string(j) + " = " + std::to_string(r) +
                                                      ", expected " + std::to_string(partial));
        for (int i = j + 1; i <= d; ++i)
            if (!kernels::multiply_abt(dec.lagrange[i], M).is_zero())
                throw Error(Errc::FiltrationMismatch, "E_" + std::to_string(i) + " does not vanish on Lambda_" +
                                                          std::to_string(j));
        dims.push_back({{"j", j}, {"dim_lambda", r}, {"dim_v", r - prev_rank}});
        prev_rank = r;
    }
    if (prev_rank != X)
        throw Error(Errc::FiltrationMismatch, "Lambda_d is not all of R^X");
    return {{"cover_sums_checked", cover_sums}, {"levels", dims}};
}

nlohmann::json laplacian_identities_check(const lattice::PolarLattice& lat, const IntMatrix& L)
{
    const int d = lat.d();
    const int X = lat.vertex_count();
    const auto base = qseries::QBase::of(lat.space());
    if (L.rows() != X || L.cols() != X)
        throw Error(Errc::DimensionMismatch, "L does not act on R^X");

    const long top = qseries::gauss_binom(d, 1, base).get_si();
    for (int x = 0; x < X; ++x) {
        std::vector<long> rhs(X, 0);
        rhs[x] = -top;
        for (int z : lat.down({d, x}))
            for (int y : lattice::bit_indices(lat.above({d - 1, z})))
                ++rhs[y];
        for (int y = 0; y < X; ++y)
            if (L(y, x) != rhs[y])
                throw Error(Errc::IdentityViolation, "L iota(x) at coatom " + std::to_string(x) + ", vertex " +
                                                         std::to_string(y));
    }

    int checked = 0;
    for (int j = 0; j < d; ++j) {
        const long outer = qseries::gauss_binom(d - j, 1, base).get_si();
        const long inner = to_int64(base.power(j) + base.power_e(d - j - 1), "cover coefficient");
        for (int w = 0; w < lat.size(j); ++w) {
            std::vector<long> lhs(X, 0), rhs(X, 0);
            for (int u : lat.up({j, w}))
                for (int z : lat.down({j + 1, u}))
                    for (int y : lattice::bit_indices(lat.above({j, z})))
                        ++lhs[y];
            for (int y : lattice::bit_indices(lat.above({j, w})))
                rhs[y] += inner;
            if (j > 0)
                for (int v : lat.down({j, w}))
                    for (int y : lattice::bit_indices(lat.above({j - 1, v})))
                        ++rhs[y];
            for (int y = 0; y < X; ++y)
                if (lhs[y] != outer * rhs[y])
                    throw Error(Errc::IdentityViolation, "cover double sum at level " + std::to_string(j) +
                                                             ", element " + std::to_string(w) + ", vertex " +
                                                             std::to_string(y));
            ++checked;
        }
    }
    return {{"coatoms_checked", X}, {"elements_checked", checked}};
}

} // namespace dualpolar::spectral
