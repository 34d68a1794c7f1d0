#include "dualpolar/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

namespace dualpolar {

namespace {

using i128 = __int128;

// Every partial sum stays below 2^126 when max|a| * max|b| * inner < 2^126.
void require_no_accumulator_overflow(const IntMatrix& a, const IntMatrix& b, int inner)
{
    const long double bound = static_cast<long double>(a.max_abs()) * static_cast<long double>(b.max_abs()) * inner;
    if (bound >= std::ldexp(1.0L, 126))
        throw Error(Errc::Overflow, "matrix product may exceed 128-bit accumulator");
}

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::Overflow, "matrix product entry exceeds int64");
    return static_cast<std::int64_t>(v);
}

void require_inner(const IntMatrix& a, int b_inner)
{
    if (a.cols() != b_inner)
        throw Error(Errc::DimensionMismatch, "inner dimensions differ");
}

// Shared Bareiss step: eliminate column c below pivot row `piv` using the
// previous pivot `prev`. Rows [begin, end) are independent.
void bareiss_rows(std::vector<BigInt>& m, int cols, int piv, int c, const BigInt& prev, int begin, int end)
{
    BigInt t;
    const BigInt& p = m[static_cast<std::size_t>(piv) * cols + c];
    for (int i = begin; i < end; ++i) {
        BigInt* row = &m[static_cast<std::size_t>(i) * cols];
        const BigInt* prow = &m[static_cast<std::size_t>(piv) * cols];
        const BigInt f = row[c];
        for (int j = c + 1; j < cols; ++j) {
            // row[j] = (p * row[j] - f * prow[j]) / prev
            mpz_mul(t.get_mpz_t(), p.get_mpz_t(), row[j].get_mpz_t());
            mpz_submul(t.get_mpz_t(), f.get_mpz_t(), prow[j].get_mpz_t());
            mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        row[c] = 0;
    }
}

// Pivot: nonzero entry of least magnitude in column c among rows >= r.
int choose_pivot(const std::vector<BigInt>& m, int rows, int cols, int r, int c)
{
    int best = -1;
    for (int i = r; i < rows; ++i) {
        const BigInt& v = m[static_cast<std::size_t>(i) * cols + c];
        if (v == 0)
            continue;
        if (best < 0 || mpz_cmpabs(v.get_mpz_t(), m[static_cast<std::size_t>(best) * cols + c].get_mpz_t()) < 0)
            best = i;
    }
    return best;
}

template <bool Parallel>
int bareiss_rank(const IntMatrix& src)
{
    const int rows = src.rows();
    const int cols = src.cols();
    std::vector<BigInt> m(src.data().size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = static_cast<long>(src.data()[i]);
    BigInt prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        const int piv = choose_pivot(m, rows, cols, rank, c);
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(m[static_cast<std::size_t>(piv) * cols + j], m[static_cast<std::size_t>(rank) * cols + j]);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (int i = rank + 1; i < rows; ++i)
                bareiss_rows(m, cols, rank, c, prev, i, i + 1);
        } else {
            bareiss_rows(m, cols, rank, c, prev, rank + 1, rows);
        }
        prev = m[static_cast<std::size_t>(rank) * cols + c];
        ++rank;
    }
    return rank;
}

} // namespace

namespace kernels {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    require_inner(a, b.rows());
    require_no_accumulator_overflow(a, b, a.cols());
    const int n = a.rows();
    const int inner = a.cols();
    const int m = b.cols();
    IntMatrix out(n, m);
    bool overflow = false;
#pragma omp parallel
    {
        std::vector<i128> acc(m);
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int k = 0; k < inner; ++k) {
                const std::int64_t aik = a(i, k);
                if (aik == 0)
                    continue;
                const auto brow = b.row(k);
                for (int j = 0; j < m; ++j)
                    acc[j] += static_cast<i128>(aik) * brow[j];
            }
            for (int j = 0; j < m; ++j) {
                if (acc[j] > std::numeric_limits<std::int64_t>::max() || acc[j] < std::numeric_limits<std::int64_t>::min()) {
#pragma omp atomic write
                    overflow = true;
                    continue;
                }
                out(i, j) = static_cast<std::int64_t>(acc[j]);
            }
        }
    }
    if (overflow)
        throw Error(Errc::Overflow, "matrix product entry exceeds int64");
    return out;
}

IntMatrix multiply_abt(const IntMatrix& a, const IntMatrix& b)
{
    require_inner(a, b.cols());
    require_no_accumulator_overflow(a, b, a.cols());
    const int n = a.rows();
    const int m = b.rows();
    const int inner = a.cols();
    IntMatrix out(n, m);
    bool overflow = false;
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
        const auto ar = a.row(i);
        for (int j = 0; j < m; ++j) {
            const auto br = b.row(j);
            i128 acc = 0;
            for (int k = 0; k < inner; ++k)
                acc += static_cast<i128>(ar[k]) * br[k];
            if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min()) {
#pragma omp atomic write
                overflow = true;
                continue;
            }
            out(i, j) = static_cast<std::int64_t>(acc);
        }
    }
    if (overflow)
        throw Error(Errc::Overflow, "matrix product entry exceeds int64");
    return out;
}

std::vector<BigInt> multiply_vector(const IntMatrix& m, const std::vector<BigInt>& v)
{
    if (static_cast<int>(v.size()) != m.cols())
        throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<BigInt> out(m.rows());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m.rows(); ++i) {
        BigInt acc = 0;
        const auto r = m.row(i);
        for (int j = 0; j < m.cols(); ++j) {
            if (r[j] == 0 || v[j] == 0)
                continue;
            if (r[j] > 0)
                mpz_addmul_ui(acc.get_mpz_t(), v[j].get_mpz_t(), static_cast<unsigned long>(r[j]));
            else
                mpz_submul_ui(acc.get_mpz_t(), v[j].get_mpz_t(), static_cast<unsigned long>(-r[j]));
        }
        out[i] = std::move(acc);
    }
    return out;
}

int exact_rank(const IntMatrix& m) { return bareiss_rank<true>(m); }

} // namespace kernels

namespace reference {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    require_inner(a, b.rows());
    require_no_accumulator_overflow(a, b, a.cols());
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            i128 acc = 0;
            for (int k = 0; k < a.cols(); ++k)
                acc += static_cast<i128>(a(i, k)) * b(k, j);
            out(i, j) = narrow(acc);
        }
    return out;
}

IntMatrix multiply_abt(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b.transposed()); }

int exact_rank(const IntMatrix& m) { return bareiss_rank<false>(m); }

} // namespace reference

} // namespace dualpolar
