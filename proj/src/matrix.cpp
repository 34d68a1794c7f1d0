#include "dualpolar/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "dualpolar/kernels.hpp"

namespace dualpolar {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::Overflow, "int64 product overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::Overflow, "int64 sum overflow");
    return r;
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::int64_t IntMatrix::max_abs() const noexcept
{
    std::int64_t m = 0;
    for (auto v : data_)
        m = std::max(m, v < 0 ? -v : v);
    return m;
}

bool IntMatrix::is_symmetric() const noexcept
{
    if (rows_ != cols_)
        return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

bool IntMatrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

BigInt IntMatrix::trace() const
{
    BigInt t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        t += static_cast<long>((*this)(i, i));
    return t;
}

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::DimensionMismatch, "matrix shapes differ");
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

} // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    require_same_shape(a, b);
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i)
        r.data()[i] = checked_add(a.data()[i], b.data()[i]);
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    require_same_shape(a, b);
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i)
        r.data()[i] = checked_add(a.data()[i], -b.data()[i]);
    return r;
}

IntMatrix scaled(const IntMatrix& a, std::int64_t s)
{
    IntMatrix r = a;
    for (auto& v : r.data())
        v = checked_mul(v, s);
    return r;
}

RationalMatrix::RationalMatrix(IntMatrix num, std::int64_t den) : num_(std::move(num)), den_(den)
{
    if (den_ == 0)
        throw Error(Errc::DivisionByZero, "zero denominator");
    normalize();
}

void RationalMatrix::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_.data())
            v = -v;
    }
    std::int64_t g = den_;
    for (auto v : num_.data()) {
        if (g == 1)
            break;
        g = gcd64(g, v);
    }
    if (g > 1) {
        den_ /= g;
        for (auto& v : num_.data())
            v /= g;
    }
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const
{
    if (!s.get_num().fits_slong_p() || !s.get_den().fits_slong_p())
        throw Error(Errc::Overflow, "scalar does not fit in int64");
    return RationalMatrix(dualpolar::scaled(num_, s.get_num().get_si()), checked_mul(den_, s.get_den().get_si()));
}

Rational RationalMatrix::trace() const
{
    Rational t(num_.trace(), BigInt(static_cast<long>(den_)));
    t.canonicalize();
    return t;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    // both are in lowest terms
    return a.den_ == b.den_ && a.num_ == b.num_;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return RationalMatrix(scaled(a.num_, l / a.den_) + scaled(b.num_, l / b.den_), l);
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return RationalMatrix(scaled(a.num_, l / a.den_) - scaled(b.num_, l / b.den_), l);
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    return RationalMatrix(kernels::multiply(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

namespace {

// v = w / den with integer w
std::pair<std::vector<BigInt>, BigInt> common_denominator(const RationalVector& v)
{
    BigInt den = 1;
    for (const auto& x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = v[i].get_num() * (den / v[i].get_den());
    return {std::move(w), den};
}

} // namespace

RationalVector apply(const IntMatrix& m, const RationalVector& v)
{
    if (static_cast<int>(v.size()) != m.cols())
        throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    auto [w, den] = common_denominator(v);
    auto prod = kernels::multiply_vector(m, w);
    RationalVector out(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        out[i] = Rational(prod[i], den);
        out[i].canonicalize();
    }
    return out;
}

RationalVector apply(const RationalMatrix& m, const RationalVector& v)
{
    auto out = apply(m.numerators(), v);
    if (m.denominator() != 1) {
        const Rational inv = make_rational(1, m.denominator());
        for (auto& x : out)
            x *= inv;
    }
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "vector lengths differ");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            acc += a[i] * b[i];
    return acc;
}

RationalVector hadamard(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "vector lengths differ");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] * b[i];
    return r;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "vector lengths differ");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "vector lengths differ");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v)
{
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

RationalVector column(const RationalMatrix& m, int c)
{
    RationalVector v(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        v[r] = m.at(r, c);
    return v;
}

RationalVector constant_vector(int n, const Rational& value) { return RationalVector(n, value); }

bool is_zero(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace dualpolar
