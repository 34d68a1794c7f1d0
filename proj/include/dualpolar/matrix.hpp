#pragma once

// Dense exact matrices over Z and Q.
//
// Everything on R^X in this library is exact. Integer matrices carry the
// graph algebra (adjacency matrices, products of A_1 - mu I); a rational
// matrix is an integer numerator matrix over one positive common
// denominator, kept in lowest terms.

#include <cstdint>
#include <span>
#include <vector>

#include "dualpolar/error.hpp"
#include "dualpolar/rational.hpp"

namespace dualpolar {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, std::int64_t fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill)
    {
    }

    static IntMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    std::int64_t& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<const std::int64_t> row(int r) const
    {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    std::span<std::int64_t> row(int r)
    {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    const std::vector<std::int64_t>& data() const noexcept { return data_; }
    std::vector<std::int64_t>& data() noexcept { return data_; }

    IntMatrix transposed() const;
    std::int64_t max_abs() const noexcept;
    bool is_symmetric() const noexcept;
    bool is_zero() const noexcept;
    BigInt trace() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Overflow-checked elementwise operations; Overflow on int64 overflow.
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(const IntMatrix& a, std::int64_t s);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(IntMatrix num, std::int64_t den = 1);

    static RationalMatrix identity(int n) { return RationalMatrix(IntMatrix::identity(n)); }

    int rows() const noexcept { return num_.rows(); }
    int cols() const noexcept { return num_.cols(); }
    const IntMatrix& numerators() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    Rational at(int r, int c) const { return make_rational(num_(r, c), den_); }

    RationalMatrix transposed() const { return RationalMatrix(num_.transposed(), den_); }
    RationalMatrix scaled(const Rational& s) const;
    Rational trace() const;
    bool is_symmetric() const noexcept { return num_.is_symmetric(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    /// Product through the parallel integer kernel.
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

private:
    void normalize();

    IntMatrix num_;
    std::int64_t den_ = 1;
};

RationalVector apply(const RationalMatrix& m, const RationalVector& v);
RationalVector apply(const IntMatrix& m, const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector hadamard(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
RationalVector column(const RationalMatrix& m, int c);
RationalVector constant_vector(int n, const Rational& value);
bool is_zero(const RationalVector& v);

} // namespace dualpolar
