#pragma once

// Arithmetic in GF(p^k) for the small fields used by the dual polar families.
//
// An element is stored as its canonical code sum_i c_i p^i, where c_i are the
// coefficients of the reduced polynomial representative. Codes are therefore
// unique per element and order elements lexicographically by
// (c_{k-1}, ..., c_0).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dualpolar/error.hpp"

namespace dualpolar::gf {

using Elem = std::uint16_t;

bool is_prime(long n) noexcept;

/// True iff the monic polynomial (coefficients low to high, leading 1 last)
/// has no monic factor of degree 1..deg/2 over GF(p).
bool is_irreducible(std::span<const int> monic, int p);

class Field {
public:
    /// Lexicographically smallest monic irreducible modulus of degree k.
    /// Requires p prime, 1 <= k <= 4, p^k <= 2^16.
    static std::shared_ptr<const Field> create(int p, int k);

    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }
    /// Coefficients of the modulus, low to high; size k+1, last entry 1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept
    {
        if (p_ == 2)
            return static_cast<Elem>(a ^ b);
        if (!add_table_.empty())
            return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const noexcept
    {
        if (a == 0 || b == 0)
            return 0;
        int s = log_[a] + log_[b];
        if (s >= q_ - 1)
            s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long e) const;

    /// x -> x^r where q = r^2. Throws NotQuadraticExtension when k is odd.
    Elem conjugate(Elem a) const;
    bool has_conjugation() const noexcept { return k_ % 2 == 0; }
    /// r = p^(k/2); only meaningful when has_conjugation().
    int subfield_order() const noexcept { return sub_order_; }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    Elem from_int(long v) const noexcept;
    std::vector<int> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const int> coeffs) const;

    /// All q elements in code order.
    std::vector<Elem> elements() const;

    std::string describe() const;

    bool operator==(const Field& o) const noexcept
    {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

private:
    Field(int p, int k, std::vector<int> modulus);

    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem mul_poly(Elem a, Elem b) const;

    int p_;
    int k_;
    int q_;
    int sub_order_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> exp_;
    std::vector<int> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;
    std::vector<Elem> conj_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr field_create(int p, int k) { return Field::create(p, k); }

/// Checked value type bundling an element with its field. Mixed-field
/// arithmetic throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem code);

    const FieldPtr& field() const noexcept { return field_; }
    Elem code() const noexcept { return code_; }
    std::vector<int> coeffs() const { return field_->coefficients(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement conjugate() const { return {field_, field_->conjugate(code_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldPtr field_;
    Elem code_;
};

enum class Op { Add, Sub, Mul, Div };

FieldElement arith(const FieldElement& a, const FieldElement& b, Op op);

std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

} // namespace dualpolar::gf
