#pragma once

// Subspaces of GF(q)^n in canonical reduced row echelon form.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "dualpolar/gf.hpp"

namespace dualpolar {

using gf::Elem;
using Vector = std::vector<Elem>;

/// Reduces a row-major rows x cols matrix to RREF in place and returns its rank.
/// Zero rows end up at the bottom.
int rref_in_place(const gf::Field& field, std::vector<Elem>& m, int rows, int cols);

/// A subspace held by its RREF basis (pivots strictly increasing, pivot entries
/// 1, zeros above and below each pivot), or the tagged top element of the
/// lattice, which stands for the whole ambient space.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int n);
    static Subspace top(int n);
    /// Canonical span of the given rows (each of length n).
    static Subspace span(const gf::Field& field, int n, std::span<const Vector> rows);
    static Subspace span(const gf::Field& field, int n, std::vector<Elem> flat_rows, int row_count);
    /// Wraps an already canonical basis without re-reducing it.
    static Subspace from_canonical(int n, std::vector<Elem> flat_rows);

    int ambient_dim() const noexcept { return n_; }
    /// Number of basis rows; the ambient dimension for top.
    int dim() const noexcept { return top_ ? n_ : rows_; }
    bool is_top() const noexcept { return top_; }
    bool is_zero() const noexcept { return !top_ && rows_ == 0; }

    std::span<const Elem> row(int i) const
    {
        return {data_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }
    const std::vector<Elem>& data() const noexcept { return data_; }
    std::vector<Vector> rows() const;
    /// Pivot column of each row.
    std::vector<int> pivots() const;

    /// Byte key of the canonical basis; equal keys iff equal subspaces.
    std::string key() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    int n_ = 0;
    int rows_ = 0;
    bool top_ = false;
    std::vector<Elem> data_;
};

/// True iff v lies in s.
bool contains(const gf::Field& field, const Subspace& s, std::span<const Elem> v);
/// a <= b as subspaces (top contains everything, is contained only in top).
bool is_subspace_of(const gf::Field& field, const Subspace& a, const Subspace& b);
/// Span of a and b (never returns top unless an argument is top).
Subspace sum(const gf::Field& field, const Subspace& a, const Subspace& b);
/// a intersect b, via the Zassenhaus block reduction.
Subspace intersection(const gf::Field& field, const Subspace& a, const Subspace& b);
/// Right kernel {v : M v = 0} of a rows x cols matrix.
Subspace kernel(const gf::Field& field, std::vector<Elem> m, int rows, int cols);

} // namespace dualpolar
