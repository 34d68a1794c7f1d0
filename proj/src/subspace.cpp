#include "dualpolar/subspace.hpp"

#include <algorithm>

namespace dualpolar {

int rref_in_place(const gf::Field& field, std::vector<Elem>& m, int rows, int cols)
{
    auto at = [&](int r, int c) -> Elem& { return m[static_cast<std::size_t>(r) * cols + c]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(at(pivot, j), at(rank, j));
        const Elem inv = field.inv(at(rank, c));
        for (int j = c; j < cols; ++j)
            at(rank, j) = field.mul(at(rank, j), inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || at(r, c) == 0)
                continue;
            const Elem f = field.neg(at(r, c));
            for (int j = c; j < cols; ++j)
                at(r, j) = field.add(at(r, j), field.mul(f, at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

Subspace Subspace::zero(int n)
{
    Subspace s;
    s.n_ = n;
    return s;
}

Subspace Subspace::top(int n)
{
    Subspace s;
    s.n_ = n;
    s.top_ = true;
    return s;
}

Subspace Subspace::span(const gf::Field& field, int n, std::span<const Vector> rows)
{
    std::vector<Elem> flat;
    flat.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw Error(Errc::DimensionMismatch, "row length differs from ambient dimension");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return span(field, n, std::move(flat), static_cast<int>(rows.size()));
}

Subspace Subspace::span(const gf::Field& field, int n, std::vector<Elem> flat_rows, int row_count)
{
    const int rank = rref_in_place(field, flat_rows, row_count, n);
    flat_rows.resize(static_cast<std::size_t>(rank) * n);
    return from_canonical(n, std::move(flat_rows));
}

Subspace Subspace::from_canonical(int n, std::vector<Elem> flat_rows)
{
    Subspace s;
    s.n_ = n;
    s.rows_ = n == 0 ? 0 : static_cast<int>(flat_rows.size()) / n;
    s.data_ = std::move(flat_rows);
    return s;
}

std::vector<Vector> Subspace::rows() const
{
    std::vector<Vector> out;
    for (int i = 0; i < rows_; ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

std::vector<int> Subspace::pivots() const
{
    std::vector<int> p;
    for (int i = 0; i < rows_; ++i) {
        auto r = row(i);
        p.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; }) - r.begin()));
    }
    return p;
}

std::string Subspace::key() const
{
    std::string k;
    k.reserve(4 + data_.size() * 2);
    k.push_back(static_cast<char>(n_));
    k.push_back(top_ ? 'T' : 'S');
    for (Elem e : data_) {
        k.push_back(static_cast<char>(e & 0xff));
        k.push_back(static_cast<char>(e >> 8));
    }
    return k;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b)
{
    if (auto c = a.top_ <=> b.top_; c != 0)
        return c;
    if (auto c = a.rows_ <=> b.rows_; c != 0)
        return c;
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

bool contains(const gf::Field& field, const Subspace& s, std::span<const Elem> v)
{
    if (s.is_top())
        return true;
    Vector w(v.begin(), v.end());
    const auto piv = s.pivots();
    for (int i = 0; i < s.dim(); ++i) {
        const Elem c = w[piv[i]];
        if (c == 0)
            continue;
        const Elem f = field.neg(c);
        auto r = s.row(i);
        for (int j = piv[i]; j < s.ambient_dim(); ++j)
            w[j] = field.add(w[j], field.mul(f, r[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool is_subspace_of(const gf::Field& field, const Subspace& a, const Subspace& b)
{
    if (b.is_top())
        return true;
    if (a.is_top())
        return false;
    if (a.dim() > b.dim())
        return false;
    for (int i = 0; i < a.dim(); ++i)
        if (!contains(field, b, a.row(i)))
            return false;
    return true;
}

Subspace sum(const gf::Field& field, const Subspace& a, const Subspace& b)
{
    if (a.is_top() || b.is_top())
        return Subspace::top(a.ambient_dim());
    std::vector<Elem> flat = a.data();
    flat.insert(flat.end(), b.data().begin(), b.data().end());
    return Subspace::span(field, a.ambient_dim(), std::move(flat), a.dim() + b.dim());
}

Subspace intersection(const gf::Field& field, const Subspace& a, const Subspace& b)
{
    if (a.is_top())
        return b;
    if (b.is_top())
        return a;
    const int n = a.ambient_dim();
    const int rows = a.dim() + b.dim();
    const int cols = 2 * n;
    // [a | a] over [b | 0]; rows whose left half vanishes span a ∩ b on the right
    std::vector<Elem> m(static_cast<std::size_t>(rows) * cols, 0);
    for (int i = 0; i < a.dim(); ++i) {
        auto r = a.row(i);
        std::copy(r.begin(), r.end(), m.begin() + static_cast<std::ptrdiff_t>(i) * cols);
        std::copy(r.begin(), r.end(), m.begin() + static_cast<std::ptrdiff_t>(i) * cols + n);
    }
    for (int i = 0; i < b.dim(); ++i) {
        auto r = b.row(i);
        std::copy(r.begin(), r.end(), m.begin() + static_cast<std::ptrdiff_t>(a.dim() + i) * cols);
    }
    const int rank = rref_in_place(field, m, rows, cols);
    std::vector<Elem> out;
    int count = 0;
    for (int i = 0; i < rank; ++i) {
        auto begin = m.begin() + static_cast<std::ptrdiff_t>(i) * cols;
        if (std::all_of(begin, begin + n, [](Elem e) { return e == 0; })) {
            out.insert(out.end(), begin + n, begin + cols);
            ++count;
        }
    }
    return Subspace::span(field, n, std::move(out), count);
}

Subspace kernel(const gf::Field& field, std::vector<Elem> m, int rows, int cols)
{
    const int rank = rref_in_place(field, m, rows, cols);
    std::vector<int> pivot_of_row(rank);
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (m[static_cast<std::size_t>(r) * cols + c] == 0)
            ++c;
        pivot_of_row[r] = c;
        is_pivot[c] = true;
    }
    std::vector<Elem> basis;
    int count = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols, 0);
        v[f] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_of_row[r]] = field.neg(m[static_cast<std::size_t>(r) * cols + f]);
        basis.insert(basis.end(), v.begin(), v.end());
        ++count;
    }
    return Subspace::span(field, cols, std::move(basis), count);
}

} // namespace dualpolar
