#include "dualpolar/forms.hpp"

#include <algorithm>

namespace dualpolar::forms {

int two_e(Family f) noexcept
{
    switch (f) {
    case Family::C: return 2;
    case Family::B: return 2;
    case Family::D: return 0;
    case Family::TwistedD: return 4;
    case Family::UnitaryOdd: return 3;
    case Family::UnitaryEven: return 1;
    }
    return 0;
}

bool is_hermitian(Family f) noexcept { return f == Family::UnitaryOdd || f == Family::UnitaryEven; }

bool is_quadratic(Family f) noexcept { return f == Family::B || f == Family::D || f == Family::TwistedD; }

int ambient_dim(Family f, int d) noexcept
{
    switch (f) {
    case Family::C: return 2 * d;
    case Family::B: return 2 * d + 1;
    case Family::D: return 2 * d;
    case Family::TwistedD: return 2 * d + 2;
    case Family::UnitaryOdd: return 2 * d + 1;
    case Family::UnitaryEven: return 2 * d;
    }
    return 0;
}

std::string_view family_tag(Family f) noexcept
{
    switch (f) {
    case Family::C: return "C";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::TwistedD: return "2D";
    case Family::UnitaryOdd: return "2A-odd";
    case Family::UnitaryEven: return "2A-even";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view tag) noexcept
{
    for (auto f : all_families)
        if (tag == family_tag(f))
            return f;
    if (tag == "2A_odd")
        return Family::UnitaryOdd;
    if (tag == "2A_even")
        return Family::UnitaryEven;
    return std::nullopt;
}

std::string instance_name(Family f, int d, int r)
{
    const auto rs = "(" + std::to_string(r) + ")";
    switch (f) {
    case Family::C: return "C_" + std::to_string(d) + rs;
    case Family::B: return "B_" + std::to_string(d) + rs;
    case Family::D: return "D_" + std::to_string(d) + rs;
    case Family::TwistedD: return "2D_" + std::to_string(d + 1) + rs;
    case Family::UnitaryOdd: return "2A_" + std::to_string(2 * d) + rs;
    case Family::UnitaryEven: return "2A_" + std::to_string(2 * d - 1) + rs;
    }
    return "?";
}

std::optional<std::pair<int, int>> prime_power(long r) noexcept
{
    if (r < 2)
        return std::nullopt;
    long p = 2;
    while (r % p != 0)
        ++p;
    int m = 0;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1)
        return std::nullopt;
    return std::pair{static_cast<int>(p), m};
}

FormedSpace make_space(Family family, int d, int r)
{
    if (d < 2)
        throw Error(Errc::BadParameters, "diameter must be at least 2");
    const auto pp = prime_power(r);
    if (!pp)
        throw Error(Errc::BadParameters, std::to_string(r) + " is not a prime power");
    const auto [p, m] = *pp;

    FormedSpace s;
    s.family_ = family;
    s.d_ = d;
    s.r_ = r;
    s.n_ = ambient_dim(family, d);
    try {
        s.field_ = gf::field_create(p, is_hermitian(family) ? 2 * m : m);
    } catch (const Error& e) {
        throw Error(Errc::BadParameters, e.what());
    }
    const auto& F = *s.field_;
    const int n = s.n_;
    s.gram_.assign(static_cast<std::size_t>(n) * n, 0);
    auto g = [&](int i, int j) -> Elem& { return s.gram_[static_cast<std::size_t>(i) * n + j]; };

    if (family == Family::C) {
        for (int i = 0; i < d; ++i) {
            g(i, d + i) = 1;
            g(d + i, i) = F.neg(1);
        }
    } else if (is_hermitian(family)) {
        for (int i = 0; i < d; ++i) {
            g(i, d + i) = 1;
            g(d + i, i) = 1;
        }
        if (family == Family::UnitaryOdd)
            g(2 * d, 2 * d) = 1;
    } else {
        s.quad_.assign(static_cast<std::size_t>(n) * n, 0);
        auto c = [&](int i, int j) -> Elem& { return s.quad_[static_cast<std::size_t>(i) * n + j]; };
        for (int i = 0; i < d; ++i)
            c(i, d + i) = 1;
        if (family == Family::B) {
            c(2 * d, 2 * d) = 1;
        } else if (family == Family::TwistedD) {
            // first monic u^2 + a uv + b v^2 without nonzero roots, a major
            bool found = false;
            for (int a = 0; a < F.q() && !found; ++a)
                for (int b = 0; b < F.q() && !found; ++b) {
                    bool aniso = true;
                    for (int u = 0; u < F.q() && aniso; ++u) {
                        const auto eu = static_cast<Elem>(u);
                        const Elem val = F.add(F.add(F.mul(eu, eu), F.mul(static_cast<Elem>(a), eu)), static_cast<Elem>(b));
                        aniso = val != 0;
                    }
                    if (aniso) {
                        s.aniso_ = {static_cast<Elem>(a), static_cast<Elem>(b)};
                        found = true;
                    }
                }
            c(2 * d, 2 * d) = 1;
            c(2 * d, 2 * d + 1) = s.aniso_.first;
            c(2 * d + 1, 2 * d + 1) = s.aniso_.second;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (c(i, j) == 0)
                    continue;
                s.quad_terms_.emplace_back(i, j, c(i, j));
                if (i == j) {
                    g(i, i) = F.add(g(i, i), F.add(c(i, i), c(i, i)));
                } else {
                    g(i, j) = F.add(g(i, j), c(i, j));
                    g(j, i) = F.add(g(j, i), c(i, j));
                }
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g(i, j) != 0)
                s.gram_terms_.emplace_back(i, j, g(i, j));
    return s;
}

Elem FormedSpace::pairing(std::span<const Elem> u, std::span<const Elem> v) const
{
    if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
        throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    const auto& F = *field_;
    const bool herm = hermitian();
    Elem acc = 0;
    for (const auto& [i, j, gij] : gram_terms_) {
        if (u[i] == 0 || v[j] == 0)
            continue;
        const Elem vj = herm ? F.conjugate(v[j]) : v[j];
        acc = F.add(acc, F.mul(F.mul(u[i], gij), vj));
    }
    return acc;
}

Elem FormedSpace::quadratic_value(std::span<const Elem> v) const
{
    if (!quadratic())
        throw Error(Errc::BadParameters, name() + " carries no quadratic form");
    if (static_cast<int>(v.size()) != n_)
        throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    const auto& F = *field_;
    Elem acc = 0;
    for (const auto& [i, j, cij] : quad_terms_)
        acc = F.add(acc, F.mul(cij, F.mul(v[i], v[j])));
    return acc;
}

bool FormedSpace::is_isotropic_vector(std::span<const Elem> v) const
{
    if (family_ == Family::C)
        return true;
    if (quadratic())
        return quadratic_value(v) == 0;
    return pairing(v, v) == 0;
}

Elem evaluate(const FormedSpace& space, std::span<const Elem> u, std::span<const Elem> v)
{
    return space.pairing(u, v);
}

Elem evaluate_quadratic(const FormedSpace& space, std::span<const Elem> v) { return space.quadratic_value(v); }

Elem polar_form(const FormedSpace& space, std::span<const Elem> u, std::span<const Elem> v)
{
    const auto& F = space.field();
    Vector w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = F.add(u[i], v[i]);
    return F.sub(F.sub(space.quadratic_value(w), space.quadratic_value(u)), space.quadratic_value(v));
}

bool is_isotropic(const FormedSpace& space, const Subspace& s)
{
    if (s.is_top())
        return false;
    for (int i = 0; i < s.dim(); ++i) {
        if (!space.is_isotropic_vector(s.row(i)))
            return false;
        for (int j = 0; j < s.dim(); ++j)
            if (space.pairing(s.row(i), s.row(j)) != 0)
                return false;
    }
    return true;
}

Subspace perp(const FormedSpace& space, const Subspace& s)
{
    const int n = space.n();
    if (s.is_top()) {
        // radical of the pairing
        return perp(space, Subspace::span(space.field(), n, [&] {
                        std::vector<Elem> id(static_cast<std::size_t>(n) * n, 0);
                        for (int i = 0; i < n; ++i)
                            id[static_cast<std::size_t>(i) * n + i] = 1;
                        return id;
                    }(), n));
    }
    const auto& F = space.field();
    const auto& G = space.gram();
    // row k holds the coefficients of v in pairing(v, b_k)
    std::vector<Elem> m(static_cast<std::size_t>(s.dim()) * n, 0);
    for (int k = 0; k < s.dim(); ++k) {
        auto b = s.row(k);
        for (int i = 0; i < n; ++i) {
            Elem acc = 0;
            for (int j = 0; j < n; ++j) {
                const Elem gij = G[static_cast<std::size_t>(i) * n + j];
                if (gij == 0 || b[j] == 0)
                    continue;
                acc = F.add(acc, F.mul(gij, space.hermitian() ? F.conjugate(b[j]) : b[j]));
            }
            m[static_cast<std::size_t>(k) * n + i] = acc;
        }
    }
    return kernel(F, std::move(m), s.dim(), n);
}

} // namespace dualpolar::forms
