#pragma once

// The six formed spaces underlying the dual polar graphs.
//
// Coordinates are arranged so that span(e_0, ..., e_{d-1}) is always a
// maximal isotropic subspace, paired hyperbolically with e_d, ..., e_{2d-1};
// any anisotropic remainder occupies the trailing coordinates.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualpolar/gf.hpp"
#include "dualpolar/subspace.hpp"

namespace dualpolar::forms {

enum class Family {
    C,           // C_d(q), symplectic on GF(q)^{2d}
    B,           // B_d(q), quadratic on GF(q)^{2d+1}
    D,           // D_d(q), hyperbolic quadratic on GF(q)^{2d}
    TwistedD,    // 2D_{d+1}(q), elliptic quadratic on GF(q)^{2d+2}
    UnitaryOdd,  // 2A_{2d}(r), Hermitian on GF(r^2)^{2d+1}
    UnitaryEven, // 2A_{2d-1}(r), Hermitian on GF(r^2)^{2d}
};

inline constexpr Family all_families[] = {Family::C, Family::B, Family::D, Family::TwistedD, Family::UnitaryOdd,
                                          Family::UnitaryEven};

/// 2e, so that e in {1, 1, 0, 2, 3/2, 1/2} stays integral.
int two_e(Family f) noexcept;
bool is_hermitian(Family f) noexcept;
bool is_quadratic(Family f) noexcept;
/// n as a function of the diameter d.
int ambient_dim(Family f, int d) noexcept;
/// CLI tag: C, B, D, 2D, 2A-odd, 2A-even.
std::string_view family_tag(Family f) noexcept;
/// Accepts the CLI tags and the underscore spellings (2A_odd, 2A_even).
std::optional<Family> parse_family(std::string_view tag) noexcept;
/// Conventional name, e.g. "C_3(2)", "2A_4(2)".
std::string instance_name(Family f, int d, int r);

class FormedSpace {
public:
    Family family() const noexcept { return family_; }
    int d() const noexcept { return d_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    int q() const noexcept { return field_->q(); }
    int two_e() const noexcept { return forms::two_e(family_); }
    const gf::Field& field() const noexcept { return *field_; }
    const gf::FieldPtr& field_ptr() const noexcept { return field_; }
    bool hermitian() const noexcept { return is_hermitian(family_); }
    bool quadratic() const noexcept { return is_quadratic(family_); }

    /// Gram matrix of the pairing used for perps, row-major n x n:
    /// the alternating form, the polar form of Q, or the Hermitian matrix.
    const std::vector<Elem>& gram() const noexcept { return gram_; }
    /// Upper-triangular coefficients c_ij (i <= j) of Q; empty otherwise.
    const std::vector<Elem>& quad_coeffs() const noexcept { return quad_; }
    /// (a, b) of the anisotropic u^2 + a uv + b v^2 used by 2D; (0, 0) otherwise.
    std::pair<Elem, Elem> anisotropic_coeffs() const noexcept { return aniso_; }

    /// omega(u, v) for symplectic/Hermitian spaces, the polar form B(u, v) for
    /// quadratic ones. Linear in u; conjugate-linear in v when Hermitian.
    Elem pairing(std::span<const Elem> u, std::span<const Elem> v) const;
    /// Q(v); BadParameters for non-quadratic families.
    Elem quadratic_value(std::span<const Elem> v) const;
    bool is_isotropic_vector(std::span<const Elem> v) const;

    std::string name() const { return instance_name(family_, d_, r_); }

private:
    friend FormedSpace make_space(Family family, int d, int r);

    Family family_ = Family::C;
    int d_ = 0;
    int n_ = 0;
    int r_ = 0;
    gf::FieldPtr field_;
    std::vector<Elem> gram_;
    std::vector<Elem> quad_;
    std::pair<Elem, Elem> aniso_{0, 0};
    // nonzero Gram entries (i, j, value) for fast evaluation
    std::vector<std::tuple<int, int, Elem>> gram_terms_;
    std::vector<std::tuple<int, int, Elem>> quad_terms_;
};

/// Splits a prime power r = p^m; nullopt otherwise.
std::optional<std::pair<int, int>> prime_power(long r) noexcept;

/// Builds the standard space of the family. Errors: BadParameters.
FormedSpace make_space(Family family, int d, int r);

/// omega(u, v) (bilinear/Hermitian) or B(u, v) (quadratic).
Elem evaluate(const FormedSpace& space, std::span<const Elem> u, std::span<const Elem> v);
Elem evaluate_quadratic(const FormedSpace& space, std::span<const Elem> v);
/// Q(u+v) - Q(u) - Q(v).
Elem polar_form(const FormedSpace& space, std::span<const Elem> u, std::span<const Elem> v);

bool is_isotropic(const FormedSpace& space, const Subspace& s);
Subspace perp(const FormedSpace& space, const Subspace& s);

} // namespace dualpolar::forms
