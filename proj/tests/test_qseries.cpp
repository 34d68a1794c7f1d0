#include <doctest.h>

#include "dualpolar/qseries.hpp"

using namespace dualpolar;
using namespace dualpolar::qseries;
using forms::Family;

TEST_CASE("gauss_binom")
{
    for (long n = 0; n < 8; ++n)
        CHECK(gauss_binom(n, 0, BigInt(2)) == 1);
    CHECK(gauss_binom(2, 1, BigInt(2)) == 3);
    CHECK(gauss_binom(4, 2, BigInt(2)) == 35);
    CHECK(gauss_binom(3, 1, BigInt(3)) == 13);
    CHECK(gauss_binom(3, 4, BigInt(2)) == 0);
    CHECK(gauss_binom(3, -1, BigInt(2)) == 0);
    // q-Pascal
    for (long q : {2, 3, 4, 5, 9})
        for (long n = 1; n < 9; ++n)
            for (long k = 0; k <= n; ++k) {
                BigInt qk, qnk;
                mpz_ui_pow_ui(qk.get_mpz_t(), q, k);
                mpz_ui_pow_ui(qnk.get_mpz_t(), q, n - k);
                CHECK(gauss_binom(n, k, BigInt(q)) ==
                      gauss_binom(n - 1, k - 1, BigInt(q)) + qk * gauss_binom(n - 1, k, BigInt(q)));
                CHECK(gauss_binom(n, k, BigInt(q)) ==
                      qnk * gauss_binom(n - 1, k - 1, BigInt(q)) + gauss_binom(n - 1, k, BigInt(q)));
            }
}

TEST_CASE("pochhammer")
{
    const auto base = QBase::of(Family::C, 2);
    CHECK(pochhammer(QPower{1, 6}, base, 0) == 1);
    for (int t = 1; t < 4; ++t)
        CHECK(pochhammer(QPower{1, 0}, base, t) == 0);
    CHECK(pochhammer(QPower{1, -2}, base, 1) == Rational(1, 2));
    // (-1; q)_2 = 2 * 3
    CHECK(pochhammer(QPower{-1, 0}, base, 2) == 6);
}

TEST_CASE("QBase powers")
{
    auto u = QBase::of(Family::UnitaryEven, 2);
    CHECK(u.q == 4);
    CHECK(u.power_half(1) == 2);
    CHECK(u.power_e(0) == 2);
    CHECK(u.power_e(-1) == Rational(1, 2));
    auto c = QBase::of(Family::C, 2);
    CHECK(c.power(-2) == Rational(1, 4));
}

TEST_CASE("u_series")
{
    for (auto [f, d, r] : std::vector<std::tuple<Family, int, int>>{
             {Family::C, 2, 2}, {Family::C, 3, 2}, {Family::D, 3, 2}, {Family::UnitaryOdd, 2, 2}, {Family::UnitaryEven, 2, 2}}) {
        const auto base = QBase::of(f, r);
        for (int j = 0; j <= d; ++j) {
            CHECK(u_series(0, j, d, base) == 1);
            CHECK(u_series(j, 0, d, base) == 1);
        }
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) {
                Rational full = 0;
                for (int t = 0; t <= d; ++t)
                    full += u_term(i, j, d, base, t);
                CHECK(full == u_series(i, j, d, base));
            }
    }
    CHECK(u_series(1, 1, 2, QBase::of(Family::C, 2)) == Rational(1, 6));
}

TEST_CASE("eigen_table")
{
    const auto base = QBase::of(Family::C, 2);
    auto t = eigen_table(2, base);
    for (int j = 0; j <= 2; ++j)
        CHECK(t.eigenvalue(0, j) == 1);
    CHECK(t.theta == std::vector<Rational>{6, 1, -3});
    BigInt total = 0;
    for (int i = 0; i <= 2; ++i) {
        CHECK(t.eigenvalue(i, 0) == Rational(t.k[i]));
        total += t.k[i];
    }
    CHECK(total == 15);
    auto t3 = eigen_table(3, base);
    CHECK(t3.theta == std::vector<Rational>{14, 5, -1, -7});
}

TEST_CASE("Newton's identity")
{
    const auto base = QBase::of(Family::C, 2);
    CHECK(newton_identity_check(0, QPower{1, 2}, base));
    CHECK(newton_identity_check(2, QPower{1, 2}, base));
    CHECK(newton_identity_check(3, QPower{1, 0}, base));
    // the two worked expansions
    CHECK((1 + 2) * (1 + 4) == 1 + 3 * 2 + 2 * 4);
    BigInt rhs = 0;
    for (int k = 0; k <= 3; ++k)
        rhs += gauss_binom(3, k, base) * (1L << ((k * k - k) / 2));
    CHECK(rhs == 30);
    for (auto f : forms::all_families) {
        const auto b = QBase::of(f, f == Family::B ? 3 : 2);
        for (int n = 0; n <= 8; ++n)
            CHECK(newton_identity_check(n, QPower{1, b.two_e}, b));
    }
}

TEST_CASE("mu, a_j and lambda_1 closed forms")
{
    const auto base = QBase::of(Family::C, 2);
    for (int d = 2; d <= 5; ++d) {
        CHECK(mu_closed(d, d, base) == -Rational(gauss_binom(d, 1, base)));
        for (int j = 0; j <= d; ++j)
            CHECK(mu_closed(j, d, base) == mu_recursive(j, d, base));
    }
    CHECK(a_closed(0, 3, base) == 135);
    CHECK(a_closed(4, 3, base) == 0);
    CHECK(a_closed(3, 3, base) == 1);
    CHECK(lambda1_closed(2, base) == 4);
    CHECK(lambda1_closed(3, base) == 24);
    CHECK(lambda1_closed(3, QBase::of(Family::D, 2)) == 12);
    CHECK(a_closed(0, 2, QBase::of(Family::UnitaryEven, 2)) == 27);
    CHECK(require_integer(make_rational(6, 3), "x") == 2);
    CHECK_THROWS_AS(require_integer(Rational(1, 2), "x"), Error);
}
