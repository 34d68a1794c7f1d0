#include "dualpolar/qseries.hpp"

#include <algorithm>

namespace dualpolar::qseries {

namespace {

Rational int_pow(long base, long exp)
{
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    Rational r(v);
    if (exp < 0)
        r = 1 / r;
    return r;
}

BigInt q_one(long i, const BigInt& q)
{
    if (i < 1)
        return 0;
    BigInt qi;
    mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i));
    return (qi - 1) / (q - 1);
}

} // namespace

QBase QBase::of(forms::Family family, long r)
{
    QBase b;
    b.r = r;
    b.q = forms::is_hermitian(family) ? r * r : r;
    b.two_e = forms::two_e(family);
    return b;
}

Rational QBase::power_half(long twice_exp) const
{
    if (q == r * r)
        return int_pow(r, twice_exp);
    if (twice_exp % 2 != 0)
        throw Error(Errc::BadParameters, "half-integral power of a non-square q");
    return int_pow(q, twice_exp / 2);
}

BigInt gauss_binom(long n, long k, const BigInt& q)
{
    if (k < 0)
        return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long s = 0; s < k; ++s) {
        num *= q_one(n - s, q);
        den *= q_one(s + 1, q);
    }
    return num / den;
}

Rational pochhammer(const QPower& a, const QBase& base, int t)
{
    Rational acc = 1;
    for (int s = 0; s < t; ++s)
        acc *= 1 - a.times_q(s).eval(base);
    return acc;
}

Rational u_term(int i, int j, int d, const QBase& base, int t)
{
    if (t > d)
        throw Error(Errc::BadParameters, "u_i summand index beyond d");
    const QPower qi{1, -2L * i};
    const QPower qj{1, -2L * j};
    const QPower shifted{-1, 2L * (j - d) - base.two_e};
    const QPower qd{1, -2L * d};
    const QPower q1{1, 2};
    Rational num = pochhammer(qi, base, t) * pochhammer(qj, base, t) * pochhammer(shifted, base, t) * base.power(t);
    Rational den = pochhammer(qd, base, t) * pochhammer(q1, base, t);
    return num / den;
}

Rational u_series(int i, int j, int d, const QBase& base)
{
    const int stop = std::min(i, j);
    Rational acc = 0;
    for (int t = 0; t <= d; ++t) {
        Rational term = u_term(i, j, d, base, t);
        if (t <= stop)
            acc += term;
        else if (term != 0)
            throw Error(Errc::CountMismatch, "4phi3 summand does not vanish beyond min(i, j)");
    }
    return acc;
}

BigInt valency(int i, int d, const QBase& base)
{
    const Rational v = gauss_binom(d, i, base) * base.power_half(static_cast<long>(i) * i - i + static_cast<long>(i) * base.two_e);
    return require_integer(v, "valency");
}

Rational mu_closed(int j, int d, const QBase& base)
{
    return base.power_half(base.two_e) * Rational(gauss_binom(d - j, 1, base)) - Rational(gauss_binom(j, 1, base));
}

Rational mu_recursive(int j, int d, const QBase& base)
{
    Rational m = -Rational(gauss_binom(d, 1, base));
    for (int s = d - 1; s >= j; --s)
        m += base.power(s) + base.power_half(2L * (d - s - 1) + base.two_e);
    return m;
}

EigenvalueTable eigen_table(int d, const QBase& base)
{
    EigenvalueTable t;
    t.d = d;
    t.k.resize(d + 1);
    t.p.assign(d + 1, std::vector<Rational>(d + 1));
    t.u.assign(d + 1, std::vector<Rational>(d + 1));
    for (int i = 0; i <= d; ++i)
        t.k[i] = valency(i, d, base);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            t.u[i][j] = u_series(i, j, d, base);
            t.p[i][j] = t.u[i][j] * Rational(t.k[i]);
        }
    t.theta = t.p[1];
    for (int j = 0; j <= d; ++j)
        if (t.theta[j] != mu_closed(j, d, base))
            throw Error(Errc::ThetaMismatch, "theta_" + std::to_string(j) + " = " + to_string(t.theta[j]) +
                                                 " but mu_" + std::to_string(j) + " = " + to_string(mu_closed(j, d, base)));
    return t;
}

bool newton_identity_check(int n, const QPower& t, const QBase& base)
{
    Rational lhs = 1;
    for (int k = 0; k < n; ++k)
        lhs *= 1 + t.times_q(k).eval(base);
    Rational rhs = 0;
    const Rational tv = t.eval(base);
    Rational tk = 1;
    for (int k = 0; k <= n; ++k) {
        rhs += base.power_half(static_cast<long>(k) * k - k) * Rational(gauss_binom(n, k, base)) * tk;
        tk *= tv;
    }
    return lhs == rhs;
}

BigInt a_closed(int j, int d, const QBase& base)
{
    if (j == d + 1)
        return 0;
    Rational acc = 1;
    for (int i = 0; i <= d - j - 1; ++i)
        acc *= 1 + base.power_e(i);
    return require_integer(acc, "a_j");
}

BigInt bcn_closed(int d, const QBase& base, int j, int k, int l, int m)
{
    const long twice = 2L * l * (j - m) + 2L * k * (2L * d - j - m - 2L * l - 1) + static_cast<long>(k) * base.two_e -
                       static_cast<long>(k) * (k - 1);
    Rational v = base.power_half(twice) * Rational(gauss_binom(j, m, base) * gauss_binom(j - m, k, base) *
                                                   gauss_binom(d - j, l, base));
    for (int i = 0; i < l; ++i)
        v *= 1 + base.power_half(2L * (d - j - i - 1) + base.two_e);
    return require_integer(v, "isotropic count");
}

Rational lambda_from_table(int j, const EigenvalueTable& table, const QBase& base)
{
    Rational acc = 0;
    for (int l = j; l <= table.d; ++l)
        acc += Rational(gauss_binom(l, j, base)) * table.eigenvalue(table.d - l, j);
    return acc;
}

Rational lambda1_closed(int d, const QBase& base)
{
    return base.power(d - 1) * (1 + base.power_e(-1)) * Rational(a_closed(2, d, base));
}

BigInt require_integer(const Rational& x, const char* what)
{
    if (x.get_den() != 1)
        throw Error(Errc::CountMismatch, std::string(what) + " is not an integer: " + to_string(x));
    return x.get_num();
}

} // namespace dualpolar::qseries
