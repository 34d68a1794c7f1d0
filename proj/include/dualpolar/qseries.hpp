#pragma once

// Gaussian binomials, q-Pochhammer symbols and the terminating 4phi3 series
// giving the eigenvalues of the dual polar schemes. Everything is exact.
//
// Exponents may be half-integral (e = 3/2, 1/2 in the unitary families), so
// powers are always passed doubled: q^{t/2}. In those families q = r^2 and
// q^{t/2} = r^t.

#include <vector>

#include "dualpolar/forms.hpp"
#include "dualpolar/rational.hpp"

namespace dualpolar::qseries {

struct QBase {
    long r = 2;
    long q = 2;
    int two_e = 2;

    static QBase of(forms::Family family, long r);
    static QBase of(const forms::FormedSpace& space) { return of(space.family(), space.r()); }

    /// q^{twice_exp / 2}. BadParameters if the exponent is half-integral and q
    /// is not a square.
    Rational power_half(long twice_exp) const;
    Rational power(long exp) const { return power_half(2 * exp); }
    /// q^{e + shift}
    Rational power_e(long shift) const { return power_half(two_e + 2 * shift); }
};

/// sign * q^{num2 / 2}
struct QPower {
    int sign = 1;
    long num2 = 0;

    Rational eval(const QBase& base) const { return sign * base.power_half(num2); }
    /// this * q^k
    QPower times_q(long k) const { return {sign, num2 + 2 * k}; }
};

/// [n; k]_q from the ratio of [i;1]_q products, [i;1]_q = 0 for i < 1.
/// Zero for k < 0; one for k = 0.
BigInt gauss_binom(long n, long k, const BigInt& q);
inline BigInt gauss_binom(long n, long k, const QBase& base) { return gauss_binom(n, k, BigInt(base.q)); }

/// (a; q)_t = (1 - a)(1 - aq)...(1 - aq^{t-1}); 1 for t = 0.
Rational pochhammer(const QPower& a, const QBase& base, int t);

/// The t-th summand of u_i(theta_j). Requires t <= d so the (q^{-d}; q)_t
/// denominator is nonzero.
Rational u_term(int i, int j, int d, const QBase& base, int t);
/// u_i(theta_j), summed up to t = min(i, j). The summands for
/// min(i, j) < t <= d are asserted to vanish (CountMismatch otherwise).
Rational u_series(int i, int j, int d, const QBase& base);

/// k_i = [d; i]_q q^{(i^2 - i)/2 + i e}
BigInt valency(int i, int d, const QBase& base);

struct EigenvalueTable {
    int d = 0;
    std::vector<Rational> theta;              // theta_j = p_1(j)
    std::vector<std::vector<Rational>> p;     // p[i][j] = eigenvalue of A_i on V_j
    std::vector<std::vector<Rational>> u;     // u[i][j] = u_i(theta_j)
    std::vector<BigInt> k;                    // valencies

    const Rational& eigenvalue(int i, int j) const { return p.at(i).at(j); }
};

/// Full table; ThetaMismatch if theta_j differs from the closed-form mu_j.
EigenvalueTable eigen_table(int d, const QBase& base);

/// prod_{k<n} (1 + q^k t) == sum_k q^{(k^2-k)/2} [n; k]_q t^k
bool newton_identity_check(int n, const QPower& t, const QBase& base);

/// mu_j = q^e [d-j; 1]_q - [j; 1]_q
Rational mu_closed(int j, int d, const QBase& base);
/// mu_d = -[d;1]_q, mu_j = mu_{j+1} + q^j + q^{d+e-j-1}
Rational mu_recursive(int j, int d, const QBase& base);

/// a_j = prod_{i=0}^{d-j-1} (1 + q^{e+i}) for 0 <= j <= d, a_{d+1} = 0.
BigInt a_closed(int j, int d, const QBase& base);

/// Number of isotropic U of dimension k+l+m meeting a fixed isotropic
/// j-space W in dimension m and W-perp in dimension l+m.
BigInt bcn_closed(int d, const QBase& base, int j, int k, int l, int m);

/// lambda_j = sum_{l=j}^{d} [l; j]_q p_{d-l}(j)
Rational lambda_from_table(int j, const EigenvalueTable& table, const QBase& base);
/// lambda_1 = q^{d-1} (1 + q^{e-1}) a_2
Rational lambda1_closed(int d, const QBase& base);

/// Exact integer or CountMismatch.
BigInt require_integer(const Rational& x, const char* what);

} // namespace dualpolar::qseries
